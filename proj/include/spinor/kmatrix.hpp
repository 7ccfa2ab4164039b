#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "spinor/division_algebra.hpp"
#include "spinor/linalg.hpp"

namespace spinor {

// RightModuleMap: acts on column K-vectors by x -> A x, commutes with right scalars.
// LeftModuleMap: acts on row K-vectors by y -> y A, commutes with left scalars.
enum class Side { RightModuleMap, LeftModuleMap };

// Sparse matrix over R, C or H.
class KMatrix {
 public:
  using Row = std::vector<std::pair<std::size_t, KElement>>;

  KMatrix() = default;
  KMatrix(Algebra field, std::size_t rows, std::size_t cols, Side side = Side::RightModuleMap);

  static KMatrix identity(Algebra field, std::size_t n, Side side = Side::RightModuleMap);
  static KMatrix scalar(const KElement& x, std::size_t n, Side side = Side::RightModuleMap);
  // real matrix viewed over `field`
  static KMatrix from_real(const SparseMatrix& m, Algebra field, Side side = Side::RightModuleMap);
  // Kronecker product; at least one factor real, or both complex
  static KMatrix kron(const KMatrix& a, const KMatrix& b);
  static KMatrix diagonal_signs(Algebra field, const std::vector<int>& signs, Side side = Side::RightModuleMap);

  Algebra field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Side side() const { return side_; }
  const Row& row(std::size_t i) const { return data_[i]; }

  KElement at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const KElement& x);

  KMatrix with_side(Side s) const;
  // entrywise conjugate transpose; flips the side. For a right-module map A,
  // conj_transpose(A) is the left-module map obtained by transport through
  // entrywise conjugation of coordinates.
  KMatrix conj_transpose() const;
  bool is_real() const;
  SparseMatrix real_part_matrix() const;  // valid when is_real()

  // Real matrix acting on column real coordinates (index = row*d + component).
  // RightModuleMap: realify(AB) = realify(A) realify(B).
  // LeftModuleMap: the operator y -> y A, so realify(AB) = realify(B) realify(A).
  SparseMatrix realify() const;

  KMatrix operator-() const;
  friend KMatrix operator*(const KMatrix& a, const KMatrix& b);
  friend KMatrix operator+(const KMatrix& a, const KMatrix& b);
  friend KMatrix operator-(const KMatrix& a, const KMatrix& b);
  friend KMatrix operator*(const Rational& q, const KMatrix& a);
  friend bool operator==(const KMatrix& a, const KMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.side_ == b.side_ &&
           a.data_ == b.data_;
  }

 private:
  Algebra field_ = Algebra::R;
  std::size_t rows_ = 0, cols_ = 0;
  Side side_ = Side::RightModuleMap;
  std::vector<Row> data_;
};

// H = C + jC as a right C-module with C-basis (1, j): q = z1 + j z2 maps to
// complex coordinates (z1, z2). Left multiplication by p = p1 + j p2 becomes
// [[p1, -conj(p2)], [p2, conj(p1)]].
KMatrix restrict_to_complex(const KMatrix& m);
// Real coordinate change matching restrict_to_complex, per quaternion block (a,b,c,d) -> (a,b,c,-d).
SparseMatrix complex_restriction_basis_change(std::size_t hdim);

// Realified right multiplication by imaginary basis units of `field` on a K-vector space of K-dimension kdim.
std::vector<SparseMatrix> right_unit_operators(Algebra field, std::size_t kdim);

}  // namespace spinor
