#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "spinor/rational.hpp"

namespace spinor {

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Unique solution of A x = b, or nullopt if inconsistent or underdetermined.
std::optional<std::vector<Rational>> solve_unique(DenseMatrix A, std::vector<Rational> b);
std::size_t rank(DenseMatrix A);
std::vector<std::size_t> pivot_columns(DenseMatrix A);
Rational determinant(DenseMatrix A);

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;  // sorted by index, no zeros

// Real matrix with exact rational entries, stored by rows.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix diagonal(const std::vector<Rational>& d);
  static SparseMatrix from_dense(const DenseMatrix& d);
  static SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
  // duplicates are summed
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    std::vector<std::tuple<std::size_t, std::size_t, Rational>> t);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const SparseVec& row(std::size_t i) const { return data_[i]; }
  std::size_t nnz() const;

  Rational get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& q);
  void add(std::size_t i, std::size_t j, const Rational& q);
  // replace a whole row; entries must be sorted by column and nonzero
  void set_row(std::size_t i, SparseVec r) { data_[i] = std::move(r); }

  SparseMatrix transpose() const;
  DenseMatrix to_dense() const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

  bool is_zero() const;
  bool is_identity() const;
  // true when the matrix is q * I; q is written on success
  bool is_scalar(Rational* q = nullptr) const;
  bool is_diagonal() const;

  SparseMatrix operator-() const;
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const Rational& q, const SparseMatrix& a);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVec> data_;
};

std::ostream& operator<<(std::ostream& os, const SparseMatrix& m);

SparseVec sparse_axpy(const SparseVec& x, const Rational& a, const SparseVec& y);  // x + a*y

// Incremental exact elimination over sparse rows. Pivot rows are kept
// normalized to 1 at the pivot; substitution chains are compressed lazily.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t nvars);

  // returns true if the equation was independent of the previous ones
  bool add(SparseVec eq);
  std::size_t rank() const { return rank_; }
  std::size_t nvars() const { return nvars_; }

  // One basis vector per free variable, with a 1 in that variable's slot.
  std::vector<SparseVec> nullspace();
  std::vector<std::size_t> free_variables() const;

 private:
  SparseVec reduce(SparseVec eq);
  const SparseVec& resolved(std::size_t pivot);

  std::size_t nvars_;
  std::size_t rank_ = 0;
  std::vector<SparseVec> rows_;       // rows_[p]: p = sum c_q q (only for pivots)
  std::vector<char> is_pivot_;
  std::vector<std::size_t> weight_;
};

// Null space of a sparse system given as equations over nvars unknowns.
std::vector<SparseVec> nullspace(std::size_t nvars, const std::vector<SparseVec>& equations);
std::size_t rank(const SparseMatrix& m);

}  // namespace spinor
