#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinor/clifford.hpp"
#include "spinor/kmatrix.hpp"
#include "spinor/linalg.hpp"
#include "spinor/spinor_module.hpp"

namespace spinor {

struct GradedSpace {
  Algebra field = Algebra::R;
  std::size_t dim = 0;                     // over `field`
  std::optional<std::vector<int>> grading; // basis aligned, length dim
  std::size_t plus = 0;
  std::size_t minus = 0;

  static GradedSpace ungraded(Algebra f, std::size_t dim);
  static GradedSpace graded(Algebra f, std::vector<int> signs);
  std::size_t real_dim() const { return dim * algebra_dim(field); }
  bool is_graded() const { return grading.has_value(); }
  int degree(std::size_t i) const { return grading ? (*grading)[i] : 1; }
};

enum class Degree { Even, Odd, Mixed };

struct GradedOperator {
  KMatrix op;
  std::optional<Degree> degree;
};

// M (x)_over N. For over = R the field of the result is whichever factor is
// not real (both complex gives C). For over = C or H, M is a right module and
// N a left module over that field; over C the result is complex, over H real.
GradedSpace tensor_module(const GradedSpace& M, const GradedSpace& N, Algebra over, bool graded);

// (T (x) S)(m (x) n) = (-1)^{deg S deg m} T m (x) S n.
// Over R: T, S are matrices over their spaces' fields (Kronecker layout, N index fastest).
// Over C/H: T is a right-module map on M, S a left-module map on N; a tensor
// element is the K-matrix X (dim M x dim N) and the operator is X -> T X S.
// Over H the result is returned realified (field R).
KMatrix graded_tensor_operator(const GradedOperator& T, const GradedOperator& S, const GradedSpace& M,
                               const GradedSpace& N, Algebra over);

// even and odd parts of an operator on a graded space
std::pair<KMatrix, KMatrix> split_by_degree(const KMatrix& op, const std::vector<int>& grading);

enum class AlgebraKind { R, C, H, MatrixAlgebra };

struct Commutant {
  std::size_t real_dimension = 0;
  AlgebraKind division_algebra = AlgebraKind::MatrixAlgebra;
  std::string structure;  // e.g. "H", "M2(R)", "H+H"
  std::vector<SparseMatrix> basis;
  bool sampled_division_test = false;  // the 17 fixed + 32 random invertibility probe
  bool definite_certificate = false;   // exact: trace-zero squares form a definite quadratic form

  std::string tag() const;  // "R", "C", "H" or "matrix-algebra(d)"
};

Commutant commutant(const std::vector<SparseMatrix>& generators, std::size_t d);
// Basis of {X : X A_i = B_i X}; X has size dim(B) x dim(A).
std::vector<SparseMatrix> intertwiner_space(const std::vector<SparseMatrix>& A, const std::vector<SparseMatrix>& B);

struct CliffordReport {
  bool pass = true;
  std::vector<std::pair<int, int>> violations;  // 1-based generator indices
  std::string str() const;
};

CliffordReport verify_clifford_condition(const std::vector<SparseMatrix>& generators, const Signature& sig);

// Volume grading M+ (+) M- from the projectors (1 +- c(nu))/2.
GradedSpace grading_from_volume(const SpinorModule& module);

}  // namespace spinor
