#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinor/clifford.hpp"
#include "spinor/kmatrix.hpp"
#include "spinor/matrix_rep.hpp"
#include "spinor/spinor_module.hpp"

namespace spinor {

// c4(q) = eps_q - iota_q on the quaternionic multivectors (lambda; w), right H-linear:
// (lambda, w) -> (-conj(q) w, q lambda)
KMatrix c4_action(const KElement& q);
// the positive-signature version eps_q + iota_q: (lambda, w) -> (conj(q) w, q lambda)
KMatrix c4_pos_action(const KElement& q);

// Cl(0,n), n = 1..4
SpinorModule base_module(int n, Variant v = Variant::Plus);
// Cl(n,0), n = 1..4
SpinorModule base_module_pos(int n, Variant v = Variant::Plus);
// Cl(0,n) for every n >= 1
SpinorModule assemble_euclidean(int n, Variant v = Variant::Plus);
// Cl(n,0) for every n >= 1
SpinorModule assemble_positive(int n, Variant v = Variant::Plus);
// Cl(i,i) on the real exterior algebra of R^i; the Clifford condition holds for g/2
SpinorModule split_signature_module(int i);
SpinorModule assemble_signature(int r, int s, Variant v = Variant::Plus);

SpinorModule sqrt_space_module(int n);  // n = 1..4
SpinorModule octonion_module(int k);    // k = 4..8

// whether (r,s) has a second, minus, irreducible module
bool has_minus_variant(int r, int s);
// size of the irreducible real module, and its commutant, from the classification
std::size_t expected_real_dim(int r, int s);
Algebra expected_field(int r, int s);

struct MetricReport {
  bool pass = true;
  std::vector<std::string> failures;
  std::string str() const;
};

// g(c(e_i)x, y) = -e_i^2 g(x, c(e_i)y) for each generator (skew for e_i^2 = -1),
// and right multiplication by the imaginary units of K is skew.
MetricReport spin_metric_verify(const SpinorModule& m);
MetricReport spin_metric_verify(const SpinorModule& m, const SparseMatrix& metric);

// c(e_1)c(e_j), j = 2..n; these generate the even subalgebra (for n = 1: c(e_1)^2)
std::vector<SparseMatrix> even_generators(const SpinorModule& m);
Commutant intertwiners(const SpinorModule& m, bool even_only);
// commutant of the even action restricted to M+ (graded modules only)
std::optional<Commutant> half_spinor_commutant(const SpinorModule& m);

// Real basis of the right K-units found from the commutant (I, J, K normalized to square to -1).
std::vector<SparseMatrix> derive_right_units(const std::vector<SparseMatrix>& generators, std::size_t d);

// omega with c(omega) = sum over u in {1, Im K basis} (s1 u)(s2 u)^T g_S; even blades only for n = 3 mod 4
Multivector spinor_square(const SpinorModule& m, const std::vector<Rational>& s1, const std::vector<Rational>& s2);
SparseMatrix spinor_square_operator(const SpinorModule& m, const std::vector<Rational>& s1,
                                    const std::vector<Rational>& s2);

}  // namespace spinor
