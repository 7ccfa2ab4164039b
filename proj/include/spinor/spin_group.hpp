#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spinor/clifford.hpp"
#include "spinor/linalg.hpp"
#include "spinor/spinor_module.hpp"

namespace spinor {

// An even element g of the Clifford group with g * reversion(g) = norm.
// Rational lifts of rational rotations need not have a rational unit
// representative, so the norm is carried; norm == 1 is a point of Spin(n).
struct SpinElement {
  Multivector value;
  Rational norm = 1;

  bool is_unit() const { return norm.is_one(); }
  SpinElement operator-() const { return {-value, norm}; }
};

SpinElement make_spin_element(const Multivector& g);  // checks evenness and g g~ scalar; normalizes when exact

std::vector<Rational> reflection(const std::vector<Rational>& w, const std::vector<Rational>& v, const Signature& sig);
std::vector<Rational> twisted_adjoint(const Multivector& g, const std::vector<Rational>& v);
// column i is Ad(g)(e_i)
DenseMatrix twisted_adjoint_matrix(const Multivector& g);

// R orthogonal with det 1, Euclidean signature
SpinElement spin_lift(const DenseMatrix& R);

struct CoverReport {
  bool same_rotation = false;    // Ad(g) = Ad(-g)
  bool distinct_action = false;  // pi(g) != pi(-g) on the module
  bool pass() const { return same_rotation && distinct_action; }
};
CoverReport double_cover_check(const SpinElement& g, const SpinorModule& module);

// pi_S(g); requires a unit element
SparseMatrix spin_action(const SpinorModule& module, const SpinElement& g);

struct SpinCoordinateSystem {
  SparseMatrix iso;           // scaled by sqrt(norm) when the lift is not a unit
  Rational iso_norm = 1;      // iso^T G iso = iso_norm * G
  DenseMatrix covered_frame;  // the SO(n) matrix
};
SpinCoordinateSystem spin_coordinate_system(const SpinorModule& module, const SpinElement& g);
struct SpinCoordinateReport {
  bool intertwines = false;
  bool commutes_with_even_commutant = false;
  bool isometry = false;
  bool pass() const { return intertwines && commutes_with_even_commutant && isometry; }
};
SpinCoordinateReport check_spin_coordinate_system(const SpinorModule& module, const SpinCoordinateSystem& s,
                                                  const std::vector<SparseMatrix>& even_commutant);

// rational rotation built from products of reflections in rational vectors; deterministic per seed
DenseMatrix random_rational_rotation(int n, unsigned seed);

// ---- float path (3-dimensional) ----
using Mat3 = std::array<std::array<double, 3>, 3>;
using Quat = std::array<double, 4>;  // (w, x, y, z) = w + x i + y j + z k

Quat quat_mul(const Quat& a, const Quat& b);
Quat quat_conj(const Quat& q);
std::array<double, 3> quat_rotate(const Quat& q, const std::array<double, 3>& v);  // q v conj(q)
Mat3 quat_to_matrix(const Quat& q);
Quat matrix_to_quat(const Mat3& R);  // max-diagonal branch, w >= 0 where possible

// unit quaternions lifting the sampled path, with sign continuity; the first sample has w >= 0 times initial_sign.
// Neighbours at least pi/2 apart make the lift ambiguous: an input error, or when `ambiguous` is given,
// flagged there (one entry per sample) and continued by the dot-product rule.
std::vector<Quat> quaternion_lift_path(const std::vector<Mat3>& R, int initial_sign,
                                       std::vector<char>* ambiguous = nullptr);

}  // namespace spinor
