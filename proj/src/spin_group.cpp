#include "spinor/spin_group.hpp"

#include <cmath>
#include <random>

#include "spinor/errors.hpp"

namespace spinor {

namespace {

Rational metric_dot(const Signature& sig, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (int i = 0; i < sig.n(); ++i) s += Rational(sig.metric(i)) * a[i] * b[i];
  return s;
}

}  // namespace

SpinElement make_spin_element(const Multivector& g) {
  if (!g.is_even()) throw InputError("spin element must be even");
  Multivector nn = g * reversion(g);
  if (!nn.is_scalar() || nn.scalar_part().sign() == 0) throw InputError("element is not in the Clifford group");
  SpinElement s{g, nn.scalar_part()};
  if (s.norm.sign() > 0 && s.norm.is_square() && !s.norm.is_one()) {
    s.value = g * (Rational(1) / s.norm.sqrt_exact());
    s.norm = 1;
  }
  return s;
}

std::vector<Rational> reflection(const std::vector<Rational>& w, const std::vector<Rational>& v, const Signature& sig) {
  if (static_cast<int>(w.size()) != sig.n() || static_cast<int>(v.size()) != sig.n())
    throw InputError("reflection: length mismatch");
  Rational ww = metric_dot(sig, w, w);
  if (ww.is_zero()) throw InputError("reflection in a null vector");
  Rational f = Rational(2) * metric_dot(sig, v, w) / ww;
  std::vector<Rational> out = v;
  for (int i = 0; i < sig.n(); ++i) out[i] -= f * w[i];
  return out;
}

std::vector<Rational> twisted_adjoint(const Multivector& g, const std::vector<Rational>& v) {
  const Signature& sig = g.signature();
  Multivector r = g * Multivector::vector(sig, v) * inverse(grade_involution(g));
  if (!r.is_vector()) throw InputError("twisted adjoint does not preserve vectors: not a Clifford group element");
  return r.vector_part();
}

DenseMatrix twisted_adjoint_matrix(const Multivector& g) {
  const Signature& sig = g.signature();
  const int n = sig.n();
  Multivector gi = inverse(grade_involution(g));
  DenseMatrix M(n, n);
  for (int i = 0; i < n; ++i) {
    Multivector r = g * Multivector::basis_vector(sig, i) * gi;
    if (!r.is_vector()) throw InputError("twisted adjoint does not preserve vectors: not a Clifford group element");
    auto col = r.vector_part();
    for (int j = 0; j < n; ++j) M.at(j, i) = col[j];
  }
  return M;
}

SpinElement spin_lift(const DenseMatrix& R) {
  const std::size_t n = R.rows();
  if (n == 0 || R.cols() != n) throw InputError("spin_lift: matrix must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += R.at(k, i) * R.at(k, j);
      if (!(s == Rational(i == j ? 1 : 0))) throw InputError("spin_lift: matrix is not orthogonal");
    }
  if (!determinant(R).is_one()) throw InputError("spin_lift: determinant is not 1");
  const Signature sig = Signature::euclidean(static_cast<int>(n));
  // reduce M to I column by column with reflections: H_k..H_1 R = I, so R = H_1..H_k = Ad(w_1..w_k)
  DenseMatrix M = R;
  Multivector g = Multivector::scalar(sig, 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> w(n);
    bool fixed = true;
    for (std::size_t k = 0; k < n; ++k) {
      w[k] = M.at(k, i) - Rational(k == i ? 1 : 0);
      fixed = fixed && w[k].is_zero();
    }
    if (fixed) continue;
    for (std::size_t c = i; c < n; ++c) {
      std::vector<Rational> col(n);
      for (std::size_t k = 0; k < n; ++k) col[k] = M.at(k, c);
      auto h = reflection(w, col, sig);
      for (std::size_t k = 0; k < n; ++k) M.at(k, c) = h[k];
    }
    g = g * Multivector::vector(sig, w);
  }
  return make_spin_element(g);
}

CoverReport double_cover_check(const SpinElement& g, const SpinorModule& module) {
  CoverReport rep;
  DenseMatrix a = twisted_adjoint_matrix(g.value), b = twisted_adjoint_matrix(-g.value);
  rep.same_rotation = true;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) rep.same_rotation = rep.same_rotation && a.at(i, j) == b.at(i, j);
  SparseMatrix p = module.evaluate(g.value), m = module.evaluate(-g.value);
  rep.distinct_action = !(p == m);
  return rep;
}

SparseMatrix spin_action(const SpinorModule& module, const SpinElement& g) {
  if (!(g.value.signature() == module.signature)) throw InputError("spin_action: signature mismatch");
  if (!g.is_unit()) throw PreconditionError("spin_action needs a unit spin element");
  return module.evaluate(g.value);
}

SpinCoordinateSystem spin_coordinate_system(const SpinorModule& module, const SpinElement& g) {
  if (!(g.value.signature() == module.signature)) throw InputError("spin coordinate system: signature mismatch");
  return {module.evaluate(g.value), g.norm, twisted_adjoint_matrix(g.value)};
}

SpinCoordinateReport check_spin_coordinate_system(const SpinorModule& module, const SpinCoordinateSystem& s,
                                                  const std::vector<SparseMatrix>& even_commutant) {
  SpinCoordinateReport rep;
  const std::size_t n = module.generators.size();
  rep.intertwines = true;
  for (std::size_t i = 0; i < n; ++i) {
    SparseMatrix rhs(module.real_dim, module.real_dim);
    for (std::size_t j = 0; j < n; ++j)
      if (!s.covered_frame.at(j, i).is_zero()) rhs = rhs + s.covered_frame.at(j, i) * module.generators[j];
    if (!(s.iso * module.generators[i] == rhs * s.iso)) rep.intertwines = false;
  }
  rep.commutes_with_even_commutant = true;
  for (auto& X : even_commutant)
    if (!(X * s.iso == s.iso * X)) rep.commutes_with_even_commutant = false;
  const SparseMatrix& G = module.spin_metric;
  rep.isometry = s.iso.transpose() * G * s.iso == s.iso_norm * G;
  return rep;
}

DenseMatrix random_rational_rotation(int n, unsigned seed) {
  if (n < 1) throw InputError("rotation dimension must be positive");
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> comp(-3, 3);
  std::uniform_int_distribution<int> pairs(1, 2);
  const Signature sig = Signature::euclidean(n);
  DenseMatrix R(n, n);
  for (int i = 0; i < n; ++i) R.at(i, i) = 1;
  if (n == 1) return R;
  int count = 2 * pairs(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<Rational> w(n);
    bool nz = false;
    while (!nz) {
      for (auto& c : w) {
        c = comp(rng);
        nz = nz || !c.is_zero();
      }
    }
    for (int c = 0; c < n; ++c) {
      std::vector<Rational> col(n);
      for (int k = 0; k < n; ++k) col[k] = R.at(k, c);
      auto h = reflection(w, col, sig);
      for (int k = 0; k < n; ++k) R.at(k, c) = h[k];
    }
  }
  return R;
}

// ---------------------------------------------------------------------------

Quat quat_mul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quat quat_conj(const Quat& q) { return {q[0], -q[1], -q[2], -q[3]}; }

std::array<double, 3> quat_rotate(const Quat& q, const std::array<double, 3>& v) {
  Quat r = quat_mul(quat_mul(q, {0, v[0], v[1], v[2]}), quat_conj(q));
  return {r[1], r[2], r[3]};
}

Mat3 quat_to_matrix(const Quat& q) {
  Mat3 R;
  for (int c = 0; c < 3; ++c) {
    std::array<double, 3> e{0, 0, 0};
    e[c] = 1;
    auto col = quat_rotate(q, e);
    for (int r = 0; r < 3; ++r) R[r][c] = col[r];
  }
  return R;
}

Quat matrix_to_quat(const Mat3& R) {
  const double tr = R[0][0] + R[1][1] + R[2][2];
  Quat q;
  if (tr >= R[0][0] && tr >= R[1][1] && tr >= R[2][2]) {
    double s = std::sqrt(1 + tr) * 2;  // 4w
    q = {s / 4, (R[2][1] - R[1][2]) / s, (R[0][2] - R[2][0]) / s, (R[1][0] - R[0][1]) / s};
  } else if (R[0][0] >= R[1][1] && R[0][0] >= R[2][2]) {
    double s = std::sqrt(1 + R[0][0] - R[1][1] - R[2][2]) * 2;  // 4x
    q = {(R[2][1] - R[1][2]) / s, s / 4, (R[0][1] + R[1][0]) / s, (R[0][2] + R[2][0]) / s};
  } else if (R[1][1] >= R[2][2]) {
    double s = std::sqrt(1 + R[1][1] - R[0][0] - R[2][2]) * 2;  // 4y
    q = {(R[0][2] - R[2][0]) / s, (R[0][1] + R[1][0]) / s, s / 4, (R[1][2] + R[2][1]) / s};
  } else {
    double s = std::sqrt(1 + R[2][2] - R[0][0] - R[1][1]) * 2;  // 4z
    q = {(R[1][0] - R[0][1]) / s, (R[0][2] + R[2][0]) / s, (R[1][2] + R[2][1]) / s, s / 4};
  }
  if (q[0] < 0) q = {-q[0], -q[1], -q[2], -q[3]};
  double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  for (auto& c : q) c /= n;
  return q;
}

std::vector<Quat> quaternion_lift_path(const std::vector<Mat3>& Rs, int initial_sign, std::vector<char>* ambiguous) {
  if (initial_sign != 1 && initial_sign != -1) throw InputError("initial sign must be +1 or -1");
  std::vector<Quat> out;
  out.reserve(Rs.size());
  if (ambiguous) ambiguous->assign(Rs.size(), 0);
  for (std::size_t k = 0; k < Rs.size(); ++k) {
    const Mat3& R = Rs[k];
    double dev = 0, det = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0;
        for (int l = 0; l < 3; ++l) s += R[l][i] * R[l][j];
        dev += (s - (i == j)) * (s - (i == j));
      }
    det = R[0][0] * (R[1][1] * R[2][2] - R[1][2] * R[2][1]) - R[0][1] * (R[1][0] * R[2][2] - R[1][2] * R[2][0]) +
          R[0][2] * (R[1][0] * R[2][1] - R[1][1] * R[2][0]);
    if (std::sqrt(dev) > 1e-9 || det <= 0)
      throw InputError("sample " + std::to_string(k) + " is not a rotation matrix");
    Quat q = matrix_to_quat(R);
    if (k == 0) {
      if (initial_sign < 0) q = {-q[0], -q[1], -q[2], -q[3]};
    } else {
      const Mat3& P = Rs[k - 1];
      double tr = 0;  // trace(P^T R) = 1 + 2 cos(angle)
      for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 3; ++l) tr += P[l][i] * R[l][i];
      if (tr <= 1 && ambiguous) (*ambiguous)[k] = 1;
      else if (tr <= 1) throw InputError("samples " + std::to_string(k - 1) + " and " + std::to_string(k) +
                                    " are too far apart for an unambiguous lift");
      const Quat& p = out.back();
      double dot = p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3];
      if (dot < 0) q = {-q[0], -q[1], -q[2], -q[3]};
    }
    out.push_back(q);
  }
  return out;
}

}  // namespace spinor
