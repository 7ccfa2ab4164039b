#include "spinor/recipe.hpp"

#include <sstream>

#include "spinor/errors.hpp"

namespace spinor {

namespace {

KElement hunit(int idx) { return KElement::unit(Algebra::H, idx); }

// operators over a K-module, together with its (graded) space
struct KOps {
  GradedSpace space;
  std::vector<KMatrix> gens;
};

KMatrix k1x1(const KElement& x) {
  KMatrix m(x.algebra, 1, 1);
  m.set(0, 0, x);
  return m;
}

KOps s4_ops(bool positive) {
  KOps o{GradedSpace::graded(Algebra::H, {1, -1}), {}};
  for (int a = 0; a < 4; ++a) o.gens.push_back(positive ? c4_pos_action(hunit(a)) : c4_action(hunit(a)));
  return o;
}

// S4 (x)^_H S4 with c4R(u) (x) 1 + 1 (x) c4L(v)
KOps s8_ops(bool positive) {
  KOps a = s4_ops(positive);
  KOps out{tensor_module(a.space, a.space, Algebra::H, true), {}};
  KMatrix IR = KMatrix::identity(Algebra::H, 2, Side::RightModuleMap);
  KMatrix IL = KMatrix::identity(Algebra::H, 2, Side::LeftModuleMap);
  for (auto& T : a.gens)
    out.gens.push_back(graded_tensor_operator({T, Degree::Odd}, {IL, Degree::Even}, a.space, a.space, Algebra::H));
  for (auto& S : a.gens)
    out.gens.push_back(
        graded_tensor_operator({IR, Degree::Even}, {S.conj_transpose(), Degree::Odd}, a.space, a.space, Algebra::H));
  return out;
}

// c_A(u) (x) I + I (x)^ c_B(v); the Koszul sign uses A's grading
KOps tensor_real(const KOps& A, const KOps& B, bool graded) {
  KOps out{tensor_module(A.space, B.space, Algebra::R, graded), {}};
  KMatrix IA = KMatrix::identity(A.space.field, A.space.dim);
  KMatrix IB = KMatrix::identity(B.space.field, B.space.dim);
  for (auto& T : A.gens)
    out.gens.push_back(graded_tensor_operator({T, Degree::Odd}, {IB, Degree::Even}, A.space, B.space, Algebra::R));
  for (auto& S : B.gens)
    out.gens.push_back(graded_tensor_operator({IA, Degree::Even}, {S, Degree::Odd}, A.space, B.space, Algebra::R));
  return out;
}

// A over H, B over K in {C, H}: A (x)_K B with the left version of B's action
KOps tensor_over(KOps A, const KOps& B, Algebra K) {
  if (K == Algebra::C) {
    std::vector<int> g;
    for (std::size_t i = 0; i < A.space.dim; ++i) g.insert(g.end(), 2, A.space.degree(i));
    KOps c{GradedSpace::graded(Algebra::C, g), {}};
    for (auto& T : A.gens) c.gens.push_back(restrict_to_complex(T));
    A = std::move(c);
  }
  KOps out{tensor_module(A.space, B.space, K, false), {}};
  KMatrix IR = KMatrix::identity(K, A.space.dim, Side::RightModuleMap);
  KMatrix IL = KMatrix::identity(K, B.space.dim, Side::LeftModuleMap);
  for (auto& T : A.gens)
    out.gens.push_back(graded_tensor_operator({T, Degree::Odd}, {IL, Degree::Even}, A.space, B.space, K));
  for (auto& S : B.gens)
    out.gens.push_back(
        graded_tensor_operator({IR, Degree::Even}, {S.conj_transpose(), Degree::Odd}, A.space, B.space, K));
  return out;
}

KOps s8k_ops(int k, bool positive) {
  KOps acc = s8_ops(positive);
  KOps s8 = acc;
  for (int j = 1; j < k; ++j) acc = tensor_real(acc, s8, true);
  return acc;
}

KOps euclid_base_ops(int n, Variant v) {
  if (v == Variant::Minus && n != 3) throw InputError("minus variant exists only for n = 3");
  switch (n) {
    case 1: return {GradedSpace::ungraded(Algebra::C, 1), {k1x1(KElement::unit(Algebra::C, 1))}};
    case 2: return {GradedSpace::ungraded(Algebra::H, 1), {k1x1(hunit(1)), k1x1(hunit(2))}};
    case 3: {
      KOps o{GradedSpace::ungraded(Algebra::H, 1), {}};
      for (int a = 1; a <= 3; ++a) o.gens.push_back(k1x1(v == Variant::Minus ? -hunit(a) : hunit(a)));
      return o;
    }
    case 4: return s4_ops(false);
  }
  throw InputError("base module dimension must be 1..4");
}

KOps positive_base_ops(int n, Variant v) {
  if (v == Variant::Minus && n != 1) throw InputError("minus variant exists only for n = 1");
  switch (n) {
    case 1: return {GradedSpace::ungraded(Algebra::R, 1), {k1x1(KElement::scalar(Algebra::R, v == Variant::Minus ? -1 : 1))}};
    case 2: {
      KMatrix a(Algebra::R, 2, 2), b(Algebra::R, 2, 2);
      a.set(0, 1, KElement::one(Algebra::R));  // f^ + iota_f
      a.set(1, 0, KElement::one(Algebra::R));
      b = KMatrix::diagonal_signs(Algebra::R, {1, -1});  // degree operator
      return {GradedSpace::ungraded(Algebra::R, 2), {a, b}};
    }
    case 3: {
      KElement one = KElement::one(Algebra::C), i = KElement::unit(Algebra::C, 1);
      KMatrix a(Algebra::C, 2, 2), b(Algebra::C, 2, 2);
      a.set(0, 1, one);
      a.set(1, 0, one);
      b.set(0, 1, -i);  // i f^ - i iota
      b.set(1, 0, i);
      return {GradedSpace::ungraded(Algebra::C, 2), {a, b, KMatrix::diagonal_signs(Algebra::C, {1, -1})}};
    }
    case 4: return s4_ops(true);
  }
  throw InputError("base module dimension must be 1..4");
}

// n = 8k + r with r in 1..8
std::pair<int, int> split8(int n) { return {(n - 1) / 8, n - 8 * ((n - 1) / 8)}; }

KOps euclid_ops(int n, Variant v) {
  if (n < 1) throw InputError("dimension must be at least 1");
  if (v == Variant::Minus && n % 4 != 3) throw InputError("minus variant exists only for n = 3 mod 4");
  auto [k, r] = split8(n);
  if (r == 8) return s8k_ops(k + 1, false);
  if (r <= 4) {
    KOps base = euclid_base_ops(r, v);
    if (k == 0) return base;
    return tensor_real(s8k_ops(k, false), base, r == 4);
  }
  KOps s = k == 0 ? s4_ops(false) : tensor_real(s8k_ops(k, false), s4_ops(false), true);
  if (r == 5) return tensor_over(s, euclid_base_ops(1, Variant::Plus), Algebra::C);
  return tensor_over(s, euclid_base_ops(r - 4, v), Algebra::H);
}

KOps positive_ops(int n, Variant v) {
  if (n < 1) throw InputError("dimension must be at least 1");
  if (v == Variant::Minus && n % 4 != 1) throw InputError("minus variant exists only for n = 1 mod 4");
  auto [k, r] = split8(n);
  if (r == 8) return s8k_ops(k + 1, true);
  if (r <= 4) {
    KOps base = positive_base_ops(r, v);
    if (k == 0) return base;
    return tensor_real(s8k_ops(k, true), base, r == 4);
  }
  KOps s = k == 0 ? s4_ops(true) : tensor_real(s8k_ops(k, true), s4_ops(true), true);
  if (r == 5) return tensor_real(s, positive_base_ops(1, v), false);
  if (r == 6) return tensor_real(s, positive_base_ops(2, Variant::Plus), false);
  return tensor_over(s, positive_base_ops(3, Variant::Plus), Algebra::C);
}

SpinorModule finish(const KOps& ops, const Signature& sig, Family fam, Variant v) {
  SpinorModule m;
  m.signature = sig;
  m.field = ops.space.field;
  m.real_dim = ops.space.real_dim();
  for (auto& g : ops.gens) m.generators.push_back(g.realify());
  m.right_units = right_unit_operators(m.field, ops.space.dim);
  if (ops.space.grading) {
    std::vector<int> g;
    for (int s : *ops.space.grading) g.insert(g.end(), algebra_dim(m.field), s);
    m.grading = std::move(g);
  }
  m.spin_metric = SparseMatrix::identity(m.real_dim);
  m.family = fam;
  m.variant = v;
  return m;
}

int power_of_16(int n) {
  int p = 1;
  for (int j = 0; j < (n - 1) / 8; ++j) p *= 16;
  return p;
}

}  // namespace

KMatrix c4_action(const KElement& q) {
  if (q.algebra != Algebra::H) throw InputError("c4_action takes a quaternion");
  KMatrix m(Algebra::H, 2, 2);
  m.set(0, 1, -conj(q));
  m.set(1, 0, q);
  return m;
}

KMatrix c4_pos_action(const KElement& q) {
  if (q.algebra != Algebra::H) throw InputError("c4_pos_action takes a quaternion");
  KMatrix m(Algebra::H, 2, 2);
  m.set(0, 1, conj(q));
  m.set(1, 0, q);
  return m;
}

SpinorModule base_module(int n, Variant v) {
  if (n < 1 || n > 4) throw InputError("base module dimension must be 1..4");
  return finish(euclid_base_ops(n, v), Signature::euclidean(n), Family::QuaternionicMultivector, v);
}

SpinorModule base_module_pos(int n, Variant v) {
  if (n < 1 || n > 4) throw InputError("base module dimension must be 1..4");
  return finish(positive_base_ops(n, v), Signature::positive(n), Family::PositiveMultivector, v);
}

SpinorModule assemble_euclidean(int n, Variant v) {
  Family f = n <= 4 ? Family::QuaternionicMultivector : Family::Assembled;
  return finish(euclid_ops(n, v), Signature::euclidean(n), f, v);
}

SpinorModule assemble_positive(int n, Variant v) {
  Family f = n <= 4 ? Family::PositiveMultivector : Family::Assembled;
  return finish(positive_ops(n, v), Signature::positive(n), f, v);
}

SpinorModule split_signature_module(int i) {
  if (i < 1 || i > 12) throw InputError("split signature index must be 1..12");
  const std::size_t d = std::size_t(1) << i;
  SpinorModule m;
  m.signature = Signature(i, i);
  m.field = Algebra::R;
  m.real_dim = d;
  // basis: blades of the exterior algebra in bitmask order
  for (int sgn : {1, -1})
    for (int k = 0; k < i; ++k) {
      std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
      for (Blade b = 0; b < d; ++b) {
        Blade fk = Blade(1) << k;
        int s = wedge_sign(fk, b);
        if (s) t.emplace_back(b | fk, b, Rational(s));  // f_k ^
        else t.emplace_back(b & ~fk, b, Rational(wedge_sign(fk, b & ~fk) * sgn));  // +- iota_{f^k}
      }
      m.generators.push_back(SparseMatrix::from_triplets(d, d, std::move(t)));
    }
  std::vector<int> g(d);
  for (Blade b = 0; b < d; ++b) g[b] = blade_grade(b) % 2 ? -1 : 1;
  m.grading = std::move(g);
  m.spin_metric = SparseMatrix::identity(d);
  m.family = Family::SplitExterior;
  return m;
}

bool has_minus_variant(int r, int s) {
  int i = std::min(r, s);
  int a = r - i, b = s - i;
  return (a > 0 && a % 4 == 1) || (b > 0 && b % 4 == 3);
}

std::size_t expected_real_dim(int r, int s) {
  static const int euclid[] = {2, 4, 4, 8, 8, 8, 8, 16};
  static const int pos[] = {1, 2, 4, 8, 8, 16, 16, 16};
  int i = std::min(r, s);
  int a = r - i, b = s - i;
  std::size_t d = std::size_t(1) << i;
  if (a > 0) d *= pos[(a - 1) % 8] * power_of_16(a);
  if (b > 0) d *= euclid[(b - 1) % 8] * power_of_16(b);
  return d;
}

Algebra expected_field(int r, int s) {
  using A = Algebra;
  static const A euclid[] = {A::C, A::H, A::H, A::H, A::C, A::R, A::R, A::R};
  static const A pos[] = {A::R, A::R, A::C, A::H, A::H, A::H, A::C, A::R};
  int i = std::min(r, s);
  if (r - i > 0) return pos[(r - i - 1) % 8];
  if (s - i > 0) return euclid[(s - i - 1) % 8];
  return A::R;
}

SpinorModule assemble_signature(int r, int s, Variant v) {
  if (r < 0 || s < 0 || r + s < 1) throw InputError("signature needs r, s >= 0 and r + s >= 1");
  if (v == Variant::Minus && !has_minus_variant(r, s))
    throw InputError("signature (" + std::to_string(r) + "," + std::to_string(s) + ") has no minus variant");
  const int i = std::min(r, s);
  const int a = r - i, b = s - i;
  if (i == 0) return a > 0 ? assemble_positive(a, v) : assemble_euclidean(b, v);
  SpinorModule split = split_signature_module(i);
  if (a == 0 && b == 0) return split;
  SpinorModule f = a > 0 ? assemble_positive(a, v) : assemble_euclidean(b, v);
  const std::size_t ds = split.real_dim, df = f.real_dim;
  SparseMatrix gamma = SparseMatrix::diagonal([&] {
    std::vector<Rational> d;
    for (int x : *split.grading) d.push_back(x);
    return d;
  }());
  SparseMatrix Is = SparseMatrix::identity(ds), If = SparseMatrix::identity(df);
  std::vector<SparseMatrix> plus, minus;
  for (int k = 0; k < i; ++k) plus.push_back(SparseMatrix::kron(split.generators[k], If));
  for (int k = 0; k < i; ++k) minus.push_back(SparseMatrix::kron(split.generators[i + k], If));
  for (auto& g : f.generators) (a > 0 ? plus : minus).push_back(SparseMatrix::kron(gamma, g));
  SpinorModule m;
  m.signature = Signature(r, s);
  m.field = f.field;
  m.real_dim = ds * df;
  m.generators = std::move(plus);
  m.generators.insert(m.generators.end(), minus.begin(), minus.end());
  for (auto& u : f.right_units) m.right_units.push_back(SparseMatrix::kron(Is, u));
  if (f.grading) {
    std::vector<int> g;
    for (int x : *split.grading)
      for (int y : *f.grading) g.push_back(x * y);
    m.grading = std::move(g);
  }
  m.spin_metric = SparseMatrix::identity(m.real_dim);
  m.family = Family::Assembled;
  m.variant = v;
  return m;
}

// ---------------------------------------------------------------------------

SpinorModule sqrt_space_module(int n) {
  if (n < 1 || n > 4) throw InputError("the square-root-of-space family exists only for n <= 4");
  const Signature sig = Signature::euclidean(n);
  SpinorModule m;
  m.signature = sig;
  m.family = Family::SqrtSpace;
  if (n <= 2) {
    // full exterior algebra, c(v) = v^ - iota_v
    const std::size_t d = std::size_t(1) << n;
    m.real_dim = d;
    for (int k = 0; k < n; ++k) {
      std::vector<Rational> v(n, Rational(0));
      v[k] = 1;
      Multivector ek = Multivector::basis_vector(sig, k);
      std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
      for (Blade b = 0; b < d; ++b) {
        Multivector x = Multivector::blade(sig, b);
        Multivector y = wedge(ek, x) - interior(v, x);
        for (auto& [bb, q] : y.terms()) t.emplace_back(bb, b, q);
      }
      m.generators.push_back(SparseMatrix::from_triplets(d, d, std::move(t)));
    }
    m.field = n == 1 ? Algebra::C : Algebra::H;
    m.spin_metric = SparseMatrix::identity(d);
    m.right_units = derive_right_units(m.generators, d);
    return m;
  }
  // coordinates: lambda, w_1..w_n, then (n = 4) the anti-self-dual basis
  std::vector<Multivector> asd;
  if (n == 4) {
    auto bl = [&](Blade b, int s) { return Multivector::blade(sig, b, s); };
    asd = {bl(0b0011, 1) + bl(0b1100, -1), bl(0b0101, 1) + bl(0b1010, 1), bl(0b1001, 1) + bl(0b0110, -1)};
  }
  const std::size_t d = 1 + n + asd.size();
  m.real_dim = d;
  auto unpack = [&](std::size_t j) -> Multivector {
    if (j == 0) return Multivector::scalar(sig, 1);
    if (j <= static_cast<std::size_t>(n)) return Multivector::basis_vector(sig, static_cast<int>(j - 1));
    return asd[j - 1 - n];
  };
  auto pack = [&](const Multivector& x, std::size_t col, std::vector<std::tuple<std::size_t, std::size_t, Rational>>& t) {
    Multivector rest = x;
    if (!x.scalar_part().is_zero()) t.emplace_back(0, col, x.scalar_part());
    rest -= x.grade_part(0);
    for (int k = 0; k < n; ++k) {
      Rational q = x.coeff(Blade(1) << k);
      if (!q.is_zero()) t.emplace_back(1 + k, col, q);
    }
    rest -= x.grade_part(1);
    for (std::size_t a = 0; a < asd.size(); ++a) {
      Rational dot = 0;
      for (auto& [b, q] : asd[a].terms()) dot += q * x.coeff(b);
      Rational c = dot / 2;
      if (!c.is_zero()) t.emplace_back(1 + n + a, col, c);
      rest -= asd[a] * c;
    }
    if (!rest.is_zero()) throw StructuralError("sqrt-space action leaves the model space");
  };
  for (int k = 0; k < n; ++k) {
    std::vector<Rational> vv(n, Rational(0));
    vv[k] = 1;
    Multivector v = Multivector::basis_vector(sig, k);
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
    for (std::size_t j = 0; j < d; ++j) {
      Multivector x = unpack(j);
      Multivector lam = x.grade_part(0), w = x.grade_part(1), tau = x.grade_part(2);
      Rational vw = 0;
      for (int c = 0; c < n; ++c) vw += vv[c] * w.coeff(Blade(1) << c);
      Multivector out = Multivector::scalar(sig, -vw);
      out += v * lam.scalar_part();
      if (n == 3) {
        out += hodge_star(n, wedge(v, w));
      } else {
        out += hodge_star(n, wedge(v, tau)) - interior(vv, tau);
        Multivector vw2 = wedge(v, w);
        out += (vw2 - hodge_star(n, vw2)) * Rational(1, 2);
      }
      pack(out, j, t);
    }
    m.generators.push_back(SparseMatrix::from_triplets(d, d, std::move(t)));
  }
  m.field = Algebra::H;
  std::vector<Rational> diag(d, Rational(1));
  // 2-forms measured by the sum of tau_ij^2 over all i, j: e12 - e34 has length^2 4
  for (std::size_t a = 0; a < asd.size(); ++a) diag[1 + n + a] = 4;
  m.spin_metric = SparseMatrix::diagonal(diag);
  m.right_units = derive_right_units(m.generators, d);
  return m;
}

SpinorModule octonion_module(int k) {
  if (k < 4 || k > 8) throw InputError("the octonion family covers 4 <= k <= 8");
  SpinorModule m;
  m.signature = Signature::euclidean(k);
  m.family = Family::Octonion;
  auto mat = [](const std::vector<Rational>& e, std::size_t dd) {
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
    for (std::size_t a = 0; a < dd; ++a)
      for (std::size_t b = 0; b < dd; ++b)
        if (!e[a * dd + b].is_zero()) t.emplace_back(a, b, e[a * dd + b]);
    return SparseMatrix::from_triplets(dd, dd, std::move(t));
  };
  if (k < 8) {
    m.real_dim = 8;
    for (int a = 1; a <= k; ++a) m.generators.push_back(mat(right_mult_matrix(KElement::unit(Algebra::O, a)), 8));
    m.field = expected_field(0, k);
  } else {
    // x -> ((u, v) -> (-conj(x) v, x u))
    m.real_dim = 16;
    for (int a = 0; a < 8; ++a) {
      KElement x = KElement::unit(Algebra::O, a);
      auto L = left_mult_matrix(x);
      auto Lc = left_mult_matrix(conj(x));
      std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
      for (std::size_t p = 0; p < 8; ++p)
        for (std::size_t q = 0; q < 8; ++q) {
          if (!Lc[p * 8 + q].is_zero()) t.emplace_back(p, 8 + q, -Lc[p * 8 + q]);
          if (!L[p * 8 + q].is_zero()) t.emplace_back(8 + p, q, L[p * 8 + q]);
        }
      m.generators.push_back(SparseMatrix::from_triplets(16, 16, std::move(t)));
    }
    m.field = Algebra::R;
  }
  m.spin_metric = SparseMatrix::identity(m.real_dim);
  m.right_units = derive_right_units(m.generators, m.real_dim);
  if (k % 4 == 0) {
    SparseMatrix nu = m.volume_operator();
    if (nu.is_diagonal()) {
      std::vector<int> g(m.real_dim);
      for (std::size_t i = 0; i < m.real_dim; ++i) g[i] = nu.get(i, i).sign();
      m.grading = std::move(g);
    }
  }
  return m;
}

// ---------------------------------------------------------------------------

std::string MetricReport::str() const {
  if (pass) return "spin metric: pass";
  std::ostringstream os;
  os << "spin metric: FAIL";
  for (auto& f : failures) os << "\n  " << f;
  return os.str();
}

MetricReport spin_metric_verify(const SpinorModule& m) { return spin_metric_verify(m, m.spin_metric); }

MetricReport spin_metric_verify(const SpinorModule& m, const SparseMatrix& G) {
  MetricReport rep;
  auto fail = [&](std::string s) {
    rep.pass = false;
    rep.failures.push_back(std::move(s));
  };
  if (G.rows() != m.real_dim || G.cols() != m.real_dim) {
    fail("metric has the wrong size");
    return rep;
  }
  if (!(G.transpose() == G)) fail("metric is not symmetric");
  if (G.is_diagonal()) {
    for (std::size_t i = 0; i < G.rows(); ++i)
      if (G.get(i, i).sign() <= 0) {
        fail("metric is not positive definite");
        break;
      }
  } else if (G.rows() <= 64) {
    DenseMatrix D = G.to_dense();
    for (std::size_t l = 1; l <= D.rows(); ++l) {
      DenseMatrix P(l, l);
      for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) P.at(i, j) = D.at(i, j);
      if (determinant(P).sign() <= 0) {
        fail("metric is not positive definite");
        break;
      }
    }
  }
  for (std::size_t i = 0; i < m.generators.size(); ++i) {
    const SparseMatrix& c = m.generators[i];
    int sq = m.signature.square(static_cast<int>(i));
    if (!(c.transpose() * G == Rational(sq) * (G * c)))
      fail("c(e" + std::to_string(i + 1) + ") is not " + (sq < 0 ? "skew" : "symmetric") + " for the metric");
  }
  for (std::size_t u = 0; u < m.right_units.size(); ++u) {
    const SparseMatrix& a = m.right_units[u];
    if (!(a.transpose() * G == -(G * a))) fail("right unit " + std::to_string(u + 1) + " is not skew");
    for (std::size_t i = 0; i < m.generators.size(); ++i)
      if (!(a * m.generators[i] == m.generators[i] * a)) {
        fail("right unit " + std::to_string(u + 1) + " does not commute with c(e" + std::to_string(i + 1) + ")");
        break;
      }
  }
  return rep;
}

std::vector<SparseMatrix> even_generators(const SpinorModule& m) {
  std::vector<SparseMatrix> out;
  const auto& g = m.generators;
  if (g.size() == 1) out.push_back(g[0] * g[0]);
  for (std::size_t j = 1; j < g.size(); ++j) out.push_back(g[0] * g[j]);
  return out;
}

Commutant intertwiners(const SpinorModule& m, bool even_only) {
  return commutant(even_only ? even_generators(m) : m.generators, m.real_dim);
}

std::optional<Commutant> half_spinor_commutant(const SpinorModule& m) {
  if (!m.grading) return std::nullopt;
  std::vector<std::size_t> idx;
  std::vector<long> pos(m.real_dim, -1);
  for (std::size_t i = 0; i < m.real_dim; ++i)
    if ((*m.grading)[i] > 0) {
      pos[i] = static_cast<long>(idx.size());
      idx.push_back(i);
    }
  std::vector<SparseMatrix> gens;
  for (auto& e : even_generators(m)) {
    SparseMatrix r(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
      SparseVec row;
      for (auto& [j, q] : e.row(idx[a]))
        if (pos[j] < 0) throw StructuralError("even operator does not preserve the grading");
        else row.emplace_back(static_cast<std::size_t>(pos[j]), q);
      r.set_row(a, std::move(row));
    }
    gens.push_back(std::move(r));
  }
  return commutant(gens, idx.size());
}

std::vector<SparseMatrix> derive_right_units(const std::vector<SparseMatrix>& generators, std::size_t d) {
  Commutant C = commutant(generators, d);
  const std::size_t m = C.real_dimension;
  if (m == 1) return {};
  if (m != 2 && m != 4) throw StructuralError("commutant is not R, C or H (dimension " + std::to_string(m) + ")");
  SparseMatrix I = SparseMatrix::identity(d);
  auto trace = [&](const SparseMatrix& X) {
    Rational t = 0;
    for (std::size_t i = 0; i < d; ++i) t += X.get(i, i);
    return t / Rational(static_cast<long>(d));
  };
  auto normalize = [&](const SparseMatrix& X) {
    Rational q;
    if (!(X * X).is_scalar(&q) || q.sign() >= 0) throw StructuralError("commutant element does not square to a negative scalar");
    Rational n = -q;
    if (!n.is_square()) throw StructuralError("commutant unit needs an irrational normalization");
    return (Rational(1) / n.sqrt_exact()) * X;
  };
  std::vector<SparseMatrix> tf;
  for (auto& B : C.basis) {
    SparseMatrix X = B - trace(B) * I;
    if (!X.is_zero()) tf.push_back(X);
  }
  if (tf.empty()) throw StructuralError("commutant has no imaginary part");
  SparseMatrix U1 = normalize(tf[0]);
  if (m == 2) return {U1};
  for (std::size_t j = 1; j < tf.size(); ++j) {
    Rational s;
    if (!(U1 * tf[j] + tf[j] * U1).is_scalar(&s)) throw StructuralError("commutant is not quaternionic");
    SparseMatrix Y = tf[j] + (s / 2) * U1;
    if (Y.is_zero()) continue;
    SparseMatrix U2 = normalize(Y);
    return {U1, U2, U1 * U2};
  }
  throw StructuralError("commutant is not quaternionic");
}

SparseMatrix spinor_square_operator(const SpinorModule& m, const std::vector<Rational>& s1,
                                    const std::vector<Rational>& s2) {
  if (s1.size() != m.real_dim || s2.size() != m.real_dim) throw InputError("spinor has the wrong length");
  std::vector<SparseMatrix> us{SparseMatrix::identity(m.real_dim)};
  us.insert(us.end(), m.right_units.begin(), m.right_units.end());
  SparseMatrix rhs(m.real_dim, m.real_dim);
  for (auto& U : us) {
    auto a = U.apply(s1);
    auto b = m.spin_metric.transpose().apply(U.apply(s2));  // (U s2)^T G as a column
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!a[i].is_zero())
        for (std::size_t j = 0; j < b.size(); ++j)
          if (!b[j].is_zero()) t.emplace_back(i, j, a[i] * b[j]);
    rhs = rhs + SparseMatrix::from_triplets(m.real_dim, m.real_dim, std::move(t));
  }
  return rhs;
}

Multivector spinor_square(const SpinorModule& m, const std::vector<Rational>& s1, const std::vector<Rational>& s2) {
  const int n = m.signature.n();
  if (n > 10) throw InputError("spinor_square is limited to n <= 10");
  SparseMatrix rhs = spinor_square_operator(m, s1, s2);
  const bool even_only = n % 4 == 3;
  std::vector<Blade> blades;
  for (Blade b = 0; b < (Blade(1) << n); ++b)
    if (!even_only || blade_grade(b) % 2 == 0) blades.push_back(b);
  const std::size_t d = m.real_dim;
  DenseMatrix A(d * d, blades.size());
  std::vector<Rational> y(d * d, Rational(0));
  for (std::size_t c = 0; c < blades.size(); ++c) {
    SparseMatrix op = m.blade_operator(blades[c]);
    for (std::size_t i = 0; i < d; ++i)
      for (auto& [j, q] : op.row(i)) A.at(i * d + j, c) = q;
  }
  for (std::size_t i = 0; i < d; ++i)
    for (auto& [j, q] : rhs.row(i)) y[i * d + j] = q;
  auto x = solve_unique(A, y);
  if (!x) throw StructuralError("spinor square has no unique solution on this module");
  Multivector w(m.signature);
  for (std::size_t c = 0; c < blades.size(); ++c) w.add_term(blades[c], (*x)[c]);
  return w;
}

}  // namespace spinor
