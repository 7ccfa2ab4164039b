#include "spinor/division_algebra.hpp"

#include <ostream>

#include "spinor/errors.hpp"

namespace spinor {

int algebra_dim(Algebra a) {
  switch (a) {
    case Algebra::R: return 1;
    case Algebra::C: return 2;
    case Algebra::H: return 4;
    case Algebra::O: return 8;
  }
  return 0;
}

const char* algebra_name(Algebra a) {
  switch (a) {
    case Algebra::R: return "R";
    case Algebra::C: return "C";
    case Algebra::H: return "H";
    case Algebra::O: return "O";
  }
  return "?";
}

Algebra algebra_from_name(const std::string& s) {
  if (s == "R") return Algebra::R;
  if (s == "C") return Algebra::C;
  if (s == "H") return Algebra::H;
  if (s == "O") return Algebra::O;
  throw InputError("unknown algebra tag '" + s + "'");
}

KElement::KElement(Algebra a, std::vector<Rational> c) : algebra(a), coeffs(std::move(c)) {
  if (static_cast<int>(coeffs.size()) != algebra_dim(a))
    throw InputError(std::string("coefficient count does not match algebra ") + algebra_name(a));
}

KElement KElement::zero(Algebra a) {
  return KElement(a, std::vector<Rational>(algebra_dim(a), Rational(0)));
}

KElement KElement::one(Algebra a) { return scalar(a, 1); }

KElement KElement::scalar(Algebra a, const Rational& x) {
  KElement e = zero(a);
  e.coeffs[0] = x;
  return e;
}

KElement KElement::unit(Algebra a, int index) {
  if (index < 0 || index >= algebra_dim(a)) throw InputError("basis index out of range");
  KElement e = zero(a);
  e.coeffs[index] = 1;
  return e;
}

bool KElement::is_zero() const {
  for (auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

bool KElement::is_real() const {
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) return false;
  return true;
}

KElement KElement::operator-() const {
  KElement r = *this;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

static void check_same(const KElement& x, const KElement& y) {
  if (x.algebra != y.algebra) throw InputError("algebra tag mismatch");
}

KElement& KElement::operator+=(const KElement& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

KElement& KElement::operator-=(const KElement& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

KElement& KElement::operator*=(const Rational& s) {
  for (auto& c : coeffs) c *= s;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const KElement& x) {
  os << algebra_name(x.algebra) << "(";
  for (int i = 0; i < x.dim(); ++i) os << (i ? "," : "") << x[i];
  return os << ")";
}

namespace {

using Q = std::array<Rational, 4>;

Q qmul(const Q& a, const Q& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Q qconj(const Q& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Q qsub(const Q& a, const Q& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }
Q qadd(const Q& a, const Q& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }

Q half(const KElement& x, int off) { return {x[off], x[off + 1], x[off + 2], x[off + 3]}; }

}  // namespace

KElement mul(Algebra a, const KElement& x, const KElement& y) {
  if (x.algebra != a || y.algebra != a) throw InputError("algebra tag mismatch in mul");
  switch (a) {
    case Algebra::R:
      return KElement(a, {x[0] * y[0]});
    case Algebra::C:
      return KElement(a, {x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]});
    case Algebra::H: {
      Q r = qmul(half(x, 0), half(y, 0));
      return KElement(a, {r[0], r[1], r[2], r[3]});
    }
    case Algebra::O: {
      // (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))
      Q A = half(x, 0), B = half(x, 4), C = half(y, 0), D = half(y, 4);
      Q lo = qsub(qmul(A, C), qmul(qconj(D), B));
      Q hi = qadd(qmul(D, A), qmul(B, qconj(C)));
      return KElement(a, {lo[0], lo[1], lo[2], lo[3], hi[0], hi[1], hi[2], hi[3]});
    }
  }
  return {};
}

KElement conj(Algebra a, const KElement& x) {
  if (x.algebra != a) throw InputError("algebra tag mismatch in conj");
  KElement r = x;
  for (int i = 1; i < r.dim(); ++i) r[i] = -r[i];
  return r;
}

Rational norm_sq(Algebra a, const KElement& x) {
  if (x.algebra != a) throw InputError("algebra tag mismatch in norm_sq");
  Rational s = 0;
  for (auto& c : x.coeffs) s += c * c;
  return s;
}

KElement operator*(const KElement& x, const KElement& y) {
  check_same(x, y);
  return mul(x.algebra, x, y);
}
KElement conj(const KElement& x) { return conj(x.algebra, x); }
Rational norm_sq(const KElement& x) { return norm_sq(x.algebra, x); }

KElement inverse(const KElement& x) {
  Rational n = norm_sq(x);
  if (n.is_zero()) throw InputError("inverse of zero");
  return conj(x) * (Rational(1) / n);
}

const std::array<std::array<BasisProduct, 8>, 8>& octonion_table() {
  static const auto table = [] {
    std::array<std::array<BasisProduct, 8>, 8> t{};
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        KElement p = mul(Algebra::O, KElement::unit(Algebra::O, a), KElement::unit(Algebra::O, b));
        for (int c = 0; c < 8; ++c)
          if (!p[c].is_zero()) t[a][b] = {p[c].sign(), c};
      }
    return t;
  }();
  return table;
}

std::vector<Rational> left_mult_matrix(const KElement& a) {
  int d = a.dim();
  std::vector<Rational> m(d * d, Rational(0));
  for (int col = 0; col < d; ++col) {
    KElement img = a * KElement::unit(a.algebra, col);
    for (int row = 0; row < d; ++row) m[row * d + col] = img[row];
  }
  return m;
}

std::vector<Rational> right_mult_matrix(const KElement& a) {
  int d = a.dim();
  std::vector<Rational> m(d * d, Rational(0));
  for (int col = 0; col < d; ++col) {
    KElement img = KElement::unit(a.algebra, col) * a;
    for (int row = 0; row < d; ++row) m[row * d + col] = img[row];
  }
  return m;
}

}  // namespace spinor
