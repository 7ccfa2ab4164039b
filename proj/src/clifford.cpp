#include "spinor/clifford.hpp"

#include <ostream>

#include "spinor/errors.hpp"
#include "spinor/linalg.hpp"

namespace spinor {

Signature::Signature(int r_, int s_) : r(r_), s(s_) {
  if (r < 0 || s < 0 || r + s < 1) throw InputError("signature needs r,s >= 0 and r+s >= 1");
  if (r + s > 30) throw InputError("signature too large");
}

std::string Signature::str() const { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

BladeProduct blade_product(const Signature& sig, Blade a, Blade b) {
  int swaps = 0;
  for (Blade t = b; t; t &= t - 1) {
    int j = __builtin_ctz(t);
    swaps += __builtin_popcount(a >> (j + 1));
  }
  int sign = (swaps & 1) ? -1 : 1;
  for (Blade t = a & b; t; t &= t - 1)
    if (__builtin_ctz(t) >= sig.r) sign = -sign;
  return {sign, a ^ b};
}

int wedge_sign(Blade a, Blade b) {
  if (a & b) return 0;
  int swaps = 0;
  for (Blade t = b; t; t &= t - 1) swaps += __builtin_popcount(a >> (__builtin_ctz(t) + 1));
  return (swaps & 1) ? -1 : 1;
}

Multivector Multivector::scalar(const Signature& sig, const Rational& q) { return blade(sig, 0, q); }

Multivector Multivector::basis_vector(const Signature& sig, int i) {
  if (i < 0 || i >= sig.n()) throw InputError("generator index out of range");
  return blade(sig, Blade(1) << i);
}

Multivector Multivector::blade(const Signature& sig, Blade b, const Rational& q) {
  Multivector m(sig);
  m.add_term(b, q);
  return m;
}

Multivector Multivector::vector(const Signature& sig, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != sig.n()) throw InputError("vector length does not match signature");
  Multivector m(sig);
  for (int i = 0; i < sig.n(); ++i) m.add_term(Blade(1) << i, v[i]);
  return m;
}

Rational Multivector::coeff(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::add_term(Blade b, const Rational& q) {
  if (sig_.n() < 32 && (b >> sig_.n())) throw InputError("blade outside signature");
  if (q.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(b, q);
  if (!fresh) {
    it->second += q;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Multivector::is_even() const {
  for (auto& [b, q] : terms_)
    if (blade_grade(b) & 1) return false;
  return true;
}

bool Multivector::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

bool Multivector::is_vector() const {
  for (auto& [b, q] : terms_)
    if (blade_grade(b) != 1) return false;
  return true;
}

Multivector Multivector::grade_part(int k) const {
  Multivector m(sig_);
  for (auto& [b, q] : terms_)
    if (blade_grade(b) == k) m.terms_.emplace(b, q);
  return m;
}

std::vector<Rational> Multivector::vector_part() const {
  std::vector<Rational> v(sig_.n(), Rational(0));
  for (auto& [b, q] : terms_)
    if (blade_grade(b) == 1) v[__builtin_ctz(b)] = q;
  return v;
}

Multivector Multivector::operator-() const {
  Multivector m = *this;
  for (auto& [b, q] : m.terms_) q = -q;
  return m;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (!(sig_ == o.sig_)) throw InputError("signature mismatch");
  for (auto& [b, q] : o.terms_) add_term(b, q);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  if (!(sig_ == o.sig_)) throw InputError("signature mismatch");
  for (auto& [b, q] : o.terms_) add_term(b, -q);
  return *this;
}

Multivector& Multivector::operator*=(const Rational& q) {
  if (q.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= q;
  return *this;
}

static std::string blade_name(Blade b) {
  if (!b) return "1";
  std::string s = "e";
  for (Blade t = b; t; t &= t - 1) {
    if (s.size() > 1) s += "_";
    s += std::to_string(__builtin_ctz(t) + 1);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Multivector& x) {
  if (x.is_zero()) return os << "0";
  bool first = true;
  for (auto& [b, q] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << q;
    if (b) os << "*" << blade_name(b);
  }
  return os;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  if (!(a.signature() == b.signature())) throw InputError("signature mismatch in geometric product");
  const Signature& sig = a.signature();
  Multivector out(sig);
  if (sig.n() <= 12) {
    std::vector<Rational> acc(std::size_t(1) << sig.n(), Rational(0));
    std::vector<char> touched(acc.size(), 0);
    for (auto& [ba, qa] : a.terms())
      for (auto& [bb, qb] : b.terms()) {
        auto p = blade_product(sig, ba, bb);
        Rational t = qa * qb;
        if (p.sign > 0) acc[p.blade] += t;
        else acc[p.blade] -= t;
        touched[p.blade] = 1;
      }
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (touched[i]) out.add_term(static_cast<Blade>(i), acc[i]);
    return out;
  }
  for (auto& [ba, qa] : a.terms())
    for (auto& [bb, qb] : b.terms()) {
      auto p = blade_product(sig, ba, bb);
      out.add_term(p.blade, p.sign > 0 ? qa * qb : -(qa * qb));
    }
  return out;
}

Multivector grade_involution(const Multivector& x) {
  Multivector m(x.signature());
  for (auto& [b, q] : x.terms()) m.add_term(b, (blade_grade(b) & 1) ? -q : q);
  return m;
}

Multivector reversion(const Multivector& x) {
  Multivector m(x.signature());
  for (auto& [b, q] : x.terms()) {
    int k = blade_grade(b);
    m.add_term(b, ((k * (k - 1) / 2) & 1) ? -q : q);
  }
  return m;
}

Multivector volume_element(const Signature& sig) {
  Blade full = sig.n() >= 32 ? ~Blade(0) : ((Blade(1) << sig.n()) - 1);
  return Multivector::blade(sig, full);
}

Multivector inverse(const Multivector& x) {
  const Signature& sig = x.signature();
  if (x.is_zero()) throw InputError("zero multivector is not invertible");
  // versor shortcut: x * reversion(x) scalar
  Multivector xr = reversion(x);
  Multivector nn = x * xr;
  if (nn.is_scalar() && !nn.scalar_part().is_zero()) {
    Multivector cand = xr * (Rational(1) / nn.scalar_part());
    if ((cand * x) == Multivector::scalar(sig, 1)) return cand;
  }
  if (sig.n() > 10) throw InputError("general inverse only supported for n <= 10");
  std::size_t dim = std::size_t(1) << sig.n();
  // column B of the left-regular matrix is x * e_B
  DenseMatrix L(dim, dim);
  for (std::size_t col = 0; col < dim; ++col)
    for (auto& [b, q] : x.terms()) {
      auto p = blade_product(sig, b, static_cast<Blade>(col));
      L.at(p.blade, col) += p.sign > 0 ? q : -q;
    }
  std::vector<Rational> rhs(dim, Rational(0));
  rhs[0] = 1;
  auto sol = solve_unique(L, rhs);
  if (!sol) throw InputError("multivector is not invertible");
  Multivector y(sig);
  for (std::size_t i = 0; i < dim; ++i) y.add_term(static_cast<Blade>(i), (*sol)[i]);
  return y;
}

Multivector psi_embed(const Multivector& x, PsiExtension ext) {
  const Signature& src = x.signature();
  Signature dst = ext == PsiExtension::Euclidean ? Signature(src.r, src.s + 1) : Signature(src.r + 1, src.s);
  int fresh = ext == PsiExtension::Euclidean ? src.n() : src.r;
  auto shift = [&](int i) { return (ext == PsiExtension::Positive && i >= src.r) ? i + 1 : i; };
  Multivector en = Multivector::basis_vector(dst, fresh);
  Multivector out(dst);
  for (auto& [b, q] : x.terms()) {
    Multivector term = Multivector::scalar(dst, q);
    for (Blade t = b; t; t &= t - 1)
      term = term * (Multivector::basis_vector(dst, shift(__builtin_ctz(t))) * en);
    out += term;
  }
  return out;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  if (!(a.signature() == b.signature())) throw InputError("signature mismatch in wedge");
  Multivector out(a.signature());
  for (auto& [ba, qa] : a.terms())
    for (auto& [bb, qb] : b.terms()) {
      int s = wedge_sign(ba, bb);
      if (s) out.add_term(ba | bb, s > 0 ? qa * qb : -(qa * qb));
    }
  return out;
}

Multivector interior(const std::vector<Rational>& v, const Multivector& x) {
  if (static_cast<int>(v.size()) != x.signature().n()) throw InputError("interior: length mismatch");
  Multivector out(x.signature());
  for (auto& [b, q] : x.terms())
    for (Blade t = b; t; t &= t - 1) {
      int i = __builtin_ctz(t);
      if (v[i].is_zero()) continue;
      int below = __builtin_popcount(b & ((Blade(1) << i) - 1));
      Rational c = v[i] * q;
      out.add_term(b & ~(Blade(1) << i), (below & 1) ? -c : c);
    }
  return out;
}

Multivector hodge_star(int n, const Multivector& x) {
  if (x.signature().n() != n) throw InputError("hodge_star: dimension mismatch");
  Blade full = (Blade(1) << n) - 1;
  Multivector out(x.signature());
  for (auto& [b, q] : x.terms()) {
    Blade c = full & ~b;
    out.add_term(c, wedge_sign(b, c) > 0 ? q : -q);
  }
  return out;
}

}  // namespace spinor
