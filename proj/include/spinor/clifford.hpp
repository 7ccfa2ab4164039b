#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "spinor/rational.hpp"

namespace spinor {

// e_1..e_r square to +1, e_{r+1}..e_n square to -1.
// The defining relation is v w + w v = -2 g(v,w) with g = diag(-1 x r, +1 x s),
// so Cl(0,n) is the Euclidean algebra with e_i^2 = -1.
struct Signature {
  int r = 0;
  int s = 0;

  Signature() = default;
  Signature(int r_, int s_);
  static Signature euclidean(int n) { return Signature(0, n); }
  static Signature positive(int n) { return Signature(n, 0); }

  int n() const { return r + s; }
  int square(int i) const { return i < r ? 1 : -1; }  // e_{i+1}^2, 0-based i
  int metric(int i) const { return -square(i); }       // g_ii
  std::string str() const;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// bit i set iff e_{i+1} is a factor; factors in ascending order
using Blade = std::uint32_t;

inline int blade_grade(Blade b) { return __builtin_popcount(b); }

struct BladeProduct {
  int sign;  // +1 or -1
  Blade blade;
};

BladeProduct blade_product(const Signature& sig, Blade a, Blade b);

// sign of e_A ^ e_B in the exterior algebra (0 when they share a factor)
int wedge_sign(Blade a, Blade b);

class Multivector {
 public:
  Multivector() = default;
  explicit Multivector(const Signature& sig) : sig_(sig) {}

  static Multivector scalar(const Signature& sig, const Rational& q);
  static Multivector basis_vector(const Signature& sig, int i);  // e_{i+1}
  static Multivector blade(const Signature& sig, Blade b, const Rational& q = 1);
  static Multivector vector(const Signature& sig, const std::vector<Rational>& v);

  const Signature& signature() const { return sig_; }
  const std::map<Blade, Rational>& terms() const { return terms_; }
  Rational coeff(Blade b) const;
  Rational scalar_part() const { return coeff(0); }
  void add_term(Blade b, const Rational& q);

  bool is_zero() const { return terms_.empty(); }
  bool is_even() const;
  bool is_scalar() const;
  bool is_vector() const;
  Multivector grade_part(int k) const;
  std::vector<Rational> vector_part() const;

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(const Rational& q);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const Rational& q) { return a *= q; }
  friend Multivector operator*(const Rational& q, Multivector a) { return a *= q; }
  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

 private:
  Signature sig_;
  std::map<Blade, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const Multivector& x);

Multivector geometric_product(const Multivector& a, const Multivector& b);
inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

Multivector grade_involution(const Multivector& x);
Multivector reversion(const Multivector& x);
Multivector volume_element(const Signature& sig);

// Inverse by exact linear solve in the 2^n dimensional algebra.
// Throws InputError when x is not invertible.
Multivector inverse(const Multivector& x);

enum class PsiExtension {
  Euclidean,  // extra generator squares to -1, appended last: Cl(r,s) -> Cl(r,s+1)
  Positive,   // extra generator squares to +1, inserted at index r: Cl(r,s) -> Cl(r+1,s)
};

// psi(e_i) = e_i e_new, extended multiplicatively.
Multivector psi_embed(const Multivector& x, PsiExtension ext = PsiExtension::Euclidean);

// Exterior algebra helpers on the shared blade basis of Cl(0,n).
Multivector wedge(const Multivector& a, const Multivector& b);
// interior product i_v with the Euclidean inner product
Multivector interior(const std::vector<Rational>& v, const Multivector& x);
Multivector hodge_star(int n, const Multivector& x);

}  // namespace spinor
