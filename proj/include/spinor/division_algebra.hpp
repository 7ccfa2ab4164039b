#pragma once

#include <array>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "spinor/rational.hpp"

namespace spinor {

enum class Algebra { R, C, H, O };

int algebra_dim(Algebra a);
const char* algebra_name(Algebra a);
Algebra algebra_from_name(const std::string& s);

// Coefficients on the basis (1), (1,i), (1,i,j,k), or for O:
// (1,0),(i,0),(j,0),(k,0),(0,1),(0,i),(0,j),(0,k).
struct KElement {
  Algebra algebra = Algebra::R;
  std::vector<Rational> coeffs{Rational(0)};

  KElement() = default;
  KElement(Algebra a, std::vector<Rational> c);
  KElement(Algebra a, std::initializer_list<Rational> c)
      : KElement(a, std::vector<Rational>(c)) {}

  static KElement zero(Algebra a);
  static KElement one(Algebra a);
  static KElement scalar(Algebra a, const Rational& x);
  static KElement unit(Algebra a, int index);  // basis element number `index`

  int dim() const { return static_cast<int>(coeffs.size()); }
  const Rational& operator[](int i) const { return coeffs[i]; }
  Rational& operator[](int i) { return coeffs[i]; }
  const Rational& re() const { return coeffs[0]; }
  bool is_zero() const;
  bool is_real() const;

  KElement operator-() const;
  KElement& operator+=(const KElement& o);
  KElement& operator-=(const KElement& o);
  KElement& operator*=(const Rational& s);
  friend KElement operator+(KElement a, const KElement& b) { return a += b; }
  friend KElement operator-(KElement a, const KElement& b) { return a -= b; }
  friend KElement operator*(KElement a, const Rational& s) { return a *= s; }
  friend KElement operator*(const Rational& s, KElement a) { return a *= s; }
  friend bool operator==(const KElement& a, const KElement& b) = default;
};

std::ostream& operator<<(std::ostream& os, const KElement& x);

KElement mul(Algebra a, const KElement& x, const KElement& y);
KElement conj(Algebra a, const KElement& x);
Rational norm_sq(Algebra a, const KElement& x);

// tag-checked shorthands
KElement operator*(const KElement& x, const KElement& y);
KElement conj(const KElement& x);
Rational norm_sq(const KElement& x);
KElement inverse(const KElement& x);

// Basis product table for O derived from the doubling formula once;
// entry [a][b] is (sign, index) with e_a e_b = sign * e_index.
struct BasisProduct {
  int sign;
  int index;
};
const std::array<std::array<BasisProduct, 8>, 8>& octonion_table();

// Real matrices of x -> a*x and x -> x*a on the coefficient basis (row-major, d*d).
std::vector<Rational> left_mult_matrix(const KElement& a);
std::vector<Rational> right_mult_matrix(const KElement& a);

}  // namespace spinor
