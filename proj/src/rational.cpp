#include "spinor/rational.hpp"

#include <ostream>

#include "spinor/errors.hpp"

namespace spinor {

Rational::Rational(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  std::string t(s);
  auto slash = t.find('/');
  auto valid_int = [](const std::string& x) {
    if (x.empty()) return false;
    std::size_t i = (x[0] == '-' || x[0] == '+') ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (x[i] < '0' || x[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw InputError("not a rational: '" + t + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw InputError("zero denominator: '" + t + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Rational::is_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(v_.get_num_mpz_t()) && mpz_perfect_square_p(v_.get_den_mpz_t());
}

Rational Rational::sqrt_exact() const {
  if (!is_square()) throw PreconditionError("not a rational square: " + str());
  mpz_class n = sqrt(v_.get_num()), d = sqrt(v_.get_den());
  return Rational(mpq_class(n, d));
}

std::size_t Rational::hash() const {
  std::size_t h = mpz_get_ui(v_.get_num_mpz_t()) * 1000003u ^ mpz_get_ui(v_.get_den_mpz_t());
  return sign() < 0 ? ~h : h;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace spinor
