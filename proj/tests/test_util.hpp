#pragma once

#include <random>
#include <vector>

#include "spinor/clifford.hpp"
#include "spinor/division_algebra.hpp"

namespace testutil {

using spinor::Rational;

inline Rational rand_q(std::mt19937_64& rng, int lo = -7, int hi = 7) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, 5);
  return Rational(num(rng), den(rng));
}

inline std::vector<Rational> rand_vec(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = rand_q(rng);
  return v;
}

inline spinor::KElement rand_k(std::mt19937_64& rng, spinor::Algebra a) {
  return spinor::KElement(a, rand_vec(rng, static_cast<std::size_t>(spinor::algebra_dim(a))));
}

// a few random blades with random coefficients
inline spinor::Multivector rand_mv(std::mt19937_64& rng, const spinor::Signature& sig, int terms = 5) {
  spinor::Multivector x(sig);
  std::uniform_int_distribution<unsigned> b(0, (1u << sig.n()) - 1);
  for (int i = 0; i < terms; ++i) x.add_term(b(rng), rand_q(rng));
  return x;
}

}  // namespace testutil
