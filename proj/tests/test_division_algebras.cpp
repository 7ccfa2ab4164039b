#include <doctest.h>

#include "spinor/division_algebra.hpp"
#include "spinor/errors.hpp"
#include "test_util.hpp"

using namespace spinor;

namespace {
KElement h(int a, int b, int c, int d) { return KElement(Algebra::H, {a, b, c, d}); }
}

TEST_CASE("hamilton relations") {
  KElement i = KElement::unit(Algebra::H, 1), j = KElement::unit(Algebra::H, 2), k = KElement::unit(Algebra::H, 3);
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK(i * j * k == h(-1, 0, 0, 0));
  CHECK(i * i == h(-1, 0, 0, 0));
}

TEST_CASE("complex numbers") {
  KElement z(Algebra::C, {1, 2}), w(Algebra::C, {3, -1});
  CHECK(z * w == KElement(Algebra::C, {5, 5}));
  CHECK(conj(z) == KElement(Algebra::C, {1, -2}));
  CHECK(norm_sq(z) == Rational(5));
}

TEST_CASE("norm is multiplicative and conj reverses products") {
  std::mt19937_64 rng(7);
  for (Algebra a : {Algebra::C, Algebra::H, Algebra::O})
    for (int t = 0; t < 40; ++t) {
      KElement x = testutil::rand_k(rng, a), y = testutil::rand_k(rng, a);
      CHECK(norm_sq(x * y) == norm_sq(x) * norm_sq(y));
      CHECK(conj(x * y) == conj(y) * conj(x));
      CHECK(x * conj(x) == KElement::scalar(a, norm_sq(x)));
    }
}

TEST_CASE("quaternions associate, octonions are only alternative") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    KElement x = testutil::rand_k(rng, Algebra::H), y = testutil::rand_k(rng, Algebra::H),
             z = testutil::rand_k(rng, Algebra::H);
    CHECK((x * y) * z == x * (y * z));
  }
  bool some_nonassoc = false;
  for (int t = 0; t < 40; ++t) {
    KElement x = testutil::rand_k(rng, Algebra::O), y = testutil::rand_k(rng, Algebra::O),
             z = testutil::rand_k(rng, Algebra::O);
    CHECK((x * x) * y == x * (x * y));
    CHECK((y * x) * x == y * (x * x));
    // Moufang
    CHECK(((x * y) * x) * z == x * (y * (x * z)));
    some_nonassoc = some_nonassoc || !((x * y) * z == x * (y * z));
  }
  CHECK(some_nonassoc);
}

TEST_CASE("octonion units form a Fano plane of quaternion triples") {
  const auto& T = octonion_table();
  for (int a = 1; a < 8; ++a) {
    CHECK(T[a][a].sign == -1);
    CHECK(T[a][a].index == 0);
    for (int b = 1; b < 8; ++b) {
      if (a == b) continue;
      int c = T[a][b].index;
      CHECK(c != 0);
      CHECK(c != a);
      CHECK(c != b);
      // anticommuting, and the triple closes
      CHECK(T[b][a].index == c);
      CHECK(T[b][a].sign == -T[a][b].sign);
      CHECK(T[b][c].index == a);
    }
  }
}

TEST_CASE("multiplication matrices") {
  std::mt19937_64 rng(3);
  for (Algebra a : {Algebra::C, Algebra::H, Algebra::O}) {
    KElement x = testutil::rand_k(rng, a), y = testutil::rand_k(rng, a);
    const int d = algebra_dim(a);
    auto L = left_mult_matrix(x), R = right_mult_matrix(x);
    KElement lx(a, std::vector<Rational>(d, Rational(0))), rx = lx;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        lx[r] += L[r * d + c] * y[c];
        rx[r] += R[r * d + c] * y[c];
      }
    CHECK(lx == x * y);
    CHECK(rx == y * x);
  }
}

TEST_CASE("inverse and errors") {
  KElement q = h(1, 2, -1, 3);
  CHECK(q * inverse(q) == KElement::one(Algebra::H));
  CHECK_THROWS_AS(inverse(KElement::zero(Algebra::H)), InputError);
  CHECK_THROWS_AS(KElement(Algebra::H, {1, 2}), InputError);
  CHECK_THROWS_AS(h(1, 0, 0, 0) * KElement(Algebra::C, {1, 0}), InputError);
  CHECK(algebra_from_name("H") == Algebra::H);
  CHECK_THROWS_AS(algebra_from_name("Q"), InputError);
}
