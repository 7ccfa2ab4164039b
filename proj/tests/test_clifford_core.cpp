#include <doctest.h>

#include "spinor/clifford.hpp"
#include "spinor/errors.hpp"
#include "test_util.hpp"

using namespace spinor;

TEST_CASE("generators anticommute and square per signature") {
  for (int r = 0; r <= 4; ++r)
    for (int s = 0; s <= 4; ++s) {
      if (r + s == 0) continue;
      Signature sig(r, s);
      for (int i = 0; i < sig.n(); ++i) {
        Multivector ei = Multivector::basis_vector(sig, i);
        CHECK(ei * ei == Multivector::scalar(sig, i < r ? 1 : -1));
        for (int j = i + 1; j < sig.n(); ++j) {
          Multivector ej = Multivector::basis_vector(sig, j);
          CHECK((ei * ej + ej * ei).is_zero());
        }
      }
    }
}

TEST_CASE("blade product table") {
  Signature sig(0, 3);
  auto p = blade_product(sig, 0b011, 0b110);  // e1e2 e2e3 = -e1e3
  CHECK(p.blade == 0b101);
  CHECK(p.sign == -1);
  p = blade_product(sig, 0b010, 0b001);  // e2 e1 = -e1e2
  CHECK(p.blade == 0b011);
  CHECK(p.sign == -1);
  p = blade_product(sig, 0b111, 0b111);  // (e1e2e3)^2 = +1 for Cl(0,3)
  CHECK(p.blade == 0);
  CHECK(p.sign == 1);
}

TEST_CASE("product is associative on random elements") {
  std::mt19937_64 rng(5);
  for (Signature sig : {Signature(0, 4), Signature(2, 3), Signature(3, 1), Signature(5, 0)})
    for (int t = 0; t < 15; ++t) {
      Multivector a = testutil::rand_mv(rng, sig), b = testutil::rand_mv(rng, sig), c = testutil::rand_mv(rng, sig);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("involutions") {
  std::mt19937_64 rng(9);
  Signature sig(1, 4);
  for (int t = 0; t < 20; ++t) {
    Multivector a = testutil::rand_mv(rng, sig), b = testutil::rand_mv(rng, sig);
    CHECK(grade_involution(a * b) == grade_involution(a) * grade_involution(b));
    CHECK(reversion(a * b) == reversion(b) * reversion(a));
    CHECK(reversion(reversion(a)) == a);
  }
  // a grade-k blade reverses with sign (-1)^{k(k-1)/2}
  for (Blade b = 0; b < 32; ++b) {
    int k = blade_grade(b);
    int sgn = (k * (k - 1) / 2) % 2 ? -1 : 1;
    CHECK(reversion(Multivector::blade(sig, b)) == Multivector::blade(sig, b, sgn));
    CHECK(grade_involution(Multivector::blade(sig, b)) == Multivector::blade(sig, b, k % 2 ? -1 : 1));
  }
}

TEST_CASE("volume element square") {
  for (int r = 0; r <= 5; ++r)
    for (int s = 0; s <= 5; ++s) {
      if (r + s == 0) continue;
      Signature sig(r, s);
      int n = r + s;
      // reorder sign times the product of the squares
      int sgn = ((n * (n - 1) / 2) % 2 ? -1 : 1) * (s % 2 ? -1 : 1);
      Multivector nu = volume_element(sig);
      CHECK(nu * nu == Multivector::scalar(sig, sgn));
    }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(13);
  Signature sig(0, 3);
  Multivector v = Multivector::vector(sig, {1, 2, -2});
  CHECK(v * inverse(v) == Multivector::scalar(sig, 1));
  for (int t = 0; t < 10; ++t) {
    Multivector a = testutil::rand_mv(rng, Signature(1, 3), 6);
    Multivector ai;
    try {
      ai = inverse(a);
    } catch (const InputError&) {
      continue;
    }
    CHECK(a * ai == Multivector::scalar(a.signature(), 1));
    CHECK(ai * a == Multivector::scalar(a.signature(), 1));
  }
  Multivector idem = (Multivector::scalar(Signature(1, 0), 1) + Multivector::basis_vector(Signature(1, 0), 0));
  CHECK_THROWS_AS(inverse(idem), InputError);  // (1 + e1)(1 - e1) = 0
}

TEST_CASE("psi embeds into the even part") {
  std::mt19937_64 rng(17);
  for (Signature sig : {Signature(0, 3), Signature(1, 2), Signature(2, 2)}) {
    for (int t = 0; t < 10; ++t) {
      Multivector a = testutil::rand_mv(rng, sig), b = testutil::rand_mv(rng, sig);
      Multivector pa = psi_embed(a), pb = psi_embed(b);
      CHECK(pa.is_even());
      CHECK(pa.signature() == Signature(sig.r, sig.s + 1));
      CHECK(psi_embed(a * b) == pa * pb);
      CHECK(psi_embed(a + b) == pa + pb);
    }
    for (int i = 0; i < sig.n(); ++i) {
      Multivector p = psi_embed(Multivector::basis_vector(sig, i), PsiExtension::Positive);
      CHECK(p.is_even());
      CHECK(p * p == Multivector::scalar(p.signature(), -sig.square(i)));
    }
  }
}

TEST_CASE("wedge, interior, hodge") {
  const int n = 4;
  Signature sig(0, n);
  std::mt19937_64 rng(23);
  Multivector nu = Multivector::blade(sig, (1u << n) - 1);
  for (int k = 0; k <= n; ++k)
    for (int t = 0; t < 5; ++t) {
      Multivector w(sig);
      for (Blade b = 0; b < (1u << n); ++b)
        if (blade_grade(b) == k) w.add_term(b, testutil::rand_q(rng));
      Rational sq = 0;
      for (auto& [b, q] : w.terms()) sq += q * q;
      // w ^ *w = |w|^2 nu
      CHECK(wedge(w, hodge_star(n, w)) == nu * sq);
    }
  auto e = [&](int i) { return Multivector::basis_vector(sig, i); };
  CHECK(wedge(e(0), e(1)) == Multivector::blade(sig, 0b0011));
  CHECK(wedge(e(1), e(0)) == Multivector::blade(sig, 0b0011, -1));
  CHECK(wedge(e(0), e(0)).is_zero());
  CHECK(interior({1, 0, 0, 0}, Multivector::blade(sig, 0b0011)) == e(1));
  CHECK(interior({0, 1, 0, 0}, Multivector::blade(sig, 0b0011)) == -e(0));
  // e1 e2 = e1^e2 - <e1,e2> in the Euclidean algebra, and v x = v^x - i_v x
  for (int t = 0; t < 10; ++t) {
    auto v = testutil::rand_vec(rng, n);
    Multivector x = testutil::rand_mv(rng, sig);
    CHECK(Multivector::vector(sig, v) * x == wedge(Multivector::vector(sig, v), x) - interior(v, x));
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(Signature(-1, 2), InputError);
  CHECK_THROWS_AS(Multivector::basis_vector(Signature(0, 2), 2), InputError);
  CHECK_THROWS(Multivector::scalar(Signature(0, 2), 1) * Multivector::scalar(Signature(0, 3), 1));
}
