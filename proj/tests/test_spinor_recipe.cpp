#include <doctest.h>

#include "spinor/errors.hpp"
#include "spinor/matrix_rep.hpp"
#include "spinor/recipe.hpp"
#include "test_util.hpp"

using namespace spinor;

namespace {

bool anticommuting_units(const std::vector<SparseMatrix>& u, std::size_t d) {
  SparseMatrix I = SparseMatrix::identity(d);
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (!(u[a] * u[a] == -I)) return false;
    for (std::size_t b = a + 1; b < u.size(); ++b)
      if (!(u[a] * u[b] == -(u[b] * u[a]))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("quaternionic multivector action squares to -|q|^2") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    KElement q = testutil::rand_k(rng, Algebra::H);
    KMatrix c = c4_action(q);
    CHECK(c * c == KMatrix::scalar(KElement::scalar(Algebra::H, -norm_sq(q)), 2));
    KMatrix p = c4_pos_action(q);
    CHECK(p * p == KMatrix::scalar(KElement::scalar(Algebra::H, norm_sq(q)), 2));
  }
}

TEST_CASE("base modules in dimensions 1 to 4") {
  const std::size_t dims[4] = {2, 4, 4, 8};
  const Algebra fields[4] = {Algebra::C, Algebra::H, Algebra::H, Algebra::H};
  for (int n = 1; n <= 4; ++n) {
    SpinorModule m = base_module(n);
    CHECK(m.real_dim == dims[n - 1]);
    CHECK(m.field == fields[n - 1]);
    CHECK(verify_clifford_condition(m.generators, m.signature).pass);
    CHECK(spin_metric_verify(m).pass);
    CHECK(intertwiners(m, false).real_dimension == static_cast<std::size_t>(algebra_dim(m.field)));
    CHECK(anticommuting_units(m.right_units, m.real_dim));
  }
  const std::size_t pdims[4] = {1, 2, 4, 8};
  for (int n = 1; n <= 4; ++n) {
    SpinorModule m = base_module_pos(n);
    CHECK(m.real_dim == pdims[n - 1]);
    CHECK(verify_clifford_condition(m.generators, m.signature).pass);
    CHECK(spin_metric_verify(m).pass);
  }
}

TEST_CASE("the two modules of Cl3 differ by the volume sign") {
  SpinorModule p = assemble_euclidean(3, Variant::Plus), m = assemble_euclidean(3, Variant::Minus);
  CHECK(p.volume_operator() == -SparseMatrix::identity(4));
  CHECK(m.volume_operator() == SparseMatrix::identity(4));
  CHECK(intertwiner_space(p.generators, m.generators).empty());
  CHECK(intertwiner_space(p.generators, p.generators).size() == 4);
  CHECK_THROWS_AS(assemble_euclidean(4, Variant::Minus), InputError);
}

TEST_CASE("euclidean modules up to 16") {
  std::size_t prev[9] = {};
  for (int n = 1; n <= 16; ++n) {
    SpinorModule m = assemble_euclidean(n);
    CHECK(verify_clifford_condition(m.generators, m.signature).pass);
    CHECK(m.real_dim == expected_real_dim(0, n));
    if (n <= 8) prev[n] = m.real_dim;
    else CHECK(m.real_dim == 16 * prev[n - 8]);
  }
}

TEST_CASE("mixed signatures: dims, fields, Bott periodicity") {
  for (int r = 0; r <= 6; ++r)
    for (int s = 0; s + r <= 6; ++s) {
      if (r + s == 0) continue;
      SpinorModule m = assemble_signature(r, s);
      CHECK(m.signature == Signature(r, s));
      CHECK(verify_clifford_condition(m.generators, m.signature).pass);
      CHECK(spin_metric_verify(m).pass);
      Commutant c = intertwiners(m, false);
      CHECK(c.real_dimension == static_cast<std::size_t>(algebra_dim(expected_field(r, s))));
      CHECK(expected_real_dim(r, s + 8) == 16 * expected_real_dim(r, s));
      CHECK(expected_real_dim(r + 8, s) == 16 * expected_real_dim(r, s));
      CHECK(expected_real_dim(r + 1, s + 1) == 2 * expected_real_dim(r, s));
    }
}

TEST_CASE("the commutant with the even commutant is one dimensional") {
  for (int n = 1; n <= 8; ++n) {
    SpinorModule m = assemble_euclidean(n);
    auto gens = m.generators;
    for (auto& b : intertwiners(m, true).basis) gens.push_back(b);
    CHECK(commutant(gens, m.real_dim).real_dimension == 1);
  }
}

TEST_CASE("split signature modules") {
  for (int i = 1; i <= 4; ++i) {
    SpinorModule m = split_signature_module(i);
    CHECK(m.real_dim == (std::size_t(1) << i));
    CHECK(m.signature == Signature(i, i));
    CHECK(verify_clifford_condition(m.generators, m.signature).pass);
    CHECK(intertwiners(m, false).real_dimension == 1);
    REQUIRE(m.grading.has_value());
    for (auto& g : m.generators)
      for (std::size_t r = 0; r < m.real_dim; ++r)
        for (auto& [c, q] : g.row(r)) CHECK((*m.grading)[r] != (*m.grading)[c]);
  }
  CHECK_THROWS_AS(split_signature_module(0), InputError);
}

TEST_CASE("square roots of space") {
  for (int n = 1; n <= 4; ++n) {
    SpinorModule m = sqrt_space_module(n);
    CHECK(m.family == Family::SqrtSpace);
    CHECK(verify_clifford_condition(m.generators, m.signature).pass);
    CHECK(spin_metric_verify(m).pass);
    CHECK(m.real_dim == expected_real_dim(0, n));
  }
  CHECK_THROWS_AS(sqrt_space_module(5), InputError);
}

TEST_CASE("octonion modules") {
  std::mt19937_64 rng(43);
  for (int k = 4; k <= 8; ++k) {
    SpinorModule m = octonion_module(k);
    CHECK(verify_clifford_condition(m.generators, m.signature).pass);
    CHECK(spin_metric_verify(m).pass);
    CHECK(m.field == expected_field(0, k));
    CHECK(intertwiners(m, false).real_dimension == static_cast<std::size_t>(algebra_dim(m.field)));
  }
  SpinorModule m8 = octonion_module(8);
  for (int t = 0; t < 10; ++t) {
    auto x = testutil::rand_vec(rng, 8);
    SparseMatrix c = m8.evaluate(Multivector::vector(m8.signature, x));
    Rational nn = 0;
    for (auto& q : x) nn += q * q;
    CHECK(c * c == -nn * SparseMatrix::identity(16));
  }
  CHECK_THROWS_AS(octonion_module(3), InputError);
  CHECK_THROWS_AS(octonion_module(9), InputError);
}

TEST_CASE("derived right units") {
  SpinorModule m = assemble_euclidean(2);
  auto u = derive_right_units(m.generators, m.real_dim);
  CHECK(u.size() == 3);
  CHECK(anticommuting_units(u, m.real_dim));
  for (auto& x : u)
    for (auto& g : m.generators) CHECK(x * g == g * x);
}

TEST_CASE("spin metric negative control") {
  SpinorModule m = assemble_euclidean(3);
  SparseMatrix bad = SparseMatrix::identity(m.real_dim);
  bad.set(0, 0, 2);
  CHECK_FALSE(spin_metric_verify(m, bad).pass);
  bad = SparseMatrix::identity(m.real_dim);
  bad.set(0, 1, 1);
  CHECK_FALSE(spin_metric_verify(m, bad).pass);
}

TEST_CASE("spinor square reproduces the rank one operator") {
  std::mt19937_64 rng(47);
  for (int n : {1, 2, 3, 4}) {
    SpinorModule m = assemble_euclidean(n);
    for (int t = 0; t < 5; ++t) {
      auto a = testutil::rand_vec(rng, m.real_dim), b = testutil::rand_vec(rng, m.real_dim);
      Multivector w = spinor_square(m, a, b);
      CHECK(m.evaluate(w) == spinor_square_operator(m, a, b));
      if (n == 3) CHECK(w.is_even());
    }
  }
  CHECK_THROWS_AS(spinor_square(assemble_euclidean(2), {1, 2}, {1, 2}), InputError);
}

TEST_CASE("family and variant names") {
  CHECK(family_from_name("octonion") == Family::Octonion);
  CHECK(std::string(family_name(Family::SplitExterior)) == "split-exterior");
  CHECK(variant_from_name("minus") == Variant::Minus);
  CHECK_THROWS_AS(variant_from_name("both"), InputError);
  CHECK_THROWS_AS(family_from_name("spin"), InputError);
}
