#include <doctest.h>

#include "spinor/errors.hpp"
#include "spinor/kmatrix.hpp"
#include "spinor/matrix_rep.hpp"
#include "spinor/recipe.hpp"
#include "test_util.hpp"

using namespace spinor;

namespace {

KMatrix rand_kmatrix(std::mt19937_64& rng, Algebra a, std::size_t n) {
  KMatrix m(a, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, testutil::rand_k(rng, a));
  return m;
}

SparseMatrix real2(int a, int b, int c, int d) {
  SparseMatrix m(2, 2);
  m.set(0, 0, a);
  m.set(0, 1, b);
  m.set(1, 0, c);
  m.set(1, 1, d);
  return m;
}

}  // namespace

TEST_CASE("1x1 over H realifies to left multiplication") {
  KMatrix m = KMatrix::scalar(KElement::unit(Algebra::H, 1), 1);
  auto expected = left_mult_matrix(KElement::unit(Algebra::H, 1));
  SparseMatrix R = m.realify();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(R.get(r, c) == expected[r * 4 + c]);
}

TEST_CASE("realify is a homomorphism, reversed for left-module maps") {
  std::mt19937_64 rng(31);
  for (Algebra a : {Algebra::R, Algebra::C, Algebra::H}) {
    KMatrix A = rand_kmatrix(rng, a, 3), B = rand_kmatrix(rng, a, 3);
    CHECK((A * B).realify() == A.realify() * B.realify());
    CHECK((A + B).realify() == A.realify() + B.realify());
    KMatrix AL = A.with_side(Side::LeftModuleMap), BL = B.with_side(Side::LeftModuleMap);
    CHECK((AL * BL).realify() == BL.realify() * AL.realify());
    // right scalar multiplication commutes with a right-module map
    for (auto& u : right_unit_operators(a, 3)) CHECK(A.realify() * u == u * A.realify());
  }
}

TEST_CASE("complex restriction of a quaternion matrix") {
  std::mt19937_64 rng(37);
  KMatrix A = rand_kmatrix(rng, Algebra::H, 2), B = rand_kmatrix(rng, Algebra::H, 2);
  KMatrix cA = restrict_to_complex(A), cB = restrict_to_complex(B);
  CHECK(cA.field() == Algebra::C);
  CHECK(cA.rows() == 4);
  CHECK(restrict_to_complex(A * B) == cA * cB);
  SparseMatrix P = complex_restriction_basis_change(2);
  CHECK(P * A.realify() == cA.realify() * P);
}

TEST_CASE("commutant classification of small algebras") {
  // left multiplication by H on H: commutant is right multiplication, a copy of H
  std::vector<SparseMatrix> lh;
  for (int u = 1; u < 4; ++u) lh.push_back(KMatrix::scalar(KElement::unit(Algebra::H, u), 1).realify());
  Commutant c = commutant(lh, 4);
  CHECK(c.real_dimension == 4);
  CHECK(c.tag() == "H");
  CHECK(c.sampled_division_test);
  CHECK(c.definite_certificate);
  // a rotation generator on R^2: commutant C
  c = commutant({real2(0, -1, 1, 0)}, 2);
  CHECK(c.real_dimension == 2);
  CHECK(c.tag() == "C");
  // a reflection: commutant is the diagonal matrices R+R, not a division algebra
  c = commutant({real2(1, 0, 0, -1)}, 2);
  CHECK(c.real_dimension == 2);
  CHECK(c.structure == "R+R");
  CHECK(c.tag() == "matrix-algebra(2)");
  // scalars only: M2(R)
  c = commutant({SparseMatrix::identity(2)}, 2);
  CHECK(c.real_dimension == 4);
  CHECK(c.structure == "M2(R)");
  CHECK_FALSE(c.sampled_division_test);
  // Pauli x, z generate M2(R)
  c = commutant({real2(0, 1, 1, 0), real2(1, 0, 0, -1)}, 2);
  CHECK(c.real_dimension == 1);
  CHECK(c.tag() == "R");
  CHECK_THROWS_AS(commutant({}, 2), InputError);
}

TEST_CASE("intertwiner space") {
  SparseMatrix A = real2(0, 1, 1, 0), B = real2(1, 0, 0, -1);
  auto X = intertwiner_space({A}, {B});
  CHECK(X.size() == 2);
  for (auto& x : X) CHECK(x * A == B * x);
  // A and -A are inequivalent as 1-generator reps? no: -A = P A P^-1 with P = diag(1,-1)
  CHECK(intertwiner_space({A}, {-A}).size() == 2);
  // the identity and minus the identity are inequivalent
  CHECK(intertwiner_space({SparseMatrix::identity(2)}, {-SparseMatrix::identity(2)}).empty());
}

TEST_CASE("graded tensor product signs") {
  GradedSpace M = GradedSpace::graded(Algebra::R, {1, -1}), N = GradedSpace::graded(Algebra::R, {1, -1});
  KMatrix T = KMatrix::from_real(real2(0, 1, 1, 0), Algebra::R), S = KMatrix::from_real(real2(0, -1, 1, 0), Algebra::R);
  KMatrix I = KMatrix::identity(Algebra::R, 2);
  KMatrix TI = graded_tensor_operator({T, Degree::Odd}, {I, Degree::Even}, M, N, Algebra::R);
  KMatrix IS = graded_tensor_operator({I, Degree::Even}, {S, Degree::Odd}, M, N, Algebra::R);
  // odd operators on different factors anticommute
  CHECK(TI * IS == -(IS * TI));
  CHECK(TI * TI == KMatrix::identity(Algebra::R, 4));
  CHECK(IS * IS == -KMatrix::identity(Algebra::R, 4));
  GradedSpace P = tensor_module(M, N, Algebra::R, true);
  CHECK(P.dim == 4);
  CHECK(P.plus == 2);
  CHECK(P.minus == 2);
  // undeclared degree on a graded space is an error unless the operator is homogeneous
  auto [ev, od] = split_by_degree(T, {1, -1});
  CHECK(ev == KMatrix(Algebra::R, 2, 2));
  CHECK(od == T);
}

TEST_CASE("quaternionic tensor product dimension") {
  GradedSpace S4 = GradedSpace::graded(Algebra::H, {1, -1});
  GradedSpace S8 = tensor_module(S4, S4, Algebra::H, true);
  CHECK(S8.field == Algebra::R);
  CHECK(S8.real_dim() == 16);
  CHECK(S8.plus == 8);
  CHECK(S8.minus == 8);
}

TEST_CASE("clifford condition reports the violating pair") {
  SpinorModule m = assemble_euclidean(3);
  CHECK(verify_clifford_condition(m.generators, m.signature).pass);
  auto g = m.generators;
  g[1].set(0, 0, g[1].get(0, 0) + Rational(1));
  auto rep = verify_clifford_condition(g, m.signature);
  CHECK_FALSE(rep.pass);
  bool named = false;
  for (auto& [i, j] : rep.violations) named = named || ((i == 1 && j == 2) || (i == 2 && j == 2));
  CHECK(named);
  g.pop_back();
  CHECK_FALSE(verify_clifford_condition(g, m.signature).pass);
}

TEST_CASE("volume grading") {
  for (int n : {4, 8}) {
    SpinorModule m = assemble_euclidean(n);
    GradedSpace g = grading_from_volume(m);
    CHECK(g.plus == g.minus);
    CHECK(g.plus + g.minus == m.real_dim);
  }
  CHECK_THROWS_AS(grading_from_volume(assemble_euclidean(2)), PreconditionError);
}
