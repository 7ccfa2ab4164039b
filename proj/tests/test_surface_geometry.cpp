#include <doctest.h>

#include <chrono>
#include <cmath>

#include "spinor/errors.hpp"
#include "spinor/matrix_rep.hpp"
#include "spinor/recipe.hpp"
#include "spinor/surface.hpp"

using namespace spinor;

namespace {

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

KElement h(int a, int b, int c, int d) { return KElement(Algebra::H, {a, b, c, d}); }

}  // namespace

TEST_CASE("sphere chart") {
  ParametricSurface s = unit_sphere();
  Frame f = surface_frame(s, 0, 0);
  CHECK(f.nu == Vec3{0, 0, 1});
  CHECK(f.e1 == Vec3{1, 0, 0});
  CHECK(f.e2 == Vec3{0, 1, 0});
  for (double u : {0.3, 1.7, 4.0})
    for (double v : {-1.0, 0.2, 1.2}) {
      Vec3 x = s.point(u, v), n = s.normal(u, v);
      for (int i = 0; i < 3; ++i) CHECK(n[i] == doctest::Approx(x[i]).epsilon(1e-12));
    }
}

TEST_CASE("great circle transport against the closed forms") {
  TransportOptions opt;
  opt.steps = 2000;
  auto tr = spin_parallel_transport(unit_sphere(), parse_curve("line:0,0,2pi,0"), {0, 1, 0, 0}, 1, opt);
  REQUIRE(tr.times.size() == 2001);
  double worst = 0;
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    double t = tr.times[k], c = std::cos(2 * M_PI * t), s = std::sin(2 * M_PI * t);
    double P[3][3] = {{c, 0, s}, {0, 1, 0}, {-s, 0, c}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(P[i][j] - tr.rotations[k][i][j]));
    Quat q{0, std::cos(M_PI * t), 0, -std::sin(M_PI * t)};
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(q[i] - tr.spinors[k][i]));
    CHECK(tr.ok[k]);
  }
  CHECK(worst < 1e-8);
  // at t = 1/2 the spinor is -k, normal to the tangent plane span(i, j) at the south pole
  auto& mid = tr.spinors[1000];
  CHECK(mid[3] == doctest::Approx(-1).epsilon(1e-9));
  auto neg = spin_parallel_transport(unit_sphere(), parse_curve("line:0,0,2pi,0"), {0, 1, 0, 0}, -1, opt);
  for (std::size_t k = 0; k < tr.times.size(); ++k)
    for (int i = 0; i < 4; ++i) CHECK(neg.spinors[k][i] == -tr.spinors[k][i]);
}

TEST_CASE("holonomy around a latitude circle") {
  // the frame turns by the enclosed area 2 pi (1 - sin v0), i.e. by 2 pi sin v0 mod 2 pi
  for (double v0 : {0.3, 0.7, -0.5}) {
    TransportOptions opt;
    opt.steps = 4000;
    CurveSpec c;
    c.at = [=](double t) -> Chart2 { return {2 * M_PI * t, v0}; };
    c.velocity = [](double) -> Chart2 { return {2 * M_PI, 0}; };
    ParametricSurface s = unit_sphere();
    auto tr = parallel_transport_frame(s, c, surface_frame(s, 0, v0), opt);
    double cosang = dot3(tr.frames.front().e1, tr.frames.back().e1);
    CHECK(cosang == doctest::Approx(std::cos(2 * M_PI * std::sin(v0))).epsilon(1e-8));
    for (auto& f : tr.frames) CHECK(std::abs(dot3(f.e1, f.e2)) < 1e-9);
  }
}

TEST_CASE("finite-difference partials agree with the analytic chart") {
  ParametricSurface s = unit_sphere(), fd;
  fd.name = "sphere-fd";
  fd.chart = s.chart;
  TransportOptions opt;
  opt.steps = 1000;
  CurveSpec c = parse_curve("line:0.1,0.2,1.5,0.4");
  auto a = spin_parallel_transport(s, c, {1, 0, 0, 0}, 1, opt);
  auto b = spin_parallel_transport(fd, c, {1, 0, 0, 0}, 1, opt);
  double worst = 0;
  for (std::size_t k = 0; k < a.times.size(); ++k)
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a.spinors[k][i] - b.spinors[k][i]));
  CHECK(worst < 1e-6);
}

TEST_CASE("plane transport is trivial") {
  auto tr = spin_parallel_transport(plane_surface(), parse_curve("line:0,0,3,-2"), {1, 0, 0, 0}, 1);
  for (int i = 0; i < 4; ++i) CHECK(tr.spinors.back()[i] == doctest::Approx(i == 0 ? 1 : 0));
}

TEST_CASE("coarse sampling is flagged, not hidden") {
  TransportOptions opt;
  opt.steps = 2;
  CHECK_THROWS_AS(spin_parallel_transport(unit_sphere(), parse_curve("line:0,0,2pi,0"), {0, 1, 0, 0}, 1, opt),
                  InputError);
  opt.strict = false;
  auto tr = spin_parallel_transport(unit_sphere(), parse_curve("line:0,0,2pi,0"), {0, 1, 0, 0}, 1, opt);
  CHECK(tr.ok[0]);
  CHECK_FALSE(tr.ok[1]);
}

TEST_CASE("degenerate charts raise a numeric error with the parameter") {
  // the chart pole at v = pi/2
  try {
    spin_parallel_transport(unit_sphere(), parse_curve("line:0,0,0,1pi"), {1, 0, 0, 0}, 1);
    CHECK(false);
  } catch (const NumericError& e) {
    CHECK(e.at == doctest::Approx(0.5).epsilon(1e-3));
  }
}

TEST_CASE("curve spec parsing") {
  CurveSpec c = parse_curve("line:1,-0.5pi,2pi,-pi");
  auto p = c.at(1);
  CHECK(p[0] == doctest::Approx(1 + 2 * M_PI));
  CHECK(p[1] == doctest::Approx(-1.5 * M_PI));
  CHECK_THROWS_AS(parse_curve("circle:1,2"), InputError);
  CHECK_THROWS_AS(parse_curve("line:1,2,3"), InputError);
  CHECK_THROWS_AS(parse_curve("line:1,2,3,x"), InputError);
  CHECK_THROWS_AS(surface_by_name("torus"), InputError);
}

TEST_CASE("hypersurface action in R^4") {
  CHECK(hypersurface4_action(h(1, 0, 0, 0), h(0, 1, 0, 0), h(1, 0, 0, 0)) == h(0, 1, 0, 0));
  CHECK(hypersurface4_action(h(0, 0, 0, 1), h(0, 1, 0, 0), h(1, 0, 0, 0)) == h(0, 0, 1, 0));
  CHECK(hypersurface4_action(h(0, 0, 0, 1), h(0, 0, 0, 0), h(1, 2, 3, 4)).is_zero());
  CHECK_THROWS_AS(hypersurface4_action(h(1, 0, 0, 0), h(1, 0, 0, 0), h(1, 0, 0, 0)), InputError);
  CHECK_THROWS_AS(hypersurface4_action(h(1, 1, 0, 0), h(0, 0, 1, 0), h(1, 0, 0, 0)), InputError);
  // Clifford condition and right H-linearity on a grid of rational unit normals and tangent vectors
  std::vector<KElement> normals{h(1, 0, 0, 0), KElement(Algebra::H, {Rational(3, 5), Rational(4, 5), 0, 0}),
                                KElement(Algebra::H, {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}),
                                KElement(Algebra::H, {Rational(2, 3), Rational(-1, 3), 0, Rational(2, 3)})};
  KElement q = h(1, -2, 3, 5), r = h(2, 1, 0, -1);
  for (auto& nu : normals) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        // project e_a + 2 e_b onto the tangent space, scaled to stay rational
        KElement w = KElement::unit(Algebra::H, a) + KElement::unit(Algebra::H, b) * Rational(2);
        Rational ip = mul(Algebra::H, conj(nu), w).re();
        KElement v = w - nu * ip;
        KElement once = hypersurface4_action(nu, v, q);
        CHECK(hypersurface4_action(nu, v, once) == q * (-norm_sq(v)));
        CHECK(hypersurface4_action(nu, v, q * r) == once * r);
      }
  }
}

TEST_CASE("even commutant action on the surface spinor bundle") {
  // A q = nu q w + q w' commutes with the even Clifford action q -> e1 e2 q, where e1 e2 = nu for a frame of Im H
  Quat nu{0, 0, 0, 1}, w{0.3, -1, 2, 0.5}, wp{1, 0.25, -0.5, 2}, q{0.1, 0.2, -0.7, 1.1};
  Quat lhs = surface_even_commutant_action(nu, w, wp, quat_mul(nu, q));
  Quat rhs = quat_mul(nu, surface_even_commutant_action(nu, w, wp, q));
  for (int i = 0; i < 4; ++i) CHECK(lhs[i] == doctest::Approx(rhs[i]));
  KElement knu = h(0, 0, 0, 1), kw = h(1, 2, 0, -1), kwp = h(0, 1, 1, 3), kq = h(2, -1, 1, 0);
  CHECK(surface_even_commutant_action(knu, kw, kwp, knu * kq) == knu * surface_even_commutant_action(knu, kw, kwp, kq));
}

TEST_CASE("default transport meets the time budget") {
  auto t0 = std::chrono::steady_clock::now();
  auto tr = spin_parallel_transport(unit_sphere(), parse_curve("line:0,0,2pi,0"), {0, 1, 0, 0}, 1);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(tr.times.size() == 10001);
  CHECK(secs < 5);
}

TEST_CASE("the (w, w') family spans the whole commutant of left multiplication by nu") {
  KElement nu(Algebra::H, {0, Rational(3, 5), 0, Rational(4, 5)});
  std::vector<SparseMatrix> maps;
  for (int side = 0; side < 2; ++side)
    for (int a = 0; a < 4; ++a) {
      KElement w = side == 0 ? KElement::unit(Algebra::H, a) : KElement::zero(Algebra::H);
      KElement wp = side == 1 ? KElement::unit(Algebra::H, a) : KElement::zero(Algebra::H);
      SparseMatrix M(4, 4);
      for (int c = 0; c < 4; ++c) {
        KElement img = surface_even_commutant_action(nu, w, wp, KElement::unit(Algebra::H, c));
        for (int r = 0; r < 4; ++r) M.set(r, c, img[r]);
      }
      maps.push_back(M);
    }
  auto L = left_mult_matrix(nu);
  SparseMatrix Lnu(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) Lnu.set(r, c, L[r * 4 + c]);
  DenseMatrix stacked(16, 8);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    CHECK(maps[k] * Lnu == Lnu * maps[k]);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) stacked.at(r * 4 + c, k) = maps[k].get(r, c);
  }
  CHECK(rank(stacked) == 8);
  CHECK(commutant({Lnu}, 4).real_dimension == 8);
}
