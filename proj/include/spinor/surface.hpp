#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "spinor/division_algebra.hpp"
#include "spinor/spin_group.hpp"

namespace spinor {

using Vec3 = std::array<double, 3>;
using Chart2 = std::array<double, 2>;

struct ParametricSurface {
  std::string name;
  std::function<Vec3(double, double)> chart;
  // optional analytic partials; central differences with h = 1e-6 otherwise
  std::function<Vec3(double, double)> du, dv;
  // optional analytic partials of the unit normal
  std::function<Vec3(double, double)> normal_du, normal_dv;

  Vec3 point(double u, double v) const { return chart(u, v); }
  Vec3 partial_u(double u, double v) const;
  Vec3 partial_v(double u, double v) const;
  Vec3 normal(double u, double v) const;  // X_u x X_v normalized; throws on degenerate partials
  Vec3 normal_partial_u(double u, double v) const;
  Vec3 normal_partial_v(double u, double v) const;
};

// X(u,v) = (cos v sin u, sin v, cos v cos u): u = 0, v = 0 is the north pole (0,0,1) with frame (i, j, k)
ParametricSurface unit_sphere();
ParametricSurface plane_surface();  // (u, v, 0)
ParametricSurface surface_by_name(const std::string& name);

struct CurveSpec {
  std::function<Chart2(double)> at;
  std::function<Chart2(double)> velocity;
};
// "line:u0,v0,du,dv", each number optionally followed by "pi"; t runs over [0,1]
CurveSpec parse_curve(const std::string& spec);

struct Frame {
  Vec3 e1, e2, nu;
};
Frame surface_frame(const ParametricSurface& s, double u, double v);

struct TransportTrace {
  std::vector<double> times;
  std::vector<Vec3> positions;
  std::vector<Frame> frames;
  std::vector<Mat3> rotations;  // columns e1, e2, nu
  std::vector<Quat> lifts;
  std::vector<Quat> spinors;
  std::vector<char> ok;  // per-sample tolerance check
};

struct TransportOptions {
  int steps = 10000;
  bool strict = true;  // throw on an ambiguous lift instead of flagging it
};

// RK4 on V' = -(V . nu') nu with re-orthonormalization every step; t in [0,1]
TransportTrace parallel_transport_frame(const ParametricSurface& s, const CurveSpec& c, const Frame& frame0,
                                        const TransportOptions& opt = {});
TransportTrace spin_parallel_transport(const ParametricSurface& s, const CurveSpec& c, const Quat& q0,
                                       int initial_sign, const TransportOptions& opt = {});

// v -> (q -> v conj(nu) q) for a hypersurface in R^4 = H; exact. Agrees with nu v q when nu, v are imaginary.
KElement hypersurface4_action(const KElement& normal, const KElement& v, const KElement& q);
// A . q = nu q w + q w', the even-commutant action on the spinor bundle of a surface
Quat surface_even_commutant_action(const Quat& nu, const Quat& w, const Quat& wp, const Quat& q);
KElement surface_even_commutant_action(const KElement& nu, const KElement& w, const KElement& wp, const KElement& q);

}  // namespace spinor
