#include "spinor/surface.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "spinor/errors.hpp"

namespace spinor {

namespace {

constexpr double kH = 1e-6;

Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 scale(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
bool finite(const Vec3& a) { return std::isfinite(a[0]) && std::isfinite(a[1]) && std::isfinite(a[2]); }

double parse_number(const std::string& tok) {
  std::string s = tok;
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  bool pi = s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0;
  if (pi) s.resize(s.size() - 2);
  double x;
  if (pi && (s.empty() || s == "+")) {
    x = 1;
  } else if (pi && s == "-") {
    x = -1;
  } else {
    if (s.empty()) throw InputError("bad number in curve spec: '" + tok + "'");
    char* end = nullptr;
    x = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(x)) throw InputError("bad number in curve spec: '" + tok + "'");
  }
  return pi ? x * std::numbers::pi : x;
}

// max deviation of (e1, e2, nu) from an orthonormal frame
double frame_defect(const Frame& f) {
  double d = 0;
  d = std::max(d, std::abs(dot(f.e1, f.e1) - 1));
  d = std::max(d, std::abs(dot(f.e2, f.e2) - 1));
  d = std::max(d, std::abs(dot(f.e1, f.e2)));
  d = std::max(d, std::abs(dot(f.e1, f.nu)));
  d = std::max(d, std::abs(dot(f.e2, f.nu)));
  return d;
}

Mat3 frame_matrix(const Frame& f) {
  Mat3 R;
  for (int r = 0; r < 3; ++r) {
    R[r][0] = f.e1[r];
    R[r][1] = f.e2[r];
    R[r][2] = f.nu[r];
  }
  return R;
}

}  // namespace

Vec3 ParametricSurface::partial_u(double u, double v) const {
  if (du) return du(u, v);
  return scale(0.5 / kH, sub(chart(u + kH, v), chart(u - kH, v)));
}

Vec3 ParametricSurface::partial_v(double u, double v) const {
  if (dv) return dv(u, v);
  return scale(0.5 / kH, sub(chart(u, v + kH), chart(u, v - kH)));
}

Vec3 ParametricSurface::normal(double u, double v) const {
  Vec3 n = cross(partial_u(u, v), partial_v(u, v));
  double l = norm(n);
  if (!(l > 1e-12)) throw PreconditionError("chart is not an immersion at (" + std::to_string(u) + ", " +
                                            std::to_string(v) + ")");
  return scale(1 / l, n);
}

Vec3 ParametricSurface::normal_partial_u(double u, double v) const {
  if (normal_du) return normal_du(u, v);
  return scale(0.5 / kH, sub(normal(u + kH, v), normal(u - kH, v)));
}

Vec3 ParametricSurface::normal_partial_v(double u, double v) const {
  if (normal_dv) return normal_dv(u, v);
  return scale(0.5 / kH, sub(normal(u, v + kH), normal(u, v - kH)));
}

ParametricSurface unit_sphere() {
  ParametricSurface s;
  s.name = "sphere";
  s.chart = [](double u, double v) -> Vec3 {
    return {std::cos(v) * std::sin(u), std::sin(v), std::cos(v) * std::cos(u)};
  };
  s.du = [](double u, double v) -> Vec3 { return {std::cos(v) * std::cos(u), 0, -std::cos(v) * std::sin(u)}; };
  s.dv = [](double u, double v) -> Vec3 {
    return {-std::sin(v) * std::sin(u), std::cos(v), -std::sin(v) * std::cos(u)};
  };
  // nu = X on this chart (|v| < pi/2)
  s.normal_du = s.du;
  s.normal_dv = s.dv;
  return s;
}

ParametricSurface plane_surface() {
  ParametricSurface s;
  s.name = "plane";
  s.chart = [](double u, double v) -> Vec3 { return {u, v, 0}; };
  s.du = [](double, double) -> Vec3 { return {1, 0, 0}; };
  s.dv = [](double, double) -> Vec3 { return {0, 1, 0}; };
  s.normal_du = [](double, double) -> Vec3 { return {0, 0, 0}; };
  s.normal_dv = s.normal_du;
  return s;
}

ParametricSurface surface_by_name(const std::string& name) {
  if (name == "sphere") return unit_sphere();
  if (name == "plane") return plane_surface();
  throw InputError("unknown surface '" + name + "' (sphere, plane)");
}

CurveSpec parse_curve(const std::string& spec) {
  const std::string prefix = "line:";
  if (spec.rfind(prefix, 0) != 0) throw InputError("curve spec must look like line:u0,v0,du,dv");
  std::vector<double> xs;
  std::string rest = spec.substr(prefix.size());
  std::size_t pos = 0;
  while (true) {
    std::size_t c = rest.find(',', pos);
    xs.push_back(parse_number(rest.substr(pos, c == std::string::npos ? std::string::npos : c - pos)));
    if (c == std::string::npos) break;
    pos = c + 1;
  }
  if (xs.size() != 4) throw InputError("curve spec needs four numbers: line:u0,v0,du,dv");
  double u0 = xs[0], v0 = xs[1], du = xs[2], dv = xs[3];
  CurveSpec out;
  out.at = [=](double t) -> Chart2 { return {u0 + t * du, v0 + t * dv}; };
  out.velocity = [=](double) -> Chart2 { return {du, dv}; };
  return out;
}

Frame surface_frame(const ParametricSurface& s, double u, double v) {
  Frame f;
  f.nu = s.normal(u, v);
  Vec3 xu = s.partial_u(u, v);
  f.e1 = scale(1 / norm(xu), xu);
  f.e2 = cross(f.nu, f.e1);
  return f;
}

TransportTrace parallel_transport_frame(const ParametricSurface& s, const CurveSpec& c, const Frame& frame0,
                                        const TransportOptions& opt) {
  if (opt.steps < 1) throw InputError("steps must be at least 1");
  const int N = opt.steps;
  const double dt = 1.0 / N;

  auto nu_at = [&](double t) {
    Chart2 p = c.at(t);
    try {
      return s.normal(p[0], p[1]);
    } catch (const PreconditionError& e) {
      throw NumericError(e.what(), t);
    }
  };
  auto nudot_at = [&](double t) {
    Chart2 p = c.at(t), w = c.velocity(t);
    try {
      return add(scale(w[0], s.normal_partial_u(p[0], p[1])), scale(w[1], s.normal_partial_v(p[0], p[1])));
    } catch (const PreconditionError& e) {
      throw NumericError(e.what(), t);
    }
  };
  // V' = -(V . nu') nu
  auto rhs = [&](double t, const Vec3& a, const Vec3& b, Vec3& da, Vec3& db) {
    Vec3 n = nu_at(t), nd = nudot_at(t);
    da = scale(-dot(a, nd), n);
    db = scale(-dot(b, nd), n);
  };

  Frame f = frame0;
  {
    Vec3 n0 = nu_at(0);
    Frame chk{f.e1, f.e2, n0};
    if (frame_defect(chk) > 1e-9) throw InputError("initial frame is not an orthonormal tangent frame");
    if (dot(cross(f.e1, f.e2), n0) < 0) throw InputError("initial frame is not positively oriented");
    f.nu = n0;
  }

  TransportTrace tr;
  tr.times.reserve(N + 1);
  auto record = [&](double t, const Frame& fr) {
    Chart2 p = c.at(t);
    tr.times.push_back(t);
    tr.positions.push_back(s.point(p[0], p[1]));
    tr.frames.push_back(fr);
    tr.rotations.push_back(frame_matrix(fr));
    tr.ok.push_back(frame_defect(fr) <= 1e-9 && finite(fr.e1) && finite(fr.e2));
  };
  record(0, f);

  for (int k = 0; k < N; ++k) {
    double t = k * dt;
    Vec3 a1, b1, a2, b2, a3, b3, a4, b4;
    rhs(t, f.e1, f.e2, a1, b1);
    rhs(t + dt / 2, add(f.e1, scale(dt / 2, a1)), add(f.e2, scale(dt / 2, b1)), a2, b2);
    rhs(t + dt / 2, add(f.e1, scale(dt / 2, a2)), add(f.e2, scale(dt / 2, b2)), a3, b3);
    rhs(t + dt, add(f.e1, scale(dt, a3)), add(f.e2, scale(dt, b3)), a4, b4);
    Vec3 e1 = add(f.e1, scale(dt / 6, add(add(a1, scale(2, a2)), add(scale(2, a3), a4))));
    Vec3 e2 = add(f.e2, scale(dt / 6, add(add(b1, scale(2, b2)), add(scale(2, b3), b4))));
    double t1 = (k + 1 == N) ? 1.0 : (k + 1) * dt;
    Vec3 n = nu_at(t1);
    e1 = sub(e1, scale(dot(e1, n), n));
    double l1 = norm(e1);
    if (!(l1 > 1e-12) || !std::isfinite(l1)) throw NumericError("transported frame degenerated", t1);
    e1 = scale(1 / l1, e1);
    e2 = sub(e2, add(scale(dot(e2, n), n), scale(dot(e2, e1), e1)));
    double l2 = norm(e2);
    if (!(l2 > 1e-12) || !std::isfinite(l2)) throw NumericError("transported frame degenerated", t1);
    e2 = scale(1 / l2, e2);
    f = {e1, e2, n};
    record(t1, f);
  }
  return tr;
}

TransportTrace spin_parallel_transport(const ParametricSurface& s, const CurveSpec& c, const Quat& q0,
                                       int initial_sign, const TransportOptions& opt) {
  if (initial_sign != 1 && initial_sign != -1) throw InputError("initial sign must be +1 or -1");
  Chart2 p0 = c.at(0);
  Frame f0;
  try {
    f0 = surface_frame(s, p0[0], p0[1]);
  } catch (const PreconditionError& e) {
    throw NumericError(e.what(), 0);
  }
  TransportTrace tr = parallel_transport_frame(s, c, f0, opt);

  std::vector<char> amb;
  tr.lifts = quaternion_lift_path(tr.rotations, 1, opt.strict ? nullptr : &amb);
  // q(t) = s g(t) conj(g(0)) q0, so q(0) = s q0
  Quat base = quat_mul(quat_conj(tr.lifts.front()), q0);
  tr.spinors.reserve(tr.lifts.size());
  for (std::size_t k = 0; k < tr.lifts.size(); ++k) {
    Quat q = quat_mul(tr.lifts[k], base);
    if (initial_sign < 0) q = {-q[0], -q[1], -q[2], -q[3]};
    tr.spinors.push_back(q);
    Mat3 back = quat_to_matrix(tr.lifts[k]);
    double res = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) res = std::max(res, std::abs(back[i][j] - tr.rotations[k][i][j]));
    bool good = res <= 1e-8 && (amb.empty() || !amb[k]);
    tr.ok[k] = tr.ok[k] && good;
  }
  return tr;
}

KElement hypersurface4_action(const KElement& normal, const KElement& v, const KElement& q) {
  if (normal.algebra != Algebra::H || v.algebra != Algebra::H || q.algebra != Algebra::H)
    throw InputError("hypersurface action works on quaternions");
  if (!norm_sq(normal).is_one()) throw InputError("normal must be a unit quaternion");
  if (!mul(Algebra::H, conj(normal), v).re().is_zero()) throw InputError("vector is not tangent");
  // v conj(nu) is imaginary with |v|: nu v itself only is when v is orthogonal to conj(nu)
  return v * conj(normal) * q;
}

Quat surface_even_commutant_action(const Quat& nu, const Quat& w, const Quat& wp, const Quat& q) {
  Quat a = quat_mul(quat_mul(nu, q), w), b = quat_mul(q, wp);
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

KElement surface_even_commutant_action(const KElement& nu, const KElement& w, const KElement& wp,
                                       const KElement& q) {
  return nu * q * w + q * wp;
}

}  // namespace spinor
