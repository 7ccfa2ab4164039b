#include "spinor/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "spinor/errors.hpp"
#include "spinor/matrix_rep.hpp"
#include "spinor/recipe.hpp"
#include "spinor/surface.hpp"

namespace spinor::cli {

using nlohmann::json;

namespace {

const char* kConvention =
    "e_1..e_r square to +1, e_{r+1}..e_n square to -1; v w + w v = -2 g(v,w); "
    "generators act on the left of column vectors, realified";

std::string pq(const Rational& q) { return q.numerator().get_str() + "/" + q.denominator().get_str(); }

json matrix_json(const SparseMatrix& M) {
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json row = json::array();
    std::size_t next = 0;
    for (auto& [j, q] : M.row(i)) {
      for (; next < j; ++next) row.push_back("0/1");
      row.push_back(pq(q));
      next = j + 1;
    }
    for (; next < M.cols(); ++next) row.push_back("0/1");
    rows.push_back(std::move(row));
  }
  return rows;
}

SparseMatrix matrix_from_json(const json& j, std::size_t d, const std::string& what) {
  if (!j.is_array() || j.size() != d) throw InputError(what + ": expected " + std::to_string(d) + " rows");
  SparseMatrix M(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != d) throw InputError(what + ": row " + std::to_string(i) + " has wrong length");
    SparseVec r;
    for (std::size_t c = 0; c < d; ++c) {
      if (!row[c].is_string()) throw InputError(what + ": entries must be \"p/q\" strings");
      Rational q = Rational::parse(row[c].get<std::string>());
      if (!q.is_zero()) r.emplace_back(c, q);
    }
    M.set_row(i, std::move(r));
  }
  return M;
}

template <class T>
T field_of(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("field '") + key + "' has the wrong type");
  }
}

std::string dim_tag(std::size_t d, const std::string& tag) { return std::to_string(d) + "/" + tag; }

// the classification tables, n mod 8 with 8 for 0
const char* kPaperK[8] = {"C", "H", "H", "H", "C", "R", "R", "R"};
const std::size_t kPaperKDim[8] = {2, 4, 4, 4, 2, 1, 1, 1};
const char* kPaperK0[8] = {"M2(R)", "M2(C)", "H", "H", "H", "C", "R", "R"};
const std::size_t kPaperK0Dim[8] = {4, 8, 4, 4, 4, 2, 1, 1};
const std::size_t kPaperDim[8] = {2, 4, 4, 8, 8, 8, 8, 16};

bool write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << text;
  return static_cast<bool>(f);
}

std::string fmt17(double x) {
  if (x == 0) x = 0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string write_gamma_file(const SpinorModule& m) {
  json j;
  j["format_version"] = 1;
  j["signature"] = {m.signature.r, m.signature.s};
  j["convention"] = kConvention;
  j["field"] = algebra_name(m.field);
  j["real_dim"] = m.real_dim;
  j["family"] = family_name(m.family);
  j["variant"] = variant_name(m.variant);
  json gens = json::array();
  for (auto& g : m.generators) gens.push_back(matrix_json(g));
  j["generators"] = std::move(gens);
  j["spin_metric"] = matrix_json(m.spin_metric);
  if (m.grading) j["grading"] = *m.grading;
  json cb = json::array();
  for (auto& u : m.right_units) cb.push_back(matrix_json(u));
  j["commutant_basis"] = std::move(cb);
  return j.dump(1) + "\n";
}

SpinorModule read_gamma_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("gamma file must be a JSON object");
  if (field_of<int>(j, "format_version") != 1) throw InputError("unsupported format_version");
  auto sig = field_of<std::vector<int>>(j, "signature");
  if (sig.size() != 2 || sig[0] < 0 || sig[1] < 0 || sig[0] + sig[1] < 1 || sig[0] + sig[1] > 31)
    throw InputError("signature must be [r, s] with 1 <= r+s");
  SpinorModule m;
  m.signature = Signature(sig[0], sig[1]);
  m.field = algebra_from_name(field_of<std::string>(j, "field"));
  if (m.field == Algebra::O) throw InputError("field must be R, C or H");
  long d = field_of<long>(j, "real_dim");
  if (d < 1 || d > 4096) throw InputError("real_dim out of range");
  m.real_dim = static_cast<std::size_t>(d);
  m.family = family_from_name(field_of<std::string>(j, "family"));
  m.variant = variant_from_name(field_of<std::string>(j, "variant"));
  if (!j.contains("generators") || !j["generators"].is_array()) throw InputError("missing generators");
  if (j["generators"].size() != static_cast<std::size_t>(m.signature.n()))
    throw InputError("expected " + std::to_string(m.signature.n()) + " generators");
  for (std::size_t i = 0; i < j["generators"].size(); ++i)
    m.generators.push_back(matrix_from_json(j["generators"][i], m.real_dim, "generator " + std::to_string(i + 1)));
  if (!j.contains("spin_metric")) throw InputError("missing spin_metric");
  m.spin_metric = matrix_from_json(j["spin_metric"], m.real_dim, "spin_metric");
  if (j.contains("grading") && !j["grading"].is_null()) {
    auto g = field_of<std::vector<int>>(j, "grading");
    if (g.size() != m.real_dim) throw InputError("grading has wrong length");
    for (int x : g)
      if (x != 1 && x != -1) throw InputError("grading entries must be +1 or -1");
    m.grading = g;
  }
  if (j.contains("commutant_basis")) {
    if (!j["commutant_basis"].is_array()) throw InputError("commutant_basis must be a list");
    for (std::size_t i = 0; i < j["commutant_basis"].size(); ++i)
      m.right_units.push_back(
          matrix_from_json(j["commutant_basis"][i], m.real_dim, "commutant_basis " + std::to_string(i + 1)));
  }
  return m;
}

SpinorModule build_module(int r, int s, const std::string& family, const std::string& variant) {
  if (r < 0 || s < 0 || r + s < 1) throw InputError("signature needs r, s >= 0 and r + s >= 1");
  Variant v = variant_from_name(variant);
  if (family == "recipe") {
    if (v == Variant::Minus && !has_minus_variant(r, s))
      throw InputError("signature (" + std::to_string(r) + "," + std::to_string(s) + ") has a single irreducible module");
    return assemble_signature(r, s, v);
  }
  if (v == Variant::Minus) throw InputError("the minus variant exists only for the recipe family");
  if (family == "sqrt-space") {
    if (r != 0 || s > 4) throw InputError("sqrt-space is defined for signature (0,n) with n <= 4");
    return sqrt_space_module(s);
  }
  if (family == "octonion") {
    if (r != 0 || s < 4 || s > 8) throw InputError("octonion family is defined for signature (0,k) with 4 <= k <= 8");
    return octonion_module(s);
  }
  throw InputError("unknown family '" + family + "' (recipe, sqrt-space, octonion)");
}

std::vector<std::string> verify_module(const SpinorModule& m) {
  std::vector<std::string> fails;
  const std::size_t d = m.real_dim;
  auto cr = verify_clifford_condition(m.generators, m.signature);
  if (!cr.pass) fails.push_back(cr.str());
  auto mr = spin_metric_verify(m);
  if (!mr.pass)
    for (auto& f : mr.failures) fails.push_back("spin metric: " + f);
  if (m.right_units.size() + 1 != static_cast<std::size_t>(algebra_dim(m.field)))
    fails.push_back("commutant basis has " + std::to_string(m.right_units.size()) + " units, field " +
                    algebra_name(m.field) + " needs " + std::to_string(algebra_dim(m.field) - 1));
  for (std::size_t a = 0; a < m.right_units.size(); ++a) {
    if (!(m.right_units[a] * m.right_units[a] == -SparseMatrix::identity(d)))
      fails.push_back("commutant unit " + std::to_string(a + 1) + " does not square to -1");
    for (std::size_t b = a + 1; b < m.right_units.size(); ++b)
      if (!(m.right_units[a] * m.right_units[b] == -(m.right_units[b] * m.right_units[a])))
        fails.push_back("commutant units " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                        " do not anticommute");
  }
  if (m.grading) {
    for (std::size_t i = 0; i < m.generators.size(); ++i) {
      bool odd = true;
      for (std::size_t r = 0; r < d; ++r)
        for (auto& [c, q] : m.generators[i].row(r)) odd = odd && (*m.grading)[r] != (*m.grading)[c];
      if (!odd) fails.push_back("generator " + std::to_string(i + 1) + " is not odd for the grading");
    }
  }
  if (cr.pass) {
    std::size_t expect = expected_real_dim(m.signature.r, m.signature.s);
    if (d != expect)
      fails.push_back("real_dim " + std::to_string(d) + " differs from the irreducible size " + std::to_string(expect));
    Commutant c = intertwiners(m, false);
    if (c.real_dimension != static_cast<std::size_t>(algebra_dim(m.field)))
      fails.push_back("commutant has dimension " + std::to_string(c.real_dimension) + ", field " +
                      algebra_name(m.field) + " has " + std::to_string(algebra_dim(m.field)));
  }
  return fails;
}

std::vector<ClassifyRow> classify_rows(int max_n) {
  if (max_n < 1 || max_n > 16) throw InputError("max_n must be between 1 and 16");
  std::vector<ClassifyRow> rows;
  std::vector<std::size_t> plus_dims(max_n + 1, 0);
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Variant> vs{Variant::Plus};
    if (has_minus_variant(0, n)) vs.push_back(Variant::Minus);
    for (Variant v : vs) {
      SpinorModule m = assemble_euclidean(n, v);
      ClassifyRow row;
      row.n = n;
      row.variant = variant_name(v);
      row.dim = m.real_dim;
      Commutant k = intertwiners(m, false), k0 = intertwiners(m, true);
      row.k_dim = k.real_dimension;
      row.k_tag = k.structure;
      row.k0_dim = k0.real_dimension;
      row.k0_tag = k0.structure;
      if (auto h = half_spinor_commutant(m)) row.half_k0 = dim_tag(h->real_dimension, h->structure);
      int r8 = (n - 1) % 8;
      row.expected_k = dim_tag(kPaperKDim[r8], kPaperK[r8]);
      row.expected_k0 = dim_tag(kPaperK0Dim[r8], kPaperK0[r8]);
      row.expected_dim = n <= 8 ? kPaperDim[r8] : 16 * plus_dims[n - 8];
      if (v == Variant::Plus) plus_dims[n] = row.dim;
      row.match = row.dim == row.expected_dim && dim_tag(row.k_dim, row.k_tag) == row.expected_k &&
                  dim_tag(row.k0_dim, row.k0_tag) == row.expected_k0;
      rows.push_back(row);
    }
  }
  return rows;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  SpinorModule m;
  try {
    m = build_module(a.r, a.s, a.family, a.variant);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: construction failed: " << e.what() << "\n";
    return kVerifyFail;
  }
  auto fails = verify_module(m);
  if (!fails.empty()) {
    err << "self-verification failed:\n";
    for (auto& f : fails) err << "  " << f << "\n";
    return kVerifyFail;
  }
  if (!write_text(a.out, write_gamma_file(m), out)) {
    err << "error: cannot write '" << a.out << "'\n";
    return kIOError;
  }
  return kPass;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::string text;
  {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
      err << "error: cannot read '" << path << "'\n";
      return kIOError;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  SpinorModule m;
  try {
    m = read_gamma_file(text);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  std::vector<std::string> fails;
  try {
    fails = verify_module(m);
  } catch (const std::exception& e) {
    fails.push_back(e.what());
  }
  out << "signature (" << m.signature.r << "," << m.signature.s << ") family " << family_name(m.family) << " variant "
      << variant_name(m.variant) << " real_dim " << m.real_dim << " field " << algebra_name(m.field) << "\n";
  if (fails.empty()) {
    out << "PASS\n";
    return kPass;
  }
  for (auto& f : fails) out << "  " << f << "\n";
  out << "FAIL\n";
  return kVerifyFail;
}

int cmd_classify(int max_n, std::ostream& out, std::ostream& err) {
  std::vector<ClassifyRow> rows;
  try {
    rows = classify_rows(max_n);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-3s %-7s %5s %6s %-10s %-8s %-10s %-10s %-8s %s\n", "n", "variant", "dim", "expect",
                "K", "table K", "K0", "table K0", "K0 on M+", "status");
  out << buf;
  bool all = true;
  for (auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-3d %-7s %5zu %6zu %-10s %-8s %-10s %-10s %-8s %s\n", r.n, r.variant.c_str(), r.dim,
                  r.expected_dim, dim_tag(r.k_dim, r.k_tag).c_str(), r.expected_k.c_str(),
                  dim_tag(r.k0_dim, r.k0_tag).c_str(), r.expected_k0.c_str(),
                  r.half_k0.empty() ? "-" : r.half_k0.c_str(), r.match ? "MATCH" : "MISMATCH");
    out << buf;
    all = all && r.match;
  }
  return all ? kPass : kVerifyFail;
}

int cmd_transport(const TransportArgs& a, std::ostream& out, std::ostream& err) {
  ParametricSurface surf;
  CurveSpec curve;
  Quat q0;
  try {
    surf = surface_by_name(a.surface);
    curve = parse_curve(a.curve);
    std::vector<double> xs;
    std::stringstream ss(a.q0);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t used = 0;
      double x;
      try {
        x = std::stod(tok, &used);
      } catch (const std::exception&) {
        throw InputError("bad q0 component '" + tok + "'");
      }
      if (used != tok.size() || !std::isfinite(x)) throw InputError("bad q0 component '" + tok + "'");
      xs.push_back(x);
    }
    if (xs.size() != 4) throw InputError("q0 needs four components w,x,y,z");
    q0 = {xs[0], xs[1], xs[2], xs[3]};
    if (a.steps < 1) throw InputError("steps must be at least 1");
    if (a.sign != 1 && a.sign != -1) throw InputError("sign must be 1 or -1");
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  TransportTrace tr;
  try {
    TransportOptions opt;
    opt.steps = a.steps;
    opt.strict = false;
    tr = spin_parallel_transport(surf, curve, q0, a.sign, opt);
  } catch (const NumericError& e) {
    err << "error: integration failed at t=" << fmt17(e.at) << ": " << e.what() << "\n";
    return kNumericError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  std::string text = "t,x,y,z,e1x,e1y,e1z,e2x,e2y,e2z,nux,nuy,nuz,gw,gx,gy,gz,qw,qx,qy,qz,ok\n";
  std::size_t flagged = 0;
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    std::string line = fmt17(tr.times[k]);
    auto put3 = [&](const Vec3& v) {
      for (double x : v) line += "," + fmt17(x);
    };
    auto put4 = [&](const Quat& q) {
      for (double x : q) line += "," + fmt17(x);
    };
    put3(tr.positions[k]);
    put3(tr.frames[k].e1);
    put3(tr.frames[k].e2);
    put3(tr.frames[k].nu);
    put4(tr.lifts[k]);
    put4(tr.spinors[k]);
    line += tr.ok[k] ? ",1\n" : ",0\n";
    flagged += !tr.ok[k];
    text += line;
  }
  if (!write_text(a.out, text, out)) {
    err << "error: cannot write '" << a.out << "'\n";
    return kIOError;
  }
  if (flagged) err << "warning: " << flagged << " samples breach the tolerance checks (ok=0)\n";
  return kPass;
}

}  // namespace spinor::cli
