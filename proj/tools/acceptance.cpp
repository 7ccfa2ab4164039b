// Acceptance run: one PASS/FAIL line per criterion, details indented below it.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spinor/cli.hpp"
#include "spinor/matrix_rep.hpp"
#include "spinor/recipe.hpp"
#include "spinor/spin_group.hpp"
#include "spinor/surface.hpp"

#ifndef SPINORKIT_PATH
#define SPINORKIT_PATH "spinorkit"
#endif

using namespace spinor;

namespace {

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string sig_str(int r, int s) { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

Rational rq(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  return Rational(num(rng), den(rng));
}

Result clifford_suite() {
  Result res;
  auto t0 = Clock::now();
  int count = 0;
  for (int r = 0; r <= 10; ++r)
    for (int s = 0; r + s <= 10; ++s) {
      if (r + s == 0) continue;
      std::vector<Variant> vs{Variant::Plus};
      if (has_minus_variant(r, s)) vs.push_back(Variant::Minus);
      for (Variant v : vs) {
        SpinorModule m = assemble_signature(r, s, v);
        auto rep = verify_clifford_condition(m.generators, m.signature);
        ++count;
        if (!rep.pass) res.fail(sig_str(r, s) + " " + variant_name(v) + ": " + rep.str());
      }
    }
  for (int n = 11; n <= 16; ++n) {
    std::vector<Variant> vs{Variant::Plus};
    if (has_minus_variant(0, n)) vs.push_back(Variant::Minus);
    for (Variant v : vs) {
      SpinorModule m = assemble_euclidean(n, v);
      auto rep = verify_clifford_condition(m.generators, m.signature);
      ++count;
      if (!rep.pass) res.fail(sig_str(0, n) + ": " + rep.str());
    }
  }
  double secs = since(t0);
  res.note(std::to_string(count) + " modules checked exactly in " + std::to_string(secs) + " s");
  if (secs > 300) res.fail("runtime above 5 minutes");
  return res;
}

Result classification() {
  Result res;
  const std::size_t k_dims[8] = {2, 4, 4, 4, 2, 1, 1, 1};
  const std::size_t k0_dims[8] = {4, 8, 4, 4, 4, 2, 1, 1};
  std::size_t dims[17] = {};
  for (int n = 1; n <= 16; ++n) {
    SpinorModule m = assemble_euclidean(n);
    dims[n] = m.real_dim;
    if (n > 8) {
      if (dims[n] != 16 * dims[n - 8])
        res.fail("n=" + std::to_string(n) + ": dim " + std::to_string(dims[n]) + " is not 16 x " +
                 std::to_string(dims[n - 8]));
      continue;
    }
    Commutant k = intertwiners(m, false), k0 = intertwiners(m, true);
    std::ostringstream line;
    line << "n=" << n << " dim " << m.real_dim << " K " << k.real_dimension << " (" << k.structure << ") K0 "
         << k0.real_dimension << " (" << k0.structure << ")";
    if (auto h = half_spinor_commutant(m)) line << ", on M+ " << h->real_dimension << " (" << h->structure << ")";
    if (k.real_dimension != k_dims[n - 1]) res.fail(line.str() + ": K expected " + std::to_string(k_dims[n - 1]));
    else if (k0.real_dimension != k0_dims[n - 1])
      res.fail(line.str() + ": K0 expected " + std::to_string(k0_dims[n - 1]) +
               " (c(nu) is central in the even algebra and splits the module)");
    else res.note(line.str());
  }
  return res;
}

Result volume_grading() {
  Result res;
  for (int n : {4, 8, 12}) {
    SpinorModule m = assemble_euclidean(n);
    SparseMatrix nu = m.volume_operator();
    if (!(nu * nu).is_identity()) {
      res.fail("n=" + std::to_string(n) + ": nu^2 != 1");
      continue;
    }
    GradedSpace g = grading_from_volume(m);
    if (g.plus != g.minus) res.fail("n=" + std::to_string(n) + ": projector ranks differ");
    for (std::size_t i = 0; i < m.generators.size(); ++i)
      if (!(m.generators[i] * nu == -(nu * m.generators[i])))
        res.fail("n=" + std::to_string(n) + ": generator " + std::to_string(i + 1) + " is not odd");
    res.note("n=" + std::to_string(n) + ": ranks " + std::to_string(g.plus) + "/" + std::to_string(g.minus));
  }
  return res;
}

Result s3_variants() {
  Result res;
  SpinorModule p = assemble_euclidean(3, Variant::Plus), m = assemble_euclidean(3, Variant::Minus);
  if (!(p.volume_operator() == -SparseMatrix::identity(4))) res.fail("plus: c(e1e2e3) != -I");
  if (!(m.volume_operator() == SparseMatrix::identity(4))) res.fail("minus: c(e1e2e3) != +I");
  std::size_t d = intertwiner_space(p.generators, m.generators).size();
  res.note("joint intertwiner dimension " + std::to_string(d));
  if (d != 0) res.fail("the variants are isomorphic");
  return res;
}

Result double_cover() {
  Result res;
  for (int n = 1; n <= 6; ++n) {
    SpinorModule m = assemble_euclidean(n);
    int bad = 0;
    for (unsigned k = 0; k < 20; ++k) {
      DenseMatrix R = random_rational_rotation(n, 1000u * n + k);
      SpinElement g = spin_lift(R);
      DenseMatrix A = twisted_adjoint_matrix(g.value);
      bool eq = true;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) eq = eq && A.at(i, j) == R.at(i, j);
      CoverReport cr = double_cover_check(g, m);
      if (!eq || !cr.pass()) ++bad;
    }
    if (bad) res.fail("n=" + std::to_string(n) + ": " + std::to_string(bad) + " of 20 rotations failed");
  }
  res.note("20 rational rotations per n = 1..6");
  return res;
}

Result sphere() {
  Result res;
  auto t0 = Clock::now();
  TransportOptions opt;
  opt.steps = 10000;
  auto tr = spin_parallel_transport(unit_sphere(), parse_curve("line:0,0,2pi,0"), {0, 1, 0, 0}, 1, opt);
  double secs = since(t0);
  double eR = 0, eg = 0, eq = 0;
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    double t = tr.times[k], c = std::cos(2 * M_PI * t), s = std::sin(2 * M_PI * t);
    const double P[3][3] = {{c, 0, s}, {0, 1, 0}, {-s, 0, c}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) eR = std::max(eR, std::abs(P[i][j] - tr.rotations[k][i][j]));
    const Quat g{std::cos(M_PI * t), 0, std::sin(M_PI * t), 0}, q{0, std::cos(M_PI * t), 0, -std::sin(M_PI * t)};
    for (int i = 0; i < 4; ++i) {
      eg = std::max(eg, std::abs(g[i] - tr.lifts[k][i]));
      eq = std::max(eq, std::abs(q[i] - tr.spinors[k][i]));
    }
  }
  double anti = 0, period = 0;
  for (int i = 0; i < 4; ++i) anti = std::max(anti, std::abs(tr.spinors.back()[i] + tr.spinors.front()[i]));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      period = std::max(period, std::abs(tr.rotations.back()[i][j] - tr.rotations.front()[i][j]));
  char buf[256];
  std::snprintf(buf, sizeof buf, "R err %.2e, g err %.2e, spinor err %.2e, |q(1)+q(0)| %.2e, frame period %.2e, %.3f s",
                eR, eg, eq, anti, period, secs);
  res.note(buf);
  if (eR > 1e-8) res.fail("frame matrix off");
  if (eg > 1e-6) res.fail("lift off");
  if (eq > 1e-6) res.fail("spinor off");
  if (anti > 1e-6) res.fail("q(1) != -q(0)");
  if (period > 1e-8) res.fail("frame not periodic");
  if (secs > 5) res.fail("runtime above 5 s");
  return res;
}

Result families() {
  Result res;
  for (int n = 1; n <= 4; ++n) {
    SpinorModule m = sqrt_space_module(n);
    auto rep = verify_clifford_condition(m.generators, m.signature);
    if (!rep.pass) res.fail("sqrt-space n=" + std::to_string(n) + ": " + rep.str());
  }
  for (int k = 4; k <= 8; ++k) {
    SpinorModule m = octonion_module(k);
    auto rep = verify_clifford_condition(m.generators, m.signature);
    if (!rep.pass) res.fail("octonion k=" + std::to_string(k) + ": " + rep.str());
  }
  SpinorModule m8 = octonion_module(8);
  std::mt19937_64 rng(88);
  for (int t = 0; t < 30; ++t) {
    std::vector<Rational> x(8);
    Rational nn = 0;
    for (auto& c : x) {
      c = rq(rng);
      nn += c * c;
    }
    SparseMatrix c = m8.evaluate(Multivector::vector(m8.signature, x));
    if (!(c * c == -nn * SparseMatrix::identity(16))) res.fail("c8(x)^2 != -|x|^2 for a random x");
  }
  res.note("sqrt-space n=1..4, octonion k=4..8, 30 random octonions");
  return res;
}

Result split() {
  Result res;
  for (int i = 1; i <= 4; ++i) {
    SpinorModule m = split_signature_module(i);
    auto rep = verify_clifford_condition(m.generators, m.signature);
    if (!rep.pass) res.fail("S_" + std::to_string(i) + "," + std::to_string(i) + ": " + rep.str());
    std::size_t d = intertwiners(m, false).real_dimension;
    if (d != 1) res.fail("S_" + std::to_string(i) + "," + std::to_string(i) + ": commutant dim " + std::to_string(d));
  }
  res.note("i = 1..4, generators normalized by g/2");
  return res;
}

Result spinor_squares() {
  Result res;
  std::mt19937_64 rng(99);
  for (int n = 2; n <= 4; ++n) {
    SpinorModule m = assemble_euclidean(n);
    int bad = 0;
    for (int t = 0; t < 50; ++t) {
      std::vector<Rational> a(m.real_dim), b(m.real_dim);
      for (auto& x : a) x = rq(rng);
      for (auto& x : b) x = rq(rng);
      try {
        Multivector w = spinor_square(m, a, b);
        if (!(m.evaluate(w) - spinor_square_operator(m, a, b)).is_zero()) ++bad;
      } catch (const std::exception&) {
        ++bad;
      }
    }
    if (bad) res.fail("S" + std::to_string(n) + ": " + std::to_string(bad) + " of 50 pairs left a residual");
  }
  res.note("50 pairs each in S2, S3, S4");
  return res;
}

int run(const std::string& cmd) {
  int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

Result cli_round_trip() {
  Result res;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "spinorkit_acceptance";
  fs::create_directories(dir);
  const std::string tool = SPINORKIT_PATH;
  int files = 0, bad = 0;
  auto roundtrip = [&](const std::string& args, const std::string& name) {
    std::string f = (dir / (name + ".json")).string();
    int g = run(tool + " generate " + args + " -o " + f + " > /dev/null 2>&1");
    int v = g == 0 ? run(tool + " verify " + f + " > /dev/null 2>&1") : -1;
    ++files;
    if (g != 0 || v != 0) {
      ++bad;
      res.fail("generate " + args + ": exit " + std::to_string(g) + ", verify exit " + std::to_string(v));
    }
  };
  for (int r = 0; r <= 10; ++r)
    for (int s = 0; r + s <= 10; ++s) {
      if (r + s == 0) continue;
      std::string sig = std::to_string(r) + "," + std::to_string(s);
      roundtrip("--sig " + sig, "r" + std::to_string(r) + "s" + std::to_string(s));
      if (has_minus_variant(r, s))
        roundtrip("--sig " + sig + " --variant minus", "r" + std::to_string(r) + "s" + std::to_string(s) + "m");
    }
  for (int n = 1; n <= 4; ++n) roundtrip("--sig 0," + std::to_string(n) + " --family sqrt-space", "sq" + std::to_string(n));
  for (int k = 4; k <= 8; ++k) roundtrip("--sig 0," + std::to_string(k) + " --family octonion", "oc" + std::to_string(k));
  res.note(std::to_string(files - bad) + "/" + std::to_string(files) + " generate->verify round trips exit 0");
  int e2 = run(tool + " generate --sig 0,5 --family sqrt-space -o " + (dir / "x.json").string() + " > /dev/null 2>&1");
  if (e2 != 2) res.fail("sqrt-space at n=5 exit " + std::to_string(e2) + ", expected 2");

  std::string table = (dir / "classify.txt").string();
  int ce = run(tool + " classify --max-n 16 > " + table + " 2>&1");
  std::ifstream in(table);
  std::string line;
  int rows = 0, mismatches = 0;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++rows;
    if (line.find("MISMATCH") != std::string::npos) {
      ++mismatches;
      res.note("classify: " + line);
    }
  }
  if (mismatches) res.fail("classify: " + std::to_string(mismatches) + " of " + std::to_string(rows) + " rows MISMATCH");
  else if (ce != 0 || rows == 0) res.fail("classify exit " + std::to_string(ce));

  std::string a = (dir / "a.csv").string(), b = (dir / "b.csv").string();
  int t1 = run(tool + " transport -o " + a + " > /dev/null 2>&1"), t2 = run(tool + " transport -o " + b + " > /dev/null 2>&1");
  auto slurp = [](const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  };
  std::string sa = slurp(a), sb = slurp(b);
  if (t1 != 0 || t2 != 0 || sa.empty() || sa != sb) res.fail("transport output differs between runs");
  else res.note("transport: " + std::to_string(sa.size()) + " bytes, identical across runs");
  return res;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Result()> fn;
  };
  std::vector<Criterion> all{
      {1, "Clifford condition, r+s <= 10 and Euclidean n <= 16", clifford_suite},
      {2, "classification of modules and commutants", classification},
      {3, "volume grading for n = 4, 8, 12", volume_grading},
      {4, "the two modules of Cl3", s3_variants},
      {5, "double cover", double_cover},
      {6, "sphere transport", sphere},
      {7, "square roots of space and octonion families", families},
      {8, "split signature modules", split},
      {9, "spinor squares", spinor_squares},
      {10, "CLI round trip", cli_round_trip},
  };
  int failed = 0;
  for (auto& c : all) {
    Result r;
    try {
      r = c.fn();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << c.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << c.name << "\n";
    for (auto& n : r.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
    failed += !r.pass;
  }
  std::cout << (10 - failed) << "/10 criteria pass\n";
  return failed ? 1 : 0;
}
