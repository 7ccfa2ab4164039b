#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spinor/cli.hpp"
#include "spinor/errors.hpp"
#include "spinor/recipe.hpp"

using namespace spinor;
using namespace spinor::cli;

namespace {

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("spinorkit_test_" + name)).string();
}

std::string slurp(const std::string& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("gamma file round trip") {
  SpinorModule m = assemble_signature(1, 3);
  std::string text = write_gamma_file(m);
  SpinorModule back = read_gamma_file(text);
  CHECK(back.signature == m.signature);
  CHECK(back.field == m.field);
  CHECK(back.real_dim == m.real_dim);
  CHECK(back.generators == m.generators);
  CHECK(back.spin_metric == m.spin_metric);
  CHECK(back.right_units == m.right_units);
  CHECK(back.grading == m.grading);
  CHECK(write_gamma_file(back) == text);
  CHECK(verify_module(back).empty());
  CHECK(text.find("\"1/1\"") != std::string::npos);
}

TEST_CASE("malformed gamma files are input errors") {
  CHECK_THROWS_AS(read_gamma_file("not json"), InputError);
  CHECK_THROWS_AS(read_gamma_file("{}"), InputError);
  std::string text = write_gamma_file(assemble_euclidean(2));
  auto bad = text;
  bad.replace(bad.find("\"0/1\""), 5, "\"0.5\"");
  CHECK_THROWS_AS(read_gamma_file(bad), InputError);
  bad = text;
  bad.replace(bad.find("\"real_dim\": 4"), 13, "\"real_dim\": 3");
  CHECK_THROWS_AS(read_gamma_file(bad), InputError);
}

TEST_CASE("a corrupted entry names the violating pair") {
  SpinorModule m = assemble_euclidean(6);
  m.generators[2].add(0, 0, Rational(1, 3));
  auto fails = verify_module(m);
  REQUIRE_FALSE(fails.empty());
  CHECK(fails[0].find("(3,3)") != std::string::npos);
}

TEST_CASE("generate builds the requested family") {
  CHECK(build_module(0, 8, "recipe", "plus").real_dim == 16);
  SpinorModule minus = build_module(0, 3, "recipe", "minus");
  CHECK(minus.volume_operator() == SparseMatrix::identity(4));
  CHECK_THROWS_AS(build_module(0, 5, "sqrt-space", "plus"), InputError);
  CHECK_THROWS_AS(build_module(0, 3, "octonion", "plus"), InputError);
  CHECK_THROWS_AS(build_module(0, 4, "recipe", "minus"), InputError);
  CHECK_THROWS_AS(build_module(0, 4, "fancy", "plus"), InputError);
  CHECK(verify_module(build_module(0, 8, "octonion", "plus")).empty());
}

TEST_CASE("generate and verify through files") {
  std::ostringstream out, err;
  GenerateArgs g;
  g.r = 2;
  g.s = 3;
  g.out = tmp_path("g23.json");
  CHECK(cmd_generate(g, out, err) == kPass);
  CHECK(cmd_verify(g.out, out, err) == kPass);
  g.family = "sqrt-space";
  CHECK(cmd_generate(g, out, err) == kInputError);
  g.family = "recipe";
  g.out = "/nonexistent-dir/x.json";
  CHECK(cmd_generate(g, out, err) == kIOError);
  CHECK(cmd_verify("/nonexistent-dir/x.json", out, err) == kIOError);
  // hand corruption
  std::string text = slurp(tmp_path("g23.json"));
  auto pos = text.find("\"0/1\"");
  text.replace(pos, 5, "\"7/1\"");
  std::ofstream(tmp_path("bad.json")) << text;
  std::ostringstream vout;
  CHECK(cmd_verify(tmp_path("bad.json"), vout, err) == kVerifyFail);
  CHECK(vout.str().find("FAIL") != std::string::npos);
  std::ofstream(tmp_path("junk.json")) << "{\"format_version\": 1}";
  CHECK(cmd_verify(tmp_path("junk.json"), vout, err) == kInputError);
}

TEST_CASE("classify rows") {
  auto rows = classify_rows(8);
  CHECK(rows.size() == 10);  // n = 3 and n = 7 list both variants
  for (auto& r : rows) {
    if (r.n == 5) {
      CHECK(r.dim == 8);
      CHECK(r.k_tag == "C");
      CHECK(r.k0_tag == "H");
      CHECK(r.match);
    }
    if (r.n == 7) CHECK(r.k_tag == "R");
    CHECK(r.dim == r.expected_dim);
    CHECK(r.k_dim == std::stoul(r.expected_k));
  }
  CHECK_THROWS_AS(classify_rows(17), InputError);
  std::ostringstream out, err;
  CHECK(cmd_classify(0, out, err) == kInputError);
}

TEST_CASE("transport csv") {
  TransportArgs a;
  std::ostringstream o1, o2, err;
  CHECK(cmd_transport(a, o1, err) == kPass);
  CHECK(cmd_transport(a, o2, err) == kPass);
  CHECK(o1.str() == o2.str());
  std::istringstream lines(o1.str());
  std::string header, first, last, line;
  std::getline(lines, header);
  CHECK(header == "t,x,y,z,e1x,e1y,e1z,e2x,e2y,e2z,nux,nuy,nuz,gw,gx,gy,gz,qw,qx,qy,qz,ok");
  std::getline(lines, first);
  std::size_t count = 1;
  last = first;
  while (std::getline(lines, line)) {
    last = line;
    ++count;
  }
  CHECK(count == 10001);
  CHECK(first == "0,0,0,1,1,0,0,0,1,0,0,0,1,1,0,0,0,0,1,0,0,1");
  // final spinor is -i
  std::vector<double> v;
  std::stringstream ss(last);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
  REQUIRE(v.size() == 22);
  CHECK(v[17] == doctest::Approx(0).epsilon(1e-6));
  CHECK(v[18] == doctest::Approx(-1).epsilon(1e-6));
  CHECK(v[21] == 1);

  a.steps = 2;
  std::ostringstream coarse, cerr;
  CHECK(cmd_transport(a, coarse, cerr) == kPass);
  CHECK(coarse.str().find(",0\n") != std::string::npos);
  CHECK(cerr.str().find("warning") != std::string::npos);

  TransportArgs bad;
  bad.curve = "line:1,2";
  CHECK(cmd_transport(bad, o1, err) == kInputError);
  bad = TransportArgs{};
  bad.q0 = "1,0,0";
  CHECK(cmd_transport(bad, o1, err) == kInputError);
  bad = TransportArgs{};
  bad.curve = "line:0,0,0,1pi";
  std::ostringstream nerr;
  CHECK(cmd_transport(bad, o1, nerr) == kNumericError);
  CHECK(nerr.str().find("t=") != std::string::npos);
}
