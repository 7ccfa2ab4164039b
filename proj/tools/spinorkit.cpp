#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spinor/cli.hpp"

using namespace spinor::cli;

int main(int argc, char** argv) {
  CLI::App app{"spinorkit: explicit spinor modules, gamma matrices and spin transport"};
  app.require_subcommand(1);

  GenerateArgs gen;
  std::string sig;
  auto* g = app.add_subcommand("generate", "write the generators of an irreducible Cl(r,s) module");
  g->add_option("--sig", sig, "signature r,s (e_1..e_r square to +1)")->required();
  g->add_option("--family", gen.family, "recipe | sqrt-space | octonion")->capture_default_str();
  g->add_option("--variant", gen.variant, "plus | minus")->capture_default_str();
  g->add_option("--out,-o", gen.out, "output path, - for stdout")->required();

  std::string in;
  auto* v = app.add_subcommand("verify", "re-check a gamma file");
  v->add_option("file", in, "GammaFileV1 JSON")->required();

  int max_n = 16;
  auto* c = app.add_subcommand("classify", "compare computed modules and commutants with the classification tables");
  c->add_option("--max-n", max_n, "largest n (<= 16)")->capture_default_str();

  TransportArgs tr;
  auto* t = app.add_subcommand("transport", "spin parallel transport along a curve on a surface, as CSV");
  t->add_option("--surface", tr.surface, "sphere | plane")->capture_default_str();
  t->add_option("--curve", tr.curve, "line:u0,v0,du,dv (numbers may end in pi)")->capture_default_str();
  t->add_option("--q0", tr.q0, "initial spinor w,x,y,z")->capture_default_str();
  t->add_option("--steps", tr.steps, "RK4 steps")->capture_default_str();
  t->add_option("--sign", tr.sign, "initial lift sign, 1 or -1")->capture_default_str();
  t->add_option("--out,-o", tr.out, "output path, - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (*g) {
    auto comma = sig.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("x");
      std::size_t u1 = 0, u2 = 0;
      std::string a = sig.substr(0, comma), b = sig.substr(comma + 1);
      gen.r = std::stoi(a, &u1);
      gen.s = std::stoi(b, &u2);
      if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument("x");
    } catch (const std::exception&) {
      std::cerr << "error: --sig expects r,s\n";
      return kInputError;
    }
    return cmd_generate(gen, std::cout, std::cerr);
  }
  if (*v) return cmd_verify(in, std::cout, std::cerr);
  if (*c) return cmd_classify(max_n, std::cout, std::cerr);
  return cmd_transport(tr, std::cout, std::cerr);
}
