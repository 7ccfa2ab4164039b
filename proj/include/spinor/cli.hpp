#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spinor/spinor_module.hpp"

namespace spinor::cli {

enum Exit : int { kPass = 0, kVerifyFail = 1, kInputError = 2, kIOError = 3, kNumericError = 4 };

// GammaFileV1 as JSON text. Rationals are "p/q" strings.
std::string write_gamma_file(const SpinorModule& m);
SpinorModule read_gamma_file(const std::string& text);  // InputError on malformed content

// builds the module behind `generate`; InputError for an illegal family/signature/variant
SpinorModule build_module(int r, int s, const std::string& family, const std::string& variant);

// every check `verify` runs; empty means pass
std::vector<std::string> verify_module(const SpinorModule& m);

struct ClassifyRow {
  int n = 0;
  std::string variant;
  std::size_t dim = 0, expected_dim = 0;
  std::size_t k_dim = 0, k0_dim = 0;
  std::string k_tag, k0_tag;
  std::string expected_k, expected_k0;  // "dim/tag"
  std::string half_k0;                  // commutant on M+ when the module is graded
  bool match = false;
};
std::vector<ClassifyRow> classify_rows(int max_n);

struct GenerateArgs {
  int r = 0, s = 0;
  std::string family = "recipe";
  std::string variant = "plus";
  std::string out;  // "-" for stdout
};
struct TransportArgs {
  std::string surface = "sphere";
  std::string curve = "line:0,0,2pi,0";
  std::string q0 = "0,1,0,0";  // w,x,y,z
  int steps = 10000;
  int sign = 1;
  std::string out = "-";
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_classify(int max_n, std::ostream& out, std::ostream& err);
int cmd_transport(const TransportArgs& a, std::ostream& out, std::ostream& err);

}  // namespace spinor::cli
