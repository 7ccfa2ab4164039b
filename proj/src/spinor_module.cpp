#include "spinor/spinor_module.hpp"

#include "spinor/errors.hpp"

namespace spinor {

namespace {
constexpr const char* kFamilyNames[] = {"quaternionic-multivector", "sqrt-space", "octonion",
                                        "split-exterior", "positive-multivector", "assembled"};
}

const char* family_name(Family f) { return kFamilyNames[static_cast<int>(f)]; }

Family family_from_name(const std::string& s) {
  for (int i = 0; i < 6; ++i)
    if (s == kFamilyNames[i]) return static_cast<Family>(i);
  throw InputError("unknown family: " + s);
}

const char* variant_name(Variant v) { return v == Variant::Plus ? "plus" : "minus"; }

Variant variant_from_name(const std::string& s) {
  if (s == "plus") return Variant::Plus;
  if (s == "minus") return Variant::Minus;
  throw InputError("unknown variant: " + s);
}

SparseMatrix SpinorModule::blade_operator(Blade b) const {
  if (signature.n() < 32 && (b >> signature.n()) != 0) throw InputError("blade outside the signature");
  SparseMatrix m = SparseMatrix::identity(real_dim);
  for (int i = 0; i < signature.n(); ++i)
    if (b >> i & 1) m = m * generators.at(i);
  return m;
}

SparseMatrix SpinorModule::evaluate(const Multivector& x) const {
  if (!(x.signature() == signature)) throw InputError("evaluate: signature mismatch");
  SparseMatrix m(real_dim, real_dim);
  for (auto& [b, q] : x.terms()) m = m + q * blade_operator(b);
  return m;
}

SparseMatrix SpinorModule::volume_operator() const {
  return blade_operator(static_cast<Blade>((1ull << signature.n()) - 1));
}

}  // namespace spinor
