#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinor/clifford.hpp"
#include "spinor/division_algebra.hpp"
#include "spinor/kmatrix.hpp"
#include "spinor/linalg.hpp"

namespace spinor {

enum class Family { QuaternionicMultivector, SqrtSpace, Octonion, SplitExterior, PositiveMultivector, Assembled };
enum class Variant { Plus, Minus };

const char* family_name(Family f);
Family family_from_name(const std::string& s);
const char* variant_name(Variant v);
Variant variant_from_name(const std::string& s);

// A represented Clifford module on a realified coordinate space.
struct SpinorModule {
  Signature signature;
  Algebra field = Algebra::R;  // the commutant K, when the module is irreducible
  std::size_t real_dim = 0;
  std::vector<SparseMatrix> generators;   // c(e_1) .. c(e_n)
  std::vector<SparseMatrix> right_units;  // right multiplication by the imaginary units of K
  std::optional<std::vector<int>> grading;
  SparseMatrix spin_metric;
  Family family = Family::Assembled;
  Variant variant = Variant::Plus;

  // c(e_A) as the ordered product of generators
  SparseMatrix blade_operator(Blade b) const;
  SparseMatrix evaluate(const Multivector& x) const;
  SparseMatrix volume_operator() const;
};

}  // namespace spinor
