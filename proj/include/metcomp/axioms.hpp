#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "metcomp/space.hpp"

namespace metcomp {

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  nlohmann::json witness;  // null when the axiom holds
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_pass() const;
  const AxiomCheck* find(std::string_view axiom) const;

  /// {axiom: {"status": "pass"|"fail", "witness": {...}?}}
  nlohmann::json to_json() const;
};

/// Checks the metric axioms exactly: identity d(x,x)=0, symmetry,
/// nonnegativity, and the triangle inequality (plus the ultrametric
/// inequality on ultrametric presentations, and the separation direction
/// d(x,y)=0 => x=y on finite carriers, by exhaustion). Finite carriers are
/// checked over every pair and triple; infinite carriers over n_samples
/// seeded triples. Failures are reported with a concrete witness, never
/// raised. Requires n_samples >= 3.
AxiomReport verify_metric_axioms(const Space& space, std::uint64_t seed, std::size_t n_samples);

}  // namespace metcomp
