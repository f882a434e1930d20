#include "metcomp/axioms.hpp"

#include <algorithm>

#include "metcomp/errors.hpp"
#include "metcomp/rng.hpp"

namespace metcomp {

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck* AxiomReport::find(std::string_view axiom) const {
  for (const auto& c : checks) {
    if (c.axiom == axiom) return &c;
  }
  return nullptr;
}

nlohmann::json AxiomReport::to_json() const {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& c : checks) {
    nlohmann::json entry{{"status", c.pass ? "pass" : "fail"}};
    if (!c.witness.is_null()) entry["witness"] = c.witness;
    out[c.axiom] = std::move(entry);
  }
  return out;
}

namespace {

nlohmann::json pair_witness(const Space& s, const Element& x, const Element& y,
                            const Rational& value) {
  return {{"x", s.element_json(x)}, {"y", s.element_json(y)}, {"dist", value.str()}};
}

struct Triple {
  const Element* x;
  const Element* y;
  const Element* z;
};

}  // namespace

AxiomReport verify_metric_axioms(const Space& space, std::uint64_t seed, std::size_t n_samples) {
  if (n_samples < 3) throw InputError("verify_metric_axioms requires n_samples >= 3");

  const auto carrier = space.enumerate_carrier();
  const bool finite = carrier.has_value();

  AxiomCheck identity{"identity", true, nullptr};
  AxiomCheck nonneg{"nonnegativity", true, nullptr};
  AxiomCheck symmetry{"symmetry", true, nullptr};
  AxiomCheck triangle{"triangle", true, nullptr};
  AxiomCheck separation{"separation", true, nullptr};
  AxiomCheck ultra{"ultrametric", true, nullptr};

  auto check_pair = [&](const Element& x, const Element& y) {
    const Rational dxy = space.dist(x, y);
    if (nonneg.pass && dxy.sign() < 0) {
      nonneg.pass = false;
      nonneg.witness = pair_witness(space, x, y, dxy);
    }
    if (symmetry.pass) {
      const Rational dyx = space.dist(y, x);
      if (dxy != dyx) {
        symmetry.pass = false;
        symmetry.witness = pair_witness(space, x, y, dxy);
        symmetry.witness["dist_reversed"] = dyx.str();
      }
    }
    if (finite && separation.pass && dxy.is_zero() && !(x == y)) {
      separation.pass = false;
      separation.witness = pair_witness(space, x, y, dxy);
    }
  };

  auto check_triple = [&](const Element& x, const Element& y, const Element& z) {
    const Rational dxz = space.dist(x, z);
    const Rational dxy = space.dist(x, y);
    const Rational dyz = space.dist(y, z);
    if (triangle.pass && dxz > dxy + dyz) {
      triangle.pass = false;
      triangle.witness = {{"x", space.element_json(x)},
                          {"y", space.element_json(y)},
                          {"z", space.element_json(z)},
                          {"dist_xz", dxz.str()},
                          {"bound", (dxy + dyz).str()}};
    }
    if (space.ultrametric() && ultra.pass && dxz > max(dxy, dyz)) {
      ultra.pass = false;
      ultra.witness = {{"x", space.element_json(x)},
                       {"y", space.element_json(y)},
                       {"z", space.element_json(z)},
                       {"dist_xz", dxz.str()},
                       {"bound", max(dxy, dyz).str()}};
    }
  };

  if (finite) {
    const auto& pts = *carrier;
    for (const auto& x : pts) {
      const Rational dxx = space.dist(x, x);
      if (identity.pass && !dxx.is_zero()) {
        identity.pass = false;
        identity.witness = pair_witness(space, x, x, dxx);
      }
    }
    for (const auto& x : pts)
      for (const auto& y : pts) check_pair(x, y);
    for (const auto& x : pts)
      for (const auto& y : pts)
        for (const auto& z : pts) check_triple(x, y, z);
  } else {
    // One seeded batch feeds every check: element i of each of the three
    // draws forms the i-th sampled triple.
    const auto xs = space.sample(seed, n_samples);
    const auto ys = space.sample(seed ^ 0x9e3779b97f4a7c15ULL, n_samples);
    const auto zs = space.sample(seed + 1, n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
      const Rational dxx = space.dist(xs[i], xs[i]);
      if (identity.pass && !dxx.is_zero()) {
        identity.pass = false;
        identity.witness = pair_witness(space, xs[i], xs[i], dxx);
      }
      check_pair(xs[i], ys[i]);
      check_triple(xs[i], ys[i], zs[i]);
    }
  }

  AxiomReport report;
  report.checks.push_back(std::move(identity));
  report.checks.push_back(std::move(nonneg));
  report.checks.push_back(std::move(symmetry));
  report.checks.push_back(std::move(triangle));
  if (finite) report.checks.push_back(std::move(separation));
  if (space.ultrametric()) report.checks.push_back(std::move(ultra));
  return report;
}

}  // namespace metcomp
