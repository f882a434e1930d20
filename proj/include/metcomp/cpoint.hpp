#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include <json.hpp>

#include "metcomp/space.hpp"

namespace metcomp {

/// A point of the completion: a regular Cauchy sequence of base elements
/// with the fixed modulus dist(at(m), at(n)) <= 2^-m + 2^-n. The index
/// evaluator must be pure and deterministic; evaluations are memoized
/// behind an internal lock, so shared points are safe to read concurrently.
class CPoint {
 public:
  CPoint(SpacePtr base, std::function<Element(std::size_t)> at, std::string label = {});

  const SpacePtr& base() const { return state_->base; }
  const std::string& label() const { return state_->label; }

  Element at(std::size_t n) const;

 private:
  struct State {
    SpacePtr base;
    std::function<Element(std::size_t)> fn;
    std::string label;
    mutable std::mutex mu;
    mutable std::map<std::size_t, Element> memo;
  };

  std::shared_ptr<State> state_;
};

struct RegularityViolation {
  std::size_t m;
  std::size_t n;
  Rational dist;
  Rational bound;
};

struct RegularityReport {
  bool pass = true;
  std::size_t max_index = 0;
  std::vector<RegularityViolation> violations;

  nlohmann::json to_json() const;
};

/// Exact spot-check of the modulus over every index pair m < n <= max_index.
RegularityReport check_regularity(const CPoint& y, std::size_t max_index = 24);

}  // namespace metcomp
