#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "metcomp/element.hpp"

namespace metcomp {

class Space;
using SpacePtr = std::shared_ptr<const Space>;

/// A presented base metric space: an element codec, an exact rational-valued
/// metric, and a deterministic sampler for randomized checks. Presentations
/// are immutable and dist/sample are pure, so concurrent use is safe.
class Space {
 public:
  virtual ~Space() = default;

  const nlohmann::json& descriptor() const { return descriptor_; }
  std::string kind() const { return descriptor_.at("kind").get<std::string>(); }

  /// Spaces are compared by canonical descriptor, not identity.
  bool same_space(const Space& other) const { return descriptor_ == other.descriptor_; }

  virtual Rational dist(const Element& x, const Element& y) const = 0;
  virtual std::vector<Element> sample(std::uint64_t seed, std::size_t count) const = 0;

  /// Decodes one element from its JSON encoding; throws InputError on
  /// malformed input for this carrier.
  virtual Element parse_element(const nlohmann::json& encoded) const = 0;
  virtual nlohmann::json element_json(const Element& x) const = 0;

  /// Finite carriers enumerate exhaustively; infinite carriers return nullopt.
  virtual std::optional<std::vector<Element>> enumerate_carrier() const { return std::nullopt; }

  /// Smallest strictly positive distance, when the carrier is finite.
  virtual std::optional<Rational> min_positive_dist() const { return std::nullopt; }

  /// True when the metric satisfies the strengthened ultrametric inequality.
  virtual bool ultrametric() const { return false; }

 protected:
  explicit Space(nlohmann::json descriptor) : descriptor_(std::move(descriptor)) {}

 private:
  nlohmann::json descriptor_;
};

/// A distance-preserving map between base presentations, evaluable pointwise.
struct BaseIsometry {
  SpacePtr source;
  SpacePtr target;
  std::function<Element(const Element&)> apply;
  std::string name;
};

}  // namespace metcomp
