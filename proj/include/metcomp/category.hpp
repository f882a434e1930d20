#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "metcomp/axioms.hpp"

namespace metcomp {

struct Morphism {
  std::string name;
  std::size_t src;
  std::size_t dst;
};

/// A finite category: finite object and morphism sets, a composition table
/// defined exactly on composable pairs, and one distinguished identity per
/// object. Construction validates the structure (typing, totality, hom-set
/// cap); the algebraic axioms are checked by verify_category_axioms.
class FiniteCategory {
 public:
  /// {"objects":[...], "morphisms":[{"name","src","dst"},...],
  ///  "composition":[[g, f, g∘f],...], "identities":{object: morphism}}
  static FiniteCategory from_json(const nlohmann::json& descriptor, std::size_t hom_cap = 64);

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }

  std::size_t object_index(std::string_view label) const;
  std::size_t morphism_index(std::string_view name) const;
  std::size_t identity_of(std::size_t object) const { return identities_.at(object); }

  bool composable(std::size_t g, std::size_t f) const {
    return morphisms_[f].dst == morphisms_[g].src;
  }

  /// g∘f; throws InputError when the pair is not composable.
  std::size_t compose(std::size_t g, std::size_t f) const;

  std::vector<std::size_t> hom(std::size_t src, std::size_t dst) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> table_;  // (g, f) -> g∘f
  std::vector<std::size_t> identities_;
};

/// Decidable membership in the property subclass S.
class PropertyPredicate {
 public:
  static PropertyPredicate from_labels(std::set<std::string> labels);
  static PropertyPredicate from_fn(std::function<bool(const std::string&)> fn);

  bool member(const std::string& label) const { return fn_(label); }

 private:
  explicit PropertyPredicate(std::function<bool(const std::string&)> fn) : fn_(std::move(fn)) {}

  std::function<bool(const std::string&)> fn_;
};

/// Exhaustively checks associativity over every composable triple and the
/// identity laws over every morphism; failures carry concrete witnesses.
AxiomReport verify_category_axioms(const FiniteCategory& cat);

/// Monomorphism test: f is mono iff f∘g = f∘h implies g = h for every
/// parallel pair into its source (exhaustive).
bool is_mono(const FiniteCategory& cat, std::size_t f);

struct RigidityViolation {
  std::string object;
  std::string morphism;  // a non-identity mono endomorphism
};

struct RigidityReport {
  bool pass = true;
  std::vector<RigidityViolation> violations;

  nlohmann::json to_json() const;
};

/// For every object of S, verifies that its only mono endomorphism is the
/// identity.
RigidityReport check_rigidity(const FiniteCategory& cat, const PropertyPredicate& s);

struct PtionCandidate {
  std::string object;     // Y
  std::string morphism;   // f_Y : X -> Y (mono)
};

/// Exhaustive search for the universal objects of the property subclass:
/// all pairs (Y, f_Y) with Y in S and f_Y : X -> Y mono such that every
/// mono f_Z : X -> Z with Z in S factors as f∘f_Y = f_Z through some mono
/// f : Y -> Z. Requires rigidity of S; throws RigidityError naming the
/// first violating object otherwise.
std::vector<PtionCandidate> find_ption(const FiniteCategory& cat, const PropertyPredicate& s,
                                       std::string_view x_label);

}  // namespace metcomp
