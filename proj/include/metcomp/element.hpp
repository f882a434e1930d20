#pragma once

#include <string>
#include <variant>
#include <vector>

#include "metcomp/rational.hpp"

namespace metcomp {

/// A point of a presented base space: an exact rational, a finite-space
/// label, or a fixed-arity tuple of component elements.
class Element {
 public:
  enum class Kind { rational, label, tuple };

  Element() : v_(Rational(0)) {}

  static Element rational(Rational q) { return Element(std::move(q)); }
  static Element label(std::string s) { return Element(std::move(s)); }
  static Element tuple(std::vector<Element> parts) { return Element(std::move(parts)); }

  Kind kind() const { return static_cast<Kind>(v_.index()); }

  const Rational& as_rational() const;
  const std::string& as_label() const;
  const std::vector<Element>& as_tuple() const;

  bool operator==(const Element& other) const { return v_ == other.v_; }

  /// Display form: "1/2", "a", "(0, 3/4)".
  std::string str() const;

 private:
  explicit Element(Rational q) : v_(std::move(q)) {}
  explicit Element(std::string s) : v_(std::move(s)) {}
  explicit Element(std::vector<Element> t) : v_(std::move(t)) {}

  std::variant<Rational, std::string, std::vector<Element>> v_;
};

}  // namespace metcomp
