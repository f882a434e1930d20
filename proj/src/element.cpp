#include "metcomp/element.hpp"

#include "metcomp/errors.hpp"

namespace metcomp {

const Rational& Element::as_rational() const {
  if (kind() != Kind::rational) throw InputError("element '" + str() + "' is not a rational");
  return std::get<Rational>(v_);
}

const std::string& Element::as_label() const {
  if (kind() != Kind::label) throw InputError("element '" + str() + "' is not a label");
  return std::get<std::string>(v_);
}

const std::vector<Element>& Element::as_tuple() const {
  if (kind() != Kind::tuple) throw InputError("element '" + str() + "' is not a tuple");
  return std::get<std::vector<Element>>(v_);
}

std::string Element::str() const {
  switch (kind()) {
    case Kind::rational:
      return std::get<Rational>(v_).str();
    case Kind::label:
      return std::get<std::string>(v_);
    case Kind::tuple: {
      std::string out = "(";
      const auto& parts = std::get<std::vector<Element>>(v_);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ", ";
        out += parts[i].str();
      }
      return out + ")";
    }
  }
  return {};
}

}  // namespace metcomp
