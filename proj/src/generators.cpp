#include "metcomp/generators.hpp"

#include <utility>

#include "metcomp/errors.hpp"
#include "metcomp/spaces.hpp"

namespace metcomp {

namespace {

long padic_p(const Space& space, const char* generator) {
  if (space.kind() != "rationals_padic")
    throw InputError(std::string(generator) + " generator requires a rationals_padic space, got " +
                     space.kind());
  return space.descriptor().at("p").get<long>();
}

}  // namespace

CPoint constant_point(SpacePtr space, Element x) {
  if (!space) throw InputError("constant generator requires a space");
  std::string label = "embed(" + x.str() + ")";
  return CPoint(std::move(space), [x = std::move(x)](std::size_t) { return x; },
                std::move(label));
}

CPoint sqrt_point(SpacePtr space, const Rational& radicand) {
  if (!space) throw InputError("sqrt generator requires a space");
  if (space->kind() != "rationals_abs")
    throw InputError("sqrt generator requires a rationals_abs space, got " + space->kind());
  if (radicand.sign() < 0)
    throw InputError("sqrt of a negative rational: " + radicand.str());

  auto at = [radicand](std::size_t n) {
    // invariant: lo^2 <= radicand <= hi^2
    Rational lo(0);
    Rational hi = max(Rational(1), radicand);
    Rational width = hi;
    const Rational target = Rational::pow2(-(static_cast<long>(n) + 1));
    const Rational half(1, 2);
    while (width > target) {
      const Rational mid = (lo + hi) * half;
      if (mid * mid <= radicand) {
        lo = mid;
      } else {
        hi = mid;
      }
      width = width * half;
    }
    return Element::rational((lo + hi) * half);
  };
  return CPoint(std::move(space), at, "sqrt(" + radicand.str() + ")");
}

CPoint geometric_series_point(SpacePtr space, std::optional<Rational> ratio) {
  if (!space) throw InputError("geometric_series generator requires a space");
  const long p = padic_p(*space, "geometric_series");
  const Rational r = ratio.value_or(Rational(p));
  const auto v = padic_valuation(r, p);
  if (!v || *v < 1)
    throw InputError("geometric series ratio must have p-adic valuation >= 1, got ratio " +
                     r.str());

  // partial sum (1 - r^(n+1)) / (1 - r); for r = 2 this is 2^(n+1) - 1
  auto at = [r](std::size_t n) {
    const Rational one(1);
    const Rational power = Rational::int_pow(r, static_cast<long>(n) + 1);
    return Element::rational((one - power) / (one - r));
  };
  return CPoint(std::move(space), at, "geometric_series(" + r.str() + ")");
}

CPoint partial_sums_point(SpacePtr space, std::vector<Rational> coefficients) {
  if (!space) throw InputError("partial_sums generator requires a space");
  const long p = padic_p(*space, "partial_sums");
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    const auto v = padic_valuation(coefficients[j], p);
    if (v && *v < static_cast<long>(j))
      throw InputError("partial_sums coefficient " + std::to_string(j) + " = " +
                       coefficients[j].str() + " has p-adic valuation " + std::to_string(*v) +
                       " < " + std::to_string(j));
  }
  std::vector<Rational> prefix;
  prefix.reserve(coefficients.size() + 1);
  Rational acc(0);
  prefix.push_back(acc);
  for (const auto& c : coefficients) {
    acc = acc + c;
    prefix.push_back(acc);
  }
  auto at = [prefix = std::move(prefix)](std::size_t n) {
    const std::size_t idx = std::min(n + 1, prefix.size() - 1);
    return Element::rational(prefix[idx]);
  };
  return CPoint(std::move(space), at, "partial_sums");
}

CPoint make_point(SpacePtr space, const nlohmann::json& generator) {
  if (!space) throw InputError("make_point requires a space");
  if (!generator.is_object() || !generator.contains("kind"))
    throw InputError("generator descriptor must be an object with a \"kind\" field");
  const auto kind = generator.at("kind").get<std::string>();

  if (kind == "constant") {
    if (!generator.contains("value"))
      throw InputError("constant generator is missing field 'value'");
    return constant_point(space, space->parse_element(generator.at("value")));
  }
  if (kind == "sqrt") {
    if (!generator.contains("value")) throw InputError("sqrt generator is missing field 'value'");
    const auto& vj = generator.at("value");
    if (!vj.is_string()) throw InputError("sqrt 'value' must be a \"num/den\" string");
    return sqrt_point(space, Rational::parse(vj.get<std::string>()));
  }
  if (kind == "geometric_series") {
    std::optional<Rational> ratio;
    if (generator.contains("ratio")) {
      const auto& rj = generator.at("ratio");
      if (!rj.is_string()) throw InputError("geometric_series 'ratio' must be a \"num/den\" string");
      ratio = Rational::parse(rj.get<std::string>());
    }
    return geometric_series_point(space, ratio);
  }
  if (kind == "partial_sums") {
    if (!generator.contains("coefficients"))
      throw InputError("partial_sums generator is missing field 'coefficients'");
    const auto& cj = generator.at("coefficients");
    if (!cj.is_array()) throw InputError("partial_sums 'coefficients' must be an array");
    std::vector<Rational> coeffs;
    coeffs.reserve(cj.size());
    for (const auto& c : cj) {
      if (!c.is_string()) throw InputError("partial_sums coefficients must be \"num/den\" strings");
      coeffs.push_back(Rational::parse(c.get<std::string>()));
    }
    return partial_sums_point(space, std::move(coeffs));
  }
  throw InputError("unknown generator kind '" + kind + "'");
}

CPoint make_point(const nlohmann::json& point_descriptor) {
  if (!point_descriptor.is_object())
    throw InputError("point descriptor must be an object with \"base\" and \"generator\"");
  if (!point_descriptor.contains("base"))
    throw InputError("point descriptor is missing field 'base'");
  if (!point_descriptor.contains("generator"))
    throw InputError("point descriptor is missing field 'generator'");
  auto space = make_space(point_descriptor.at("base"));
  return make_point(std::move(space), point_descriptor.at("generator"));
}

}  // namespace metcomp
