#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "metcomp/cpoint.hpp"
#include "metcomp/space.hpp"

namespace metcomp {

/// The constant sequence n |-> x; the embedding of a base element.
CPoint constant_point(SpacePtr space, Element x);

/// Interval bisection on t^2 - radicand over the rationals with absolute
/// value: at(n) is the midpoint of a bracketing interval of width at most
/// 2^-(n+1). Throws InputError for negative radicands or other carriers.
CPoint sqrt_point(SpacePtr space, const Rational& radicand);

/// Partial sums of the geometric series sum_j ratio^j in a p-adic
/// presentation; the ratio defaults to p and must have valuation >= 1.
/// For ratio 2 in the 2-adic rationals, at(n) = 2^(n+1) - 1.
CPoint geometric_series_point(SpacePtr space, std::optional<Rational> ratio = std::nullopt);

/// Partial sums of a user coefficient list in a p-adic presentation.
/// Regularity needs the valuation growth v_p(c_j) >= j, which is validated
/// exactly for every supplied coefficient; the sum is constant past the end
/// of the list.
CPoint partial_sums_point(SpacePtr space, std::vector<Rational> coefficients);

/// Generator descriptor dispatch:
///   {"kind":"constant","value":<element>}
///   {"kind":"sqrt","value":"2"}
///   {"kind":"geometric_series","ratio":"2"?}
///   {"kind":"partial_sums","coefficients":["1","2","4"]}
CPoint make_point(SpacePtr space, const nlohmann::json& generator);

/// {"base": <space descriptor>, "generator": <generator descriptor>}
CPoint make_point(const nlohmann::json& point_descriptor);

}  // namespace metcomp
