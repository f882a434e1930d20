#pragma once

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "metcomp/space.hpp"

namespace metcomp {

/// Deterministic primality check (Miller-Rabin with the full 64-bit
/// witness set, so the answer is exact for every representable input).
bool is_prime(std::uint64_t n);

/// p-adic valuation of an exact rational, computed by repeated exact
/// division: v_p(a/b) = v_p(a) - v_p(b). nullopt encodes v_p(0) = +infinity.
/// Throws InputError when p is not prime.
std::optional<long> padic_valuation(const Rational& q, long p);

/// Builds a presentation from its JSON descriptor. Supported kinds:
///   {"kind":"rationals_abs"}
///   {"kind":"rationals_padic","p":2}
///   {"kind":"finite","labels":[...],"dist":[row-major "num/den" entries]}
///   {"kind":"product","components":[<descriptor>,<descriptor>]}
/// Finite tables are checked against every metric axiom exhaustively and
/// rejected with a witness on violation.
SpacePtr make_space(const nlohmann::json& descriptor);

/// Same dispatch without the exhaustive finite-table axiom check; structural
/// validation (shape, parseable entries, prime p) still applies. This is the
/// construction path for verification commands that must be able to *report*
/// a bad table rather than refuse to build it.
SpacePtr make_space_unchecked(const nlohmann::json& descriptor);

}  // namespace metcomp
