#pragma once

// Shared fixtures: descriptor builders, seeded completion-point samplers,
// and an in-process CLI harness.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "metcomp/category.hpp"
#include "metcomp/completion.hpp"
#include "metcomp/cpoint.hpp"
#include "metcomp/space.hpp"

namespace metcomp::test {

// space descriptors
nlohmann::json abs_desc();
nlohmann::json padic_desc(long p);
nlohmann::json finite_triangle_desc();   // 3 points, all distances 1
nlohmann::json finite_path_desc();       // 4 points on a line, distances 1..3
nlohmann::json finite_bad_desc();        // d(a,c) = 5 breaks the triangle
nlohmann::json product_abs_desc();       // rationals_abs x rationals_abs

// category descriptors
nlohmann::json trivial_category();       // one object, identity only
nlohmann::json poset3_category();        // chain a <= b <= c
nlohmann::json chain4_category();        // chain a < b < c < d
nlohmann::json z2_category();            // the two-element group, one object
nlohmann::json corrupt_monoid_category();// cyclic 3-monoid with one entry rerouted
nlohmann::json parallel_arrows_category();// w∘u = w∘v with u != v
nlohmann::json iso_pair_category();      // two isomorphic universal candidates
nlohmann::json isometry_fragment_category();  // finite spaces + all isometries

/// Deterministic mixed bag of completion points over the given space:
/// embedded samples plus the generators that fit the carrier (sqrt points,
/// geometric series, limits of embedded truncations).
std::vector<CPoint> sample_points(const SpacePtr& space, const CompleteSpacePtr& completion,
                                  std::uint64_t seed, std::size_t count);

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args);

/// Path of a shipped descriptor file.
std::string descriptor_path(const std::string& name);

}  // namespace metcomp::test
