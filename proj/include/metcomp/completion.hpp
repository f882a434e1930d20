#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "metcomp/cpoint.hpp"
#include "metcomp/space.hpp"

namespace metcomp {

class CompleteSpace;
using CompleteSpacePtr = std::shared_ptr<const CompleteSpace>;

/// Sampled modulus check run by limit() before accepting a sequence of
/// points. Pairs (i, j) are tested with dist_approx at `precision`; the
/// claimed bound 2^-i + 2^-j may be exceeded by at most the approximation
/// slack 2^-precision before the sequence is rejected.
struct LimitCheck {
  bool enabled = true;
  long precision = 10;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // default schedule when empty

  static const std::vector<std::pair<std::size_t, std::size_t>>& default_pairs();
};

/// Handle on a complete target space whose points are represented as regular
/// sequences over a dense base. dist_approx(p, q, k) is within 2^-k of the
/// true limit distance; limit() is the completeness witness.
class CompleteSpace {
 public:
  virtual ~CompleteSpace() = default;

  virtual const SpacePtr& base() const = 0;
  virtual std::string name() const = 0;

  virtual CPoint embed(const Element& x) const = 0;
  virtual Rational dist_approx(const CPoint& p, const CPoint& q, long k) const = 0;

  /// Returns a point z with dist(z, ys(i)) <= 3*2^-i + 2^-k at every
  /// precision k, provided ys is regular: dist(ys(i), ys(j)) <= 2^-i + 2^-j.
  /// Regularity is spot-checked per `check`; a detected violation raises
  /// RegularityError naming the offending pair.
  virtual CPoint limit(std::function<CPoint(std::size_t)> ys,
                       const LimitCheck& check = {}) const = 0;
};

/// The canonical Cauchy-sequence completion of a base presentation.
/// dist_approx evaluates both sequences at index k+1, where regularity
/// bounds the error by 2*2^-(k+1) = 2^-k; limit takes the diagonal
/// z.at(n) = ys(n+1).at(n+1).
class Completion final : public CompleteSpace,
                         public std::enable_shared_from_this<Completion> {
 public:
  static std::shared_ptr<const Completion> of(SpacePtr base);

  const SpacePtr& base() const override { return base_; }
  std::string name() const override;

  CPoint embed(const Element& x) const override;
  Rational dist_approx(const CPoint& p, const CPoint& q, long k) const override;
  CPoint limit(std::function<CPoint(std::size_t)> ys, const LimitCheck& check = {}) const override;

 private:
  explicit Completion(SpacePtr base) : base_(std::move(base)) {}

  SpacePtr base_;
};

/// The same completion presented one index deeper: every evaluation uses
/// n+1 in place of n. Still a valid completion of the same base (the
/// bounds only tighten); exists so uniqueness round trips have a second,
/// genuinely different presentation to compare against.
class ShiftedCompletion final : public CompleteSpace,
                                public std::enable_shared_from_this<ShiftedCompletion> {
 public:
  static std::shared_ptr<const ShiftedCompletion> of(SpacePtr base);

  const SpacePtr& base() const override { return base_; }
  std::string name() const override;

  CPoint embed(const Element& x) const override;
  Rational dist_approx(const CPoint& p, const CPoint& q, long k) const override;
  CPoint limit(std::function<CPoint(std::size_t)> ys, const LimitCheck& check = {}) const override;

 private:
  explicit ShiftedCompletion(SpacePtr base) : base_(std::move(base)) {}

  SpacePtr base_;
};

/// Density witness: the canonical base approximant y.at(k+1), which embeds
/// within 2^-k of y.
Element approximate_by_base(const CPoint& y, long k);

/// Apartness certificate: dist_approx(y, y', k) > 2*2^-k proves y != y'.
/// (Equality of points is undecidable; this is the positive complement.)
bool apart(const CompleteSpace& space, const CPoint& y, const CPoint& yp, long k);

/// A distance-preserving map from a base presentation into a complete
/// space, evaluable pointwise.
struct IsometryMap {
  SpacePtr source;
  CompleteSpacePtr target;
  std::function<CPoint(const Element&)> apply;
  std::string name;
};

/// x |-> embed(x), the canonical dense embedding.
IsometryMap embedding_isometry(CompleteSpacePtr target);

/// Lifts a base-to-base map into the completion of its target space.
IsometryMap into_completion(const BaseIsometry& map, CompleteSpacePtr target);

/// x |-> x + offset on the rationals with absolute value.
BaseIsometry shift_base_isometry(SpacePtr line, const Rational& offset);

/// x |-> x * factor. Not distance preserving unless |factor| = 1; shipped so
/// the isometry precheck has a concrete negative case.
BaseIsometry scale_base_map(SpacePtr line, const Rational& factor);

/// shift_base_isometry lifted into the completion.
IsometryMap shift_isometry(CompleteSpacePtr target, const Rational& offset);

/// scale_base_map lifted into the completion.
IsometryMap scale_map(CompleteSpacePtr target, const Rational& factor);

/// The universal extension: phi(y) = Z.limit(i |-> phi_Z(y.at(i))). The
/// image sequence inherits regularity from the isometry contract, so the
/// limit precondition holds by construction.
CPoint extend_isometry(const IsometryMap& into_z, const CPoint& y, const LimitCheck& check = {});

struct DeviationSample {
  Element x;
  nlohmann::json detail;
  Rational observed;
  bool pass = true;
};

struct DeviationReport {
  std::string check;
  long k = 0;
  Rational bound;
  Rational max_observed;
  std::vector<DeviationSample> samples;
  bool pass = true;

  nlohmann::json to_json() const;
};

/// Spot-check that `map` preserves distances on every pair from xs, within
/// the completion-target slack 2*2^-k.
DeviationReport verify_isometry(const IsometryMap& map, const std::vector<Element>& xs, long k);

/// Base targets have exact distances, so preservation is checked with zero
/// tolerance.
DeviationReport verify_base_isometry(const BaseIsometry& map, const std::vector<Element>& xs);

/// Verifies the commuting triangle phi_Z(x) = phi(phi_Y(x)) on each sampled
/// x: the two legs must land within 2^-k of each other in the target.
DeviationReport check_commutes(const IsometryMap& phi_y, const IsometryMap& phi_z,
                               const std::function<CPoint(const CPoint&)>& phi,
                               const std::vector<Element>& xs, long k);

struct RoundTripSample {
  std::string direction;
  std::string point;
  Rational observed;
  bool pass = true;
};

struct RoundTripReport {
  long k = 0;
  Rational bound;
  Rational max_observed;
  std::vector<RoundTripSample> samples;
  bool pass = true;

  nlohmann::json to_json() const;
};

/// Uniqueness up to isometric isomorphism, made executable: extends each
/// completion's embedding into the other and checks both round trips stay
/// within 2*2^-k on the supplied sample points.
RoundTripReport completion_iso_roundtrip(const CompleteSpacePtr& a, const CompleteSpacePtr& b,
                                         const std::vector<CPoint>& a_points,
                                         const std::vector<CPoint>& b_points, long k);

}  // namespace metcomp
