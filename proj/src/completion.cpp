#include "metcomp/completion.hpp"

#include "metcomp/errors.hpp"

namespace metcomp {

namespace {

void require_precision(long k) {
  if (k < 0) throw InputError("precision must be a non-negative integer");
}

void require_same_base(const Space& base, const CPoint& p, const char* what) {
  if (!p.base()->same_space(base))
    throw InputError(std::string(what) + ": point lives over a different base space");
}

// Shared limit implementation: precheck the claimed modulus at sampled
// pairs, then take the diagonal z.at(n) = ys(n + depth).at(n + depth).
CPoint diagonal_limit(const CompleteSpace& space, std::function<CPoint(std::size_t)> ys,
                      const LimitCheck& check, std::size_t depth) {
  if (!ys) throw InputError("limit requires a sequence of points");
  if (check.enabled) {
    const auto& pairs = check.pairs.empty() ? LimitCheck::default_pairs() : check.pairs;
    for (const auto& [i, j] : pairs) {
      const CPoint yi = ys(i);
      const CPoint yj = ys(j);
      const Rational q = space.dist_approx(yi, yj, check.precision);
      const Rational bound = Rational::pow2(-static_cast<long>(i)) +
                             Rational::pow2(-static_cast<long>(j)) +
                             Rational::pow2(-check.precision);
      if (q > bound)
        throw RegularityError(i, j, "dist_approx = " + q.str() + " exceeds " + bound.str());
    }
  }
  SpacePtr base = space.base();
  return CPoint(
      base,
      [ys = std::move(ys), base, depth](std::size_t n) {
        const CPoint y = ys(n + depth);
        if (!y.base()->same_space(*base))
          throw InputError("limit: sequence point lives over a different base space");
        return y.at(n + depth);
      },
      "limit");
}

std::string point_name(const CPoint& p) {
  return p.label().empty() ? std::string("<point>") : p.label();
}

}  // namespace

const std::vector<std::pair<std::size_t, std::size_t>>& LimitCheck::default_pairs() {
  static const std::vector<std::pair<std::size_t, std::size_t>> pairs = [] {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i <= 5; ++i)
      for (std::size_t j = i + 1; j <= 5; ++j) out.emplace_back(i, j);
    return out;
  }();
  return pairs;
}

std::shared_ptr<const Completion> Completion::of(SpacePtr base) {
  if (!base) throw InputError("completion requires a base space");
  return std::shared_ptr<const Completion>(new Completion(std::move(base)));
}

std::string Completion::name() const { return "completion(" + base_->kind() + ")"; }

CPoint Completion::embed(const Element& x) const {
  return CPoint(base_, [x](std::size_t) { return x; }, "embed(" + x.str() + ")");
}

Rational Completion::dist_approx(const CPoint& p, const CPoint& q, long k) const {
  require_precision(k);
  require_same_base(*base_, p, "dist_approx");
  require_same_base(*base_, q, "dist_approx");
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  return base_->dist(p.at(n), q.at(n));
}

CPoint Completion::limit(std::function<CPoint(std::size_t)> ys, const LimitCheck& check) const {
  return diagonal_limit(*this, std::move(ys), check, 1);
}

std::shared_ptr<const ShiftedCompletion> ShiftedCompletion::of(SpacePtr base) {
  if (!base) throw InputError("completion requires a base space");
  return std::shared_ptr<const ShiftedCompletion>(new ShiftedCompletion(std::move(base)));
}

std::string ShiftedCompletion::name() const { return "completion(" + base_->kind() + ", shifted)"; }

CPoint ShiftedCompletion::embed(const Element& x) const {
  return CPoint(base_, [x](std::size_t) { return x; }, "embed(" + x.str() + ")");
}

Rational ShiftedCompletion::dist_approx(const CPoint& p, const CPoint& q, long k) const {
  require_precision(k);
  require_same_base(*base_, p, "dist_approx");
  require_same_base(*base_, q, "dist_approx");
  const std::size_t n = static_cast<std::size_t>(k) + 2;
  return base_->dist(p.at(n), q.at(n));
}

CPoint ShiftedCompletion::limit(std::function<CPoint(std::size_t)> ys,
                                const LimitCheck& check) const {
  return diagonal_limit(*this, std::move(ys), check, 2);
}

Element approximate_by_base(const CPoint& y, long k) {
  require_precision(k);
  return y.at(static_cast<std::size_t>(k) + 1);
}

bool apart(const CompleteSpace& space, const CPoint& y, const CPoint& yp, long k) {
  return space.dist_approx(y, yp, k) > Rational(2) * Rational::pow2(-k);
}

IsometryMap embedding_isometry(CompleteSpacePtr target) {
  if (!target) throw InputError("embedding requires a target completion");
  auto t = target;
  return IsometryMap{t->base(), t, [t](const Element& x) { return t->embed(x); }, "embed"};
}

IsometryMap into_completion(const BaseIsometry& map, CompleteSpacePtr target) {
  if (!target) throw InputError("lifting requires a target completion");
  if (!map.source || !map.target || !map.apply)
    throw InputError("lifting requires a fully specified base map");
  if (!map.target->same_space(*target->base()))
    throw InputError("base map '" + map.name + "' does not land in the completion's base space");
  auto t = target;
  auto f = map.apply;
  return IsometryMap{map.source, t, [t, f](const Element& x) { return t->embed(f(x)); },
                     map.name};
}

BaseIsometry shift_base_isometry(SpacePtr line, const Rational& offset) {
  if (!line || line->kind() != "rationals_abs")
    throw InputError("shift isometry is only defined on rationals_abs");
  return BaseIsometry{line, line,
                      [offset](const Element& x) {
                        return Element::rational(x.as_rational() + offset);
                      },
                      "shift(" + offset.str() + ")"};
}

BaseIsometry scale_base_map(SpacePtr line, const Rational& factor) {
  if (!line || line->kind() != "rationals_abs")
    throw InputError("scale map is only defined on rationals_abs");
  return BaseIsometry{line, line,
                      [factor](const Element& x) {
                        return Element::rational(x.as_rational() * factor);
                      },
                      "scale(" + factor.str() + ")"};
}

IsometryMap shift_isometry(CompleteSpacePtr target, const Rational& offset) {
  if (!target) throw InputError("shift isometry requires a target completion");
  return into_completion(shift_base_isometry(target->base(), offset), target);
}

IsometryMap scale_map(CompleteSpacePtr target, const Rational& factor) {
  if (!target) throw InputError("scale map requires a target completion");
  return into_completion(scale_base_map(target->base(), factor), target);
}

CPoint extend_isometry(const IsometryMap& into_z, const CPoint& y, const LimitCheck& check) {
  if (!into_z.target || !into_z.source || !into_z.apply)
    throw InputError("extend_isometry requires a fully specified isometry");
  if (!y.base()->same_space(*into_z.source))
    throw InputError("extend_isometry: point lives over a different source space");
  const auto map = into_z;
  CPoint result = into_z.target->limit(
      [map, y](std::size_t i) { return map.apply(y.at(i)); }, check);
  return CPoint(result.base(), [result](std::size_t n) { return result.at(n); },
                "extend[" + map.name + "](" + point_name(y) + ")");
}

nlohmann::json DeviationReport::to_json() const {
  nlohmann::json out{{"check", check},
                     {"status", pass ? "pass" : "fail"},
                     {"precision", k},
                     {"bound", bound.str()},
                     {"max_observed", max_observed.str()}};
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& s : samples) {
    nlohmann::json e{{"observed", s.observed.str()}, {"status", s.pass ? "pass" : "fail"}};
    if (!s.detail.is_null()) e["detail"] = s.detail;
    e["x"] = s.x.str();
    entries.push_back(std::move(e));
  }
  out["samples"] = std::move(entries);
  return out;
}

DeviationReport verify_isometry(const IsometryMap& map, const std::vector<Element>& xs, long k) {
  require_precision(k);
  if (!map.source || !map.target || !map.apply)
    throw InputError("verify_isometry requires a fully specified map");
  DeviationReport report;
  report.check = "isometry[" + map.name + "]";
  report.k = k;
  report.bound = Rational(2) * Rational::pow2(-k);
  report.max_observed = Rational(0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const Rational source_d = map.source->dist(xs[i], xs[j]);
      const Rational target_d = map.target->dist_approx(map.apply(xs[i]), map.apply(xs[j]), k);
      const Rational observed = (target_d - source_d).abs();
      DeviationSample sample;
      sample.x = xs[i];
      sample.detail = {{"x'", xs[j].str()},
                       {"source_dist", source_d.str()},
                       {"target_dist", target_d.str()}};
      sample.observed = observed;
      sample.pass = observed <= report.bound;
      if (observed > report.max_observed) report.max_observed = observed;
      if (!sample.pass) report.pass = false;
      report.samples.push_back(std::move(sample));
    }
  }
  return report;
}

DeviationReport verify_base_isometry(const BaseIsometry& map, const std::vector<Element>& xs) {
  if (!map.source || !map.target || !map.apply)
    throw InputError("verify_base_isometry requires a fully specified map");
  DeviationReport report;
  report.check = "base_isometry[" + map.name + "]";
  report.k = 0;
  report.bound = Rational(0);
  report.max_observed = Rational(0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const Rational source_d = map.source->dist(xs[i], xs[j]);
      const Rational target_d = map.target->dist(map.apply(xs[i]), map.apply(xs[j]));
      const Rational observed = (target_d - source_d).abs();
      DeviationSample sample;
      sample.x = xs[i];
      sample.detail = {{"x'", xs[j].str()},
                       {"source_dist", source_d.str()},
                       {"target_dist", target_d.str()}};
      sample.observed = observed;
      sample.pass = observed.is_zero();
      if (observed > report.max_observed) report.max_observed = observed;
      if (!sample.pass) report.pass = false;
      report.samples.push_back(std::move(sample));
    }
  }
  return report;
}

DeviationReport check_commutes(const IsometryMap& phi_y, const IsometryMap& phi_z,
                               const std::function<CPoint(const CPoint&)>& phi,
                               const std::vector<Element>& xs, long k) {
  require_precision(k);
  if (xs.empty()) throw InputError("check_commutes requires at least one sample element");
  if (!phi_y.source->same_space(*phi_z.source))
    throw InputError("check_commutes: the two legs have different source spaces");
  DeviationReport report;
  report.check = "commutes[" + phi_y.name + ", " + phi_z.name + "]";
  report.k = k;
  report.bound = Rational::pow2(-k);
  report.max_observed = Rational(0);
  for (const auto& x : xs) {
    const CPoint via_y = phi(phi_y.apply(x));
    const CPoint direct = phi_z.apply(x);
    const Rational observed = phi_z.target->dist_approx(via_y, direct, k);
    DeviationSample sample;
    sample.x = x;
    sample.observed = observed;
    sample.pass = observed <= report.bound;
    if (observed > report.max_observed) report.max_observed = observed;
    if (!sample.pass) report.pass = false;
    report.samples.push_back(std::move(sample));
  }
  return report;
}

nlohmann::json RoundTripReport::to_json() const {
  nlohmann::json out{{"status", pass ? "pass" : "fail"},
                     {"precision", k},
                     {"bound", bound.str()},
                     {"max_observed", max_observed.str()}};
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& s : samples) {
    entries.push_back({{"direction", s.direction},
                       {"point", s.point},
                       {"observed", s.observed.str()},
                       {"status", s.pass ? "pass" : "fail"}});
  }
  out["samples"] = std::move(entries);
  return out;
}

RoundTripReport completion_iso_roundtrip(const CompleteSpacePtr& a, const CompleteSpacePtr& b,
                                         const std::vector<CPoint>& a_points,
                                         const std::vector<CPoint>& b_points, long k) {
  require_precision(k);
  if (!a || !b) throw InputError("round trip requires two completions");
  if (!a->base()->same_space(*b->base()))
    throw InputError("round trip requires completions of the same base space");

  const IsometryMap into_b = embedding_isometry(b);
  const IsometryMap into_a = embedding_isometry(a);

  RoundTripReport report;
  report.k = k;
  report.bound = Rational(2) * Rational::pow2(-k);
  report.max_observed = Rational(0);

  auto run_side = [&](const CompleteSpace& home, const IsometryMap& out_map,
                      const IsometryMap& back_map, const std::vector<CPoint>& points,
                      const std::string& direction) {
    for (const auto& p : points) {
      const CPoint across = extend_isometry(out_map, p);
      const CPoint back = extend_isometry(back_map, across);
      const Rational observed = home.dist_approx(back, p, k);
      RoundTripSample sample{direction, point_name(p), observed, observed <= report.bound};
      if (observed > report.max_observed) report.max_observed = observed;
      if (!sample.pass) report.pass = false;
      report.samples.push_back(std::move(sample));
    }
  };

  run_side(*a, into_b, into_a, a_points, "A->B->A");
  run_side(*b, into_a, into_b, b_points, "B->A->B");
  return report;
}

}  // namespace metcomp
