#include "metcomp/cpoint.hpp"

#include <utility>

#include "metcomp/errors.hpp"

namespace metcomp {

CPoint::CPoint(SpacePtr base, std::function<Element(std::size_t)> at, std::string label)
    : state_(std::make_shared<State>()) {
  if (!base) throw InputError("completion point requires a base space");
  if (!at) throw InputError("completion point requires an index evaluator");
  state_->base = std::move(base);
  state_->fn = std::move(at);
  state_->label = std::move(label);
}

Element CPoint::at(std::size_t n) const {
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->memo.find(n);
    if (it != state_->memo.end()) return it->second;
  }
  // The evaluator is pure, so racing computations of the same index agree.
  Element value = state_->fn(n);
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->memo.emplace(n, std::move(value)).first->second;
}

nlohmann::json RegularityReport::to_json() const {
  nlohmann::json out{{"status", pass ? "pass" : "fail"}, {"max_index", max_index}};
  if (!violations.empty()) {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : violations) {
      vs.push_back({{"m", v.m}, {"n", v.n}, {"dist", v.dist.str()}, {"bound", v.bound.str()}});
    }
    out["violations"] = std::move(vs);
  }
  return out;
}

RegularityReport check_regularity(const CPoint& y, std::size_t max_index) {
  RegularityReport report;
  report.max_index = max_index;
  for (std::size_t m = 0; m <= max_index; ++m) {
    for (std::size_t n = m + 1; n <= max_index; ++n) {
      const Rational d = y.base()->dist(y.at(m), y.at(n));
      const Rational bound = Rational::pow2(-static_cast<long>(m)) +
                             Rational::pow2(-static_cast<long>(n));
      if (d > bound) {
        report.pass = false;
        report.violations.push_back({m, n, d, bound});
      }
    }
  }
  return report;
}

}  // namespace metcomp
