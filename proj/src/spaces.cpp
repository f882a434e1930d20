#include "metcomp/spaces.hpp"

#include <utility>
#include <vector>

#include "metcomp/axioms.hpp"
#include "metcomp/errors.hpp"
#include "metcomp/rng.hpp"

namespace metcomp {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

long integer_valuation(const mpz_class& n, long p) {
  // repeated exact division, counting how many factors of p divide n
  mpz_class q = n, rem, quot;
  long v = 0;
  const mpz_class pz(p);
  while (true) {
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), q.get_mpz_t(), pz.get_mpz_t());
    if (rem != 0) break;
    q = quot;
    ++v;
  }
  return v;
}

Rational sample_rational(Rng& rng) {
  const long num = rng.range(-9999, 9999);
  const long den = rng.range(1, 64);
  return Rational(num, den);
}

const nlohmann::json& require_field(const nlohmann::json& j, const char* field,
                                    const char* context) {
  auto it = j.find(field);
  if (it == j.end())
    throw InputError(std::string(context) + " descriptor is missing field '" + field + "'");
  return *it;
}

class RationalAbsSpace final : public Space {
 public:
  RationalAbsSpace() : Space({{"kind", "rationals_abs"}}) {}

  Rational dist(const Element& x, const Element& y) const override {
    return (x.as_rational() - y.as_rational()).abs();
  }

  std::vector<Element> sample(std::uint64_t seed, std::size_t count) const override {
    Rng rng(seed);
    std::vector<Element> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(Element::rational(sample_rational(rng)));
    return out;
  }

  Element parse_element(const nlohmann::json& encoded) const override {
    if (!encoded.is_string())
      throw InputError("rational element must be a \"num/den\" string, got " + encoded.dump());
    return Element::rational(Rational::parse(encoded.get<std::string>()));
  }

  nlohmann::json element_json(const Element& x) const override { return x.as_rational().str(); }
};

class PAdicSpace final : public Space {
 public:
  explicit PAdicSpace(long p) : Space({{"kind", "rationals_padic"}, {"p", p}}), p_(p) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
      throw InputError("p must be prime, got " + std::to_string(p));
  }

  Rational dist(const Element& x, const Element& y) const override {
    const auto v = padic_valuation(x.as_rational() - y.as_rational(), p_);
    if (!v) return Rational(0);
    return Rational::int_pow(Rational(p_), -*v);
  }

  std::vector<Element> sample(std::uint64_t seed, std::size_t count) const override {
    Rng rng(seed);
    std::vector<Element> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(Element::rational(sample_rational(rng)));
    return out;
  }

  Element parse_element(const nlohmann::json& encoded) const override {
    if (!encoded.is_string())
      throw InputError("rational element must be a \"num/den\" string, got " + encoded.dump());
    return Element::rational(Rational::parse(encoded.get<std::string>()));
  }

  nlohmann::json element_json(const Element& x) const override { return x.as_rational().str(); }

  bool ultrametric() const override { return true; }

 private:
  long p_;
};

class FiniteSpace final : public Space {
 public:
  FiniteSpace(nlohmann::json descriptor, std::vector<std::string> labels,
              std::vector<Rational> table)
      : Space(std::move(descriptor)), labels_(std::move(labels)), table_(std::move(table)) {}

  Rational dist(const Element& x, const Element& y) const override {
    return table_[index_of(x) * labels_.size() + index_of(y)];
  }

  std::vector<Element> sample(std::uint64_t seed, std::size_t count) const override {
    Rng rng(seed);
    std::vector<Element> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
      out.push_back(Element::label(labels_[rng.below(labels_.size())]));
    return out;
  }

  Element parse_element(const nlohmann::json& encoded) const override {
    if (!encoded.is_string())
      throw InputError("finite-space element must be a label string, got " + encoded.dump());
    auto label = encoded.get<std::string>();
    index_of_label(label);  // must exist
    return Element::label(std::move(label));
  }

  nlohmann::json element_json(const Element& x) const override { return x.as_label(); }

  std::optional<std::vector<Element>> enumerate_carrier() const override {
    std::vector<Element> out;
    out.reserve(labels_.size());
    for (const auto& l : labels_) out.push_back(Element::label(l));
    return out;
  }

  std::optional<Rational> min_positive_dist() const override {
    std::optional<Rational> best;
    for (const auto& d : table_) {
      if (d.sign() > 0 && (!best || d < *best)) best = d;
    }
    return best;
  }

 private:
  std::size_t index_of_label(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) return i;
    }
    throw InputError("unknown finite-space label '" + label + "'");
  }

  std::size_t index_of(const Element& x) const { return index_of_label(x.as_label()); }

  std::vector<std::string> labels_;
  std::vector<Rational> table_;  // row-major
};

class ProductSpace final : public Space {
 public:
  ProductSpace(nlohmann::json descriptor, SpacePtr left, SpacePtr right)
      : Space(std::move(descriptor)), left_(std::move(left)), right_(std::move(right)) {}

  Rational dist(const Element& x, const Element& y) const override {
    const auto& xt = components(x);
    const auto& yt = components(y);
    return max(left_->dist(xt[0], yt[0]), right_->dist(xt[1], yt[1]));
  }

  std::vector<Element> sample(std::uint64_t seed, std::size_t count) const override {
    const auto ls = left_->sample(seed * 2 + 1, count);
    const auto rs = right_->sample(seed * 2 + 2, count);
    std::vector<Element> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(Element::tuple({ls[i], rs[i]}));
    return out;
  }

  Element parse_element(const nlohmann::json& encoded) const override {
    if (!encoded.is_array() || encoded.size() != 2)
      throw InputError("product element must be a two-entry array, got " + encoded.dump());
    return Element::tuple({left_->parse_element(encoded[0]), right_->parse_element(encoded[1])});
  }

  nlohmann::json element_json(const Element& x) const override {
    const auto& t = components(x);
    return nlohmann::json::array({left_->element_json(t[0]), right_->element_json(t[1])});
  }

  std::optional<std::vector<Element>> enumerate_carrier() const override {
    const auto ls = left_->enumerate_carrier();
    const auto rs = right_->enumerate_carrier();
    if (!ls || !rs) return std::nullopt;
    std::vector<Element> out;
    out.reserve(ls->size() * rs->size());
    for (const auto& l : *ls)
      for (const auto& r : *rs) out.push_back(Element::tuple({l, r}));
    return out;
  }

  std::optional<Rational> min_positive_dist() const override {
    const auto pts = enumerate_carrier();
    if (!pts) return std::nullopt;
    std::optional<Rational> best;
    for (const auto& x : *pts)
      for (const auto& y : *pts) {
        const Rational d = dist(x, y);
        if (d.sign() > 0 && (!best || d < *best)) best = d;
      }
    return best;
  }

  bool ultrametric() const override { return left_->ultrametric() && right_->ultrametric(); }

 private:
  const std::vector<Element>& components(const Element& x) const {
    const auto& t = x.as_tuple();
    if (t.size() != 2) throw InputError("product element must have exactly two components");
    return t;
  }

  SpacePtr left_;
  SpacePtr right_;
};

SpacePtr build_space(const nlohmann::json& descriptor, bool validate) {
  if (!descriptor.is_object() || !descriptor.contains("kind"))
    throw InputError("space descriptor must be an object with a \"kind\" field");
  const auto kind = descriptor.at("kind").get<std::string>();

  if (kind == "rationals_abs") return std::make_shared<RationalAbsSpace>();

  if (kind == "rationals_padic") {
    const auto& pj = require_field(descriptor, "p", "rationals_padic");
    if (!pj.is_number_integer()) throw InputError("field 'p' must be an integer");
    return std::make_shared<PAdicSpace>(pj.get<long>());
  }

  if (kind == "finite") {
    const auto& lj = require_field(descriptor, "labels", "finite");
    const auto& dj = require_field(descriptor, "dist", "finite");
    if (!lj.is_array() || lj.empty()) throw InputError("finite 'labels' must be a nonempty array");
    std::vector<std::string> labels;
    for (const auto& l : lj) {
      if (!l.is_string()) throw InputError("finite labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        if (labels[i] == labels[j]) throw InputError("duplicate finite label '" + labels[i] + "'");
    if (!dj.is_array() || dj.size() != labels.size() * labels.size())
      throw InputError("finite 'dist' must be a row-major array of " +
                       std::to_string(labels.size() * labels.size()) + " entries");
    std::vector<Rational> table;
    table.reserve(dj.size());
    for (const auto& entry : dj) {
      if (!entry.is_string()) throw InputError("finite distances must be \"num/den\" strings");
      table.push_back(Rational::parse(entry.get<std::string>()));
    }
    nlohmann::json canon{{"kind", "finite"}, {"labels", lj}, {"dist", dj}};
    auto space = std::make_shared<FiniteSpace>(std::move(canon), labels, std::move(table));
    if (validate) {
      const auto report = verify_metric_axioms(*space, 0, 3);
      for (const auto& check : report.checks) {
        if (!check.pass)
          throw InputError("finite table violates the " + check.axiom +
                           " axiom: " + check.witness.dump());
      }
      const auto pts = *space->enumerate_carrier();
      for (const auto& x : pts)
        for (const auto& y : pts)
          if (!(x == y) && space->dist(x, y).is_zero())
            throw InputError("finite table has a zero off-diagonal distance between '" +
                             x.as_label() + "' and '" + y.as_label() + "'");
    }
    return space;
  }

  if (kind == "product") {
    const auto& cj = require_field(descriptor, "components", "product");
    if (!cj.is_array() || cj.size() != 2)
      throw InputError("product 'components' must be an array of two descriptors");
    auto left = build_space(cj[0], validate);
    auto right = build_space(cj[1], validate);
    nlohmann::json canon{{"kind", "product"},
                         {"components", {left->descriptor(), right->descriptor()}}};
    return std::make_shared<ProductSpace>(std::move(canon), std::move(left), std::move(right));
  }

  throw InputError("unknown space kind '" + kind + "'");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // this witness set decides primality for every 64-bit integer
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::optional<long> padic_valuation(const Rational& q, long p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw InputError("p must be prime, got " + std::to_string(p));
  if (q.is_zero()) return std::nullopt;
  const mpq_class& v = q.raw();
  return integer_valuation(v.get_num(), p) - integer_valuation(v.get_den(), p);
}

SpacePtr make_space(const nlohmann::json& descriptor) { return build_space(descriptor, true); }

SpacePtr make_space_unchecked(const nlohmann::json& descriptor) {
  return build_space(descriptor, false);
}

}  // namespace metcomp
