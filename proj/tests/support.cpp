#include "support.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "metcomp/cli.hpp"
#include "metcomp/generators.hpp"
#include "metcomp/rng.hpp"
#include "metcomp/spaces.hpp"

namespace metcomp::test {

using nlohmann::json;

json abs_desc() { return {{"kind", "rationals_abs"}}; }

json padic_desc(long p) { return {{"kind", "rationals_padic"}, {"p", p}}; }

json finite_triangle_desc() {
  return {{"kind", "finite"},
          {"labels", {"a", "b", "c"}},
          {"dist", {"0", "1", "1", "1", "0", "1", "1", "1", "0"}}};
}

json finite_path_desc() {
  return {{"kind", "finite"},
          {"labels", {"p0", "p1", "p2", "p3"}},
          {"dist", {"0", "1", "2", "3",
                    "1", "0", "1", "2",
                    "2", "1", "0", "1",
                    "3", "2", "1", "0"}}};
}

json finite_bad_desc() {
  return {{"kind", "finite"},
          {"labels", {"a", "b", "c"}},
          {"dist", {"0", "1", "5", "1", "0", "1", "5", "1", "0"}}};
}

json product_abs_desc() {
  return {{"kind", "product"}, {"components", {abs_desc(), abs_desc()}}};
}

json trivial_category() {
  return {{"objects", {"*"}},
          {"morphisms", {{{"name", "id"}, {"src", "*"}, {"dst", "*"}}}},
          {"composition", {{"id", "id", "id"}}},
          {"identities", {{"*", "id"}}}};
}

namespace {

json chain_category(const std::vector<std::string>& labels) {
  json objects = json::array();
  for (const auto& l : labels) objects.push_back(l);

  auto name = [&](std::size_t i, std::size_t j) { return labels[i] + "->" + labels[j]; };

  json morphisms = json::array();
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i; j < labels.size(); ++j)
      morphisms.push_back({{"name", name(i, j)}, {"src", labels[i]}, {"dst", labels[j]}});

  json composition = json::array();
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i; j < labels.size(); ++j)
      for (std::size_t k = j; k < labels.size(); ++k)
        composition.push_back({name(j, k), name(i, j), name(i, k)});

  json identities = json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) identities[labels[i]] = name(i, i);

  return {{"objects", objects},
          {"morphisms", morphisms},
          {"composition", composition},
          {"identities", identities}};
}

}  // namespace

json poset3_category() { return chain_category({"a", "b", "c"}); }

json chain4_category() { return chain_category({"a", "b", "c", "d"}); }

json z2_category() {
  return {{"objects", {"g"}},
          {"morphisms",
           {{{"name", "e"}, {"src", "g"}, {"dst", "g"}},
            {{"name", "s"}, {"src", "g"}, {"dst", "g"}}}},
          {"composition", {{"e", "e", "e"}, {"e", "s", "s"}, {"s", "e", "s"}, {"s", "s", "e"}}},
          {"identities", {{"g", "e"}}}};
}

json corrupt_monoid_category() {
  // cyclic 3-element monoid with a∘a rerouted from b to a
  return {{"objects", {"m"}},
          {"morphisms",
           {{{"name", "e"}, {"src", "m"}, {"dst", "m"}},
            {{"name", "a"}, {"src", "m"}, {"dst", "m"}},
            {{"name", "b"}, {"src", "m"}, {"dst", "m"}}}},
          {"composition",
           {{"e", "e", "e"},
            {"e", "a", "a"},
            {"e", "b", "b"},
            {"a", "e", "a"},
            {"b", "e", "b"},
            {"a", "a", "a"},
            {"a", "b", "e"},
            {"b", "a", "e"},
            {"b", "b", "a"}}},
          {"identities", {{"m", "e"}}}};
}

json parallel_arrows_category() {
  return {{"objects", {"A", "B", "C"}},
          {"morphisms",
           {{{"name", "idA"}, {"src", "A"}, {"dst", "A"}},
            {{"name", "idB"}, {"src", "B"}, {"dst", "B"}},
            {{"name", "idC"}, {"src", "C"}, {"dst", "C"}},
            {{"name", "u"}, {"src", "A"}, {"dst", "B"}},
            {{"name", "v"}, {"src", "A"}, {"dst", "B"}},
            {{"name", "w"}, {"src", "B"}, {"dst", "C"}},
            {{"name", "t"}, {"src", "A"}, {"dst", "C"}}}},
          {"composition",
           {{"idA", "idA", "idA"},
            {"u", "idA", "u"},
            {"v", "idA", "v"},
            {"t", "idA", "t"},
            {"idB", "u", "u"},
            {"w", "u", "t"},
            {"idB", "v", "v"},
            {"w", "v", "t"},
            {"idC", "w", "w"},
            {"idC", "t", "t"},
            {"idB", "idB", "idB"},
            {"w", "idB", "w"},
            {"idC", "idC", "idC"}}},
          {"identities", {{"A", "idA"}, {"B", "idB"}, {"C", "idC"}}}};
}

json iso_pair_category() {
  return {{"objects", {"x", "y1", "y2"}},
          {"morphisms",
           {{{"name", "idx"}, {"src", "x"}, {"dst", "x"}},
            {{"name", "idy1"}, {"src", "y1"}, {"dst", "y1"}},
            {{"name", "idy2"}, {"src", "y2"}, {"dst", "y2"}},
            {{"name", "f1"}, {"src", "x"}, {"dst", "y1"}},
            {{"name", "f2"}, {"src", "x"}, {"dst", "y2"}},
            {{"name", "u"}, {"src", "y1"}, {"dst", "y2"}},
            {{"name", "v"}, {"src", "y2"}, {"dst", "y1"}}}},
          {"composition",
           {{"idx", "idx", "idx"},
            {"f1", "idx", "f1"},
            {"f2", "idx", "f2"},
            {"idy1", "f1", "f1"},
            {"u", "f1", "f2"},
            {"idy2", "f2", "f2"},
            {"v", "f2", "f1"},
            {"idy2", "u", "u"},
            {"v", "u", "idy1"},
            {"idy1", "v", "v"},
            {"u", "v", "idy2"},
            {"idy1", "idy1", "idy1"},
            {"u", "idy1", "u"},
            {"idy2", "idy2", "idy2"},
            {"v", "idy2", "v"}}},
          {"identities", {{"x", "idx"}, {"y1", "idy1"}, {"y2", "idy2"}}}};
}

namespace {

// Finite spaces where every nonzero distance is 1, so the isometries are
// exactly the injective maps.
struct FragmentObject {
  std::string label;
  std::size_t size;
};

std::string map_name(const FragmentObject& src, const FragmentObject& dst,
                     const std::vector<std::size_t>& images) {
  std::string out = src.label + "->" + dst.label + "[";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(images[i]);
  }
  return out + "]";
}

void enumerate_injective(std::size_t src_size, std::size_t dst_size,
                         std::vector<std::size_t>& current,
                         std::vector<bool>& used,
                         std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == src_size) {
    out.push_back(current);
    return;
  }
  for (std::size_t img = 0; img < dst_size; ++img) {
    if (used[img]) continue;
    used[img] = true;
    current.push_back(img);
    enumerate_injective(src_size, dst_size, current, used, out);
    current.pop_back();
    used[img] = false;
  }
}

}  // namespace

json isometry_fragment_category() {
  const std::vector<FragmentObject> objects = {{"P", 1}, {"D", 2}, {"T", 3}};

  struct Map {
    std::size_t src;
    std::size_t dst;
    std::vector<std::size_t> images;
    std::string name;
  };
  std::vector<Map> maps;
  for (std::size_t s = 0; s < objects.size(); ++s) {
    for (std::size_t d = 0; d < objects.size(); ++d) {
      std::vector<std::vector<std::size_t>> assignments;
      std::vector<std::size_t> current;
      std::vector<bool> used(objects[d].size, false);
      enumerate_injective(objects[s].size, objects[d].size, current, used, assignments);
      for (auto& images : assignments)
        maps.push_back({s, d, images, map_name(objects[s], objects[d], images)});
    }
  }

  auto find_name = [&](std::size_t src, std::size_t dst, const std::vector<std::size_t>& images) {
    for (const auto& m : maps)
      if (m.src == src && m.dst == dst && m.images == images) return m.name;
    throw std::logic_error("fragment composite not found");
  };

  json morphisms = json::array();
  for (const auto& m : maps)
    morphisms.push_back(
        {{"name", m.name}, {"src", objects[m.src].label}, {"dst", objects[m.dst].label}});

  json composition = json::array();
  for (const auto& g : maps) {
    for (const auto& f : maps) {
      if (f.dst != g.src) continue;
      std::vector<std::size_t> composite;
      composite.reserve(f.images.size());
      for (std::size_t img : f.images) composite.push_back(g.images[img]);
      composition.push_back({g.name, f.name, find_name(f.src, g.dst, composite)});
    }
  }

  json objs = json::array();
  json identities = json::object();
  for (std::size_t i = 0; i < objects.size(); ++i) {
    objs.push_back(objects[i].label);
    std::vector<std::size_t> id_images(objects[i].size);
    for (std::size_t j = 0; j < objects[i].size; ++j) id_images[j] = j;
    identities[objects[i].label] = find_name(i, i, id_images);
  }

  return {{"objects", objs},
          {"morphisms", morphisms},
          {"composition", composition},
          {"identities", identities}};
}

namespace {

CPoint truncation_limit(const CompleteSpacePtr& completion, const CPoint& y) {
  return completion->limit(
      [completion, y](std::size_t i) { return completion->embed(y.at(i + 1)); });
}

CPoint product_point(const SpacePtr& product, const CPoint& left, const CPoint& right) {
  return CPoint(
      product,
      [left, right](std::size_t n) {
        return Element::tuple({left.at(n), right.at(n)});
      },
      "pair(" + left.label() + ", " + right.label() + ")");
}

}  // namespace

std::vector<CPoint> sample_points(const SpacePtr& space, const CompleteSpacePtr& completion,
                                  std::uint64_t seed, std::size_t count) {
  std::vector<CPoint> points;
  const auto kind = space->kind();
  Rng rng(seed);

  for (const auto& x : space->sample(seed, (count + 1) / 2)) points.push_back(completion->embed(x));

  if (kind == "rationals_abs") {
    while (points.size() < count) {
      const Rational radicand(rng.range(2, 99), rng.range(1, 9));
      const CPoint root = sqrt_point(space, radicand);
      points.push_back(root);
      if (points.size() < count) points.push_back(truncation_limit(completion, root));
    }
  } else if (kind == "rationals_padic") {
    const long p = space->descriptor().at("p").get<long>();
    while (points.size() < count) {
      points.push_back(geometric_series_point(space));
      if (points.size() >= count) break;
      std::vector<Rational> coeffs;
      for (std::size_t j = 0; j < 8; ++j) {
        coeffs.push_back(Rational(rng.range(0, 9)) * Rational::int_pow(Rational(p),
                                                                       static_cast<long>(j)));
      }
      points.push_back(partial_sums_point(space, coeffs));
      if (points.size() < count)
        points.push_back(truncation_limit(completion, points.back()));
    }
  } else if (kind == "product") {
    const auto& components = space->descriptor().at("components");
    auto left_space = make_space(components[0]);
    auto right_space = make_space(components[1]);
    auto left_points = sample_points(left_space, Completion::of(left_space), seed ^ 0x5bf0, count);
    auto right_points =
        sample_points(right_space, Completion::of(right_space), seed ^ 0xa3c1, count);
    std::size_t i = 0;
    while (points.size() < count) {
      points.push_back(product_point(space, left_points[i % left_points.size()],
                                     right_points[(i * 7 + 3) % right_points.size()]));
      ++i;
    }
  } else {
    // finite carriers: pad with embedded points and, where two labels sit at
    // distance exactly 1, one eventually-constant sequence
    const auto carrier = space->enumerate_carrier();
    if (carrier && carrier->size() >= 2 && space->dist((*carrier)[0], (*carrier)[1]) <= Rational(1)) {
      const Element first = (*carrier)[0];
      const Element second = (*carrier)[1];
      points.push_back(CPoint(
          space, [first, second](std::size_t n) { return n == 0 ? first : second; },
          "eventually(" + second.str() + ")"));
    }
    std::size_t i = 0;
    while (points.size() < count && carrier) {
      points.push_back(completion->embed((*carrier)[i % carrier->size()]));
      ++i;
    }
  }

  if (points.size() > count)
    points.erase(points.begin() + static_cast<std::ptrdiff_t>(count), points.end());
  return points;
}

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = metcomp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string descriptor_path(const std::string& name) {
  return std::string(METCOMP_DESCRIPTOR_DIR) + "/" + name;
}

}  // namespace metcomp::test
