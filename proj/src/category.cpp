#include "metcomp/category.hpp"

#include <algorithm>

#include "metcomp/errors.hpp"

namespace metcomp {

FiniteCategory FiniteCategory::from_json(const nlohmann::json& descriptor, std::size_t hom_cap) {
  if (!descriptor.is_object()) throw InputError("category descriptor must be an object");
  for (const char* field : {"objects", "morphisms", "composition", "identities"}) {
    if (!descriptor.contains(field))
      throw InputError(std::string("category descriptor is missing field '") + field + "'");
  }

  FiniteCategory cat;

  const auto& oj = descriptor.at("objects");
  if (!oj.is_array() || oj.empty())
    throw InputError("category 'objects' must be a nonempty array of labels");
  for (const auto& o : oj) {
    if (!o.is_string()) throw InputError("category object labels must be strings");
    cat.objects_.push_back(o.get<std::string>());
  }
  for (std::size_t i = 0; i < cat.objects_.size(); ++i)
    for (std::size_t j = i + 1; j < cat.objects_.size(); ++j)
      if (cat.objects_[i] == cat.objects_[j])
        throw InputError("duplicate object label '" + cat.objects_[i] + "'");

  const auto& mj = descriptor.at("morphisms");
  if (!mj.is_array()) throw InputError("category 'morphisms' must be an array");
  for (const auto& m : mj) {
    if (!m.is_object() || !m.contains("name") || !m.contains("src") || !m.contains("dst"))
      throw InputError("each morphism needs fields 'name', 'src', 'dst'");
    Morphism mor;
    mor.name = m.at("name").get<std::string>();
    mor.src = cat.object_index(m.at("src").get<std::string>());
    mor.dst = cat.object_index(m.at("dst").get<std::string>());
    cat.morphisms_.push_back(std::move(mor));
  }
  for (std::size_t i = 0; i < cat.morphisms_.size(); ++i)
    for (std::size_t j = i + 1; j < cat.morphisms_.size(); ++j)
      if (cat.morphisms_[i].name == cat.morphisms_[j].name)
        throw InputError("duplicate morphism name '" + cat.morphisms_[i].name + "'");

  for (std::size_t a = 0; a < cat.objects_.size(); ++a) {
    for (std::size_t b = 0; b < cat.objects_.size(); ++b) {
      const std::size_t size = cat.hom(a, b).size();
      if (size > hom_cap)
        throw InputError("hom-set from '" + cat.objects_[a] + "' to '" + cat.objects_[b] +
                         "' has " + std::to_string(size) + " morphisms, cap is " +
                         std::to_string(hom_cap));
    }
  }

  const auto& cj = descriptor.at("composition");
  if (!cj.is_array()) throw InputError("category 'composition' must be an array of triples");
  for (const auto& entry : cj) {
    if (!entry.is_array() || entry.size() != 3)
      throw InputError("composition entries must be [g, f, g∘f] triples");
    const std::size_t g = cat.morphism_index(entry[0].get<std::string>());
    const std::size_t f = cat.morphism_index(entry[1].get<std::string>());
    const std::size_t gf = cat.morphism_index(entry[2].get<std::string>());
    if (!cat.composable(g, f))
      throw InputError("composition entry for non-composable pair (" + cat.morphisms_[g].name +
                       ", " + cat.morphisms_[f].name + ")");
    if (cat.morphisms_[gf].src != cat.morphisms_[f].src ||
        cat.morphisms_[gf].dst != cat.morphisms_[g].dst)
      throw InputError("composite " + cat.morphisms_[gf].name + " of (" + cat.morphisms_[g].name +
                       ", " + cat.morphisms_[f].name + ") has the wrong source or target");
    if (!cat.table_.emplace(std::make_pair(g, f), gf).second)
      throw InputError("duplicate composition entry for (" + cat.morphisms_[g].name + ", " +
                       cat.morphisms_[f].name + ")");
  }
  for (std::size_t g = 0; g < cat.morphisms_.size(); ++g) {
    for (std::size_t f = 0; f < cat.morphisms_.size(); ++f) {
      if (cat.composable(g, f) && !cat.table_.count({g, f}))
        throw InputError("composition table is missing the composable pair (" +
                         cat.morphisms_[g].name + ", " + cat.morphisms_[f].name + ")");
    }
  }

  const auto& ij = descriptor.at("identities");
  if (!ij.is_object()) throw InputError("category 'identities' must map objects to morphisms");
  cat.identities_.assign(cat.objects_.size(), 0);
  std::vector<bool> seen(cat.objects_.size(), false);
  for (const auto& [label, name] : ij.items()) {
    const std::size_t obj = cat.object_index(label);
    const std::size_t mor = cat.morphism_index(name.get<std::string>());
    if (cat.morphisms_[mor].src != obj || cat.morphisms_[mor].dst != obj)
      throw InputError("identity of '" + label + "' must be an endomorphism of it");
    cat.identities_[obj] = mor;
    seen[obj] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw InputError("object '" + cat.objects_[i] + "' has no identity morphism");

  return cat;
}

std::size_t FiniteCategory::object_index(std::string_view label) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == label) return i;
  throw InputError("unknown object '" + std::string(label) + "'");
}

std::size_t FiniteCategory::morphism_index(std::string_view name) const {
  for (std::size_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].name == name) return i;
  throw InputError("unknown morphism '" + std::string(name) + "'");
}

std::size_t FiniteCategory::compose(std::size_t g, std::size_t f) const {
  auto it = table_.find({g, f});
  if (it == table_.end())
    throw InputError("morphisms (" + morphisms_[g].name + ", " + morphisms_[f].name +
                     ") are not composable");
  return it->second;
}

std::vector<std::size_t> FiniteCategory::hom(std::size_t src, std::size_t dst) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].src == src && morphisms_[i].dst == dst) out.push_back(i);
  return out;
}

PropertyPredicate PropertyPredicate::from_labels(std::set<std::string> labels) {
  return PropertyPredicate(
      [labels = std::move(labels)](const std::string& l) { return labels.count(l) > 0; });
}

PropertyPredicate PropertyPredicate::from_fn(std::function<bool(const std::string&)> fn) {
  if (!fn) throw InputError("property predicate requires a membership function");
  return PropertyPredicate(std::move(fn));
}

AxiomReport verify_category_axioms(const FiniteCategory& cat) {
  const auto& mor = cat.morphisms();

  AxiomCheck assoc{"associativity", true, nullptr};
  for (std::size_t h = 0; h < mor.size() && assoc.pass; ++h) {
    for (std::size_t g = 0; g < mor.size() && assoc.pass; ++g) {
      if (!cat.composable(h, g)) continue;
      for (std::size_t f = 0; f < mor.size(); ++f) {
        if (!cat.composable(g, f)) continue;
        const std::size_t left = cat.compose(cat.compose(h, g), f);
        const std::size_t right = cat.compose(h, cat.compose(g, f));
        if (left != right) {
          assoc.pass = false;
          assoc.witness = {{"f", mor[f].name},
                           {"g", mor[g].name},
                           {"h", mor[h].name},
                           {"(h∘g)∘f", mor[left].name},
                           {"h∘(g∘f)", mor[right].name}};
          break;
        }
      }
    }
  }

  AxiomCheck identity{"identity", true, nullptr};
  for (std::size_t f = 0; f < mor.size() && identity.pass; ++f) {
    const std::size_t id_dst = cat.identity_of(mor[f].dst);
    const std::size_t id_src = cat.identity_of(mor[f].src);
    const std::size_t left = cat.compose(id_dst, f);
    const std::size_t right = cat.compose(f, id_src);
    if (left != f || right != f) {
      identity.pass = false;
      identity.witness = {{"f", mor[f].name},
                          {"id∘f", mor[left].name},
                          {"f∘id", mor[right].name}};
    }
  }

  AxiomReport report;
  report.checks.push_back(std::move(assoc));
  report.checks.push_back(std::move(identity));
  return report;
}

bool is_mono(const FiniteCategory& cat, std::size_t f) {
  const auto& mor = cat.morphisms();
  const std::size_t src = mor[f].src;
  for (std::size_t w = 0; w < cat.objects().size(); ++w) {
    const auto parallel = cat.hom(w, src);
    for (std::size_t i = 0; i < parallel.size(); ++i) {
      for (std::size_t j = i + 1; j < parallel.size(); ++j) {
        if (cat.compose(f, parallel[i]) == cat.compose(f, parallel[j])) return false;
      }
    }
  }
  return true;
}

nlohmann::json RigidityReport::to_json() const {
  nlohmann::json out{{"status", pass ? "pass" : "fail"}};
  if (!violations.empty()) {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : violations)
      vs.push_back({{"object", v.object}, {"morphism", v.morphism}});
    out["violations"] = std::move(vs);
  }
  return out;
}

RigidityReport check_rigidity(const FiniteCategory& cat, const PropertyPredicate& s) {
  RigidityReport report;
  for (std::size_t a = 0; a < cat.objects().size(); ++a) {
    if (!s.member(cat.objects()[a])) continue;
    const std::size_t id = cat.identity_of(a);
    for (std::size_t e : cat.hom(a, a)) {
      if (e != id && is_mono(cat, e)) {
        report.pass = false;
        report.violations.push_back({cat.objects()[a], cat.morphisms()[e].name});
      }
    }
  }
  return report;
}

std::vector<PtionCandidate> find_ption(const FiniteCategory& cat, const PropertyPredicate& s,
                                       std::string_view x_label) {
  const auto rigidity = check_rigidity(cat, s);
  if (!rigidity.pass) throw RigidityError(rigidity.violations.front().object);

  const std::size_t x = cat.object_index(x_label);
  const std::size_t n_objects = cat.objects().size();

  std::vector<bool> mono(cat.morphisms().size());
  for (std::size_t f = 0; f < mono.size(); ++f) mono[f] = is_mono(cat, f);

  // all monos X -> Z per object Z
  std::vector<std::vector<std::size_t>> monos_from_x(n_objects);
  for (std::size_t z = 0; z < n_objects; ++z) {
    for (std::size_t f : cat.hom(x, z))
      if (mono[f]) monos_from_x[z].push_back(f);
  }

  std::vector<PtionCandidate> candidates;
  for (std::size_t y = 0; y < n_objects; ++y) {
    if (!s.member(cat.objects()[y])) continue;
    for (std::size_t f_y : monos_from_x[y]) {
      bool universal = true;
      for (std::size_t z = 0; z < n_objects && universal; ++z) {
        if (!s.member(cat.objects()[z])) continue;
        for (std::size_t f_z : monos_from_x[z]) {
          bool factors = false;
          for (std::size_t f : cat.hom(y, z)) {
            if (mono[f] && cat.compose(f, f_y) == f_z) {
              factors = true;
              break;
            }
          }
          if (!factors) {
            universal = false;
            break;
          }
        }
      }
      if (universal)
        candidates.push_back({cat.objects()[y], cat.morphisms()[f_y].name});
    }
  }
  return candidates;
}

}  // namespace metcomp
