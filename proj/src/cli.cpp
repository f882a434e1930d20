#include "metcomp/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "metcomp/axioms.hpp"
#include "metcomp/category.hpp"
#include "metcomp/completion.hpp"
#include "metcomp/errors.hpp"
#include "metcomp/generators.hpp"
#include "metcomp/spaces.hpp"

namespace metcomp::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

struct Config {
  std::string input;
  long precision = 12;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 1000;
  std::string format = "text";
  long max_precision = 64;
  std::size_t max_samples = 10000;

  bool json() const { return format == "json"; }
};

nlohmann::json load_input(const Config& cfg) {
  std::string text;
  if (cfg.input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    // values that start with '{' or '[' are inline JSON, anything else a path
    const auto first = cfg.input.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (cfg.input[first] == '{' || cfg.input[first] == '[')) {
      text = cfg.input;
    } else {
      std::ifstream in(cfg.input);
      if (!in) throw InputError("cannot open input file '" + cfg.input + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
  }
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON input: ") + e.what());
  }
}

void enforce_caps(const Config& cfg) {
  if (cfg.precision < 0) throw InputError("precision must be non-negative");
  if (cfg.precision > cfg.max_precision)
    throw InputError("precision " + std::to_string(cfg.precision) + " exceeds the cap " +
                     std::to_string(cfg.max_precision) + " (raise with --max-precision)");
  if (cfg.samples < 3) throw InputError("--samples must be at least 3");
  if (cfg.samples > cfg.max_samples)
    throw InputError("sample count " + std::to_string(cfg.samples) + " exceeds the cap " +
                     std::to_string(cfg.max_samples) + " (raise with --max-samples)");
}

void emit(const Config& cfg, std::ostream& out, const nlohmann::json& report,
          const std::string& text) {
  if (cfg.json()) {
    out << report.dump(2) << "\n";
  } else {
    out << text;
  }
}

// ---- eval ------------------------------------------------------------

int cmd_eval(const Config& cfg, std::ostream& out) {
  const auto desc = load_input(cfg);
  const CPoint y = make_point(desc);
  const Element x = approximate_by_base(y, cfg.precision);
  const Rational bound = Rational::pow2(-cfg.precision);

  nlohmann::json report{{"command", "eval"},
                        {"point", y.label()},
                        {"precision", cfg.precision},
                        {"approx", y.base()->element_json(x)},
                        {"bound", bound.str()}};
  std::ostringstream text;
  text << "point: " << y.label() << " over " << y.base()->kind() << "\n"
       << "approx = " << x.str() << "\n"
       << "guarantee: dist(approx, limit) <= 2^-" << cfg.precision << " = " << bound.str()
       << "\n";
  emit(cfg, out, report, text.str());
  return 0;
}

// ---- verify ----------------------------------------------------------

std::vector<nlohmann::json> default_generators(const Space& space) {
  const auto kind = space.kind();
  if (kind == "rationals_abs")
    return {{{"kind", "sqrt"}, {"value", "2"}}, {{"kind", "sqrt"}, {"value", "5"}}};
  if (kind == "rationals_padic") return {{{"kind", "geometric_series"}}};
  return {};  // finite and product carriers probe embedded samples only
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  auto input = load_input(cfg);
  nlohmann::json space_desc;
  std::vector<nlohmann::json> generators;
  if (input.is_object() && input.contains("space")) {
    space_desc = input.at("space");
    if (input.contains("generators")) {
      if (!input.at("generators").is_array())
        throw InputError("'generators' must be an array of generator descriptors");
      for (const auto& g : input.at("generators")) generators.push_back(g);
    }
  } else {
    space_desc = input;
  }

  // unchecked so a bad finite table is reported by the suites, not rejected
  const SpacePtr space = make_space_unchecked(space_desc);
  if (generators.empty()) generators = default_generators(*space);

  bool all_pass = true;
  nlohmann::json suites = nlohmann::json::object();
  std::ostringstream text;
  text << "space: " << space->kind() << "\n";

  const AxiomReport axioms = verify_metric_axioms(*space, cfg.seed, cfg.samples);
  suites["metric_axioms"] = axioms.to_json();
  all_pass = all_pass && axioms.all_pass();
  text << "metric_axioms: " << (axioms.all_pass() ? "pass" : "fail") << "\n";
  for (const auto& check : axioms.checks) {
    if (!check.pass)
      text << "  " << check.axiom << " violated, witness " << check.witness.dump() << "\n";
  }

  const auto completion = Completion::of(space);
  const long k = cfg.precision;

  const auto iso_xs = space->sample(cfg.seed + 7, std::min<std::size_t>(cfg.samples, 25));
  const DeviationReport embed_iso = verify_isometry(embedding_isometry(completion), iso_xs, k);
  suites["embedding_isometry"] = embed_iso.to_json();
  all_pass = all_pass && embed_iso.pass;
  text << "embedding_isometry: " << (embed_iso.pass ? "pass" : "fail")
       << " (max deviation " << embed_iso.max_observed.str() << ")\n";

  std::vector<CPoint> probes;
  for (const auto& g : generators) probes.push_back(make_point(space, g));
  for (const auto& x : space->sample(cfg.seed + 11, 5)) probes.push_back(completion->embed(x));

  nlohmann::json regularity = nlohmann::json::object();
  bool regularity_pass = true;
  for (const auto& p : probes) {
    const RegularityReport r = check_regularity(p, 24);
    regularity[p.label()] = r.to_json();
    regularity_pass = regularity_pass && r.pass;
  }
  suites["regularity"] = regularity;
  all_pass = all_pass && regularity_pass;
  text << "regularity: " << (regularity_pass ? "pass" : "fail") << " (" << probes.size()
       << " points, index pairs up to 24)\n";

  nlohmann::json density = nlohmann::json::object();
  bool density_pass = true;
  for (const auto& p : probes) {
    Rational worst(0);
    bool ok = true;
    for (long kk = 0; kk <= k; ++kk) {
      const Element x = approximate_by_base(p, kk);
      const Rational d = completion->dist_approx(completion->embed(x), p, kk + 1);
      const Rational bound = Rational::pow2(-kk);
      const Rational excess = d - bound;
      if (excess > worst) worst = excess;
      if (d > bound) ok = false;
    }
    density[p.label()] = {{"status", ok ? "pass" : "fail"}, {"max_excess", worst.str()}};
    density_pass = density_pass && ok;
  }
  suites["density"] = density;
  all_pass = all_pass && density_pass;
  text << "density: " << (density_pass ? "pass" : "fail") << " (precisions 0.." << k << ")\n";

  const auto diagram_xs = space->sample(cfg.seed + 13, std::min<std::size_t>(cfg.samples, 25));
  const IsometryMap embed_map = embedding_isometry(completion);
  const DeviationReport diagram = check_commutes(
      embed_map, embed_map,
      [&](const CPoint& y) { return extend_isometry(embed_map, y); }, diagram_xs, k);
  suites["diagram"] = diagram.to_json();
  all_pass = all_pass && diagram.pass;
  text << "diagram: " << (diagram.pass ? "pass" : "fail") << " (max observed "
       << diagram.max_observed.str() << ", bound " << diagram.bound.str() << ")\n";

  text << "overall: " << (all_pass ? "pass" : "fail") << "\n";
  nlohmann::json report{{"command", "verify"},
                        {"space", space->descriptor()},
                        {"suites", suites},
                        {"status", all_pass ? "pass" : "fail"}};
  emit(cfg, out, report, text.str());
  return all_pass ? 0 : 1;
}

// ---- extend ----------------------------------------------------------

// Every catalogue entry factors through a base-to-base map, so the isometry
// precheck can compare exact distances with zero tolerance.
BaseIsometry catalogue_base_map(const nlohmann::json& desc, const SpacePtr& space) {
  if (!desc.is_object() || !desc.contains("kind"))
    throw InputError("isometry descriptor must be an object with a \"kind\" field");
  const auto kind = desc.at("kind").get<std::string>();
  if (kind == "embed")
    return BaseIsometry{space, space, [](const Element& x) { return x; }, "embed"};
  if (kind == "shift") {
    if (!desc.contains("offset")) throw InputError("shift isometry is missing field 'offset'");
    return shift_base_isometry(space, Rational::parse(desc.at("offset").get<std::string>()));
  }
  if (kind == "scale") {
    if (!desc.contains("factor")) throw InputError("scale map is missing field 'factor'");
    return scale_base_map(space, Rational::parse(desc.at("factor").get<std::string>()));
  }
  throw InputError("unknown isometry kind '" + kind + "' (catalogue: embed, shift, scale)");
}

int cmd_extend(const Config& cfg, std::ostream& out) {
  const auto input = load_input(cfg);
  if (!input.is_object() || !input.contains("space"))
    throw InputError("extend input must be an object with a \"space\" descriptor");
  const SpacePtr space = make_space(input.at("space"));
  const auto completion = Completion::of(space);
  const BaseIsometry base_map =
      catalogue_base_map(input.contains("isometry") ? input.at("isometry")
                                                    : nlohmann::json{{"kind", "embed"}},
                         space);

  std::vector<Element> xs;
  if (input.contains("samples")) {
    if (!input.at("samples").is_array()) throw InputError("'samples' must be an array of elements");
    for (const auto& e : input.at("samples")) xs.push_back(space->parse_element(e));
  } else {
    xs = space->sample(cfg.seed + 3, 8);
  }
  if (xs.size() < 2) throw InputError("extend needs at least two sample elements");

  const long k = cfg.precision;
  std::ostringstream text;

  const DeviationReport precheck = verify_base_isometry(base_map, xs);
  text << "isometry precheck[" << base_map.name << "]: " << (precheck.pass ? "pass" : "fail")
       << " (max deviation " << precheck.max_observed.str() << ", exact)\n";
  if (!precheck.pass) {
    nlohmann::json report{{"command", "extend"},
                          {"isometry", base_map.name},
                          {"precheck", precheck.to_json()},
                          {"status", "fail"}};
    emit(cfg, out, report, text.str());
    return 1;
  }

  const IsometryMap map = into_completion(base_map, completion);
  const IsometryMap embed_map = embedding_isometry(completion);
  const DeviationReport commute = check_commutes(
      embed_map, map, [&](const CPoint& y) { return extend_isometry(map, y); }, xs, k);
  text << "commutes: " << (commute.pass ? "pass" : "fail") << " (max observed "
       << commute.max_observed.str() << ", bound " << commute.bound.str() << ")\n";

  nlohmann::json report{{"command", "extend"},
                        {"isometry", map.name},
                        {"precheck", precheck.to_json()},
                        {"commutes", commute.to_json()},
                        {"status", commute.pass ? "pass" : "fail"}};
  emit(cfg, out, report, text.str());
  return commute.pass ? 0 : 1;
}

// ---- category ---------------------------------------------------------

int cmd_category(const Config& cfg, std::ostream& out) {
  const auto input = load_input(cfg);
  nlohmann::json cat_desc;
  std::optional<std::set<std::string>> s_labels;
  std::optional<std::string> x_label;
  if (input.is_object() && input.contains("category")) {
    cat_desc = input.at("category");
    if (input.contains("S")) {
      if (!input.at("S").is_array()) throw InputError("'S' must be an array of object labels");
      std::set<std::string> labels;
      for (const auto& l : input.at("S")) labels.insert(l.get<std::string>());
      s_labels = std::move(labels);
    }
    if (input.contains("X")) x_label = input.at("X").get<std::string>();
  } else {
    cat_desc = input;
  }
  if (x_label && !s_labels)
    throw InputError("field 'X' requires the subclass 'S' to search in");

  const FiniteCategory cat = FiniteCategory::from_json(cat_desc);

  bool all_pass = true;
  std::ostringstream text;
  nlohmann::json report{{"command", "category"}};

  const AxiomReport axioms = verify_category_axioms(cat);
  report["axioms"] = axioms.to_json();
  all_pass = all_pass && axioms.all_pass();
  text << "axioms: " << (axioms.all_pass() ? "pass" : "fail") << "\n";
  for (const auto& check : axioms.checks) {
    if (!check.pass)
      text << "  " << check.axiom << " violated, witness " << check.witness.dump() << "\n";
  }

  if (s_labels) {
    const auto s = PropertyPredicate::from_labels(*s_labels);
    const RigidityReport rigidity = check_rigidity(cat, s);
    report["rigidity"] = rigidity.to_json();
    all_pass = all_pass && rigidity.pass;
    text << "rigidity: " << (rigidity.pass ? "pass" : "fail") << "\n";
    for (const auto& v : rigidity.violations)
      text << "  non-identity mono endomorphism '" << v.morphism << "' on object '" << v.object
           << "'\n";

    if (x_label && rigidity.pass && axioms.all_pass()) {
      const auto candidates = find_ption(cat, s, *x_label);
      nlohmann::json cj = nlohmann::json::array();
      text << "candidates for X = " << *x_label << ":";
      for (const auto& c : candidates) {
        cj.push_back({{"object", c.object}, {"morphism", c.morphism}});
        text << " (" << c.object << ", " << c.morphism << ")";
      }
      if (candidates.empty()) text << " none";
      text << "\n";
      report["candidates"] = std::move(cj);
    }
  }

  text << "overall: " << (all_pass ? "pass" : "fail") << "\n";
  report["status"] = all_pass ? "pass" : "fail";
  emit(cfg, out, report, text.str());
  return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact construction and verification of metric-space completions"};
  app.require_subcommand(1);

  Config cfg;
  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--input", cfg.input,
                    "descriptor: file path, inline JSON, or '-' for stdin")
        ->required();
    sub->add_option("--precision", cfg.precision, "precision k, bounds are 2^-k (default 12)");
    sub->add_option("--seed", cfg.seed, "sampling seed (default 1729)");
    sub->add_option("--samples", cfg.samples, "sample count for randomized checks (default 1000)");
    sub->add_option("--format", cfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-precision", cfg.max_precision, "raise the precision cap (default 64)");
    sub->add_option("--max-samples", cfg.max_samples, "raise the sample cap (default 10000)");
  };

  CLI::App* eval = app.add_subcommand("eval", "approximate a completion point to 2^-k");
  CLI::App* verify = app.add_subcommand("verify", "run the verification suites on a space");
  CLI::App* extend = app.add_subcommand("extend", "extend an isometry and check the diagram");
  CLI::App* category = app.add_subcommand("category", "finite-category axioms and P-tion search");
  for (auto* sub : {eval, verify, extend, category}) add_common(sub);

  std::vector<const char*> argv;
  argv.push_back("metcomp");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    enforce_caps(cfg);
    if (eval->parsed()) return cmd_eval(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (extend->parsed()) return cmd_extend(cfg, out);
    return cmd_category(cfg, out);
  } catch (const RegularityError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const RigidityError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace metcomp::cli
