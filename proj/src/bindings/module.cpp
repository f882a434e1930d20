#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "metcomp/axioms.hpp"
#include "metcomp/category.hpp"
#include "metcomp/cli.hpp"
#include "metcomp/completion.hpp"
#include "metcomp/errors.hpp"
#include "metcomp/generators.hpp"
#include "metcomp/spaces.hpp"

namespace py = pybind11;
using namespace metcomp;

namespace {

nlohmann::json to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& item : obj) arr.push_back(to_json(item));
    return arr;
  }
  if (py::isinstance<py::dict>(obj)) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& item : obj.cast<py::dict>())
      out[item.first.cast<std::string>()] = to_json(item.second);
    return out;
  }
  throw InputError("unsupported value in descriptor: " + py::repr(obj).cast<std::string>());
}

py::object from_json(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(from_json(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = from_json(value);
      return out;
    }
    default:
      return py::none();
  }
}

// Value wrappers: the C++ side passes immutable presentations around as
// shared_ptr<const T>, which pybind11 cannot hold directly.
struct PySpace {
  SpacePtr ptr;
};

struct PyCompletion {
  CompleteSpacePtr ptr;
};

Rational rational_from(const py::handle& obj) {
  if (py::isinstance<py::int_>(obj)) {
    // route through text so arbitrary python ints survive
    return Rational::parse(py::str(obj).cast<std::string>());
  }
  if (py::isinstance<py::str>(obj)) return Rational::parse(obj.cast<std::string>());
  if (py::isinstance<Rational>(obj)) return obj.cast<Rational>();
  throw InputError("expected a Rational, int, or \"num/den\" string");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact metric-space completion engine";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<RegularityError>(m, "RegularityError", PyExc_ValueError);
  py::register_exception<RigidityError>(m, "RigidityError", PyExc_ValueError);

  py::class_<Rational>(m, "Rational")
      .def(py::init([](const py::handle& v) { return rational_from(v); }))
      .def(py::init([](long num, long den) { return Rational(num, den); }))
      .def_property_readonly("num", &Rational::num_str)
      .def_property_readonly("den", &Rational::den_str)
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& q) { return "Rational('" + q.str() + "')"; })
      .def("__hash__", [](const Rational& q) { return py::hash(py::str(q.str())); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__abs__", &Rational::abs);

  py::class_<Element>(m, "Element")
      .def("__str__", &Element::str)
      .def("__repr__", [](const Element& e) { return "Element('" + e.str() + "')"; })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; });

  py::class_<PySpace>(m, "Space")
      .def_property_readonly("kind", [](const PySpace& s) { return s.ptr->kind(); })
      .def_property_readonly("descriptor",
                             [](const PySpace& s) { return from_json(s.ptr->descriptor()); })
      .def("dist",
           [](const PySpace& s, const py::handle& x, const py::handle& y) {
             return s.ptr->dist(s.ptr->parse_element(to_json(x)),
                                s.ptr->parse_element(to_json(y)));
           })
      .def("parse_element",
           [](const PySpace& s, const py::handle& enc) {
             return s.ptr->parse_element(to_json(enc));
           })
      .def("element_json",
           [](const PySpace& s, const Element& x) { return from_json(s.ptr->element_json(x)); })
      .def("sample", [](const PySpace& s, std::uint64_t seed, std::size_t count) {
        return s.ptr->sample(seed, count);
      });

  m.def("make_space", [](const py::handle& desc) { return PySpace{make_space(to_json(desc))}; });
  m.def("is_prime", [](std::uint64_t n) { return is_prime(n); });
  m.def("padic_valuation", [](const py::handle& q, long p) -> py::object {
    const auto v = padic_valuation(rational_from(q), p);
    if (!v) return py::none();
    return py::int_(*v);
  });

  py::class_<CPoint>(m, "Point")
      .def_property_readonly("label", &CPoint::label)
      .def_property_readonly("base", [](const CPoint& y) { return PySpace{y.base()}; })
      .def("at", &CPoint::at);

  m.def("make_point",
        [](const py::handle& space_or_desc, const py::object& generator) {
          if (generator.is_none()) return make_point(to_json(space_or_desc));
          return make_point(space_or_desc.cast<PySpace>().ptr, to_json(generator));
        },
        py::arg("space_or_descriptor"), py::arg("generator") = py::none());
  m.def("sqrt_point", [](const PySpace& s, const py::handle& r) {
    return sqrt_point(s.ptr, rational_from(r));
  });
  m.def("check_regularity",
        [](const CPoint& y, std::size_t max_index) {
          return from_json(check_regularity(y, max_index).to_json());
        },
        py::arg("point"), py::arg("max_index") = 24);
  m.def("approximate_by_base", &approximate_by_base);
  m.def("verify_metric_axioms",
        [](const PySpace& s, std::uint64_t seed, std::size_t n) {
          return from_json(verify_metric_axioms(*s.ptr, seed, n).to_json());
        },
        py::arg("space"), py::arg("seed") = 1729, py::arg("n_samples") = 1000);

  py::class_<PyCompletion>(m, "Completion")
      .def_property_readonly("name", [](const PyCompletion& c) { return c.ptr->name(); })
      .def_property_readonly("base", [](const PyCompletion& c) { return PySpace{c.ptr->base()}; })
      .def("embed",
           [](const PyCompletion& c, const py::handle& x) {
             return c.ptr->embed(c.ptr->base()->parse_element(to_json(x)));
           })
      .def("dist_approx",
           [](const PyCompletion& c, const CPoint& p, const CPoint& q, long k) {
             return c.ptr->dist_approx(p, q, k);
           })
      .def("limit", [](const PyCompletion& c, const std::function<CPoint(std::size_t)>& ys) {
        return c.ptr->limit(ys);
      });

  m.def("completion_of", [](const PySpace& s) { return PyCompletion{Completion::of(s.ptr)}; });
  m.def("shifted_completion_of",
        [](const PySpace& s) { return PyCompletion{ShiftedCompletion::of(s.ptr)}; });
  m.def("apart", [](const PyCompletion& c, const CPoint& y, const CPoint& yp, long k) {
    return apart(*c.ptr, y, yp, k);
  });

  py::class_<IsometryMap>(m, "Isometry")
      .def_property_readonly("name", [](const IsometryMap& f) { return f.name; })
      .def("apply", [](const IsometryMap& f, const py::handle& x) {
        return f.apply(f.source->parse_element(to_json(x)));
      });

  m.def("embedding_isometry", [](const PyCompletion& c) { return embedding_isometry(c.ptr); });
  m.def("shift_isometry", [](const PyCompletion& c, const py::handle& offset) {
    return shift_isometry(c.ptr, rational_from(offset));
  });
  m.def("scale_map", [](const PyCompletion& c, const py::handle& factor) {
    return scale_map(c.ptr, rational_from(factor));
  });
  m.def("extend_isometry",
        [](const IsometryMap& f, const CPoint& y) { return extend_isometry(f, y); });
  m.def("verify_isometry", [](const IsometryMap& f, const std::vector<Element>& xs, long k) {
    return from_json(verify_isometry(f, xs, k).to_json());
  });
  m.def("check_commutes",
        [](const IsometryMap& phi_y, const IsometryMap& phi_z,
           const std::function<CPoint(const CPoint&)>& phi, const std::vector<Element>& xs,
           long k) { return from_json(check_commutes(phi_y, phi_z, phi, xs, k).to_json()); });
  m.def("completion_iso_roundtrip",
        [](const PyCompletion& a, const PyCompletion& b, const std::vector<CPoint>& pa,
           const std::vector<CPoint>& pb, long k) {
          return from_json(completion_iso_roundtrip(a.ptr, b.ptr, pa, pb, k).to_json());
        });

  py::class_<FiniteCategory>(m, "FiniteCategory")
      .def_static("from_descriptor",
                  [](const py::handle& desc, std::size_t hom_cap) {
                    return FiniteCategory::from_json(to_json(desc), hom_cap);
                  },
                  py::arg("descriptor"), py::arg("hom_cap") = 64)
      .def_property_readonly("objects", &FiniteCategory::objects)
      .def_property_readonly("morphisms", [](const FiniteCategory& c) {
        py::list out;
        for (const auto& mor : c.morphisms())
          out.append(py::make_tuple(mor.name, c.objects()[mor.src], c.objects()[mor.dst]));
        return out;
      });

  m.def("verify_category_axioms", [](const FiniteCategory& c) {
    return from_json(verify_category_axioms(c).to_json());
  });
  m.def("is_mono", [](const FiniteCategory& c, const std::string& name) {
    return is_mono(c, c.morphism_index(name));
  });
  m.def("check_rigidity", [](const FiniteCategory& c, const std::vector<std::string>& labels) {
    std::set<std::string> s(labels.begin(), labels.end());
    return from_json(check_rigidity(c, PropertyPredicate::from_labels(s)).to_json());
  });
  m.def("find_ption", [](const FiniteCategory& c, const std::vector<std::string>& labels,
                         const std::string& x) {
    std::set<std::string> s(labels.begin(), labels.end());
    py::list out;
    for (const auto& cand : find_ption(c, PropertyPredicate::from_labels(s), x))
      out.append(py::make_tuple(cand.object, cand.morphism));
    return out;
  });

  m.def("cli_run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });

  m.attr("DEFAULT_SEED") = 1729;
#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "0.1.0";
#endif
}
