#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "predom/completion.hpp"
#include "predom/cstar_model.hpp"
#include "predom/cuntz.hpp"
#include "predom/dual_cone.hpp"
#include "predom/error.hpp"
#include "predom/funcspace.hpp"
#include "predom/structure_file.hpp"

namespace py = pybind11;
using namespace predom;

namespace {

using LabelPairs = std::vector<std::pair<std::string, std::string>>;

// Accepts int, str ("3/4", "inf"), fractions.Fraction or float('inf').
ExtRational to_ext(py::handle v) {
  if (py::isinstance<py::float_>(v)) {
    auto d = v.cast<double>();
    if (d == std::numeric_limits<double>::infinity()) {
      return ExtRational::infinity();
    }
    throw PreconditionError("finite floats are not exact; pass a Fraction or a string");
  }
  return parse_ext(py::str(v).cast<std::string>());
}

Rational to_rational(py::handle v) {
  auto x = to_ext(v);
  if (x.is_infinite()) {
    throw PreconditionError("value must be finite");
  }
  return x.finite();
}

py::object from_rational(Rational const& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(format_rational(r));
}

py::object from_ext(ExtRational const& x) {
  if (x.is_infinite()) {
    return py::float_(std::numeric_limits<double>::infinity());
  }
  return from_rational(x.finite());
}

FnValues to_fn(std::size_t n, py::sequence const& seq) {
  if (seq.size() != n) {
    throw PreconditionError("expected " + std::to_string(n) + " values");
  }
  FnValues f;
  for (auto v : seq) {
    f.push_back(to_ext(v));
  }
  return f;
}

py::list from_fn(FnValues const& f) {
  py::list out;
  for (auto const& v : f) {
    out.append(from_ext(v));
  }
  return out;
}

std::vector<std::string> labels(Carrier const& c, Subset const& s) {
  std::vector<std::string> out;
  for (auto i : s.elements()) {
    out.push_back(c.name(i));
  }
  return out;
}

LabelPairs label_pairs(Carrier const& c, Relation const& r) {
  LabelPairs out;
  for (auto [a, b] : r.pairs()) {
    out.emplace_back(c.name(a), c.name(b));
  }
  return out;
}

Relation relation_of(Carrier const& c, LabelPairs const& pairs) {
  Relation r(c.size());
  for (auto const& [a, b] : pairs) {
    r.set(c.index_of(a), c.index_of(b));
  }
  return r;
}

PositiveElement element(FinXModel const& m, py::sequence const& seq) {
  std::vector<Rational> v;
  for (auto x : seq) {
    v.push_back(to_rational(x));
  }
  return PositiveElement(m, std::move(v));
}

py::list from_element(PositiveElement const& a) {
  py::list out;
  for (auto const& v : a.values()) {
    out.append(from_rational(v));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite predomains, their completions and the dual cone.";

  auto error = py::register_exception<Error>(m, "PredomError", PyExc_RuntimeError);
  auto pre   = py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<UnknownElement>(m, "UnknownElement", error.ptr());
  py::register_exception<NotAPredomain>(m, "NotAPredomain", pre.ptr());
  py::register_exception<NotAPreCuntz>(m, "NotAPreCuntz", pre.ptr());
  py::register_exception<BoundExceeded>(m, "BoundExceeded", error.ptr());
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  m.def(
      "validate",
      [](std::vector<std::string> const& elements, LabelPairs const& pairs) {
        Carrier c(elements);
        auto    rep = validate_predomain(relation_of(c, pairs));
        py::dict d;
        d["transitive"] = rep.trans;
        d["ip0"]        = rep.ip0;
        d["ip1"]        = rep.ip1;
        d["ip2"]        = rep.ip2;
        d["ip"]         = rep.ip_full;
        d["valid"]      = rep.valid();
        return d;
      },
      py::arg("elements"), py::arg("pairs"), "Predomain axiom report for a labelled relation.");

  py::class_<Predomain>(m, "Predomain")
      .def(py::init([](std::vector<std::string> const& elements, LabelPairs const& pairs) {
             Carrier c(elements);
             auto    r = relation_of(c, pairs);
             return Predomain(std::move(c), std::move(r));
           }),
           py::arg("elements"), py::arg("pairs"))
      .def_property_readonly("elements", [](Predomain const& p) { return p.carrier().names(); })
      .def_property_readonly("pairs",
                             [](Predomain const& p) { return label_pairs(p.carrier(), p.rel()); })
      .def("__len__", &Predomain::size)
      .def("natural_preorder",
           [](Predomain const& p) { return label_pairs(p.carrier(), natural_preorder(p)); })
      .def("stratify", [](Predomain const& p) { return stratify(p); })
      .def("is_stratified", [](Predomain const& p) { return is_stratified(p); })
      .def("stratification_gaps",
           [](Predomain const& p) {
             LabelPairs out;
             for (auto [a, b] : stratification_gaps(p)) {
               out.emplace_back(p.carrier().name(a), p.carrier().name(b));
             }
             return out;
           })
      .def("opens",
           [](Predomain const& p) {
             std::vector<std::vector<std::string>> out;
             auto const t = cspace_topology(p);
             for (auto const& u : t.opens()) {
               out.push_back(labels(p.carrier(), u));
             }
             return out;
           })
      .def(
          "round_ideals",
          [](Predomain const& p, std::size_t bound) {
            std::vector<std::vector<std::string>> out;
            auto const c = enumerate_round_ideals(p, bound);
            for (auto const& i : c.ideals) {
              out.push_back(labels(p.carrier(), i));
            }
            return out;
          },
          py::arg("bound") = kCompletionBound)
      .def("is_lsc",
           [](Predomain const& p, py::sequence const& f) { return is_lsc(p, to_fn(p.size(), f)); })
      .def("env",
           [](Predomain const& p, py::sequence const& g) {
             return from_fn(env(p, to_fn(p.size(), g)));
           })
      .def("separate",
           [](Predomain const& p, py::sequence const& f, py::sequence const& h) {
             auto s = separate(p, to_fn(p.size(), f), to_fn(p.size(), h));
             return py::make_tuple(p.carrier().name(s.y), from_ext(s.r));
           })
      .def("to_text", [](Predomain const& p) { return emit_structure(predomain_file(p)); });

  py::class_<PreCuntz>(m, "PreCuntz")
      .def_static("truncated", &PreCuntz::truncated, py::arg("n"))
      .def_property_readonly("predomain", &PreCuntz::predomain)
      .def("__len__", &PreCuntz::size)
      .def("add", [](PreCuntz const& c, std::size_t a, std::size_t b) { return c.monoid().add(a, b); })
      .def("completion_size", [](PreCuntz const& c) { return completion_monoid(c).size(); })
      .def("check_hom",
           [](PreCuntz const& c, py::sequence const& f) {
             auto     rep = check_hom(c, to_fn(c.size(), f));
             py::dict d;
             d["hom"]      = rep.hom;
             d["monotone"] = rep.monotone;
             d["lsc"]      = rep.lsc;
             return d;
           })
      .def(
          "dual_points",
          [](PreCuntz const& c, py::sequence const& grid) {
            std::vector<ExtRational> g;
            for (auto v : grid) {
              g.push_back(to_ext(v));
            }
            py::list out;
            for (auto const& d : dual_points(c, g)) {
              out.append(from_fn(d.values()));
            }
            return out;
          },
          py::arg("grid"));

  m.def("format_structure", [](std::string const& text) {
    return emit_structure(parse_structure(text));
  });
  m.def("load_predomain", [](std::string const& text) { return parse_structure(text).predomain(); });
  m.def("load_precuntz", [](std::string const& text) { return parse_structure(text).precuntz(); });

  m.def("approx", [](py::sequence const& a, py::sequence const& b) {
    auto model = FinXModel::numbered(a.size());
    auto rep   = approx_rel(element(model, a), element(model, b));
    return py::make_tuple(rep.holds, rep.eps ? from_rational(*rep.eps) : py::none());
  }, "Whether a << b in C0(X)+, and the largest eps with a <= (b - eps)+.");
  m.def("cutdown", [](py::sequence const& a, py::handle eps) {
    return from_element(cutdown(element(FinXModel::numbered(a.size()), a), to_rational(eps)));
  });
  m.def("delta_add", [](py::sequence const& a, py::sequence const& b, py::handle eps) {
    auto model = FinXModel::numbered(a.size());
    return from_rational(find_delta_add(element(model, a), element(model, b), to_rational(eps)));
  });
  m.def("delta_split", [](py::sequence const& a, py::sequence const& b, py::handle eps) {
    auto model = FinXModel::numbered(a.size());
    return from_rational(find_delta_split(element(model, a), element(model, b), to_rational(eps)));
  });
  m.def("trace", [](py::sequence const& weights, py::sequence const& a) {
    auto model = FinXModel::numbered(a.size());
    return from_ext(trace_eval(TraceVector(model, to_fn(a.size(), weights)), element(model, a)));
  });
}
