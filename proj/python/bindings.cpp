#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "img/angles.hpp"
#include "img/classify.hpp"
#include "img/dot.hpp"
#include "img/endomorphism.hpp"
#include "img/kneading.hpp"
#include "img/nucleus.hpp"
#include "img/parse.hpp"
#include "img/presentations.hpp"
#include "img/selfsimilar.hpp"
#include "img/witnesses.hpp"

namespace py = pybind11;
using namespace img;

namespace {

Word word_of(const AutomatonSpec& spec, const std::string& text) {
  if (text.empty()) return Word{};
  return parse_word(text, spec);
}

std::vector<std::string> formatted(const std::vector<Word>& words, const AutomatonSpec& spec) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(format_word(w, spec));
  return out;
}

py::object order_of(const AutomatonSpec& spec, const std::string& word, const TauTable& tau,
                    const OrderOptions& opts) {
  const OrderResult r = order_probe(word_of(spec, word), spec, tau, opts);
  if (const auto* f = std::get_if<FiniteOrder>(&r)) return py::int_(f->order);
  if (std::holds_alternative<InfiniteOrder>(r)) return py::float_(std::numeric_limits<double>::infinity());
  return py::none();
}

EndomorphismData endo(const KneadingGroup& g) { return derive_endomorphism_parameters(g); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Automaton groups K_v and K_{w,v} from kneading data";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NonContractingError>(m, "NonContractingError", PyExc_RuntimeError);

  py::class_<AutomatonSpec>(m, "Automaton")
      .def_static("from_json", [](const std::string& text) { return spec_from_json(text); })
      .def("to_json", [](const AutomatonSpec& s) { return spec_to_json(s); })
      .def("names", &AutomatonSpec::names)
      .def("__len__", &AutomatonSpec::size)
      .def("reduce", [](const AutomatonSpec& s, const std::string& w) { return format_word(word_of(s, w), s); })
      .def("is_trivial", [](const AutomatonSpec& s, const std::string& w) { return is_trivial(word_of(s, w), s); })
      .def("equal", [](const AutomatonSpec& s, const std::string& g, const std::string& h) {
        return equal(word_of(s, g), word_of(s, h), s);
      })
      .def("act", [](const AutomatonSpec& s, const std::string& w, const std::string& v) {
        return act(word_of(s, w), Vertex::parse(v), s).str();
      })
      .def("sections", [](const AutomatonSpec& s, const std::string& w) {
        const WreathPair p = wreath_decompose(word_of(s, w), s);
        return py::make_tuple(format_word(p.section0, s), format_word(p.section1, s), p.swap);
      })
      .def("orbit", [](const AutomatonSpec& s, const std::string& w, unsigned depth) {
        std::vector<std::vector<std::string>> out;
        for (const auto& c : orbit_on_level(word_of(s, w), depth, s)) {
          out.emplace_back();
          for (const Vertex& v : c) out.back().push_back(v.str());
        }
        return out;
      }, py::arg("word"), py::arg("depth"))
      .def("tau", [](const AutomatonSpec& s, const std::string& w) {
        return to_string(tau(word_of(s, w), generator_tau(s)));
      })
      .def("order", [](const AutomatonSpec& s, const std::string& w) {
        return order_of(s, w, generator_tau(s), {});
      })
      .def("nucleus", [](const AutomatonSpec& s) { return formatted(nucleus_closure(s, standard_seed(s)), s); })
      .def("classify", [](const AutomatonSpec& s) {
        std::vector<std::pair<std::string, std::string>> out;
        for (std::uint32_t i = 0; i < s.size(); ++i) out.emplace_back(s.state(i).name, describe(classify_state(i, s)));
        return out;
      })
      .def("moore_dot", [](const AutomatonSpec& s) { return moore_dot(s); });

  py::class_<KneadingGroup>(m, "KneadingGroup")
      .def_static("kv", &KneadingGroup::kv, py::arg("v"))
      .def_static("kwv", &KneadingGroup::kwv, py::arg("w"), py::arg("v"))
      .def_property_readonly("name", &KneadingGroup::name)
      .def_property_readonly("n", &KneadingGroup::n)
      .def_property_readonly("k", &KneadingGroup::k)
      .def_property_readonly("periodic", &KneadingGroup::periodic)
      .def_property_readonly("kneading", [](const KneadingGroup& g) { return g.kneading().str(); })
      .def_property_readonly("d", [](const KneadingGroup& g) { return g.period().d; })
      .def_property_readonly("automaton", &KneadingGroup::spec)
      .def("is_trivial", [](const KneadingGroup& g, const std::string& w) {
        return is_trivial(word_of(g.spec(), w), g.spec());
      })
      .def("equal", [](const KneadingGroup& g, const std::string& a, const std::string& b) {
        return equal(word_of(g.spec(), a), word_of(g.spec(), b), g.spec());
      })
      .def("order", [](const KneadingGroup& g, const std::string& w) {
        return order_of(g.spec(), w, g.tau_table(), g.order_options());
      })
      .def("is_level_transitive", [](const KneadingGroup& g, const std::string& w) {
        return is_level_transitive_element(word_of(g.spec(), w), g.tau_table());
      })
      .def("abelianize", [](const KneadingGroup& g, const std::string& w) {
        return abelianize(word_of(g.spec(), w), g).coords;
      })
      .def("nucleus", [](const KneadingGroup& g) {
        return formatted(nucleus_closure(g.spec(), standard_seed(g.spec())), g.spec());
      })
      .def("nucleus_closed_form", [](const KneadingGroup& g) { return formatted(nucleus_closed_form(g), g.spec()); })
      .def("phi", [](const KneadingGroup& g, const std::string& w) {
        const Word x = word_of(g.spec(), w);
        return format_word(g.periodic() ? phi_kv(x, g) : phi_kwv(x, g, endo(g)), g.spec());
      })
      .def("endomorphism", [](const KneadingGroup& g) {
        const EndomorphismData d = endo(g);
        py::dict out;
        out["m"] = d.m;
        out["r"] = format_word(d.r, g.spec());
        out["s"] = format_word(d.s, g.spec());
        out["t"] = format_word(d.t, g.spec());
        out["u"] = format_word(d.u, g.spec());
        out["ok"] = d.all_ok();
        return out;
      })
      .def("witnesses", [](const KneadingGroup& g) {
        const WitnessReport r = branch_witnesses(g);
        std::vector<std::tuple<std::string, bool, std::string>> lines;
        for (const auto& l : r.lines) lines.emplace_back(l.name, l.pass, l.detail);
        return py::make_tuple(r.summary, lines);
      })
      .def("relators", [](const KneadingGroup& g, unsigned levels) {
        return formatted(presentation_relators(g, levels), g.spec());
      }, py::arg("levels") = 1)
      .def("check_presentation", [](const KneadingGroup& g, unsigned levels) {
        py::gil_scoped_release release;
        const auto words = presentation_relators(g, levels);
        const RelatorReport r = verify_relators(words, g.spec());
        return std::make_tuple(r.total, r.distinct, r.failures.size());
      }, py::arg("levels") = 1)
      .def("hnn", [](const KneadingGroup& g) {
        std::optional<EndomorphismData> d;
        if (!g.periodic()) d = endo(g);
        const PresentationDoc doc = emit_hnn(g, d ? &*d : nullptr);
        py::dict out;
        out["generators"] = doc.generators;
        out["relators"] = doc.relators;
        out["p"] = doc.p;
        out["q"] = doc.q;
        return out;
      })
      .def("mirror_check", [](const KneadingGroup& g) { return mirror_conjugator_check(g.kneading()); })
      .def("recurrence_check", [](const KneadingGroup& g) { return recurrence_check(g.spec()); })
      .def("__repr__", [](const KneadingGroup& g) { return "<KneadingGroup " + g.name() + ">"; });

  m.def("doubling_orbit", [](const std::string& angle) {
    const DoublingOrbit o = doubling_orbit(Angle::parse(angle));
    std::vector<std::string> orbit;
    for (const Angle& a : o.orbit) orbit.push_back(a.str());
    return py::make_tuple(orbit, o.preperiod, o.period);
  });
  m.def("itinerary", [](const std::string& theta, const std::string& alpha, std::size_t length, bool literal) {
    return itinerary(Angle::parse(theta), Angle::parse(alpha), length, literal);
  }, py::arg("theta"), py::arg("alpha"), py::arg("length"), py::arg("literal") = false);
  m.def("kneading_sequence", [](const std::string& angle, bool literal) {
    const KneadingResult k = kneading_sequence(Angle::parse(angle), literal);
    py::dict out;
    out["raw"] = k.raw();
    out["kind"] = k.canonical.is_periodic() ? "periodic" : "preperiodic";
    out["w"] = k.canonical.w();
    out["v"] = k.canonical.v();
    out["preperiod"] = k.orbit.preperiod;
    out["period"] = k.orbit.period;
    out["kneading_period"] = k.kneading_period;
    return out;
  }, py::arg("angle"), py::arg("literal") = false);
  m.def("group_from_angle", [](const std::string& angle) { return group_from_angle(Angle::parse(angle)); });
}
