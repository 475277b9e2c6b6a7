#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mckay/errors.hpp"
#include "mckay/report.hpp"

namespace py = pybind11;

namespace {

mckay::CoactionPair load(const std::string& text, std::size_t max_cosets) {
  return mckay::validate_pair(
      mckay::enumerate_group(mckay::parse_presentation(text), max_cosets));
}

py::object from_json(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "McKay quivers and invariant rings for group gradings of k<u,v>/(u^2 - v^2)";

  py::register_exception<mckay::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<mckay::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<mckay::ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<mckay::InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<mckay::Group, std::shared_ptr<mckay::Group>>(m, "Group")
      .def_property_readonly("order", &mckay::Group::order)
      .def_property_readonly("a", &mckay::Group::a)
      .def_property_readonly("b", &mckay::Group::b)
      .def("mul", &mckay::Group::mul)
      .def("inv", &mckay::Group::inv)
      .def("name", &mckay::Group::name)
      .def("normal_form", [](const mckay::Group& g, mckay::Element x) {
        return mckay::spell(g.normal_form(x));
      })
      .def("element", [](const mckay::Group& g, const std::string& word) {
        return g.evaluate(mckay::parse_word(word));
      }, "Element named by a word such as 'a^2 b'")
      .def("element_order", [](const mckay::Group& g, mckay::Element x) {
        return mckay::element_order(g, x);
      })
      .def("to_json", [](const mckay::Group& g) { return mckay::group_to_json(g); });

  py::class_<mckay::CoactionPair>(m, "CoactionPair")
      .def_property_readonly("group", [](const mckay::CoactionPair& p) {
        return std::const_pointer_cast<mckay::Group>(p.shared_group());
      })
      .def_property_readonly("m", &mckay::CoactionPair::m)
      .def_property_readonly("period", &mckay::CoactionPair::period);

  m.def("relators", [](const std::string& text) {
    std::vector<std::string> out;
    for (const auto& w : mckay::parse_presentation(text).relators) out.push_back(mckay::spell(w));
    return out;
  }, py::arg("text"), "Relator words of a presentation, spelled with A = a^-1 and B = b^-1");

  m.def("enumerate_group", [](const std::string& text, std::size_t max_cosets) {
    return std::make_shared<mckay::Group>(
        mckay::enumerate_group(mckay::parse_presentation(text), max_cosets));
  }, py::arg("text"), py::arg("max_cosets") = mckay::kDefaultMaxCosets);

  m.def("gamma_m", [](int mm) { return mckay::gamma_m_presentation(mm).source_text; },
        py::arg("m"), "Presentation text of Gamma_m");

  m.def("coaction", &load, py::arg("text"), py::arg("max_cosets") = mckay::kDefaultMaxCosets);

  m.def("toroidal_grid", [](const mckay::CoactionPair& p) {
    auto t = mckay::toroidal_grid(p);
    std::vector<std::vector<mckay::Element>> rows(t.period);
    for (std::size_t r = 0; r < t.period; ++r)
      for (std::size_t c = 0; c < t.period; ++c) rows[r].push_back(t.at(r, c));
    return rows;
  });

  m.def("graded_dimension", [](const mckay::CoactionPair& p, mckay::Element i, mckay::Element j,
                               std::size_t len) { return mckay::graded_dimension(p, i, j, len); });

  m.def("quotient_dimension", [](const mckay::CoactionPair& p, mckay::Element i, mckay::Element j) {
    return from_json(mckay::to_json(mckay::quotient_dimension(p, i, j)));
  });

  m.def("auslander_check", [](const mckay::CoactionPair& p) {
    return from_json(mckay::to_json(mckay::auslander_check(p)));
  });

  m.def("regularity_check", [](const mckay::CoactionPair& p) {
    auto ev = mckay::regularity_check(p);
    py::dict d;
    d["regular"] = ev.is_regular;
    d["order_method"] = ev.order_method;
    d["basis_method"] = ev.basis_method;
    return d;
  });

  m.def("hilbert_basis", [](const mckay::CoactionPair& p) {
    py::list out;
    for (const auto& e : mckay::hilbert_basis(p)) {
      py::dict d;
      d["pos"] = py::make_tuple(e.pos.row, e.pos.col);
      d["degree"] = e.degree;
      d["monomial"] = e.monomial;
      out.append(d);
    }
    return out;
  });

  m.def("hilbert_series", &mckay::hilbert_series, py::arg("pair"), py::arg("max_degree"));

  m.def("analyze", [](const std::string& text, std::size_t max_cosets) {
    mckay::AnalysisOptions opts;
    opts.max_cosets = max_cosets;
    return from_json(mckay::to_json(mckay::analyze(text, opts)));
  }, py::arg("text"), py::arg("max_cosets") = mckay::kDefaultMaxCosets);

  m.def("survey_csv", [](const std::string& list_text, std::size_t jobs) {
    py::gil_scoped_release release;
    return mckay::survey_csv(mckay::survey(list_text, jobs));
  }, py::arg("list_text"), py::arg("jobs") = 1);
}
