#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "pcx/errors.hpp"
#include "pcx/instances.hpp"
#include "pcx/io.hpp"
#include "pcx/pcmatrix.hpp"

namespace py = pybind11;

namespace {

pcx::Group named_group(const std::string& name) { return pcx::io::group_by_name(name); }

pcx::PCMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows,
                               const std::string& group) {
  return pcx::PCMatrix::from_rows(named_group(group), rows);
}

/// Builds an element of `g` from a float, or from a nested pair of values
/// for product groups, or from a label string for finite groups.
pcx::Elem element_from_py(const pcx::Group& g, const py::handle& value) {
  if (g.is_product()) {
    if (!py::isinstance<py::tuple>(value) && !py::isinstance<py::list>(value)) {
      throw pcx::invalid_element("expected a pair (left, right) for a product group element");
    }
    py::sequence seq = py::reinterpret_borrow<py::sequence>(value);
    if (seq.size() != 2) {
      throw pcx::invalid_element("expected exactly two components for a product group element");
    }
    return g.pair(element_from_py(g.left_factor(), seq[0]),
                  element_from_py(g.right_factor(), seq[1]));
  }
  if (g.is_finite()) {
    return g.element(py::cast<std::string>(value));
  }
  return g.element(py::cast<double>(value));
}

/// A selector-built indicator with the handful of operations the python
/// surface needs: evaluation, symmetrization, inversion.
class PyIndicator {
 public:
  PyIndicator(pcx::IndicatorMap map, std::string selector)
      : map_(std::move(map)), selector_(std::move(selector)) {}

  double call(const py::object& x, const py::object& y, const py::object& z) const {
    const pcx::Group& g = map_.domain();
    return map_.codomain().value(
        map_(element_from_py(g, x), element_from_py(g, y), element_from_py(g, z)));
  }

  std::string name() const { return map_.name(); }
  std::string selector() const { return selector_; }
  std::string domain_name() const { return std::string(map_.domain().name()); }

  PyIndicator symmetrized() const {
    return PyIndicator(pcx::pairwise_symmetrization(map_), "symmetrized:" + selector_);
  }
  PyIndicator inverse() const {
    return PyIndicator(pcx::inverse_indicator(map_), "inverse(" + selector_ + ")");
  }

  const pcx::IndicatorMap& map() const { return map_; }

 private:
  pcx::IndicatorMap map_;
  std::string selector_;
};

py::dict report_to_dict(const pcx::TriadReport& report, const std::string& selector,
                        std::uint64_t seed, const pcx::AloGroup& codomain) {
  py::list worst;
  for (const pcx::TriadValue& t : report.worst) {
    py::dict item;
    item["i"] = t.i;
    item["j"] = t.j;
    item["k"] = t.k;
    item["value"] = codomain.value(t.value);
    worst.append(std::move(item));
  }
  py::dict out;
  out["indicator_value"] = codomain.value(report.indicator_value);
  out["consistent"] = report.consistent;
  out["worst"] = std::move(worst);
  out["n"] = report.n;
  out["indicator"] = selector;
  out["seed"] = seed;
  return out;
}

py::list law_reports_to_py(const std::vector<pcx::LawReport>& reports) {
  py::list out;
  for (const pcx::LawReport& report : reports) {
    py::list laws;
    for (const pcx::LawResult& law : report.laws) {
      py::list witnesses;
      for (const pcx::Witness& w : law.witnesses) witnesses.append(w.text);
      py::dict entry;
      entry["law"] = law.law;
      entry["samples"] = law.samples;
      entry["exhaustive"] = law.exhaustive;
      entry["failures"] = law.failure_count;
      entry["passed"] = law.passed();
      entry["witnesses"] = std::move(witnesses);
      laws.append(std::move(entry));
    }
    py::dict entry;
    entry["subject"] = report.subject;
    entry["passed"] = report.passed();
    entry["laws"] = std::move(laws);
    out.append(std::move(entry));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Inconsistency analysis of pairwise-comparisons matrices";
  m.attr("__version__") = "0.1.0";

  py::register_exception<pcx::error>(m, "PcxError");
  py::register_exception<pcx::parse_error>(m, "ParseError");
  py::register_exception<pcx::law_violation>(m, "LawViolation");
  py::register_exception<pcx::abelian_required>(m, "AbelianRequired");

  py::class_<PyIndicator>(m, "Indicator")
      .def("__call__", &PyIndicator::call, py::arg("x"), py::arg("y"), py::arg("z"),
           "Evaluate the indicator on a triple; the identity value means x*z == y")
      .def_property_readonly("name", &PyIndicator::name)
      .def_property_readonly("selector", &PyIndicator::selector)
      .def_property_readonly("domain", &PyIndicator::domain_name)
      .def("symmetrized", &PyIndicator::symmetrized,
           "Pairwise symmetrization: max of the indicator and its inverse")
      .def("inverse", &PyIndicator::inverse,
           "The companion indicator T(z^-1, y^-1, x^-1)")
      .def("__repr__",
           [](const PyIndicator& t) { return "<pcx.Indicator '" + t.selector() + "'>"; });

  m.def(
      "indicator", [](const std::string& selector) {
        return PyIndicator(pcx::parse_indicator(selector), selector);
      },
      py::arg("selector"),
      "Build an indicator from a selector: ki | sa:<base> | three-level[:<a>,<b>,<c>] | "
      "product:<sel>,<sel> | symmetrized:<sel>");

  m.def(
      "analyze",
      [](const std::vector<std::vector<double>>& rows, const std::string& indicator,
         const std::string& group, std::size_t top, std::uint64_t seed) {
        pcx::PCMatrix a = matrix_from_rows(rows, group);
        PyIndicator t(pcx::parse_indicator(indicator), indicator);
        pcx::TriadReport report = pcx::inconsistency_indicator(t.map(), a, top);
        return report_to_dict(report, indicator, seed, t.map().codomain());
      },
      py::arg("rows"), py::arg("indicator") = "ki", py::arg("group") = "multiplicative",
      py::arg("top") = 10, py::arg("seed") = pcx::default_seed,
      "Inconsistency indicator of a matrix given as a list of rows");

  m.def(
      "validate",
      [](const std::vector<std::vector<double>>& rows, const std::string& group) {
        py::list out;
        for (const pcx::PCViolation& v : pcx::validate_pc(matrix_from_rows(rows, group))) {
          py::dict item;
          item["kind"] =
              v.kind == pcx::PCViolation::Kind::diagonal ? "diagonal" : "reciprocity";
          item["i"] = v.i;
          item["j"] = v.j;
          item["message"] = v.message;
          out.append(std::move(item));
        }
        return out;
      },
      py::arg("rows"), py::arg("group") = "multiplicative",
      "Structural violations of the pairwise-comparisons shape (empty when valid)");

  m.def(
      "consistent",
      [](const std::vector<std::vector<double>>& rows, const std::string& group) {
        return pcx::is_consistent(matrix_from_rows(rows, group));
      },
      py::arg("rows"), py::arg("group") = "multiplicative",
      "True when every triple satisfies a_ik * a_kj == a_ij");

  m.def(
      "transport",
      [](const std::vector<std::vector<double>>& rows, double base,
         const std::string& direction, const std::string& group) {
        pcx::PCMatrix a = matrix_from_rows(rows, group);
        if (direction == "to-additive") return pcx::to_additive_scale(a, base).rows();
        if (direction == "to-multiplicative") return pcx::to_multiplicative_scale(a, base).rows();
        throw pcx::parse_error("unknown direction '" + direction +
                               "'; expected 'to-additive' or 'to-multiplicative'");
      },
      py::arg("rows"), py::arg("base"), py::arg("direction") = "to-additive",
      py::arg("group") = "multiplicative",
      "Rewrite a matrix between multiplicative and additive scales");

  m.def(
      "axioms",
      [](std::size_t samples, std::uint64_t seed, bool negative_controls) {
        pcx::InstanceCatalog catalog;
        std::vector<pcx::LawReport> reports = catalog.law_suite(samples, seed);
        if (negative_controls) {
          for (auto& r : pcx::negative_control_reports(samples, seed)) {
            reports.push_back(std::move(r));
          }
        }
        return law_reports_to_py(reports);
      },
      py::arg("samples") = 200, py::arg("seed") = pcx::default_seed,
      py::arg("negative_controls") = false,
      "Law-check reports for every construction in the built-in registry");
}
