#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tkklab/commands.hpp"
#include "tkklab/config.hpp"
#include "tkklab/field.hpp"
#include "tkklab/geometry.hpp"

namespace py = pybind11;
using namespace tkk;

namespace {

CommandOverrides overrides(std::optional<std::uint64_t> seed, std::optional<std::size_t> samples, std::optional<unsigned> threads,
                           bool large, std::optional<std::string> out) {
  CommandOverrides o;
  o.seed = seed;
  o.samples = samples;
  o.threads = threads;
  o.large = large;
  o.out = std::move(out);
  return o;
}

ConfigFormat format_of(const std::string& fmt) {
  if (fmt == "toml") return ConfigFormat::toml;
  if (fmt == "json") return ConfigFormat::json;
  throw std::invalid_argument("format must be 'toml' or 'json'");
}

py::dict config_dict(const RunConfig& c) {
  py::dict field, algebra, run, d;
  field["type"] = c.field.type;
  field["p"] = c.field.p;
  field["modulus"] = c.field.modulus;
  algebra["family"] = c.algebra.family;
  algebra["base"] = c.algebra.base;
  algebra["params"] = c.algebra.params;
  algebra["division"] = c.algebra.division;
  algebra["eta"] = c.algebra.eta;
  algebra["cubic"] = c.algebra.cubic;
  algebra["kind"] = c.algebra.kind;
  run["seed"] = c.run.seed;
  run["samples"] = c.run.samples;
  run["threads"] = c.run.threads;
  run["large"] = c.run.large;
  d["field"] = field;
  d["algebra"] = algebra;
  d["run"] = run;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact structurable algebras, TKK Lie algebras and their geometries";
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);

  py::class_<FiniteField>(m, "FiniteField")
      .def(py::init<std::uint32_t, std::vector<std::uint32_t>>(), py::arg("p"), py::arg("modulus") = std::vector<std::uint32_t>{})
      .def_property_readonly("characteristic", &FiniteField::characteristic)
      .def_property_readonly("degree", &FiniteField::degree)
      .def_property_readonly("order", &FiniteField::order)
      .def_property_readonly("modulus", &FiniteField::modulus)
      .def("add", &FiniteField::add)
      .def("sub", &FiniteField::sub)
      .def("neg", &FiniteField::neg)
      .def("mul", &FiniteField::mul)
      .def("inv", &FiniteField::inv);

  m.def("command_names", &command_names);

  m.def(
      "parse_config",
      [](const std::string& text, const std::string& fmt) { return config_dict(parse_config(text, format_of(fmt))); },
      py::arg("text"), py::arg("format") = "toml");

  // Returns (exit code, stdout, stderr).
  m.def(
      "run",
      [](const std::string& cmd, const std::string& target, std::optional<std::uint64_t> seed, std::optional<std::size_t> samples,
         std::optional<unsigned> threads, bool large, std::optional<std::string> out) {
        std::ostringstream o, e;
        int rc;
        {
          py::gil_scoped_release nogil;
          rc = run_command(cmd, target, overrides(seed, samples, threads, large, out), o, e);
        }
        return py::make_tuple(rc, o.str(), e.str());
      },
      py::arg("command"), py::arg("target"), py::arg("seed") = py::none(), py::arg("samples") = py::none(),
      py::arg("threads") = py::none(), py::arg("large") = false, py::arg("out") = py::none());

  m.def(
      "run_text",
      [](const std::string& cmd, const std::string& text, const std::string& fmt, std::optional<std::uint64_t> seed,
         std::optional<std::size_t> samples, std::optional<unsigned> threads, bool large, std::optional<std::string> out) {
        auto cfg = parse_config(text, format_of(fmt));
        std::ostringstream o, e;
        int rc;
        {
          py::gil_scoped_release nogil;
          rc = dispatch(cmd, cfg, overrides(seed, samples, threads, large, out), o, e);
        }
        return py::make_tuple(rc, o.str(), e.str());
      },
      py::arg("command"), py::arg("text"), py::arg("format") = "toml", py::arg("seed") = py::none(), py::arg("samples") = py::none(),
      py::arg("threads") = py::none(), py::arg("large") = false, py::arg("out") = py::none());

  m.def(
      "polygon_stats",
      [](const std::string& json_text, unsigned threads) {
        auto j = nlohmann::json::parse(json_text);
        auto k = field_from_json(j);
        auto g = geometry_from_json(j, k);
        auto s = polygon_stats(g, threads);
        py::dict d;
        d["points"] = s.points;
        d["lines"] = s.lines;
        d["girth"] = s.graph.girth;
        d["diameter"] = s.graph.diameter;
        d["generalized"] = s.generalized;
        d["thin"] = s.thin;
        d["verdict"] = s.verdict;
        return d;
      },
      py::arg("json_text"), py::arg("threads") = 1);
}
