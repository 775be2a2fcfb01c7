// Copyright 2026 The abelshift Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Python module abelshift._core. Functions take group moduli plus flat
// tables (row-major, dim values per element); runs go through the same JSON
// instance format as the command line tool.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "abelshift/analysis.hpp"
#include "abelshift/bentlib.hpp"
#include "abelshift/error.hpp"
#include "abelshift/numchar.hpp"
#include "cli/commands.hpp"
#include "cli/instance_io.hpp"
#include "cli/report_io.hpp"

namespace py = pybind11;
using namespace abelshift;

namespace {

VectorFn make_fn(const std::vector<std::int64_t>& moduli, std::vector<Complex> values, std::size_t dim,
                 Domain domain = Domain::group) {
  return VectorFn(GroupSpec(moduli), dim, std::move(values), domain);
}

std::string run_json(const std::string& text, const std::vector<std::string>& algorithms,
                     const std::string& backend, double threshold) {
  const cli::InstanceFile file = cli::parse_instance(cli::json::parse(text));
  const cli::Materialized m = cli::materialize(file);
  RunOptions opt;
  if (backend == "auto") {
    opt.backend = cli::auto_backend(m.instance.group());
  } else if (backend == "dense" || backend == "lazy") {
    opt.backend = backend == "dense" ? Backend::dense : Backend::lazy;
  } else {
    throw cli::InputError("backend", "expected auto, dense or lazy");
  }
  std::vector<RunReport> runs;
  for (const auto& id : algorithms) runs.push_back(cli::run_algorithm(id, m, opt));
  return cli::report_json(file, m.notes, runs, threshold).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hidden shift simulation on finite abelian groups";

  py::register_exception<cli::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<Error>(m, "AbelshiftError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const cli::json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("fourier", [](const std::vector<std::int64_t>& moduli, std::vector<Complex> values, std::size_t dim) {
    return fourier(make_fn(moduli, std::move(values), dim)).table();
  }, py::arg("moduli"), py::arg("values"), py::arg("dim") = 1);
  m.def("inverse_fourier", [](const std::vector<std::int64_t>& moduli, std::vector<Complex> values, std::size_t dim) {
    return inverse_fourier(make_fn(moduli, std::move(values), dim, Domain::dual)).table();
  }, py::arg("moduli"), py::arg("values"), py::arg("dim") = 1);
  m.def("is_bent", [](const std::vector<std::int64_t>& moduli, std::vector<Complex> values, std::size_t dim) {
    return is_bent(make_fn(moduli, std::move(values), dim));
  }, py::arg("moduli"), py::arg("values"), py::arg("dim") = 1);
  m.def("forrelation", [](const std::vector<std::int64_t>& moduli, std::vector<Complex> g, std::vector<Complex> h) {
    return forrelation(make_fn(moduli, std::move(g), 1), make_fn(moduli, std::move(h), 1, Domain::dual));
  }, py::arg("moduli"), py::arg("g"), py::arg("h"));

  m.def("algorithms", &cli::algorithm_ids);
  m.def("run_json", &run_json, py::arg("instance"), py::arg("algorithms") = std::vector<std::string>{"approx-subset"},
        py::arg("backend") = "auto", py::arg("threshold") = 0.5,
        "Run algorithms on a JSON instance; returns the JSON report.");

  m.def("dirichlet_character", [](std::int64_t n, std::size_t index) {
    const auto c = dirichlet_character(n, index);
    py::dict d;
    d["values"] = c.values;
    d["primitive"] = c.primitive;
    d["conductor"] = c.conductor;
    return d;
  }, py::arg("n"), py::arg("index"));
  m.def("dirichlet_count", &dirichlet_count, py::arg("n"));
  m.def("predicted_prob_dirichlet", [](std::int64_t n, std::size_t index) {
    return predicted_prob_dirichlet(dirichlet_character(n, index)).p;
  }, py::arg("n"), py::arg("index"));
  m.def("ffield_character", [](std::int64_t p, std::size_t k, std::size_t index, std::vector<std::int64_t> poly) {
    return ffield_character(p, k, std::move(poly), index).values;
  }, py::arg("p"), py::arg("k"), py::arg("index"), py::arg("poly") = std::vector<std::int64_t>{});
  m.def("predicted_prob_ffield", [](std::int64_t p, std::size_t k, std::size_t index, std::vector<std::int64_t> poly) {
    return predicted_prob_ffield(ffield_character(p, k, std::move(poly), index));
  }, py::arg("p"), py::arg("k"), py::arg("index"), py::arg("poly") = std::vector<std::int64_t>{});

  m.def("enumerate_b1_z3", [] {
    std::vector<std::vector<Complex>> out;
    for (const auto& f : enumerate_B1_Z3()) out.push_back(f.table());
    return out;
  });
  m.def("quantize_value", [](Complex w, int bits) { return quantize_value(w, QuantizationScheme::with_bits(bits)); },
        py::arg("w"), py::arg("bits"));
  m.attr("QUANTIZATION_C") = kQuantizationC;
}
