// Copyright 2026 The spinclass Authors
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

// Python bindings. Documents cross the boundary as JSON text in the same
// schemas the command-line tool reads and writes; the package wraps them
// into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "spinclass/certify.hpp"
#include "spinclass/io.hpp"
#include "spinclass/spinmap.hpp"
#include "spinclass/symtensor.hpp"

namespace py = pybind11;
using spinclass::io::Json;

namespace {

spinclass::SymTensor tensor_arg(const std::string& text) {
  return spinclass::io::tensor_from_json(Json::parse(text));
}

std::string out(const Json& j) { return spinclass::io::dump(j, -1); }

spinclass::SolverConfig config(int grid, int starts, int max_iter, double tol_psd, double tol_sos,
                               double tau_dec, std::uint64_t seed) {
  spinclass::SolverConfig cfg;
  cfg.grid_size = grid;
  cfg.starts = starts;
  cfg.max_iter = max_iter;
  cfg.tol_psd = tol_psd;
  cfg.tol_sos = tol_sos;
  cfg.tau_dec = tau_dec;
  cfg.seed = seed;
  cfg.validate();
  return cfg;
}

Json sphere_json(const spinclass::SphereMin& s) {
  Json j;
  j["value"] = s.value;
  j["point"] = std::vector<double>(s.point.data(), s.point.data() + s.point.size());
  return j;
}

}  // namespace

PYBIND11_MODULE(_spinclass, m) {
  m.doc() = "Classicality certification for spin states (JSON text interface)";

  py::register_exception<Json::parse_error>(m, "ParseError", PyExc_ValueError);

  m.def("density_to_tensor", [](const std::string& rho) {
    return out(spinclass::io::tensor_to_json(
        spinclass::density_to_tensor(spinclass::io::density_from_json(Json::parse(rho)))));
  });

  m.def("tensor_to_density", [](const std::string& a) {
    const auto td = spinclass::tensor_to_density(tensor_arg(a));
    if (!td.regular_symmetric)
      throw spinclass::InvalidArgument("tensor is not regular symmetric");
    return out(spinclass::io::density_to_json(td.rho));
  });

  m.def("mixture_to_tensor", [](const std::string& mix) {
    const auto mx = spinclass::io::mixture_from_json(Json::parse(mix));
    return out(spinclass::io::tensor_to_json(spinclass::classical_mixture(mx.n_spins, mx.terms).tensor));
  });

  m.def("coherent_tensor", [](int n, double theta, double phi) {
    return out(spinclass::io::tensor_to_json(
        spinclass::coherent_tensor(n, spinclass::CoherentLabel::make(theta, phi))));
  });

  m.def("is_regular_symmetric", [](const std::string& a, double tol) {
    return spinclass::is_regular_symmetric(tensor_arg(a), tol);
  }, py::arg("tensor"), py::arg("tol") = 1e-10);

  m.def("evaluate", [](const std::string& a, const std::vector<double>& x) {
    const spinclass::SymTensor t = tensor_arg(a);
    if (static_cast<int>(x.size()) != t.dim())
      throw spinclass::InvalidArgument("point length must equal the tensor dimension");
    return spinclass::eval(t, Eigen::Map<const Eigen::VectorXd>(x.data(), t.dim()));
  });

#define SPINCLASS_CFG_ARGS                                                                    \
  py::arg("grid") = 400, py::arg("starts") = 64, py::arg("max_iter") = 5000,                  \
  py::arg("tol_psd") = 1e-8, py::arg("tol_sos") = 1e-8, py::arg("tau_dec") = 1e-6,            \
  py::arg("seed") = 0

  m.def("classify", [](const std::string& a, int grid, int starts, int max_iter, double tol_psd,
                       double tol_sos, double tau_dec, std::uint64_t seed) {
    const auto cfg = config(grid, starts, max_iter, tol_psd, tol_sos, tau_dec, seed);
    return out(spinclass::io::verdict_to_json(spinclass::classify(tensor_arg(a), cfg)));
  }, py::arg("tensor"), SPINCLASS_CFG_ARGS);

  m.def("decompose", [](const std::string& a, int grid, int starts, int max_iter, double tol_psd,
                        double tol_sos, double tau_dec, std::uint64_t seed) -> py::object {
    const auto cfg = config(grid, starts, max_iter, tol_psd, tol_sos, tau_dec, seed);
    const auto r = spinclass::regular_decompose(tensor_arg(a), cfg);
    if (r.status != spinclass::DecomposeStatus::kFound || !r.dec) return py::none();
    return py::str(out(spinclass::io::decomposition_to_json(*r.dec)));
  }, py::arg("tensor"), SPINCLASS_CFG_ARGS);

  m.def("sos_check", [](const std::string& a, int grid, int starts, int max_iter, double tol_psd,
                        double tol_sos, double tau_dec, std::uint64_t seed) {
    const auto cfg = config(grid, starts, max_iter, tol_psd, tol_sos, tau_dec, seed);
    const auto r = spinclass::sos_check(tensor_arg(a), cfg);
    Json j;
    j["status"] = r.status == spinclass::SosStatus::kCertified ? "Certified" : "NotCertified";
    j["iterations"] = r.iterations;
    j["constraint_residual"] = r.constraint_residual;
    j["min_eigenvalue"] = r.min_eigenvalue;
    return out(j);
  }, py::arg("tensor"), SPINCLASS_CFG_ARGS);

  m.def("min_z_eig", [](const std::string& a, int grid, int starts, int max_iter, double tol_psd,
                        double tol_sos, double tau_dec, std::uint64_t seed) {
    const auto cfg = config(grid, starts, max_iter, tol_psd, tol_sos, tau_dec, seed);
    return out(sphere_json(spinclass::min_z_eig(tensor_arg(a), cfg)));
  }, py::arg("tensor"), SPINCLASS_CFG_ARGS);

  m.def("restricted_min", [](const std::string& a, int grid, int starts, int max_iter,
                             double tol_psd, double tol_sos, double tau_dec, std::uint64_t seed) {
    const auto cfg = config(grid, starts, max_iter, tol_psd, tol_sos, tau_dec, seed);
    return out(sphere_json(spinclass::restricted_min(tensor_arg(a), cfg)));
  }, py::arg("tensor"), SPINCLASS_CFG_ARGS);

#undef SPINCLASS_CFG_ARGS
}
