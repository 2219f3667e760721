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

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "spinclass/certify.hpp"
#include "spinclass/io.hpp"
#include "spinclass/random.hpp"
#include "spinclass/spinmap.hpp"
#include "spinclass/symtensor.hpp"

namespace spinclass::cli {

namespace {

using io::Json;

// Raised for problems with the invocation or the input document.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  double tol = -1.0;  // negative: keep the per-check default
  double tau_dec = -1.0;
  int grid = -1;
  int starts = -1;
  std::uint64_t seed = 0;
  bool seed_set = false;

  // command-specific
  std::string as = "tensor";
  std::string as_random = "mixture";
  int n_spins = 0;
  int terms = 1;
  double theta = 0.0, phi = 0.0;
  std::vector<double> axis;
  double angle = 0.0;

  SolverConfig solver() const {
    SolverConfig cfg;
    if (tol > 0) cfg.tol_psd = cfg.tol_sos = tol;
    if (tau_dec > 0) cfg.tau_dec = tau_dec;
    if (grid > 0) cfg.grid_size = grid;
    if (starts > 0) cfg.starts = starts;
    if (seed_set) cfg.seed = seed;
    return cfg;
  }
};

struct Report {
  int code = kExitPass;
  Json body;
};

Json vec_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

Json read_input(const Options& o) {
  if (o.input.empty()) throw UsageError("this command needs --input");
  std::string text;
  if (o.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(o.input);
    if (!f) throw UsageError("cannot open input file: " + o.input);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

SymTensor tensor_of_mixture(const io::Mixture& mix) {
  return classical_mixture(mix.n_spins, mix.terms).tensor;
}

// Any input document, as a tensor.
SymTensor load_tensor(const Json& j) {
  switch (io::detect(j)) {
    case io::DocKind::kTensor:
      return io::tensor_from_json(j);
    case io::DocKind::kDensity:
      return density_to_tensor(io::density_from_json(j));
    case io::DocKind::kMixture:
      return tensor_of_mixture(io::mixture_from_json(j));
  }
  throw UsageError("unrecognized document");
}

Json materialize(const io::Mixture& mix, const std::string& as) {
  if (as == "mixture") return io::mixture_to_json(mix);
  const ClassicalMixture cm = classical_mixture(mix.n_spins, mix.terms);
  if (as == "density") return io::density_to_json(cm.rho);
  return io::tensor_to_json(cm.tensor);
}

Report cmd_map(const Options& o) {
  const Json j = read_input(o);
  Report r;
  switch (io::detect(j)) {
    case io::DocKind::kDensity:
      r.body = io::tensor_to_json(density_to_tensor(io::density_from_json(j)));
      break;
    case io::DocKind::kMixture:
      r.body = io::tensor_to_json(tensor_of_mixture(io::mixture_from_json(j)));
      break;
    case io::DocKind::kTensor: {
      const SymTensor a = io::tensor_from_json(j);
      if (a.dim() != 4) throw UsageError("only dimension-4 tensors map to spin states");
      if (a.order() > kMaxSpinN) throw UsageError("order too large for the density map");
      const TensorDensity td = tensor_to_density(a);
      if (!td.regular_symmetric) throw UsageError("tensor is not regular symmetric; it does not represent a state");
      r.body = io::density_to_json(td.rho);
      break;
    }
  }
  return r;
}

Report cmd_classify(const Options& o) {
  const SymTensor a = load_tensor(read_input(o));
  const Verdict v = classify(a, o.solver());
  Report r;
  r.body = io::verdict_to_json(v);
  r.code = v.status == Status::kClassical ? kExitPass
           : v.status == Status::kNotClassical ? kExitFail
                                               : kExitInconclusive;
  return r;
}

Report cmd_check_regsym(const Options& o) {
  const SymTensor a = load_tensor(read_input(o));
  const double tol = o.tol > 0 ? o.tol : 1e-10;
  const RegularSymmetryDefect d = regular_symmetry_defect(a);
  const bool pass = d.max_violation <= tol * std::max(1.0, a.max_abs());
  Report r;
  r.body["check"] = "regsym";
  r.body["pass"] = pass;
  r.body["max_violation"] = d.max_violation;
  if (!pass) r.body["trailing"] = d.trailing;
  r.code = pass ? kExitPass : kExitFail;
  return r;
}

Report cmd_check_psd(const Options& o) {
  const SymTensor a = load_tensor(read_input(o));
  if (a.order() % 2 != 0) throw UsageError("check psd needs an even-order tensor");
  const SolverConfig cfg = o.solver();
  const SphereMin z = min_z_eig(a, cfg);
  const bool pass = z.value >= -cfg.tol_psd * a.max_abs();
  Report r;
  r.body["check"] = "psd";
  r.body["pass"] = pass;
  r.body["min_value"] = z.value;
  if (!pass) {
    Json w;
    w["kind"] = std::string(to_string(WitnessKind::kNegativePoint));
    w["point"] = vec_json(z.point);
    w["value"] = eval(a, z.point);
    r.body["witness"] = std::move(w);
  }
  r.code = pass ? kExitPass : kExitFail;
  return r;
}

Report cmd_check_restricted(const Options& o) {
  const SymTensor a = load_tensor(read_input(o));
  const SolverConfig cfg = o.solver();
  const SphereMin z = restricted_min(a, cfg);
  const bool pass = z.value >= -cfg.tol_psd * a.max_abs();
  Report r;
  r.body["check"] = "restricted";
  r.body["pass"] = pass;
  r.body["min_value"] = z.value;
  if (!pass) {
    const Eigen::VectorXd p = lift(z.point);
    Json w;
    w["kind"] = std::string(to_string(WitnessKind::kNegativeRegularPoint));
    w["point"] = vec_json(p);
    w["value"] = eval(a, p);
    r.body["witness"] = std::move(w);
  }
  r.code = pass ? kExitPass : kExitFail;
  return r;
}

Report cmd_check_sos(const Options& o) {
  const SymTensor a = load_tensor(read_input(o));
  if (a.order() % 2 != 0) throw UsageError("check sos needs an even-order tensor");
  const SosResult s = sos_check(a, o.solver());
  Report r;
  const bool ok = s.status == SosStatus::kCertified;
  r.body["check"] = "sos";
  r.body["status"] = ok ? "Certified" : "NotCertified";
  r.body["iterations"] = s.iterations;
  r.body["constraint_residual"] = s.constraint_residual;
  r.body["min_eigenvalue"] = s.min_eigenvalue;
  if (ok && s.cert) {
    Json g = Json::array();
    for (Eigen::Index i = 0; i < s.cert->gram.rows(); ++i) g.push_back(vec_json(s.cert->gram.row(i).transpose()));
    r.body["basis"] = s.cert->basis;
    r.body["gram"] = std::move(g);
  }
  r.code = ok ? kExitPass : kExitInconclusive;
  return r;
}

Report cmd_decompose(const Options& o) {
  const SymTensor a = load_tensor(read_input(o));
  if (!is_regular_symmetric(a, 1e-10 * std::max(1.0, a.max_abs())))
    throw UsageError("decompose needs a regular symmetric tensor");
  const DecomposeResult d = regular_decompose(a, o.solver());
  Report r;
  const bool found = d.status == DecomposeStatus::kFound;
  r.body["status"] = found ? "Found" : "NotFound";
  if (d.dec) r.body["decomposition"] = io::decomposition_to_json(*d.dec);
  if (found && a.order() % 2 == 1) r.body["odd_rows_consistent"] = check_odd_regular(a, *d.dec);
  r.code = found ? kExitPass : kExitInconclusive;
  return r;
}

Report cmd_rotate(const Options& o) {
  if (o.axis.size() != 3) throw UsageError("--axis needs three components");
  const Eigen::Vector3d axis(o.axis[0], o.axis[1], o.axis[2]);
  if (axis.norm() == 0.0) throw UsageError("--axis must be nonzero");
  const Json j = read_input(o);
  Report r;
  if (io::detect(j) == io::DocKind::kDensity) {
    const DensityMatrix rho = io::density_from_json(j);
    const ComplexMatrix u = spin_rotation(rho.n_spins(), axis, o.angle);
    r.body = io::density_to_json(DensityMatrix(rho.n_spins(), u * rho.matrix() * u.adjoint()));
  } else {
    const SymTensor a = load_tensor(j);
    if (a.dim() != 4) throw UsageError("rotate needs a dimension-4 tensor");
    r.body = io::tensor_to_json(rotate(a, rotation_matrix(axis, o.angle)));
  }
  return r;
}

Report cmd_gen_coherent(const Options& o) {
  io::Mixture mix;
  mix.n_spins = o.n_spins;
  mix.terms.push_back({1.0, CoherentLabel::make(o.theta, o.phi)});
  return {kExitPass, materialize(mix, o.as)};
}

Report cmd_gen_mixture(const Options& o) {
  const io::Mixture mix = io::mixture_from_json(read_input(o));
  const double total = std::accumulate(mix.terms.begin(), mix.terms.end(), 0.0,
                                       [](double s, const MixtureTerm& t) { return s + t.weight; });
  if (total <= 0.0) throw UsageError("mixture weights sum to zero");
  return {kExitPass, materialize(mix, o.as)};
}

Report cmd_gen_random_classical(const Options& o) {
  const int cap = (o.n_spins + 1) * (o.n_spins + 1) + 1;
  if (o.terms < 1 || o.terms > cap)
    throw UsageError("--terms must lie in [1, " + std::to_string(cap) + "]");
  Rng rng(o.seed);
  io::Mixture mix;
  mix.n_spins = o.n_spins;
  mix.terms = random_classical_terms(rng, o.terms);
  return {kExitPass, materialize(mix, o.as_random)};
}

// Presentation only: one "path: value" line per scalar.
void render_text(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    return;
  }
  if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
    if (flat) {
      os << prefix << ": " << io::dump(j, -1) << '\n';
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
    return;
  }
  os << prefix << ": " << io::dump(j, -1) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classicality certification for spin states represented as symmetric tensors", "spinclass"};
  app.require_subcommand(1);
  Options o;

  auto add_globals = [&o](CLI::App* a) {
    a->add_option("--input", o.input, "input JSON file ('-' for stdin)");
    a->add_option("--output", o.output, "write the report here instead of stdout");
    a->add_option("--tol", o.tol, "positivity / feasibility tolerance")->check(CLI::PositiveNumber);
    a->add_option("--tau-dec", o.tau_dec, "relative residual accepted by the decomposition")
        ->check(CLI::PositiveNumber);
    a->add_option("--grid", o.grid, "sphere grid size")->check(CLI::PositiveNumber);
    a->add_option("--starts", o.starts, "random multistarts")->check(CLI::PositiveNumber);
    a->add_option_function<std::uint64_t>(
        "--seed",
        [&o](const std::uint64_t& s) {
          o.seed = s;
          o.seed_set = true;
        },
        "random seed");
    a->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}));
  };

  // Global flags are accepted before or after the command name.
  add_globals(&app);
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  enum class Cmd {
    kMap, kClassify, kPsd, kSos, kRegsym, kRestricted, kDecompose, kRotate, kCoherent, kMixture, kRandom
  } cmd = Cmd::kMap;

  sub(&app, "map", "density matrix to tensor, or tensor to density matrix")->callback([&] { cmd = Cmd::kMap; });
  sub(&app, "classify", "run the full certification cascade")->callback([&] { cmd = Cmd::kClassify; });
  CLI::App* check = sub(&app, "check", "run a single cone test");
  check->require_subcommand(1);
  sub(check, "psd", "nonnegativity on the unit sphere")->callback([&] { cmd = Cmd::kPsd; });
  sub(check, "sos", "sum-of-squares Gram certificate")->callback([&] { cmd = Cmd::kSos; });
  sub(check, "regsym", "regular symmetry identities")->callback([&] { cmd = Cmd::kRegsym; });
  sub(check, "restricted", "nonnegativity on regular vectors")->callback([&] { cmd = Cmd::kRestricted; });
  sub(&app, "decompose", "regular decomposition")->callback([&] { cmd = Cmd::kDecompose; });
  CLI::App* rot = sub(&app, "rotate", "apply a spatial rotation");
  rot->add_option("--axis", o.axis, "rotation axis x y z")->expected(3)->required();
  rot->add_option("--angle", o.angle, "rotation angle in radians")->required();
  rot->callback([&] { cmd = Cmd::kRotate; });

  CLI::App* gen = sub(&app, "gen", "generate states");
  gen->require_subcommand(1);
  const auto as_opt = [&o](CLI::App* a) {
    a->add_option("--as", o.as, "output document")->check(CLI::IsMember({"tensor", "density", "mixture"}));
  };
  CLI::App* coh = sub(gen, "coherent", "a single coherent state");
  coh->add_option("--n", o.n_spins, "number of spins N = 2j")->required()->check(CLI::Range(1, kMaxSpinN));
  coh->add_option("--theta", o.theta, "polar angle")->required();
  coh->add_option("--phi", o.phi, "azimuth")->required();
  as_opt(coh);
  coh->callback([&] { cmd = Cmd::kCoherent; });
  CLI::App* mixc = sub(gen, "mixture", "materialize a mixture document");
  as_opt(mixc);
  mixc->callback([&] { cmd = Cmd::kMixture; });
  CLI::App* rnd = sub(gen, "random-classical", "random mixture of coherent states");
  rnd->add_option("--n", o.n_spins, "number of spins N = 2j")->required()->check(CLI::Range(1, kMaxSpinN));
  rnd->add_option("--terms", o.terms, "number of coherent terms")->required();
  rnd->add_option("--as", o.as_random, "output document")->check(CLI::IsMember({"tensor", "density", "mixture"}));
  rnd->callback([&] { cmd = Cmd::kRandom; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Report r;
  try {
    switch (cmd) {
      case Cmd::kMap: r = cmd_map(o); break;
      case Cmd::kClassify: r = cmd_classify(o); break;
      case Cmd::kPsd: r = cmd_check_psd(o); break;
      case Cmd::kSos: r = cmd_check_sos(o); break;
      case Cmd::kRegsym: r = cmd_check_regsym(o); break;
      case Cmd::kRestricted: r = cmd_check_restricted(o); break;
      case Cmd::kDecompose: r = cmd_decompose(o); break;
      case Cmd::kRotate: r = cmd_rotate(o); break;
      case Cmd::kCoherent: r = cmd_gen_coherent(o); break;
      case Cmd::kMixture: r = cmd_gen_mixture(o); break;
      case Cmd::kRandom: r = cmd_gen_random_classical(o); break;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitInconclusive;
  }

  std::ostringstream rendered;
  if (o.format == "text") {
    render_text(r.body, "", rendered);
  } else {
    rendered << io::dump(r.body) << '\n';
  }
  if (o.output.empty()) {
    out << rendered.str();
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.output << '\n';
      return kExitUsage;
    }
    f << rendered.str();
  }
  return r.code;
}

}  // namespace spinclass::cli
