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

#include "spinclass/io.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace spinclass::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
  return *it;
}

int get_int(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

double as_double(const Json& v, const char* what) {
  if (!v.is_number()) throw SchemaError(std::string(what) + " must be a number");
  return v.get<double>();
}

Json vec_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

void dump_to(const Json& j, int indent, int level, std::string& out) {
  const auto newline = [&](int lvl) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * lvl), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(level + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_to(it.value(), indent, level + 1, out);
      }
      newline(level);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Numeric arrays stay on one line.
      bool flat = true;
      for (const auto& e : j)
        if (e.is_structured()) flat = false;
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat && indent >= 0 ? ", " : ",";
        first = false;
        if (!flat) newline(level + 1);
        dump_to(e, indent, level + 1, out);
      }
      if (!flat) newline(level);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) throw InvalidArgument("cannot serialize a non-finite number");
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

SymTensor tensor_from_json(const Json& j) {
  const int order = get_int(j, "order");
  const int dim = get_int(j, "dim");
  if (order < 1) throw SchemaError("order must be at least 1");
  if (dim < 2) throw SchemaError("dim must be at least 2");
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw SchemaError("\"entries\" must be an array");
  std::vector<Entry> list;
  for (const Json& e : entries) {
    const Json& idx = field(e, "idx");
    if (!idx.is_array()) throw SchemaError("\"idx\" must be an array");
    Entry en;
    for (const Json& i : idx) {
      if (!i.is_number_integer()) throw SchemaError("indices must be integers");
      en.idx.push_back(i.get<int>());
    }
    en.val = as_double(field(e, "val"), "\"val\"");
    list.push_back(std::move(en));
  }
  try {
    return SymTensor::make(order, dim, list);
  } catch (const InvalidArgument& ex) {
    throw SchemaError(ex.what());
  }
}

Json tensor_to_json(const SymTensor& a) {
  Json j;
  j["order"] = a.order();
  j["dim"] = a.dim();
  Json entries = Json::array();
  for (const Entry& e : a.nonzero_entries()) {
    Json en;
    en["idx"] = e.idx;
    en["val"] = e.val;
    entries.push_back(std::move(en));
  }
  j["entries"] = std::move(entries);
  return j;
}

DensityMatrix density_from_json(const Json& j) {
  const int n = get_int(j, "N");
  if (n < 1 || n > kMaxSpinN) throw SchemaError("N out of range");
  const Json& rows = field(j, "matrix");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n + 1))
    throw SchemaError("\"matrix\" must have N+1 rows");
  ComplexMatrix m(n + 1, n + 1);
  for (int r = 0; r <= n; ++r) {
    const Json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n + 1))
      throw SchemaError("each matrix row must have N+1 entries");
    for (int c = 0; c <= n; ++c) {
      const Json& z = row[static_cast<std::size_t>(c)];
      if (!z.is_array() || z.size() != 2) throw SchemaError("matrix entries are [re, im] pairs");
      m(r, c) = Complex(as_double(z[0], "real part"), as_double(z[1], "imaginary part"));
    }
  }
  try {
    return DensityMatrix::validated(n, std::move(m));
  } catch (const InvalidArgument& ex) {
    throw SchemaError(ex.what());
  }
}

Json density_to_json(const DensityMatrix& rho) {
  Json j;
  j["N"] = rho.n_spins();
  Json rows = Json::array();
  const ComplexMatrix& m = rho.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

Mixture mixture_from_json(const Json& j) {
  Mixture mix;
  mix.n_spins = get_int(j, "N");
  if (mix.n_spins < 1 || mix.n_spins > kMaxSpinN) throw SchemaError("N out of range");
  const Json& terms = field(j, "terms");
  if (!terms.is_array() || terms.empty()) throw SchemaError("\"terms\" must be a nonempty array");
  for (const Json& t : terms) {
    MixtureTerm term;
    term.weight = as_double(field(t, "w"), "\"w\"");
    if (!(term.weight >= 0.0)) throw SchemaError("mixture weights must be nonnegative");
    try {
      term.label = CoherentLabel::make(as_double(field(t, "theta"), "\"theta\""),
                                       as_double(field(t, "phi"), "\"phi\""));
    } catch (const SchemaError&) {
      throw;
    } catch (const InvalidArgument& ex) {
      throw SchemaError(ex.what());
    }
    mix.terms.push_back(term);
  }
  return mix;
}

Json mixture_to_json(const Mixture& m) {
  Json j;
  j["N"] = m.n_spins;
  Json terms = Json::array();
  for (const auto& t : m.terms) {
    Json e;
    e["w"] = t.weight;
    e["theta"] = t.label.theta;
    e["phi"] = t.label.phi;
    terms.push_back(std::move(e));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json decomposition_to_json(const RegularDecomposition& dec) {
  Json j;
  Json terms = Json::array();
  for (const auto& t : dec.terms) {
    Json e;
    e["alpha"] = t.alpha;
    e["nhat"] = vec_json(t.nhat);
    terms.push_back(std::move(e));
  }
  j["terms"] = std::move(terms);
  j["residual"] = dec.residual;
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["status"] = std::string(to_string(v.status));
  Json stages = Json::array();
  for (const auto& s : v.stages) {
    Json e;
    e["name"] = s.name;
    e["outcome"] = s.outcome;
    e["value"] = s.value;
    stages.push_back(std::move(e));
  }
  j["stages"] = std::move(stages);
  if (v.certificate) j["certificate"] = decomposition_to_json(*v.certificate);
  if (v.witness) {
    Json w;
    w["kind"] = std::string(to_string(v.witness->kind));
    w["point"] = vec_json(v.witness->point);
    w["value"] = v.witness->value;
    j["witness"] = std::move(w);
  }
  return j;
}

DocKind detect(const Json& j) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  if (j.contains("order")) return DocKind::kTensor;
  if (j.contains("matrix")) return DocKind::kDensity;
  if (j.contains("terms")) return DocKind::kMixture;
  throw SchemaError("document is not a tensor, density or mixture");
}

std::string dump(const Json& j, int indent) {
  std::string out;
  dump_to(j, indent, 0, out);
  return out;
}

}  // namespace spinclass::io
