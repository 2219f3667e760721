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

// JSON interchange formats.
//
//   tensor:   {"order": m, "dim": d, "entries": [{"idx": [sorted ints], "val": x}, ...]}
//   density:  {"N": n, "matrix": [[[re, im], ...], ...]}   (Dicke order k = 0..N)
//   mixture:  {"N": n, "terms": [{"w": w, "theta": t, "phi": p}, ...]}
//   verdict:  {"status", "stages", "certificate"?, "witness"?}
//
// Floats are written with 17 significant digits so that output bytes are a
// function of the values alone.

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinclass/certify.hpp"
#include "spinclass/spinmap.hpp"
#include "spinclass/symtensor.hpp"

namespace spinclass::io {

using Json = nlohmann::ordered_json;

/// A document that parsed as JSON but does not match the expected schema.
class SchemaError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct Mixture {
  int n_spins = 1;
  std::vector<MixtureTerm> terms;
};

SymTensor tensor_from_json(const Json& j);
Json tensor_to_json(const SymTensor& a);

/// Validates hermiticity and positivity.
DensityMatrix density_from_json(const Json& j);
Json density_to_json(const DensityMatrix& rho);

Mixture mixture_from_json(const Json& j);
Json mixture_to_json(const Mixture& m);

Json decomposition_to_json(const RegularDecomposition& dec);
Json verdict_to_json(const Verdict& v);

enum class DocKind { kTensor, kDensity, kMixture };
/// Recognizes which of the input schemas a document claims to follow.
DocKind detect(const Json& j);

/// Serializes with 17 significant digits; indent < 0 gives one line.
std::string dump(const Json& j, int indent = 2);

}  // namespace spinclass::io
