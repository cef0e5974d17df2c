// Copyright 2026 The btensor Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "btensor/classes.hpp"
#include "btensor/decompose.hpp"
#include "btensor/eigenloc.hpp"
#include "btensor/oracle.hpp"
#include "btensor/tensor.hpp"
#include "json.hpp"

namespace btensor {

using Json = nlohmann::ordered_json;

// All indices in JSON are 1-based.

/// {"order": m, "dim": n, "dense": [...]} or
/// {"order": m, "dim": n, "sparse": [{"idx": [i_1..i_m], "val": v}, ...]}.
/// Throws InputError on any schema violation.
Tensor tensor_from_json(const Json& j,
                        std::size_t entry_cap = Tensor::kDefaultEntryCap);
/// Always the dense form.
Json tensor_to_json(const Tensor& t);

/// {"n": n, "m": m, "edges": [[v_1..v_m], ...]}.
Hypergraph hypergraph_from_json(const Json& j);
Json hypergraph_to_json(const Hypergraph& g);

Json witness_to_json(const Witness& w);
Json to_json(const ClassReport& report);
Json to_json(const Decomposition& d);
Json to_json(const Interval& interval);
Json to_json(const IntervalUnion& u);
Json to_json(const std::vector<EigenPair>& pairs);
Json to_json(const DefinitenessVerdict& v);

Json error_json(const std::string& code, const std::string& detail,
                const std::optional<Witness>& witness = std::nullopt);

/// Compact serialization with every floating-point number printed with 17
/// significant digits, so doubles round-trip exactly.
std::string dump(const Json& j);

/// Parses text, mapping syntax errors to InputError.
Json parse_json(const std::string& text);

}  // namespace btensor
