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

#include "btensor/io.hpp"

#include <cstdio>
#include <set>

namespace btensor {
namespace {

const char* const kFlagOrder[] = {"Z",   "B",    "B0",  "doublyB",
                                  "SDD", "SDDD", "F_B", "F_doublyB"};

int get_int(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_integer()) {
    throw InputError(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

double get_number(const Json& v, const std::string& what) {
  if (!v.is_number()) throw InputError(what + " must be a number");
  return v.get<double>();
}

void append_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void dump_into(std::string& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        dump_into(out, value);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ',';
        first = false;
        dump_into(out, value);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      append_number(out, j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

}  // namespace

Tensor tensor_from_json(const Json& j, std::size_t entry_cap) {
  if (!j.is_object()) throw InputError("tensor JSON must be an object");
  const int order = get_int(j, "order");
  const int dim = get_int(j, "dim");
  const bool has_dense = j.contains("dense");
  const bool has_sparse = j.contains("sparse");
  if (has_dense == has_sparse) {
    throw InputError("tensor JSON needs exactly one of \"dense\" or \"sparse\"");
  }
  Tensor t(order, dim, entry_cap);  // validates shape and the entry cap

  if (has_dense) {
    const Json& dense = j.at("dense");
    if (!dense.is_array()) throw InputError("\"dense\" must be an array");
    if (dense.size() != t.size()) {
      throw InputError("\"dense\" has " + std::to_string(dense.size()) +
                       " entries, expected " + std::to_string(t.size()));
    }
    Vector entries(static_cast<Eigen::Index>(t.size()));
    for (std::size_t k = 0; k < t.size(); ++k) {
      entries[k] = get_number(dense[k], "dense entry " + std::to_string(k));
    }
    return Tensor(order, dim, std::move(entries), entry_cap);
  }

  const Json& sparse = j.at("sparse");
  if (!sparse.is_array()) throw InputError("\"sparse\" must be an array");
  Vector entries = Vector::Zero(static_cast<Eigen::Index>(t.size()));
  std::set<std::size_t> seen;
  std::vector<int> index(order);
  for (const Json& item : sparse) {
    if (!item.is_object() || !item.contains("idx") || !item.contains("val")) {
      throw InputError("sparse items need \"idx\" and \"val\"");
    }
    const Json& idx = item.at("idx");
    if (!idx.is_array() || static_cast<int>(idx.size()) != order) {
      throw InputError("sparse \"idx\" must list " + std::to_string(order) +
                       " indices");
    }
    for (int p = 0; p < order; ++p) {
      if (!idx[p].is_number_integer()) {
        throw InputError("sparse indices must be integers");
      }
      const int i = idx[p].get<int>();
      if (i < 1 || i > dim) {
        throw InputError("sparse index " + std::to_string(i) +
                         " out of range [1, " + std::to_string(dim) + "]");
      }
      index[p] = i - 1;
    }
    const std::size_t flat = t.flat_index(index);
    if (!seen.insert(flat).second) {
      throw InputError("duplicate sparse index " + idx.dump());
    }
    entries[flat] = get_number(item.at("val"), "sparse value");
  }
  return Tensor(order, dim, std::move(entries), entry_cap);
}

Json tensor_to_json(const Tensor& t) {
  Json dense = Json::array();
  for (std::size_t k = 0; k < t.size(); ++k) dense.push_back(t[k]);
  return Json{{"order", t.order()}, {"dim", t.dim()}, {"dense", std::move(dense)}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("hypergraph JSON must be an object");
  const int n = get_int(j, "n");
  const int m = get_int(j, "m");
  if (!j.contains("edges") || !j.at("edges").is_array()) {
    throw InputError("hypergraph JSON needs an \"edges\" array");
  }
  std::vector<std::vector<int>> edges;
  for (const Json& e : j.at("edges")) {
    if (!e.is_array()) throw InputError("each edge must be an array");
    std::vector<int> edge;
    for (const Json& v : e) {
      if (!v.is_number_integer()) throw InputError("vertices must be integers");
      edge.push_back(v.get<int>() - 1);
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph(n, m, std::move(edges));
}

Json hypergraph_to_json(const Hypergraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json edge = Json::array();
    for (int v : e) edge.push_back(v + 1);
    edges.push_back(std::move(edge));
  }
  return Json{{"n", g.vertex_count()}, {"m", g.edge_size()}, {"edges", edges}};
}

Json witness_to_json(const Witness& w) {
  Json j;
  if (w.is_pair()) {
    j["pair"] = Json::array({w.row + 1, *w.other + 1});
  } else {
    j["row"] = w.row + 1;
  }
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  j["margin"] = w.margin();
  return j;
}

Json to_json(const ClassReport& report) {
  Json flags = Json::object();
  Json witnesses = Json::object();
  for (const char* name : kFlagOrder) {
    flags[name] = report.flags.at(name);
    if (auto it = report.witnesses.find(name); it != report.witnesses.end()) {
      witnesses[name] = witness_to_json(it->second);
    }
  }
  return Json{{"flags", std::move(flags)}, {"witnesses", std::move(witnesses)}};
}

Json to_json(const Decomposition& d) {
  return Json{{"kind", d.kind == DecompositionKind::B ? "B" : "doublyB"},
              {"epsilon", d.epsilon},
              {"row_constants", d.row_constants},
              {"B", tensor_to_json(d.part_b)},
              {"C", tensor_to_json(d.part_c)}};
}

Json to_json(const Interval& interval) {
  return Json{{"lo", interval.lo}, {"hi", interval.hi}};
}

Json to_json(const IntervalUnion& u) {
  Json parts = Json::array();
  for (const Interval& p : u.parts()) parts.push_back(to_json(p));
  return Json{{"parts", std::move(parts)}};
}

Json to_json(const std::vector<EigenPair>& pairs) {
  Json out = Json::array();
  for (const EigenPair& p : pairs) {
    out.push_back(Json{{"lambda", p.lambda},
                       {"x", std::vector<double>(p.x.begin(), p.x.end())},
                       {"residual", p.residual}});
  }
  return out;
}

Json to_json(const DefinitenessVerdict& v) {
  const char* verdict = v.verdict == Verdict::PositiveDefinite ? "positive_definite"
                        : v.verdict == Verdict::PositiveSemidefinite
                            ? "positive_semidefinite"
                            : "indefinite_possible";
  const char* method =
      v.method == VerdictMethod::BTest ? "B_test" : "interval_lower_bound";
  Json j{{"verdict", verdict}, {"method", method}};
  if (v.bound) j["bound"] = *v.bound;
  return j;
}

Json error_json(const std::string& code, const std::string& detail,
                const std::optional<Witness>& witness) {
  Json j{{"error", code}, {"detail", detail}};
  if (witness) j["witness"] = witness_to_json(*witness);
  return j;
}

std::string dump(const Json& j) {
  std::string out;
  dump_into(out, j);
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace btensor
