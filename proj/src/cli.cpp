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

#include "btensor/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "btensor/io.hpp"

namespace btensor::cli {
namespace {

struct Options {
  std::string input;
  std::string method;
  std::string out_path;
  int restarts = 64;
  std::uint64_t seed = 0;
  double tol = 1e-8;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Json::parse(buffer.str());
}

Json run_classify(const Options& o) {
  return to_json(classify(tensor_from_json(read_input(o.input))));
}

Json run_decompose(const Options& o) {
  const Tensor a = tensor_from_json(read_input(o.input));
  if (o.method == "b") return to_json(decompose_b(a));
  if (o.method == "doubly-b") return to_json(decompose_doubly_b(a));
  // Automatic: the B split when it applies, else the doubly B split.
  if (is_b(a)) return to_json(decompose_b(a));
  return to_json(decompose_doubly_b(a));
}

Json run_intervals(const Options& o) {
  const Tensor a = tensor_from_json(read_input(o.input));
  if (o.method == "z") return to_json(intervals_z(a));
  if (o.method == "even-sym") return to_json(intervals_even_symmetric(a));
  if (o.method == "odd-n2") return to_json(intervals_odd_or_n2(a));
  return to_json(intervals_gerschgorin(a));
}

Json run_oracle(const Options& o) {
  const Tensor a = tensor_from_json(read_input(o.input));
  const bool exhaustive =
      o.method == "n2" || (o.method.empty() && a.dim() == 2);
  if (exhaustive) return to_json(eigenpairs_n2(a, o.tol));
  return to_json(eigen_search(a, o.restarts, o.seed, o.tol));
}

Json run_laplacian(const Options& o) {
  const Hypergraph g = hypergraph_from_json(read_input(o.input));
  return Json{{"tensor", tensor_to_json(laplacian_tensor(g))},
              {"degrees", g.degrees()},
              {"bounds", to_json(laplacian_bounds(g))}};
}

Json run_definiteness(const Options& o) {
  return to_json(definiteness(tensor_from_json(read_input(o.input))));
}

int fail(std::ostream& err, int code, const std::string& kind,
         const std::string& detail,
         const std::optional<Witness>& witness = std::nullopt) {
  err << dump(error_json(kind, detail, witness)) << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Structured tensor classification, decomposition and "
               "H-eigenvalue localization",
               "btensor"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("INPUT", o.input, "input JSON file")->required();
    sub->add_option("--out", o.out_path, "write the JSON report to PATH");
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "class membership report");
  add_common(classify_cmd);

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "B = Z-part + nonnegative part");
  add_common(decompose_cmd);
  decompose_cmd->add_option("--method", o.method, "b or doubly-b (default: automatic)")
      ->check(CLI::IsMember({"b", "doubly-b"}));

  CLI::App* intervals_cmd = app.add_subcommand("intervals", "H-eigenvalue localization");
  add_common(intervals_cmd);
  intervals_cmd->add_option("--method", o.method, "z, even-sym, odd-n2 or gerschgorin")
      ->required()
      ->check(CLI::IsMember({"z", "even-sym", "odd-n2", "gerschgorin"}));

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "H-eigenpairs");
  add_common(oracle_cmd);
  oracle_cmd->add_option("--method", o.method, "n2 or search (default: n2 when n = 2)")
      ->check(CLI::IsMember({"n2", "search"}));
  oracle_cmd->add_option("--restarts", o.restarts, "random restarts")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--seed", o.seed, "random seed");
  oracle_cmd->add_option("--tol", o.tol, "residual tolerance")
      ->check(CLI::PositiveNumber);

  CLI::App* laplacian_cmd = app.add_subcommand("laplacian", "hypergraph Laplacian tensor");
  add_common(laplacian_cmd);

  CLI::App* definiteness_cmd = app.add_subcommand("definiteness", "definiteness certificate");
  add_common(definiteness_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return fail(err, kExitInput, "usage_error", e.what());
  }

  try {
    Json report;
    if (classify_cmd->parsed()) {
      report = run_classify(o);
    } else if (decompose_cmd->parsed()) {
      report = run_decompose(o);
    } else if (intervals_cmd->parsed()) {
      report = run_intervals(o);
    } else if (oracle_cmd->parsed()) {
      report = run_oracle(o);
    } else if (laplacian_cmd->parsed()) {
      report = run_laplacian(o);
    } else {
      report = run_definiteness(o);
    }
    const std::string text = dump(report) + "\n";
    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out_path);
      if (!file || !(file << text)) {
        return fail(err, kExitInput, "input_error", "cannot write " + o.out_path);
      }
    }
    return kExitOk;
  } catch (const Json::parse_error& e) {
    return fail(err, kExitInput, "parse_error", e.what());
  } catch (const InputError& e) {
    return fail(err, kExitInput, "input_error", e.what());
  } catch (const ClassViolation& e) {
    return fail(err, kExitPrecondition, "class_violation", e.what(), e.witness());
  } catch (const PreconditionError& e) {
    return fail(err, kExitPrecondition, "precondition_error", e.what());
  } catch (const DegenerateMargin& e) {
    return fail(err, kExitPrecondition, "degenerate_margin", e.what());
  } catch (const std::exception& e) {
    return fail(err, kExitInternal, "internal_error", e.what());
  }
}

}  // namespace btensor::cli
