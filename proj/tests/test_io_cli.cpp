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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "btensor/cli.hpp"
#include "btensor/io.hpp"
#include "support/fixtures.hpp"

namespace btensor {
namespace {

const std::string kData = BTENSOR_TEST_DATA;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "btensor");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(TensorJsonTest, DenseAndSparseAgree) {
  const Tensor dense = tensor_from_json(parse_json(
      R"({"order": 2, "dim": 2, "dense": [1, 0, 0, 2.5]})"));
  const Tensor sparse = tensor_from_json(parse_json(
      R"({"order": 2, "dim": 2, "sparse": [{"idx": [2, 2], "val": 2.5}, {"idx": [1, 1], "val": 1}]})"));
  EXPECT_EQ(dense, sparse);
  EXPECT_EQ(dense({1, 1}), 2.5);
}

TEST(TensorJsonTest, RoundTrip) {
  const Tensor a = testing::kernel_b_tensor();
  EXPECT_EQ(tensor_from_json(parse_json(dump(tensor_to_json(a)))), a);
  EXPECT_EQ(tensor_from_json(parse_json(read_file(data("t43.json")))), a);
}

TEST(TensorJsonTest, Rejections) {
  const char* bad[] = {
      R"([1, 2])",
      R"({"dim": 2, "dense": [1, 2, 3, 4]})",
      R"({"order": 2.5, "dim": 2, "dense": [1, 2, 3, 4]})",
      R"({"order": 2, "dim": 2})",
      R"({"order": 2, "dim": 2, "dense": [1, 2, 3, 4], "sparse": []})",
      R"({"order": 2, "dim": 2, "dense": [1, 2, 3]})",
      R"({"order": 2, "dim": 2, "dense": [1, 2, 3, "x"]})",
      R"({"order": 2, "dim": 2, "sparse": [{"idx": [1, 3], "val": 1}]})",
      R"({"order": 2, "dim": 2, "sparse": [{"idx": [1], "val": 1}]})",
      R"({"order": 2, "dim": 2, "sparse": [{"idx": [1, 1]}]})",
      R"({"order": 2, "dim": 2, "sparse": [{"idx": [1, 1], "val": 1}, {"idx": [1, 1], "val": 1}]})",
      R"({"order": 1, "dim": 2, "dense": [1, 2]})",
      R"({"order": 40, "dim": 40, "sparse": []})",
  };
  for (const char* text : bad) {
    EXPECT_THROW(tensor_from_json(parse_json(text)), InputError) << text;
  }
  EXPECT_THROW(parse_json("{"), InputError);
}

TEST(TensorJsonTest, EntryCap) {
  const Json j = parse_json(R"({"order": 3, "dim": 3, "sparse": []})");
  EXPECT_NO_THROW(tensor_from_json(j, 27));
  EXPECT_THROW(tensor_from_json(j, 26), InputError);
}

TEST(HypergraphJsonTest, RoundTrip) {
  const Hypergraph g = hypergraph_from_json(
      parse_json(R"({"n": 4, "m": 3, "edges": [[3, 1, 2], [2, 3, 4]]})"));
  EXPECT_EQ(g.degrees(), (std::vector<int>{1, 2, 2, 1}));
  EXPECT_EQ(dump(hypergraph_to_json(g)), R"({"n":4,"m":3,"edges":[[1,2,3],[2,3,4]]})");
  EXPECT_THROW(hypergraph_from_json(parse_json(R"({"n": 3, "m": 3})")), InputError);
  EXPECT_THROW(hypergraph_from_json(parse_json(R"({"n": 3, "m": 3, "edges": [[1, 2, 4]]})")),
               InputError);
}

TEST(DumpTest, NumberFormatting) {
  EXPECT_EQ(dump(Json{{"a", 27.0}, {"b", -0.5}, {"c", 3}}), R"({"a":27,"b":-0.5,"c":3})");
  EXPECT_EQ(dump(Json{{"x", 0.1}}), R"({"x":0.10000000000000001})");
  EXPECT_EQ(parse_json(dump(Json{{"x", 1.0 / 3.0}}))["x"].get<double>(), 1.0 / 3.0);
}

TEST(ReportJsonTest, Serializers) {
  EXPECT_EQ(dump(to_json(IntervalUnion({{0, 1}, {3, 4}}))),
            R"({"parts":[{"lo":0,"hi":1},{"lo":3,"hi":4}]})");
  Witness w{1, 2, 3.0, 4.0};
  EXPECT_EQ(dump(witness_to_json(w)), R"({"pair":[2,3],"lhs":3,"rhs":4,"margin":-1})");
  w.other.reset();
  EXPECT_EQ(dump(witness_to_json(w)), R"({"row":2,"lhs":3,"rhs":4,"margin":-1})");
  EXPECT_EQ(dump(to_json(DefinitenessVerdict{Verdict::PositiveSemidefinite,
                                             VerdictMethod::IntervalLowerBound, 0.0})),
            R"({"verdict":"positive_semidefinite","method":"interval_lower_bound","bound":0})");
  EXPECT_EQ(dump(error_json("input_error", "bad")), R"({"error":"input_error","detail":"bad"})");

  const std::vector<EigenPair> pairs{{8.0, Vector{{1, 1}}, 0.0}};
  EXPECT_EQ(dump(to_json(pairs)), R"([{"lambda":8,"x":[1,1],"residual":0}])");
}

TEST(ReportJsonTest, ClassReportKeys) {
  const Json j = to_json(classify(testing::doubly_b_counterexample()));
  std::vector<std::string> keys;
  for (const auto& [key, value] : j["flags"].items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"Z", "B", "B0", "doublyB", "SDD", "SDDD",
                                            "F_B", "F_doublyB"}));
  EXPECT_EQ(j["witnesses"]["B"]["row"], 2);
}

TEST(CliTest, ClassifyKernelTensor) {
  const Outcome r = run_cli({"classify", data("t43.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_json(r.out);
  EXPECT_EQ(j["flags"]["B"], true);
  EXPECT_EQ(j["flags"]["Z"], false);
}

TEST(CliTest, IntervalsOnAllOnes) {
  EXPECT_EQ(run_cli({"intervals", "--method", "even-sym", data("ones_4_3.json")}).out,
            "{\"parts\":[{\"lo\":0,\"hi\":27}]}\n");
  EXPECT_EQ(run_cli({"intervals", "--method", "gerschgorin", data("ones_4_3.json")}).out,
            "{\"parts\":[{\"lo\":-25,\"hi\":27}]}\n");
  EXPECT_EQ(run_cli({"intervals", "--method", "odd-n2", data("ones_4_2.json")}).out,
            "{\"parts\":[{\"lo\":0,\"hi\":8}]}\n");
}

TEST(CliTest, OracleOnAllOnes) {
  const Outcome r = run_cli({"oracle", data("ones_4_2.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_json(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["lambda"], 0.0);
  EXPECT_EQ(j[1]["lambda"], 8.0);

  const Outcome s = run_cli({"oracle", "--method", "search", "--restarts", "8", "--seed",
                             "3", data("ones_4_3.json")});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.out, run_cli({"oracle", "--method", "search", "--restarts", "8", "--seed",
                            "3", data("ones_4_3.json")})
                       .out);
}

TEST(CliTest, DecomposeAndDefiniteness) {
  const Outcome d = run_cli({"decompose", data("counter_4_2.json")});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(parse_json(d.out)["kind"], "doublyB");

  const Outcome v = run_cli({"definiteness", data("ones_4_3.json")});
  EXPECT_EQ(v.out,
            "{\"verdict\":\"positive_semidefinite\",\"method\":\"interval_lower_bound\","
            "\"bound\":0}\n");
}

TEST(CliTest, Laplacian) {
  const Outcome r = run_cli({"laplacian", data("edge_3.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_json(r.out);
  EXPECT_EQ(j["degrees"], Json::parse("[1,1,1]"));
  EXPECT_EQ(dump(j["bounds"]), R"({"lo":0,"hi":2})");
}

TEST(CliTest, WritesOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "btensor_cli_out.json";
  std::filesystem::remove(path);
  const Outcome r = run_cli({"intervals", "--method", "z", "--out", path.string(),
                             data("counter_4_2.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path.string()), "{\"parts\":[{\"lo\":-1,\"hi\":5}]}\n");
  std::filesystem::remove(path);
}

TEST(CliTest, ErrorExitCodes) {
  const Outcome unknown = run_cli({"frobnicate", data("t43.json")});
  EXPECT_EQ(unknown.code, cli::kExitInput);
  EXPECT_EQ(parse_json(unknown.err)["error"], "usage_error");

  EXPECT_EQ(run_cli({"intervals", data("t43.json")}).code, cli::kExitInput);
  EXPECT_EQ(run_cli({"oracle", "--restarts", "0", data("t43.json")}).code, cli::kExitInput);
  EXPECT_EQ(run_cli({"classify", "--seed", "1", data("t43.json")}).code, cli::kExitInput);

  const Outcome malformed = run_cli({"classify", data("malformed.json")});
  EXPECT_EQ(malformed.code, cli::kExitInput);
  EXPECT_EQ(parse_json(malformed.err)["error"], "parse_error");

  EXPECT_EQ(run_cli({"classify", data("duplicate_idx.json")}).code, cli::kExitInput);
  EXPECT_EQ(run_cli({"classify", data("overflow.json")}).code, cli::kExitInput);
  EXPECT_EQ(run_cli({"classify", data("missing.json")}).code, cli::kExitInput);

  const Outcome violation = run_cli({"decompose", "--method", "b", data("counter_4_2.json")});
  EXPECT_EQ(violation.code, cli::kExitPrecondition);
  const Json e = parse_json(violation.err);
  EXPECT_EQ(e["error"], "class_violation");
  EXPECT_EQ(e["witness"]["row"], 2);

  EXPECT_EQ(run_cli({"intervals", "--method", "odd-n2", data("ones_4_3.json")}).code,
            cli::kExitPrecondition);
  EXPECT_EQ(run_cli({"definiteness", data("t43.json")}).code, cli::kExitPrecondition);
}

TEST(CliTest, Help) {
  const Outcome r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("intervals"), std::string::npos);
}

}  // namespace
}  // namespace btensor
