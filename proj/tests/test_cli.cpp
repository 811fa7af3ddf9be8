// Copyright 2026 The qwmix Authors
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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qwmix/cli/cli.hpp"
#include "qwmix/cli/json_io.hpp"
#include "qwmix/error.hpp"
#include "support.hpp"

using namespace qwmix;
using cli::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qwmix");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("qwmix_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("rational JSON encoding") {
  CHECK(cli::to_json(testing::q(6, -4)) == "-3/2");
  CHECK(cli::to_json(testing::q(0, 5)) == "0");
  CHECK(cli::to_json(testing::q(8, 4)) == "2");
  CHECK(cli::rational_from_json(Json("10/4")) == testing::q(5, 2));
  CHECK(cli::rational_from_json(Json(-7)) == -7);
  CHECK_THROWS_AS(cli::rational_from_json(Json(0.5)), DomainError);
  CHECK_THROWS_AS(cli::matrix_from_json(Json::array()), DomainError);
  CHECK_THROWS_AS(cli::matrix_from_json(Json::parse(R"([["1","2"],["3"]])")), Error);
}

TEST_CASE("compute on the looped path") {
  const Run r = run({"compute", "--family", "path:6", "--loops", "0=2,5=2", "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["avg_mixing"][0][0] == "599/1926");
  CHECK(j["avg_mixing"][0][5] == "599/1926");
  CHECK(j["disc_char"] == "1664064");
  CHECK(j["basis"] == "adjacency");

  // Re-serializing the parsed matrix reproduces the emitted bytes.
  const std::string emitted = j["avg_mixing"].dump();
  CHECK(cli::to_json(cli::matrix_from_json(j["avg_mixing"])).dump() == emitted);
  CHECK(cli::to_json(cli::matrix_from_json(Json::parse(emitted))).dump(2) == j["avg_mixing"].dump(2));
}

TEST_CASE("compute from graph6 and files") {
  Run r = run({"compute", "--graph6", "A_"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["avg_mixing"] == Json::parse(R"([["1/2","1/2"],["1/2","1/2"]])"));

  const auto weighted = temp_file("weighted.json", R"({"n": 2, "weights": [[0, 3], [3, 0]]})");
  r = run({"compute", "--matrix-file", weighted});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["avg_mixing"][0][1] == "1/2");

  const auto bare = temp_file("bare.json", R"({"matrix": [["0","1","0"],[1,0,1],[0,1,0]]})");
  r = run({"compute", "--matrix-file", bare, "--basis", "laplacian", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# approximate", 0) == 0);
  CHECK(r.out.find("0.388888888889,0.222222222222,0.388888888889") != std::string::npos);

  const auto asymmetric = temp_file("asym.json", R"({"n": 2, "weights": [[0, 1], [2, 0]]})");
  CHECK(run({"compute", "--matrix-file", asymmetric}).code == 2);
  const auto broken = temp_file("broken.json", R"({"n": 2, "weights": [[0, 1)");
  r = run({"compute", "--matrix-file", broken});
  CHECK(r.code == 2);
  CHECK(r.err.find("not valid JSON") != std::string::npos);
  CHECK(run({"compute", "--matrix-file", "/nonexistent/qwmix.json"}).code == 2);
}

TEST_CASE("input errors") {
  CHECK(run({"compute"}).code == 2);
  CHECK(run({"compute", "--family", "path:3", "--graph6", "A_"}).code == 2);
  CHECK(run({"compute", "--family", "nonsense"}).code == 2);
  CHECK(run({"compute", "--graph6", "A~~"}).code == 2);
  CHECK(run({"compute", "--family", "path:3", "--loops", "7=1"}).code == 2);
  CHECK(run({"compute", "--family", "path:3", "--loops", "0:1"}).code == 2);
  CHECK(run({"compute", "--family", "path:3", "--basis", "weird"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
  Run r = run({"verify", "--family", "cycle:9"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["checks"][0]["name"] == "closed_form");

  for (const char* family : {"path:7", "cycle:10", "complete:5"}) {
    CHECK(run({"verify", "--family", family}).code == 0);
    CHECK(run({"verify", "--family", family, "--basis", "laplacian"}).code == 0);
  }
  r = run({"verify", "--family", "path:6", "--loops", "0=2,5=2", "--check", "integrality",
           "--format", "pretty"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS d2_integral") != std::string::npos);
  CHECK(run({"verify", "--family", "path:2", "--check", "stochastic", "--format", "csv"}).code == 0);
}

TEST_CASE("analyze") {
  Run r = run({"analyze", "--family", "path:4", "--pair", "0,3"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["pair"]["strongly_cospectral"] == true);
  CHECK(j["pair"]["pst"] == "CANDIDATE");
  CHECK(j["span_class"] == "IJT");

  r = run({"analyze", "--family", "cycle:5", "--pair", "0,2"});
  j = Json::parse(r.out);
  CHECK(j["pair"]["pst"] == "BLOCKED");
  CHECK(j["pair"]["pst_reason"] == "not strongly cospectral");
  CHECK(j["no_pst_anywhere"] == true);
  CHECK(j["walk_regular"] == true);
  CHECK(j["span_class"] == "IJ");

  CHECK(run({"analyze", "--family", "path:4", "--pair", "0,9"}).code == 2);
  CHECK(run({"analyze", "--family", "path:4", "--pair", "1"}).code == 2);
  CHECK(run({"analyze", "--family", "path:4", "--pair", "1,-2"}).code == 2);
  CHECK(run({"analyze", "--family", "path:4", "--format", "csv"}).out.rfind("field,value", 0) == 0);
}

TEST_CASE("scheme") {
  Run r = run({"scheme", "--q", "13", "--d", "2"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["valencies"] == Json::parse("[1,6,6]"));
  CHECK(j["pseudocyclic"] == true);
  CHECK(j["pseudocyclic_mixing_formula"] == true);
  CHECK(j["koppinen_schur"] == true);

  CHECK(run({"scheme", "--q", "13", "--d", "4"}).code == 2);
  CHECK(run({"scheme", "--q", "12", "--d", "2"}).code == 2);
  CHECK(run({"scheme", "--q", "13"}).code == 2);
  CHECK(run({"scheme"}).code == 2);

  const auto p3 = temp_file("p3_scheme.json",
                            R"([[[1,0,0],[0,1,0],[0,0,1]], [[0,1,0],[1,0,1],[0,1,0]],)"
                            R"( [[0,0,1],[0,0,0],[1,0,0]]])");
  r = run({"scheme", "--matrix-file", p3});
  CHECK(r.code == 1);
  CHECK(r.err.find("(d)") != std::string::npos);

  const auto c4 = temp_file("c4_scheme.json",
                            R"({"matrices": [[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],)"
                            R"( [[0,1,0,1],[1,0,1,0],[0,1,0,1],[1,0,1,0]],)"
                            R"( [[0,0,1,0],[0,0,0,1],[1,0,0,0],[0,1,0,0]]]})");
  r = run({"scheme", "--matrix-file", c4, "--format", "pretty"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pseudocyclic: false") != std::string::npos);
}

TEST_CASE("discrete") {
  const auto rotation = temp_file("rotation.json", R"([["3/5","4/5"],["-4/5","3/5"]])");
  Run r = run({"discrete", "--unitary-file", rotation});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["mode"] == "physical");
  CHECK(j["avg_mixing"] == Json::parse(R"([["1/2","1/2"],["1/2","1/2"]])"));
  CHECK(j["literal"] == Json::parse(R"([["1/2","-1/2"],["-1/2","1/2"]])"));
  CHECK(j["forms_agree"] == false);
  CHECK(r.err.find("differ") != std::string::npos);

  r = run({"discrete", "--unitary-file", rotation, "--mode", "literal"});
  CHECK(Json::parse(r.out)["avg_mixing"][0][1] == "-1/2");

  const auto swap = temp_file("swap.json", R"([[0,1],[1,0]])");
  r = run({"discrete", "--unitary-file", swap, "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());

  const auto skew = temp_file("skew.json", R"([[1,1],[0,1]])");
  CHECK(run({"discrete", "--unitary-file", skew}).code == 2);
  CHECK(run({"discrete"}).code == 2);
  CHECK(run({"discrete", "--unitary-file", rotation, "--mode", "average"}).code == 2);
}
