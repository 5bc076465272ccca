// Copyright 2026 The topocat Authors
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


#include "support.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "topocat/report.hpp"

using namespace topocat;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string("cd '") + TOPOCAT_DATA_DIR + "' && '" + TOPOCAT_CLI_PATH + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json cli_json(const std::string& args, int expected_code) {
  const Run r = cli(args + " --format json");
  CHECK(r.code == expected_code);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("product law on the two-point space exits 0") {
  const Run r = cli("modal pi --space sierpinski.json --space sierpinski.json");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("the bad raw loop exits 1 with witness {0}") {
  const Json j = cli_json("loops check --loop raw_bad.json", 1);
  CHECK(j["status"] == "fail");
  CHECK(j["report"][0]["status"] == "fail");
  CHECK(j["report"][0]["witness"]["A"] == Json::array({0}));
}

TEST_CASE("enumeration counts") {
  CHECK(cli("space enumerate 3 --count-only").out == "29\n");
  CHECK(cli("space enumerate 4 --count-only --strategy preorders").out == "355\n");
  CHECK(cli("space enumerate 9 --count-only").code == 2);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(cli("").code == 2);
  CHECK(cli("bogus").code == 2);
  CHECK(cli("space check --space missing.json").code == 2);
  CHECK(cli("logic parse 'P(x) & dia'").code == 2);
  const Json j = cli_json("complete verify-l5 --bundle bundle_bad.json", 2);
  CHECK(j["status"] == "error");
  CHECK(j["error"]["kind"] == "HypothesisViolated");
  CHECK(j["error"]["witness"]["symbol"] == "phi");
  CHECK(cli("synt check --universe universe_discontinuous.json").code == 2);
}

TEST_CASE("reports have a fixed shape") {
  const Json j = cli_json("space check --space sierpinski.json", 0);
  CHECK(j["command"] == "space check");
  CHECK(j["status"] == "pass");
  REQUIRE(j["report"].is_array());
  for (const auto& law : j["report"]) {
    CHECK(law.contains("law"));
    CHECK(law.contains("status"));
    CHECK(law.contains("witness"));
    CHECK(law.contains("checked"));
    CHECK(law.contains("mode"));
  }
  CHECK(j.contains("result"));
}

TEST_CASE("closure and other space queries") {
  const Json j = cli_json("space closure --space sierpinski --set '[1]'", 0);
  CHECK(j["result"]["closure"] == Json::array({0, 1}));
  CHECK(cli_json("space hausdorff --space sierpinski", 0)["result"]["hausdorff"] == false);
  CHECK(cli_json("space hausdorff --space discrete:3", 0)["result"]["hausdorff"] == true);
}

TEST_CASE("module commands on the sample data") {
  CHECK(cli("loops aux --loop conjugate_loop.json").code == 0);
  CHECK(cli("relseq validate --seq seq_small.json").code == 0);
  CHECK(cli("relseq colimit --seq seq_small.json").code == 0);
  CHECK(cli("relseq from-poset --poset poset_chain.json --depth 3").code == 0);
  CHECK(cli("relseq from-metric --metric metric_line.json --depth 3").code == 0);
  CHECK(cli("complete close-relations --bundle bundle_product.json").code == 0);
  CHECK(cli("complete verify-l5 --bundle bundle_chain.json").code == 0);
  CHECK(cli("complete assemble --bundle bundle_poset.json").code == 0);
  CHECK(cli("complete assemble --bundle bundle_chain.json").code == 1);
  CHECK(cli("complete verify-l5 --bundle bundle_named.json").code == 0);
  CHECK(cli("synt check --universe universe_sierpinski.json").code == 0);
  CHECK(cli("synt check --universe universe_small.json").code == 0);
}

TEST_CASE("logic commands") {
  CHECK(cli("logic parse 'exists y:Y. P(x) & Q(y)'").out == "exists y:Y. P(x) & Q(y)\n");
  const Json e = cli_json("logic eval --model model_s2.json --formula '(dia P)(x,x)'", 0);
  CHECK(e["result"]["tuples"] == Json::array({Json::array({"0"})}));
  const Json c = cli_json("logic check --model model_s2.json --sequent '(dia P)(x,x) |- dia P(x,x)'", 1);
  CHECK(c["report"][0]["witness"]["point"]["x"] == "0");
  CHECK(cli("logic check --model model_s2.json --sequent 'dia P(x,x) |- (dia P)(x,x)'").code == 0);
  CHECK(cli("logic check --model model_two_sorts.json --sequent 'dia P(x) & dia Q(y) |- dia (P(x) & Q(y))'").code == 0);
}

TEST_CASE("seeded commands are byte-identical across runs") {
  const std::string args = "loops search-counterexample --count 200 --length 2 --seed 99 --format json";
  const Run a = cli(args);
  const Run b = cli(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}
