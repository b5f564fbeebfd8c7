// Copyright 2026 The qchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "qchain/cli/commands.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qchain::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("qchain-cli-" + std::to_string(std::rand()) + "-" +
                                         std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<json> records(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(json::parse(line));  // throws on a malformed line
  return out;
}

const std::string kBase = "theta1: 0.6283185307179586\nn: 2\nnodes: 5\nseed: 42\n";

}  // namespace

TEST_CASE("chain-build writes a snapshot and reports the cumulative phase") {
  TempDir dir;
  const auto cfg = dir.write("c.yaml", kBase + "payloads: [\"00\", \"10\", \"11\"]\n");
  const auto r = run({"chain-build", "--config", cfg, "--out", dir.file("snap.json")});
  REQUIRE(r.code == 0);
  const auto summary = records(r.out).back();
  CHECK(summary["kind"] == "summary");
  CHECK(summary["cumulative_phase"].get<double>() == doctest::Approx(7 * std::numbers::pi / 20).epsilon(1e-11));
  CHECK(summary["branch0"] == "001011");
  const auto snap = json::parse(slurp(dir.file("snap.json")));
  CHECK(snap["format"] == "qchain-snapshot/1");
  CHECK(snap["block_count"] == 3);
}

TEST_CASE("chain-build in temporal mode records the absorbed qubits") {
  TempDir dir;
  const auto cfg = dir.write("c.yaml", kBase + "mode: temporal\npayloads: [\"01\", \"10\", \"11\", \"00\"]\n");
  const auto r = run({"chain-build", "--config", cfg});
  REQUIRE(r.code == 0);
  const auto recs = records(r.out);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0]["absorbed_count"] == 7);
  CHECK(recs[1]["absorbed_count"] == 7);
}

TEST_CASE("chain-validate accepts the snapshot written by chain-build") {
  TempDir dir;
  const auto build = dir.write("b.yaml", kBase + "payloads: [\"00\", \"11\", \"01\"]\n");
  REQUIRE(run({"chain-build", "--config", build, "--out", dir.file("chain.json"), "--quiet"}).code == 0);
  const auto check = dir.write("v.yaml", kBase + "trials: 500\nsnapshot: chain.json\n");
  const auto r = run({"chain-validate", "--config", check});
  REQUIRE(r.code == 0);
  const auto s = records(r.out).back();
  CHECK(s["plus"] == 500);
  CHECK(s["valid"] == true);
  CHECK(s["exact_plus_probability"].get<double>() == doctest::Approx(1.0));

  const auto other = dir.write("o.yaml", "theta1: 0.5\nn: 2\nnodes: 5\nseed: 1\nsnapshot: chain.json\n");
  CHECK(run({"chain-validate", "--config", other}).code == 2);
}

TEST_CASE("attack reports empirical and predicted rates") {
  TempDir dir;
  const auto cfg = dir.write("a.yaml", kBase + "trials: 20000\npayloads: [\"00\", \"10\", \"11\"]\n"
                                               "attack: {kind: phase-shift, target: 2, delta: 0.3141592653589793}\n");
  const auto r = run({"attack", "--config", cfg});
  REQUIRE(r.code == 0);
  const auto s = records(r.out).back();
  CHECK(s["predicted_plus_rate"].get<double>() == doctest::Approx(0.975528258148));
  CHECK(s["gap"].get<double>() < 0.01);
  CHECK(s["structurally_blocked"] == 0);
}

TEST_CASE("attacks on absorbed temporal qubits are counted as blocked") {
  TempDir dir;
  const auto cfg = dir.write("a.yaml", kBase + "trials: 300\nmode: temporal\npayloads: [\"00\", \"10\", \"11\"]\n"
                                               "attack: {kind: measure-qubit, target: 0}\n");
  const auto r = run({"attack", "--config", cfg});
  REQUIRE(r.code == 0);
  const auto s = records(r.out).back();
  CHECK(s["structurally_blocked"] == 300);
  CHECK(s["attempted"] == 0);
  CHECK(s["detection_rate"].is_null());
}

TEST_CASE("attack needs an attack block and a real target") {
  TempDir dir;
  CHECK(run({"attack", "--config", dir.write("a.yaml", kBase)}).code == 2);
  const auto far = dir.write("f.yaml", kBase + "payloads: [\"00\"]\nattack: {kind: measure-qubit, target: 2}\n");
  const auto r = run({"attack", "--config", far});
  CHECK(r.code == 2);
  CHECK(r.err.find("attack.target") != std::string::npos);
}

TEST_CASE("consensus emits one record per protocol step plus a summary") {
  TempDir dir;
  const auto cfg = dir.write("c.yaml", kBase + "trials: 3\nk: 4\nadversary: {dishonest_validators: [4]}\n");
  const auto r = run({"consensus", "--config", cfg});
  REQUIRE(r.code == 0);
  const auto recs = records(r.out);
  // per round: proposal + 5 measurements + 5 verdicts + tally
  REQUIRE(recs.size() == 3 * 12 + 1);
  CHECK(recs[0]["kind"] == "proposal");
  CHECK(recs[1]["kind"] == "measurement");
  CHECK(recs[6]["kind"] == "verdict");
  CHECK(recs[11]["kind"] == "tally");
  for (std::size_t i = 0; i < recs.size(); ++i) CHECK(recs[i]["tick"] == i);
  const auto s = recs.back();
  CHECK(s["kind"] == "summary");
  CHECK(s["false_reject"]["events"] == 0);
  CHECK(s["liar_blacklist"]["value"] == 1.0);
}

TEST_CASE("--quiet keeps only the summary; --out writes the report file") {
  TempDir dir;
  const auto cfg = dir.write("c.yaml", kBase + "trials: 4\nk: 3\n");
  const auto quiet = run({"consensus", "--config", cfg, "--quiet"});
  REQUIRE(quiet.code == 0);
  CHECK(records(quiet.out).size() == 1);

  const auto filed = run({"consensus", "--config", cfg, "--out", dir.file("r.jsonl")});
  REQUIRE(filed.code == 0);
  CHECK(records(slurp(dir.file("r.jsonl"))).size() == 4 * 12 + 1);
  CHECK(records(filed.out).size() == 1);
}

TEST_CASE("same config and seed give byte-identical reports; --seed changes them") {
  TempDir dir;
  const auto cfg = dir.write("c.yaml", kBase + "trials: 50\nk: 5\n"
                                               "adversary: {creator_strategy: wrong-phase-all, delta: 0.5}\n");
  const auto a = run({"consensus", "--config", cfg});
  const auto b = run({"consensus", "--config", cfg});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto c = run({"consensus", "--config", cfg, "--seed", "43"});
  CHECK(c.out != a.out);
  CHECK(run({"consensus", "--config", cfg, "--seed", "43"}).out == c.out);
}

TEST_CASE("encode lists each block with its decoded payload") {
  TempDir dir;
  const auto cfg = dir.write("e.yaml", kBase + "payloads: [\"01\", \"10\", \"11\"]\ncodec: random\n");
  const auto r = run({"encode", "--config", cfg});
  REQUIRE(r.code == 0);
  const auto recs = records(r.out);
  REQUIRE(recs.size() == 4);
  for (int i = 0; i < 3; ++i) CHECK(recs[i]["decoded"] == recs[i]["payload"]);
  CHECK(recs[3]["codec"]["format"] == "qchain-codec/1");
}

TEST_CASE("exit codes: 0 success, 2 config or constraint errors") {
  TempDir dir;
  CHECK(run({"encode", "--config", dir.write("ok.yaml", kBase)}).code == 0);
  CHECK(run({"encode", "--config", dir.write("budget.yaml", "theta1: 0.8\nn: 2\nnodes: 5\nseed: 1\n")}).code == 2);
  CHECK(run({"encode", "--config", dir.write("nonodes.yaml", "theta1: 0.6\nn: 2\nseed: 1\n")}).code == 2);
  CHECK(run({"chain-build", "--config", dir.write("gen.yaml", kBase + "payloads: [\"10\"]\n")}).code == 2);
  CHECK(run({"encode", "--config", dir.file("missing.yaml")}).code == 2);
  CHECK(run({"encode"}).code == 2);
  CHECK(run({"teleport", "--config", "x"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("exit code 1 on a runtime failure") {
  TempDir dir;
  const auto cfg = dir.write("ok.yaml", kBase);
  const auto r = run({"chain-build", "--config", cfg, "--out", dir.file("no/such/dir/snap.json")});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("the built binary returns the same exit codes") {
  TempDir dir;
  const std::string bin = QCHAIN_BINARY;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("encode --config " + dir.write("ok.yaml", kBase)) == 0);
  CHECK(status("encode --config " + dir.write("bad.yaml", "theta1: 0.8\nn: 2\nnodes: 5\nseed: 1\n")) == 2);
  CHECK(status("chain-build --config " + dir.write("ok2.yaml", kBase) + " --out " + dir.file("x/y/z.json")) == 1);
}
