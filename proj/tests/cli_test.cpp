// Copyright 2026 The tcmg Authors
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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("tcmg_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct ScratchCleanup {
  fs::path dir = scratch();
  ~ScratchCleanup() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
} cleanup;

fs::path write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Run run(const std::string& args) {
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd = std::string(TCMG_CLI) + " " + args + " 2>" + err.string();
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

std::string k3() { return write("k3.json", R"({"n":3,"edges":[[0,1],[1,2],[0,2]]})").string(); }
std::string p3() { return write("p3.txt", "0 1\n1 2\n").string(); }
std::string c6() {
  return write("c6.json", R"({"n":6,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[0,5]]})").string();
}
std::string k23() {
  return write("k23.json",
               R"({"n":5,"edges":[[0,2],[0,3],[0,4],[1,2],[1,3],[1,4]]})")
      .string();
}
std::string ds() { return write("ds.txt", "# double star\n0 1\n0 2\n0 3\n1 4\n1 5\n").string(); }

TEST_CASE("solve least core") {
  const Run r = run("solve --graph " + k3() + " --threshold 1 --what least-core");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["result"]["epsilon"] == "-1/3");
  CHECK(j["schema"] == "tcmg.report/1");
  for (const char* key : {"input", "method", "result", "rounds", "certificate", "time_ms"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["input"] == json::parse(R"({"n":3,"m":3,"T":1})"));
}

TEST_CASE("solve nucleolus") {
  const Run r = run("solve --graph " + p3() + " --threshold 1 --what nucleolus");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["result"]["point"] == json::parse(R"(["0/1","1/1","0/1"])"));
}

TEST_CASE("solve core and mig") {
  const Run core = run("solve --graph " + p3() + " -T 1 --what core");
  CHECK(core.code == 0);
  CHECK(json::parse(core.out)["result"]["veto_players"] == json::parse("[1]"));
  const Run mig = run("solve --graph " + k3() + " -T 1 --what mig");
  CHECK(mig.code == 0);
  CHECK(json::parse(mig.out)["result"]["value"] == "2/3");
}

TEST_CASE("threshold out of range") {
  const Run r = run("solve --graph " + k3() + " --threshold 2 --what core");
  CHECK(r.code == 4);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("bad input") {
  const std::string bad = write("bad.json", R"({"n":2,"edges":[[0,0]]})").string();
  CHECK(run("solve --graph " + bad + " -T 1").code == 2);
  CHECK(run("solve --graph " + (scratch() / "missing.json").string() + " -T 1").code == 2);
  CHECK(run("solve --graph " + k3() + " -T 1 --what shapley").code == 2);
  CHECK(run("solve --graph " + k3()).code == 2);
  CHECK(run("frobnicate").code == 2);
  const Run r = run("solve --graph " + bad + " -T 1");
  CHECK(r.out.empty());
}

TEST_CASE("unsupported method") {
  const std::string g = write("tri_tail.txt", "0 1\n1 2\n0 2\n2 3\n3 4\n4 5\n5 6\n").string();
  CHECK(run("solve --graph " + g + " -T 2 --what least-core --method closed-form").code == 2);
  CHECK(run("solve --graph " + g + " -T 2 --what least-core --method constraint-gen").code == 0);
}

TEST_CASE("decompose") {
  const json p = json::parse(run("decompose --graph " + p3()).out);
  CHECK(p["tutte_set"] == json::parse("[1]"));
  CHECK(p["odd_components"] == json::parse("[[0],[2]]"));
  const json c = json::parse(run("decompose --graph " + c6()).out);
  CHECK(c["tutte_set"] == json::array());
  CHECK(c["even_components"] == json::parse("[[0,1,2,3,4,5]]"));
  const json d = json::parse(run("decompose --graph " + ds()).out);
  CHECK(d["d02"].size() == 2);
}

TEST_CASE("verify") {
  const std::string uniform = write("u.json", R"(["1/3","1/3","1/3"])").string();
  const std::string corner = write("corner.json", R"(["1","0","0"])").string();
  const std::string heavy = write("heavy.json", R"(["1/2","1/2","1/2"])").string();
  const std::string shortv = write("short.json", R"(["1/2","1/2"])").string();
  const std::string junk = write("junk.json", R"([1, 2)").string();

  const Run ok = run("verify --graph " + k3() + " -T 1 --imputation " + uniform +
                     " --epsilon -1/3");
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["accepted"] == true);

  const Run no = run("verify --graph " + k3() + " -T 1 --imputation " + corner +
                     " --epsilon -1/3");
  CHECK(no.code == 1);
  CHECK(json::parse(no.out)["certificate"] == json::parse("[[1,2]]"));

  CHECK(run("verify --graph " + k3() + " -T 1 --imputation " + heavy + " --epsilon -1/3").code ==
        5);
  CHECK(run("verify --graph " + k3() + " -T 1 --imputation " + shortv + " --epsilon -1/3").code ==
        2);
  CHECK(run("verify --graph " + k3() + " -T 1 --imputation " + junk + " --epsilon -1/3").code ==
        2);
  CHECK(run("verify --graph " + k3() + " -T 1 --imputation " + uniform + " --epsilon x").code ==
        2);
}

TEST_CASE("oracle compare") {
  const Run a = run("oracle --graph " + c6() + " --threshold 2 --what least-core --compare");
  CHECK(a.code == 0);
  CHECK(json::parse(a.out)["compare"]["equal"] == true);
  const Run b = run("oracle --graph " + k23() + " --threshold 1 --what nucleolus --compare");
  CHECK(b.code == 0);
  const json jb = json::parse(b.out);
  CHECK(jb["result"]["point"] == json::parse(R"(["1/2","1/2","0/1","0/1","0/1"])"));
  CHECK(jb["excess_profile"].size() == 30);
}

TEST_CASE("oracle cap") {
  std::string text;
  for (int i = 0; i + 1 < 20; ++i) text += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
  const std::string big = write("p20.txt", text).string();
  CHECK(run("oracle --graph " + big + " --threshold 1 --what least-core").code == 3);
  CHECK(run("solve --graph " + big + " --threshold 1 --what least-core").code == 0);
  CHECK(run("oracle --graph " + k3() + " -T 1 --what least-core").code == 0);
  const std::string env = "TCMG_ORACLE_CAP=2 ";
  const std::string cmd = "env " + env + TCMG_CLI + " oracle --graph " + k3() +
                          " -T 1 --what least-core >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("output is byte deterministic") {
  for (const std::string& args :
       {"solve --graph " + c6() + " -T 2 --what nucleolus --pretty",
        "solve --graph " + ds() + " -T 1 --what least-core",
        "solve --graph " + k23() + " -T 1 --what mig", "decompose --graph " + ds()}) {
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("timing is opt in") {
  const json plain = json::parse(run("solve --graph " + k3() + " -T 1").out);
  CHECK(plain["time_ms"].is_null());
  const json timed = json::parse(run("solve --graph " + k3() + " -T 1 --timing").out);
  CHECK(timed["time_ms"].is_number());
}

}  // namespace
