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

// Command-line front end: solve, decompose, verify, oracle.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tcmg/game.hpp"
#include "tcmg/graph.hpp"
#include "tcmg/matching.hpp"
#include "tcmg/oracle.hpp"
#include "tcmg/report.hpp"
#include "tcmg/solvers.hpp"

namespace {

using namespace tcmg;

enum ExitCode {
  kOk = 0,
  kRejected = 1,
  kBadInput = 2,
  kCap = 3,
  kThreshold = 4,
  kNotImputation = 5,
  kInternal = 6,
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Graph load_graph(const std::string& path) {
  return parse_graph(read_file(path), format_for_path(path));
}

struct SolveArgs {
  std::string graph;
  int threshold = 1;
  std::string what = "least-core";
  std::string method = "auto";
  bool pretty = false;
  bool timing = false;
  bool compare = false;
};

SolverOptions options_from_env() {
  SolverOptions o;
  o.oracle_cap = oracle_cap_from_env(o.oracle_cap);
  return o;
}

LeastCoreStrategy least_core_strategy(const std::string& m) {
  if (m == "auto") return LeastCoreStrategy::kAuto;
  if (m == "closed-form") return LeastCoreStrategy::kClosedForm;
  if (m == "constraint-gen") return LeastCoreStrategy::kConstraintGeneration;
  if (m == "brute-force") return LeastCoreStrategy::kBruteForce;
  throw UnsupportedMethod("method " + m + " does not apply to least-core");
}

NucleolusStrategy nucleolus_strategy(const std::string& m) {
  if (m == "auto") return NucleolusStrategy::kAuto;
  if (m == "closed-form") return NucleolusStrategy::kSpecialized;
  if (m == "essential") return NucleolusStrategy::kEssential;
  if (m == "brute-force") return NucleolusStrategy::kBruteForce;
  throw UnsupportedMethod("method " + m + " does not apply to nucleolus");
}

Json solve_report(const TcmGame& game, const SolveArgs& a, const SolverOptions& o) {
  if (a.what == "core") {
    if (a.method != "auto" && a.method != "closed-form") {
      throw UnsupportedMethod("method " + a.method + " does not apply to core");
    }
    return core_report(game, core(game));
  }
  if (a.what == "least-core") {
    return least_core_report(game, least_core(game, least_core_strategy(a.method), o));
  }
  if (a.what == "nucleolus") {
    return nucleolus_report(game, nucleolus(game, nucleolus_strategy(a.method), o));
  }
  if (a.method != "auto" && a.method != "constraint-gen") {
    throw UnsupportedMethod("method " + a.method + " does not apply to mig");
  }
  return mig_report(game, mig_equilibrium(game, o));
}

void emit(Json report, bool pretty, bool timing,
          std::chrono::steady_clock::time_point start) {
  if (timing) {
    report["time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  std::cout << dump(report, pretty) << "\n";
}

int cmd_solve(const SolveArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const SolverOptions o = options_from_env();
  const TcmGame game(load_graph(a.graph), a.threshold);
  emit(solve_report(game, a, o), a.pretty, a.timing, start);
  return kOk;
}

int cmd_decompose(const std::string& path, bool pretty) {
  const Graph g = load_graph(path);
  std::cout << dump(decomposition_json(g, gallai_edmonds(g)), pretty) << "\n";
  return kOk;
}

struct VerifyArgs {
  std::string graph;
  int threshold = 1;
  std::string imputation;
  std::string epsilon;
  bool pretty = false;
};

int cmd_verify(const VerifyArgs& a) {
  const TcmGame game(load_graph(a.graph), a.threshold);
  const Rational eps = parse_rational(a.epsilon);
  std::vector<Rational> raw = parse_rational_array(read_file(a.imputation));
  if (static_cast<int>(raw.size()) != game.player_count()) {
    throw UsageError("imputation has " + std::to_string(raw.size()) + " entries, graph has " +
                     std::to_string(game.player_count()) + " vertices");
  }
  const Imputation x(std::move(raw));
  const MembershipVerdict v = verify_least_core_membership(game, x, eps);
  Json j;
  j["schema"] = kReportSchema;
  j["input"] = input_json(game.graph(), game.threshold());
  j["epsilon"] = rational_json(eps);
  j["accepted"] = v.accepted;
  j["certificate"] = v.violating_matching ? matching_json(*v.violating_matching) : Json(nullptr);
  j["violating_vertex"] = v.violating_vertex ? Json(*v.violating_vertex) : Json(nullptr);
  j["min_matching_cost"] = v.min_matching_cost ? rational_json(*v.min_matching_cost)
                                               : Json(nullptr);
  std::cout << dump(j, a.pretty) << "\n";
  return v.accepted ? kOk : kRejected;
}

Json compare_least_core(const TcmGame& game, const LeastCoreResult& oracle,
                        const LeastCoreResult& fast) {
  const bool eps_equal = oracle.epsilon == fast.epsilon;
  const bool fast_ok = verify_least_core_membership(game, fast.point, oracle.epsilon).accepted;
  const bool oracle_ok = verify_least_core_membership(game, oracle.point, oracle.epsilon).accepted;
  Json c;
  c["fast_method"] = method_name(fast.method);
  c["fields"] = {
      {"epsilon",
       {{"oracle", rational_json(oracle.epsilon)},
        {"fast", rational_json(fast.epsilon)},
        {"equal", eps_equal}}},
      {"point", {{"fast_verified", fast_ok}, {"oracle_verified", oracle_ok}}},
  };
  c["equal"] = eps_equal && fast_ok && oracle_ok;
  return c;
}

int cmd_oracle(const SolveArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  SolverOptions o = options_from_env();
  const TcmGame game(load_graph(a.graph), a.threshold);
  if (static_cast<std::size_t>(game.player_count()) > o.oracle_cap) {
    throw CapExceeded("oracle limited to " + std::to_string(o.oracle_cap) + " players");
  }
  Json report;
  bool equal = true;
  if (a.what == "least-core" || a.what == "core") {
    const LeastCoreResult bf = brute_force_least_core(game, o.oracle_cap, o.lp);
    if (a.what == "core") {
      report = core_report(game, core(game));
      report["method"] = "brute_force";
      report["result"]["nonempty"] = bf.epsilon >= 0;
      if (a.compare) {
        const bool same = (bf.epsilon >= 0) == core(game).nonempty;
        report["compare"] = {{"fast_method", "veto_players"}, {"equal", same}};
        equal = same;
      }
    } else {
      report = least_core_report(game, bf);
      if (a.compare) {
        const LeastCoreResult fast = least_core(game, LeastCoreStrategy::kAuto, o);
        report["compare"] = compare_least_core(game, bf, fast);
        equal = report["compare"]["equal"].get<bool>();
      }
    }
  } else if (a.what == "nucleolus") {
    const OracleNucleolus bf = brute_force_nucleolus(game, o.oracle_cap, o.lp);
    report = nucleolus_report(game, bf.result);
    report["excess_profile"] = excess_profile_json(bf.profile);
    if (a.compare) {
      const NucleolusResult fast = nucleolus(game, NucleolusStrategy::kAuto, o);
      equal = fast.point == bf.result.point;
      report["compare"] = {
          {"fast_method", method_name(fast.method)},
          {"fields",
           {{"point",
             {{"oracle", point_json(bf.result.point.payoffs())},
              {"fast", point_json(fast.point.payoffs())},
              {"equal", equal}}}}},
          {"equal", equal}};
    }
  } else {
    const Rational alpha = brute_force_mig_value(game, o.essential_cap, o.lp);
    report = mig_report(game, MigEquilibrium{alpha, Imputation::uniform(game.player_count()),
                                             std::nullopt, std::nullopt, {}});
    report["method"] = "brute_force";
    report["result"].erase("interceptor");
    report["result"].erase("matcher");
    report["result"].erase("delta");
    if (a.compare) {
      const MigEquilibrium fast = mig_equilibrium(game, o);
      equal = fast.value == alpha;
      report["compare"] = {{"fast_method", "constraint_generation"},
                           {"fields",
                            {{"value",
                              {{"oracle", rational_json(alpha)},
                               {"fast", rational_json(fast.value)},
                               {"equal", equal}}}}},
                           {"equal", equal}};
    }
  }
  emit(std::move(report), a.pretty, a.timing, start);
  return equal ? kOk : kRejected;
}

template <typename F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const ThresholdOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kThreshold;
  } catch (const NotAnImputation& e) {
    std::cerr << "error: not an imputation: " << e.what() << "\n";
    return kNotImputation;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

void add_solve_flags(CLI::App* cmd, SolveArgs& a) {
  cmd->add_option("--graph", a.graph, "graph file (.json, or .txt/.edges/.edgelist)")
      ->required();
  cmd->add_option("--threshold,-T", a.threshold, "threshold T")->required();
  cmd->add_option("--what", a.what, "solution concept")
      ->check(CLI::IsMember({"core", "least-core", "nucleolus", "mig"}));
  cmd->add_option("--method", a.method, "algorithm")
      ->check(CLI::IsMember({"auto", "closed-form", "constraint-gen", "essential", "brute-force"}));
  cmd->add_flag("--pretty", a.pretty, "indent JSON output");
  cmd->add_flag("--timing", a.timing, "fill in time_ms");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold cardinality matching games: core, least-core, nucleolus"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve a game");
  add_solve_flags(solve, solve_args);

  std::string decompose_graph;
  bool decompose_pretty = false;
  auto* decompose = app.add_subcommand("decompose", "Gallai-Edmonds decomposition");
  decompose->add_option("--graph", decompose_graph, "graph file")->required();
  decompose->add_flag("--pretty", decompose_pretty, "indent JSON output");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check least-core membership");
  verify->add_option("--graph", verify_args.graph, "graph file")->required();
  verify->add_option("--threshold,-T", verify_args.threshold, "threshold T")->required();
  verify->add_option("--imputation", verify_args.imputation, "JSON array of p/q strings")
      ->required();
  verify->add_option("--epsilon", verify_args.epsilon, "epsilon as p/q")->required();
  verify->add_flag("--pretty", verify_args.pretty, "indent JSON output");

  SolveArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "brute force over all coalitions");
  add_solve_flags(oracle, oracle_args);
  oracle->add_flag("--compare", oracle_args.compare, "also run the fast path and diff");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  if (*solve) return guarded([&] { return cmd_solve(solve_args); });
  if (*decompose) return guarded([&] { return cmd_decompose(decompose_graph, decompose_pretty); });
  if (*verify) return guarded([&] { return cmd_verify(verify_args); });
  return guarded([&] { return cmd_oracle(oracle_args); });
}
