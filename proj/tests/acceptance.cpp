// Copyright 2026 The gpd Authors
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

// Acceptance suite: one PASS/FAIL line per criterion; non-zero exit if any
// criterion fails.  All comparisons are exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "gpd/dilemma.hpp"
#include "gpd/equilibrium.hpp"
#include "gpd/game_io.hpp"
#include "test_oracle.hpp"

#ifndef GPD_GOLDEN_DIR
#error "GPD_GOLDEN_DIR must point at tests/golden"
#endif

namespace {

using namespace gpd;
using gpd::testing::brute_force_pure_nash;
using gpd::testing::check_mixed_equilibrium;
using gpd::testing::random_game;
using gpd::testing::random_pd_params;

constexpr std::size_t kC = 0, kD = 1, kS = 2;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome classical_equilibrium() {
  const auto eq = pure_equilibria(classical_pd());
  if (eq != std::vector<PureProfile>{{kD, kD}}) return fail("expected exactly [(D,D)]");
  return {};
}

Outcome reduction_identity() {
  std::mt19937_64 rng(1001);
  int checked = 0;
  for (int k = 0; k < 50; ++k) {
    const PdParams p = random_pd_params(rng);
    const Game classical = classical_pd(p);
    std::vector<SilenceSemantics> sems;
    for (int n = 0; n <= 10; ++n) sems.push_back(Mixture{rat(n, 10)});
    sems.push_back(Ambiguous{Attitude::pessimistic});
    sems.push_back(Ambiguous{Attitude::optimistic});
    for (const auto& sem : sems) {
      if (reduce_to_classical(generalized_pd(p, sem)) != classical) return fail("tensor mismatch");
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (params, semantics) pairs"};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(1002);
  for (int k = 0; k < 500; ++k) {
    const Game g = random_game(rng, 6);
    std::set<std::pair<std::size_t, std::size_t>> got;
    for (const auto& p : pure_equilibria(g)) got.insert({p.row, p.col});
    if (got != brute_force_pure_nash(g)) return fail("game " + std::to_string(k) + " differs");
  }
  return {true, "500 games"};
}

Outcome mixed_soundness() {
  std::mt19937_64 rng(1003);
  std::size_t profiles = 0;
  for (int k = 0; k < 200; ++k) {
    const Game g = random_game(rng, 4);
    for (const auto& m : mixed_equilibria(g)) {
      auto c = check_mixed_equilibrium(g, m.x, m.y);
      if (!c.ok) return fail("game " + std::to_string(k) + ": " + c.why);
      ++profiles;
    }
  }
  const auto mp = mixed_equilibria(gpd::testing::matching_pennies());
  const std::vector<Rat> half{rat(1, 2), rat(1, 2)};
  if (mp.size() != 1 || mp[0].x != half || mp[0].y != half) {
    return fail("matching pennies is not uniquely x=y=(1/2,1/2)");
  }
  return {true, std::to_string(profiles) + " profiles checked"};
}

Outcome completeness_sentinel() {
  std::mt19937_64 rng(1004);
  std::vector<Game> games;
  for (int k = 0; k < 200; ++k) games.push_back(random_game(rng, 4));
  // Heavily tied payoffs stress the degenerate paths.
  std::uniform_int_distribution<int> coarse(0, 1);
  for (int k = 0; k < 100; ++k) {
    Game g = random_game(rng, 4);
    for (auto* u : {&g.u1, &g.u2}) {
      for (auto& row : *u) {
        for (auto& x : row) x = coarse(rng);
      }
    }
    games.push_back(std::move(g));
  }
  games.push_back(classical_pd());
  games.push_back(generalized_pd({}, Mixture{0}));
  games.push_back(generalized_pd({}, Ambiguous{Attitude::optimistic}));
  for (std::size_t k = 0; k < games.size(); ++k) {
    try {
      if (mixed_equilibria(games[k]).empty()) return fail("empty list for game " + std::to_string(k));
    } catch (const std::logic_error& e) {
      return fail("game " + std::to_string(k) + ": " + e.what());
    }
  }
  return {true, std::to_string(games.size()) + " games"};
}

Outcome silence_dominance() {
  std::mt19937_64 rng(1005);
  for (int k = 0; k < 100; ++k) {
    const PdParams p = random_pd_params(rng);
    for (int n = 1; n <= 20; ++n) {
      const Game g = generalized_pd(p, Mixture{rat(n, 20)});
      const auto facts = dominance_facts(g, DominanceMode::strict);
      for (Player pl : {Player::one, Player::two}) {
        if (std::find(facts.begin(), facts.end(), DominanceFact{pl, kS, kD, DominanceMode::strict}) ==
            facts.end()) {
          return fail("D does not strictly dominate S at w=" + rat(n, 20).to_string());
        }
      }
      if (pure_equilibria(g) != std::vector<PureProfile>{{kD, kD}}) {
        return fail("equilibria differ from [(D,D)] at w=" + rat(n, 20).to_string());
      }
    }
  }
  return {true, "100 params x 20 weights"};
}

Outcome endpoint_collapse() {
  std::mt19937_64 rng(1006);
  std::vector<PdParams> params{PdParams{}};
  for (int k = 0; k < 20; ++k) params.push_back(random_pd_params(rng));
  for (const auto& p : params) {
    for (auto [w, twin] : {std::pair{Rat(1), kC}, std::pair{Rat(0), kD}}) {
      const Game g = generalized_pd(p, Mixture{w});
      for (const auto* u : {&g.u1, &g.u2}) {
        for (std::size_t k = 0; k < 3; ++k) {
          const std::size_t kk = k == kS ? twin : k;
          if ((*u)[kS][k] != (*u)[twin][kk] || (*u)[k][kS] != (*u)[kk][twin]) {
            return fail("S entries differ from their twin at w=" + w.to_string());
          }
        }
      }
    }
  }
  return {};
}

Outcome consistency_inversion() {
  std::mt19937_64 rng(1007);
  std::uniform_int_distribution<int> den(1, 16);
  for (int k = 0; k < 100; ++k) {
    const int d = den(rng);
    const Rat w = rat(std::uniform_int_distribution<int>(0, d)(rng), d);
    const auto v = mixture_consistency(generalized_pd(random_pd_params(rng), Mixture{w}));
    if (v.status != Consistency::unique_weight || !v.weight || *v.weight != w) {
      return fail("weight " + w.to_string() + " not recovered");
    }
  }
  const auto v = mixture_consistency(generalized_pd({}, Ambiguous{Attitude::pessimistic}));
  if (v.status != Consistency::inconsistent) return fail("pessimistic game judged consistent");
  return {true, "100 pairs + pessimistic counterexample"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string cli_stdout(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  if (gpd::cli::run(args, in, out, err) != gpd::cli::kOk) return "<exit failure: " + err.str() + ">";
  return out.str();
}

Outcome io_round_trip() {
  std::mt19937_64 rng(1008);
  for (int k = 0; k < 200; ++k) {
    const Game g = random_game(rng, 6);
    if (parse_game(serialize_game(g, "g")).game != g) return fail("round trip changed game");
  }
  const std::filesystem::path dir(GPD_GOLDEN_DIR);
  const std::string pd = slurp(dir / "pd.game");
  if (cli_stdout({"pd"}) != pd) return fail("`pd` differs from golden");
  if (cli_stdout({"gpd", "--w", "1/2"}) != slurp(dir / "gpd_w_half.game")) {
    return fail("`gpd --w 1/2` differs from golden");
  }
  if (cli_stdout({"solve", "-", "--pure", "--format", "csv"}, pd) != slurp(dir / "solve_pd_pure.csv")) {
    return fail("`solve --pure --format csv` differs from golden");
  }
  return {true, "200 games + 3 goldens"};
}

Outcome affine_invariance() {
  std::mt19937_64 rng(1009);
  std::uniform_int_distribution<int> pos(1, 9);
  for (int k = 0; k < 100; ++k) {
    const Game g = random_game(rng, 6);
    const Rat a = rat(pos(rng), pos(rng));
    const Rat b = gpd::testing::random_small_rat(rng);
    for (Player p : {Player::one, Player::two}) {
      Game h = g;
      for (auto& row : p == Player::one ? h.u1 : h.u2) {
        for (auto& x : row) x = a * x + b;
      }
      if (pure_equilibria(h) != pure_equilibria(g)) return fail("pure equilibria changed");
      for (auto mode : {DominanceMode::strict, DominanceMode::weak}) {
        if (dominance_facts(h, mode) != dominance_facts(g, mode)) return fail("dominance changed");
      }
      for (std::size_t j = 0; j < g.cols(); ++j) {
        if (best_responses(h, Player::one, j) != best_responses(g, Player::one, j)) {
          return fail("player 1 best responses changed");
        }
      }
      for (std::size_t i = 0; i < g.rows(); ++i) {
        if (best_responses(h, Player::two, i) != best_responses(g, Player::two, i)) {
          return fail("player 2 best responses changed");
        }
      }
    }
  }
  return {true, "100 games"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1 classical dilemma equilibrium is exactly (D,D)", classical_equilibrium},
      {"AC2 reduction identity", reduction_identity},
      {"AC3 pure equilibria equal brute-force oracle", oracle_equivalence},
      {"AC4 mixed equilibria soundness", mixed_soundness},
      {"AC5 mixed equilibria never empty", completeness_sentinel},
      {"AC6 D strictly dominates S for w in (0,1]", silence_dominance},
      {"AC7 endpoint collapse", endpoint_collapse},
      {"AC8 mixture consistency inversion", consistency_inversion},
      {"AC9 I/O round trip and golden outputs", io_round_trip},
      {"AC10 affine argmax invariance", affine_invariance},
  };
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  const auto secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed in "
            << secs << "s\n";
  return failures == 0 ? 0 : 1;
}
