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

#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gpd/dilemma.hpp"
#include "gpd/equilibrium.hpp"
#include "gpd/game.hpp"
#include "gpd/game_io.hpp"
#include "gpd/report.hpp"

namespace gpd::cli {
namespace {

// Bad flag values; reported with exit code kUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable input; reported alongside parse errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

Rat parse_rat_flag(const std::string& flag, const std::string& text) {
  auto r = parse_rat(text);
  if (!r.value) throw UsageError(flag + ": '" + text + "' is not a rational (expected a or a/b)");
  return *r.value;
}

PdParams parse_years(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) parts.push_back(part);
  if (parts.size() != 4 || text.back() == ',') {
    throw UsageError("--years: expected four comma-separated sentences free,coop,defect,sucker");
  }
  PdParams p;
  p.years_free = parse_rat_flag("--years", parts[0]);
  p.years_both_coop = parse_rat_flag("--years", parts[1]);
  p.years_both_defect = parse_rat_flag("--years", parts[2]);
  p.years_sucker = parse_rat_flag("--years", parts[3]);
  return p;
}

Format parse_format_flag(const std::string& text) {
  auto f = parse_format(text);
  if (!f) throw UsageError("--format: expected table, csv or json, got '" + text + "'");
  return *f;
}

GameDocument load(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot read '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    return parse_game(text);
  } catch (const ParseError& e) {
    throw ParseError({e.line(), e.column()}, (path == "-" ? "<stdin>" : path) + ": " + e.message());
  }
}

struct SolveArgs {
  std::string file;
  bool pure = false;
  bool mixed = false;
  bool dominance = false;
  bool weak = false;
  std::string format = "table";
};

int cmd_solve(const SolveArgs& a, Io io) {
  const Format format = parse_format_flag(a.format);
  const GameDocument doc = load(a.file, io.in);
  Analyses what;
  if (a.pure || a.mixed || a.dominance) {
    what.pure = a.pure;
    what.mixed = a.mixed;
    what.dominance = a.dominance;
  }
  what.dominance_mode = a.weak ? DominanceMode::weak : DominanceMode::strict;
  io.out << emit_report(doc.game, doc.name, analyze(doc.game, what), format);
  return kOk;
}

int cmd_pd(const std::optional<std::string>& years, Io io) {
  const PdParams params = years ? parse_years(*years) : PdParams{};
  io.out << serialize_game(classical_pd(params), "classical_pd");
  return kOk;
}

struct GpdArgs {
  std::optional<std::string> w;
  std::optional<std::string> ambiguous;
  std::optional<std::string> years;
};

int cmd_gpd(const GpdArgs& a, Io io) {
  if (!a.w && !a.ambiguous) throw UsageError("gpd: one of --w or --ambiguous is required");
  const PdParams params = a.years ? parse_years(*a.years) : PdParams{};
  SilenceSemantics sem;
  std::string name = "generalized_pd";
  if (a.w) {
    sem = Mixture{parse_rat_flag("--w", *a.w)};
  } else if (*a.ambiguous == "pessimistic") {
    sem = Ambiguous{Attitude::pessimistic};
  } else if (*a.ambiguous == "optimistic") {
    sem = Ambiguous{Attitude::optimistic};
  } else {
    throw UsageError("--ambiguous: expected pessimistic or optimistic, got '" + *a.ambiguous + "'");
  }
  io.out << serialize_game(generalized_pd(params, sem), name);
  return kOk;
}

struct SweepArgs {
  int steps = 0;
  std::optional<std::string> years;
  std::string format = "table";
};

int cmd_sweep(const SweepArgs& a, Io io) {
  if (a.steps < 1) throw UsageError("--steps: must be at least 1");
  const Format format = parse_format_flag(a.format);
  const PdParams params = a.years ? parse_years(*a.years) : PdParams{};
  io.out << emit_sweep(sweep_mixture(params, a.steps), format);
  return kOk;
}

int cmd_verify(const std::string& file, const std::string& profile, Io io) {
  const auto comma = profile.find(',');
  if (comma == std::string::npos || profile.find(',', comma + 1) != std::string::npos) {
    throw UsageError("--profile: expected <rowlabel>,<collabel>");
  }
  const std::string row = profile.substr(0, comma);
  const std::string col = profile.substr(comma + 1);
  const GameDocument doc = load(file, io.in);
  const Game& g = doc.game;
  const auto i = g.index_of(Player::one, row);
  const auto j = g.index_of(Player::two, col);
  if (!i) throw InvalidGame("unknown row strategy '" + row + "'");
  if (!j) throw InvalidGame("unknown column strategy '" + col + "'");

  for (Player p : {Player::one, Player::two}) {
    const std::size_t own = p == Player::one ? *i : *j;
    const std::size_t other = p == Player::one ? *j : *i;
    const auto best = best_responses(g, p, other);
    if (std::find(best.begin(), best.end(), own) != best.end()) continue;
    const std::size_t dev = best.front();
    const PureProfile here{*i, *j};
    const PureProfile there = p == Player::one ? PureProfile{dev, *j} : PureProfile{*i, dev};
    const Rat gain = payoff(g, p, there) - payoff(g, p, here);
    io.out << "NOT NASH: player " << to_int(p) << " deviates " << g.labels(p)[own] << "→"
           << g.labels(p)[dev] << ", gain " << gain << "\n";
    return kOk;
  }
  io.out << "NASH\n";
  return kOk;
}

int cmd_reduce(const std::string& file, Io io) {
  const GameDocument doc = load(file, io.in);
  io.out << serialize_game(reduce_to_classical(doc.game), "classical_pd");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Exact two-player game solver with the classical and generalized prisoner's dilemma",
               "gpd"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Equilibria and dominance of a game file");
  solve_cmd->add_option("file", solve.file, "Game file, or - for standard input")->required();
  solve_cmd->add_flag("--pure", solve.pure, "Pure Nash equilibria");
  solve_cmd->add_flag("--mixed", solve.mixed, "Mixed equilibria by support enumeration");
  solve_cmd->add_flag("--dominance", solve.dominance, "Dominated strategies");
  solve_cmd->add_flag("--weak", solve.weak, "Report weak instead of strict dominance");
  solve_cmd->add_option("--format", solve.format, "table, csv or json");

  std::optional<std::string> pd_years;
  auto* pd_cmd = app.add_subcommand("pd", "Print the classical prisoner's dilemma game file");
  pd_cmd->add_option("--years", pd_years, "Sentences free,coop,defect,sucker (default 0,1,4,5)");

  GpdArgs gpd;
  auto* gpd_cmd = app.add_subcommand("gpd", "Print the generalized dilemma with a Silence strategy");
  auto* w_opt = gpd_cmd->add_option("--w", gpd.w, "S plays C with this probability (a or a/b)");
  auto* amb_opt = gpd_cmd->add_option("--ambiguous", gpd.ambiguous,
                                      "S is unresolved: pessimistic or optimistic");
  w_opt->excludes(amb_opt);
  gpd_cmd->add_option("--years", gpd.years, "Sentences free,coop,defect,sucker");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Equilibria over the mixture grid w = k/steps");
  sweep_cmd->add_option("--steps", sweep.steps, "Grid resolution")->required();
  sweep_cmd->add_option("--years", sweep.years, "Sentences free,coop,defect,sucker");
  sweep_cmd->add_option("--format", sweep.format, "table, csv or json");

  std::string verify_file, verify_profile;
  auto* verify_cmd = app.add_subcommand("verify", "Check whether a pure profile is a Nash equilibrium");
  verify_cmd->add_option("file", verify_file, "Game file, or - for standard input")->required();
  verify_cmd->add_option("--profile", verify_profile, "<rowlabel>,<collabel>")->required();

  std::string reduce_file;
  auto* reduce_cmd = app.add_subcommand("reduce", "Delete the S strategy of a generalized game");
  reduce_cmd->add_option("file", reduce_file, "Game file, or - for standard input")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve, io);
    if (pd_cmd->parsed()) return cmd_pd(pd_years, io);
    if (gpd_cmd->parsed()) return cmd_gpd(gpd, io);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, io);
    if (verify_cmd->parsed()) return cmd_verify(verify_file, verify_profile, io);
    if (reduce_cmd->parsed()) return cmd_reduce(reduce_file, io);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InvalidParameters& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kSemanticError;
  } catch (const NotGeneralizedGame& e) {
    err << "not a generalized game: " << e.what() << "\n";
    return kSemanticError;
  } catch (const InvalidGame& e) {
    err << "invalid game: " << e.what() << "\n";
    return kSemanticError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  err << "usage error: no command given\n";
  return kUsage;
}

}  // namespace gpd::cli
