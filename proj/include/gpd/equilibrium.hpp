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

#ifndef GPD_EQUILIBRIUM_HPP
#define GPD_EQUILIBRIUM_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpd/game.hpp"
#include "gpd/linear_system.hpp"
#include "gpd/rational.hpp"

namespace gpd {

// Support enumeration visits every pair of equal-size subsets per side; the
// count grows like C(2n, n), so it is capped.
inline constexpr std::size_t kMaxMixedDimension = 6;

enum class DominanceMode { strict, weak };

inline const char* to_string(DominanceMode m) { return m == DominanceMode::strict ? "strict" : "weak"; }

struct DominanceFact {
  Player player = Player::one;
  std::size_t dominated = 0;
  std::size_t dominator = 0;
  DominanceMode mode = DominanceMode::strict;

  friend bool operator==(const DominanceFact&, const DominanceFact&) = default;
};

namespace detail {

// Payoff to `player` when they play `own` and the opponent plays `other`.
inline const Rat& own_payoff(const Game& g, Player player, std::size_t own, std::size_t other) {
  return player == Player::one ? g.u1[own][other] : g.u2[other][own];
}

inline void check_strategy(const Game& g, Player p, std::size_t index) {
  if (index >= g.num_strategies(p)) {
    throw std::out_of_range("strategy index " + std::to_string(index) + " invalid for player " +
                            std::to_string(to_int(p)) + " with " +
                            std::to_string(g.num_strategies(p)) + " strategies");
  }
}

}  // namespace detail

/// Indices (ascending) of `player`'s strategies that maximize their payoff
/// when the opponent plays `opponent_choice`.  Never empty on a valid game.
inline std::vector<std::size_t> best_responses(const Game& g, Player player,
                                               std::size_t opponent_choice) {
  detail::check_strategy(g, opponent(player), opponent_choice);
  const std::size_t n = g.num_strategies(player);
  std::vector<std::size_t> out;
  std::optional<Rat> best;
  for (std::size_t s = 0; s < n; ++s) {
    const Rat& v = detail::own_payoff(g, player, s, opponent_choice);
    if (!best || v > *best) {
      best = v;
      out.assign(1, s);
    } else if (v == *best) {
      out.push_back(s);
    }
  }
  return out;
}

inline bool is_nash(const Game& g, const PureProfile& p) {
  check_profile(g, p);
  const Rat& v1 = g.u1[p.row][p.col];
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (g.u1[i][p.col] > v1) return false;
  }
  const Rat& v2 = g.u2[p.row][p.col];
  for (std::size_t j = 0; j < g.cols(); ++j) {
    if (g.u2[p.row][j] > v2) return false;
  }
  return true;
}

/// A Nash profile is strict when each player's strategy is their unique best
/// response.
inline bool is_strict_nash(const Game& g, const PureProfile& p) {
  return best_responses(g, Player::one, p.col) == std::vector<std::size_t>{p.row} &&
         best_responses(g, Player::two, p.row) == std::vector<std::size_t>{p.col};
}

inline std::vector<PureProfile> pure_equilibria(const Game& g) {
  std::vector<PureProfile> out;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (is_nash(g, {i, j})) out.push_back({i, j});
    }
  }
  return out;
}

/// All (dominated, dominator) pairs, ordered by player, then dominated index,
/// then dominator index.
inline std::vector<DominanceFact> dominance_facts(const Game& g, DominanceMode mode) {
  std::vector<DominanceFact> out;
  for (Player p : {Player::one, Player::two}) {
    const std::size_t n = g.num_strategies(p);
    const std::size_t m = g.num_strategies(opponent(p));
    for (std::size_t dominated = 0; dominated < n; ++dominated) {
      for (std::size_t dominator = 0; dominator < n; ++dominator) {
        if (dominated == dominator) continue;
        bool never_worse = true;
        bool always_better = true;
        bool sometimes_better = false;
        for (std::size_t o = 0; o < m; ++o) {
          const auto cmp = detail::own_payoff(g, p, dominator, o) <=>
                           detail::own_payoff(g, p, dominated, o);
          if (cmp < 0) never_worse = false;
          if (cmp > 0) {
            sometimes_better = true;
          } else {
            always_better = false;
          }
        }
        const bool holds = mode == DominanceMode::strict ? always_better
                                                         : never_worse && sometimes_better;
        if (holds) out.push_back({p, dominated, dominator, mode});
      }
    }
  }
  return out;
}

inline Rat expected_payoff(const Game& g, Player player, const MixedProfile& m) {
  if (m.x.size() != g.rows() || m.y.size() != g.cols()) {
    throw std::out_of_range("mixed profile dimensions " + std::to_string(m.x.size()) + "x" +
                            std::to_string(m.y.size()) + " do not match a " +
                            std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                            " game");
  }
  const auto& u = g.tensor(player);
  Rat total;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (m.x[i].is_zero()) continue;
    Rat row;
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (!m.y[j].is_zero()) row += m.y[j] * u[i][j];
    }
    total += m.x[i] * row;
  }
  return total;
}

/// Payoff of each of `player`'s pure strategies against the opponent's
/// mixture `opponent_mix`.
inline std::vector<Rat> pure_values_against(const Game& g, Player player,
                                            const std::vector<Rat>& opponent_mix) {
  const std::size_t n = g.num_strategies(player);
  const std::size_t m = g.num_strategies(opponent(player));
  if (opponent_mix.size() != m) throw std::out_of_range("opponent mixture has wrong length");
  std::vector<Rat> values(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t o = 0; o < m; ++o) {
      if (!opponent_mix[o].is_zero()) values[s] += opponent_mix[o] * detail::own_payoff(g, player, s, o);
    }
  }
  return values;
}

/// Exact check of the mixed Nash conditions: every strategy played with
/// positive probability attains the maximal payoff against the opponent.
inline bool is_mixed_nash(const Game& g, const MixedProfile& m) {
  if (!is_valid_mixed(g, m)) return false;
  for (Player p : {Player::one, Player::two}) {
    const auto& own = p == Player::one ? m.x : m.y;
    const auto& other = p == Player::one ? m.y : m.x;
    const auto values = pure_values_against(g, p, other);
    const Rat best = *std::max_element(values.begin(), values.end());
    for (std::size_t s = 0; s < own.size(); ++s) {
      if (own[s].sign() > 0 && values[s] != best) return false;
    }
  }
  return true;
}

struct MixedSolution {
  std::vector<MixedProfile> equilibria;
  // Some returned equilibrium has an unplayed strategy tying the support
  // payoff; the equilibrium set may then contain a continuum whose vertices
  // are what `equilibria` lists.
  bool degenerate = false;
};

namespace detail {

using Mask = std::uint32_t;

inline Mask support_mask(const std::vector<Rat>& v) {
  Mask m = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].sign() > 0) m |= Mask{1} << k;
  }
  return m;
}

inline Mask argmax_mask(const std::vector<Rat>& values) {
  const Rat best = *std::max_element(values.begin(), values.end());
  Mask m = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] == best) m |= Mask{1} << k;
  }
  return m;
}

struct Candidate {
  std::vector<Rat> mix;
  Mask support = 0;
  Mask opponent_best = 0;  // opponent's pure best responses to `mix`
};

// Mixtures of `player` that make a set of the opponent's strategies exactly
// indifferent, one for each (support, indifference set) pair of equal size
// whose linear system has a unique solution with a strictly positive
// support.  These are the vertices of the player's best-response region,
// which is what keeps degenerate games from producing an empty result.
inline std::vector<Candidate> vertex_candidates(const Game& g, Player player) {
  const Player other = opponent(player);
  const std::size_t n = g.num_strategies(player);
  const std::size_t m = g.num_strategies(other);
  std::vector<Candidate> out;

  for (Mask support = 1; support < (Mask{1} << n); ++support) {
    const int k = std::popcount(support);
    std::vector<std::size_t> own;
    for (std::size_t s = 0; s < n; ++s) {
      if (support & (Mask{1} << s)) own.push_back(s);
    }
    for (Mask indiff = 1; indiff < (Mask{1} << m); ++indiff) {
      if (std::popcount(indiff) != k) continue;
      // Unknowns: probabilities on `own`, then the opponent's common value.
      std::vector<std::vector<Rat>> a;
      std::vector<Rat> b;
      for (std::size_t o = 0; o < m; ++o) {
        if (!(indiff & (Mask{1} << o))) continue;
        std::vector<Rat> row;
        row.reserve(own.size() + 1);
        for (std::size_t s : own) row.push_back(own_payoff(g, other, o, s));
        row.push_back(-1);
        a.push_back(std::move(row));
        b.emplace_back(0);
      }
      std::vector<Rat> sum_row(own.size(), Rat(1));
      sum_row.push_back(0);
      a.push_back(std::move(sum_row));
      b.emplace_back(1);

      auto sol = solve_unique(std::move(a), std::move(b));
      if (!sol) continue;
      bool positive = true;
      for (std::size_t t = 0; t < own.size(); ++t) {
        if ((*sol)[t].sign() <= 0) positive = false;
      }
      if (!positive) continue;

      Candidate c;
      c.mix.assign(n, Rat(0));
      for (std::size_t t = 0; t < own.size(); ++t) c.mix[own[t]] = (*sol)[t];
      c.support = support;
      c.opponent_best = argmax_mask(pure_values_against(g, other, c.mix));
      if ((c.opponent_best & indiff) != indiff) continue;  // indifferent but not optimal
      if (std::find_if(out.begin(), out.end(), [&](const Candidate& e) { return e.mix == c.mix; }) ==
          out.end()) {
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

inline bool lex_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

/*
 * Mixed equilibria by support enumeration in exact arithmetic.
 *
 * For each player and each pair (support K, indifference set E) with
 * |K| == |E|, solve the square system "every opponent strategy in E earns
 * the same payoff, probabilities on K sum to 1".  In a nondegenerate game E
 * is the opponent's support and this is textbook support enumeration; in a
 * degenerate game letting E differ from the support recovers the vertex
 * equilibria of any continuum.  A pair of candidates is an equilibrium when
 * each support lies inside the other side's best-response set.
 *
 * Output order: player-one support bitmask, player-two support bitmask, then
 * the entries of x and y.  Throws std::logic_error if nothing is found,
 * which would contradict Nash's existence theorem.
 */
inline MixedSolution solve_mixed(const Game& g) {
  require_valid(g);
  if (g.rows() > kMaxMixedDimension || g.cols() > kMaxMixedDimension) {
    throw InvalidGame("mixed equilibria are limited to games of at most " +
                      std::to_string(kMaxMixedDimension) + "x" +
                      std::to_string(kMaxMixedDimension) + " strategies");
  }
  const auto xs = detail::vertex_candidates(g, Player::one);
  const auto ys = detail::vertex_candidates(g, Player::two);

  struct Found {
    const detail::Candidate* x;
    const detail::Candidate* y;
  };
  std::vector<Found> found;
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      const bool y_ok = (y.support & x.opponent_best) == y.support;
      const bool x_ok = (x.support & y.opponent_best) == x.support;
      if (x_ok && y_ok) found.push_back({&x, &y});
    }
  }
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    if (a.x->support != b.x->support) return a.x->support < b.x->support;
    if (a.y->support != b.y->support) return a.y->support < b.y->support;
    if (a.x->mix != b.x->mix) return detail::lex_less(a.x->mix, b.x->mix);
    return detail::lex_less(a.y->mix, b.y->mix);
  });

  MixedSolution out;
  for (const auto& f : found) {
    if (f.x->opponent_best != f.y->support || f.y->opponent_best != f.x->support) {
      out.degenerate = true;
    }
    out.equilibria.push_back({f.x->mix, f.y->mix});
  }
  if (out.equilibria.empty()) {
    throw std::logic_error("support enumeration found no equilibrium in a finite game");
  }
  return out;
}

inline std::vector<MixedProfile> mixed_equilibria(const Game& g) { return solve_mixed(g).equilibria; }

struct PureEquilibrium {
  PureProfile profile;
  bool strict = false;

  friend bool operator==(const PureEquilibrium&, const PureEquilibrium&) = default;
};

/// Results of the analyses that were requested; absent sections were not run.
struct EquilibriumReport {
  std::optional<std::vector<PureEquilibrium>> pure;
  std::optional<std::vector<MixedProfile>> mixed;
  bool mixed_degenerate = false;
  std::optional<std::vector<DominanceFact>> dominance;
  DominanceMode dominance_mode = DominanceMode::strict;
};

struct Analyses {
  bool pure = true;
  bool mixed = true;
  bool dominance = true;
  DominanceMode dominance_mode = DominanceMode::strict;
};

inline EquilibriumReport analyze(const Game& g, const Analyses& what = {}) {
  require_valid(g);
  EquilibriumReport r;
  r.dominance_mode = what.dominance_mode;
  if (what.pure) {
    r.pure.emplace();
    for (const auto& p : pure_equilibria(g)) r.pure->push_back({p, is_strict_nash(g, p)});
  }
  if (what.mixed) {
    auto sol = solve_mixed(g);
    r.mixed = std::move(sol.equilibria);
    r.mixed_degenerate = sol.degenerate;
  }
  if (what.dominance) r.dominance = dominance_facts(g, what.dominance_mode);
  return r;
}

}  // namespace gpd

#endif  // GPD_EQUILIBRIUM_HPP
