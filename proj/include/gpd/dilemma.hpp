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

#ifndef GPD_DILEMMA_HPP
#define GPD_DILEMMA_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "gpd/equilibrium.hpp"
#include "gpd/game.hpp"
#include "gpd/rational.hpp"

namespace gpd {

class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotGeneralizedGame : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr const char* kCooperate = "C";
inline constexpr const char* kDefect = "D";
inline constexpr const char* kSilence = "S";

/*
 * Prison sentences, in years, of the classical dilemma.  Payoffs are the
 * negated years so that players maximize.  A valid dilemma needs
 * free < both_coop < both_defect < sucker, all non-negative.
 */
struct PdParams {
  Rat years_free = 0;         // betrays a cooperator
  Rat years_both_coop = 1;    // lesser charge
  Rat years_both_defect = 4;
  Rat years_sucker = 5;       // cooperates with a betrayer

  friend bool operator==(const PdParams&, const PdParams&) = default;
};

inline std::optional<std::string> pd_params_problem(const PdParams& p) {
  if (p.years_free.sign() < 0 || p.years_both_coop.sign() < 0 ||
      p.years_both_defect.sign() < 0 || p.years_sucker.sign() < 0) {
    return "sentences must be non-negative";
  }
  if (!(p.years_free < p.years_both_coop && p.years_both_coop < p.years_both_defect &&
        p.years_both_defect < p.years_sucker)) {
    return "prisoner's dilemma ordering violated: need free < both_coop < both_defect < sucker (got " +
           p.years_free.to_string() + "," + p.years_both_coop.to_string() + "," +
           p.years_both_defect.to_string() + "," + p.years_sucker.to_string() + ")";
  }
  return std::nullopt;
}

inline void require_valid(const PdParams& p) {
  if (auto problem = pd_params_problem(p)) throw InvalidParameters(*problem);
}

/// S plays C with probability `weight`, D otherwise.
struct Mixture {
  Rat weight;
};

enum class Attitude { pessimistic, optimistic };

/// S resolves to C or D unobservably; each player's payoff is their worst
/// (pessimistic) or best (optimistic) payoff over the resolutions.
struct Ambiguous {
  Attitude attitude = Attitude::pessimistic;
};

using SilenceSemantics = std::variant<Mixture, Ambiguous>;

inline const char* to_string(Attitude a) {
  return a == Attitude::pessimistic ? "pessimistic" : "optimistic";
}

inline Game classical_pd(const PdParams& params = {}) {
  require_valid(params);
  Game g;
  g.labels1 = {kCooperate, kDefect};
  g.labels2 = {kCooperate, kDefect};
  const Rat cc = -params.years_both_coop;
  const Rat dd = -params.years_both_defect;
  const Rat free = -params.years_free;
  const Rat sucker = -params.years_sucker;
  g.u1 = {{cc, sucker}, {free, dd}};
  g.u2 = {{cc, free}, {sucker, dd}};
  return g;
}

namespace detail {

// Index 0 = C, 1 = D, 2 = S in generalized games built here.
inline constexpr std::size_t kC = 0, kD = 1, kS = 2;

inline Rat mixture_entry(const PayoffMatrix& u2x2, std::size_t a, std::size_t b, const Rat& w) {
  // Weight of each pure resolution of a strategy index in {C, D, S}.
  auto weights = [&](std::size_t s) -> std::array<Rat, 2> {
    if (s == kC) return {Rat(1), Rat(0)};
    if (s == kD) return {Rat(0), Rat(1)};
    return {w, Rat(1) - w};
  };
  const auto wa = weights(a);
  const auto wb = weights(b);
  Rat total;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      if (!wa[r].is_zero() && !wb[c].is_zero()) total += wa[r] * wb[c] * u2x2[r][c];
    }
  }
  return total;
}

inline Rat ambiguous_entry(const PayoffMatrix& u2x2, std::size_t a, std::size_t b, Attitude att) {
  auto resolutions = [](std::size_t s) -> std::vector<std::size_t> {
    if (s == kS) return {kC, kD};
    return {s};
  };
  std::optional<Rat> out;
  for (std::size_t r : resolutions(a)) {
    for (std::size_t c : resolutions(b)) {
      const Rat& v = u2x2[r][c];
      if (!out || (att == Attitude::pessimistic ? v < *out : v > *out)) out = v;
    }
  }
  return *out;
}

}  // namespace detail

/*
 * The 3x3 game with strategies C, D, S.  C/D entries are those of
 * classical_pd(params); entries involving S are derived from them under
 * `sem`.  Under Ambiguous, (S,S) takes the min/max over all four joint
 * resolutions, independently for each player.
 */
inline Game generalized_pd(const PdParams& params, const SilenceSemantics& sem) {
  const Game base = classical_pd(params);
  if (const auto* mix = std::get_if<Mixture>(&sem)) {
    if (mix->weight.sign() < 0 || mix->weight > Rat(1)) {
      throw InvalidParameters("mixture weight " + mix->weight.to_string() +
                              " is not a probability in [0,1]");
    }
  }
  Game g;
  g.labels1 = {kCooperate, kDefect, kSilence};
  g.labels2 = g.labels1;
  g.u1.assign(3, std::vector<Rat>(3));
  g.u2.assign(3, std::vector<Rat>(3));
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      std::visit(
          [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Mixture>) {
              g.u1[a][b] = detail::mixture_entry(base.u1, a, b, s.weight);
              g.u2[a][b] = detail::mixture_entry(base.u2, a, b, s.weight);
            } else {
              g.u1[a][b] = detail::ambiguous_entry(base.u1, a, b, s.attitude);
              g.u2[a][b] = detail::ambiguous_entry(base.u2, a, b, s.attitude);
            }
          },
          sem);
    }
  }
  return g;
}

/// Deletes the S strategy of both players, keeping the other strategies in
/// order.
inline Game reduce_to_classical(const Game& g3) {
  require_valid(g3);
  const auto si = g3.index_of(Player::one, kSilence);
  const auto sj = g3.index_of(Player::two, kSilence);
  if (!si || !sj) {
    throw NotGeneralizedGame("game has no '" + std::string(kSilence) + "' strategy for " +
                             (!si ? std::string("player 1") : std::string("player 2")));
  }
  if (g3.rows() < 2 || g3.cols() < 2) {
    throw NotGeneralizedGame("removing 'S' would leave a player without strategies");
  }
  Game out;
  for (std::size_t i = 0; i < g3.rows(); ++i) {
    if (i != *si) out.labels1.push_back(g3.labels1[i]);
  }
  for (std::size_t j = 0; j < g3.cols(); ++j) {
    if (j != *sj) out.labels2.push_back(g3.labels2[j]);
  }
  for (std::size_t i = 0; i < g3.rows(); ++i) {
    if (i == *si) continue;
    std::vector<Rat> r1, r2;
    for (std::size_t j = 0; j < g3.cols(); ++j) {
      if (j == *sj) continue;
      r1.push_back(g3.u1[i][j]);
      r2.push_back(g3.u2[i][j]);
    }
    out.u1.push_back(std::move(r1));
    out.u2.push_back(std::move(r2));
  }
  return out;
}

enum class Consistency { unique_weight, any_weight, inconsistent };

struct EntryMismatch {
  Player player = Player::one;  // whose tensor
  std::string row;
  std::string col;
  std::optional<Rat> expected;  // absent when no weight could be inferred
  Rat actual;
};

struct ConsistencyVerdict {
  Consistency status = Consistency::inconsistent;
  std::optional<Rat> weight;
  std::string reason;
  std::vector<EntryMismatch> mismatches;
};

/*
 * Checks whether a 3x3 {C, D, S} game is generalized_pd under Mixture(w)
 * for a single w in [0, 1].  The first entry with exactly one S whose C and
 * D counterparts differ fixes w; every S entry of both tensors is then
 * checked against it and all mismatches are reported.
 */
inline ConsistencyVerdict mixture_consistency(const Game& g3) {
  require_valid(g3);
  if (g3.rows() != 3 || g3.cols() != 3) throw NotGeneralizedGame("game is not 3x3");
  std::array<std::size_t, 3> rmap{}, cmap{};
  const std::array<const char*, 3> names{kCooperate, kDefect, kSilence};
  for (std::size_t k = 0; k < 3; ++k) {
    auto r = g3.index_of(Player::one, names[k]);
    auto c = g3.index_of(Player::two, names[k]);
    if (!r || !c) {
      throw NotGeneralizedGame(std::string("game lacks strategy '") + names[k] + "' for " +
                               (!r ? "player 1" : "player 2"));
    }
    rmap[k] = *r;
    cmap[k] = *c;
  }
  using detail::kC;
  using detail::kD;
  using detail::kS;
  auto at = [&](Player p, std::size_t a, std::size_t b) -> const Rat& {
    return g3.tensor(p)[rmap[a]][cmap[b]];
  };

  ConsistencyVerdict v;
  // Single-S entries: actual - u(D-resolution) == w * (u(C-res) - u(D-res)).
  struct Linear {
    Player p;
    std::size_t a, b;
    Rat coef, rhs;
  };
  std::vector<Linear> linear;
  for (Player p : {Player::one, Player::two}) {
    for (std::size_t other : {kC, kD}) {
      linear.push_back({p, kS, other, at(p, kC, other) - at(p, kD, other),
                        at(p, kS, other) - at(p, kD, other)});
      linear.push_back({p, other, kS, at(p, other, kC) - at(p, other, kD),
                        at(p, other, kS) - at(p, other, kD)});
    }
  }
  auto mismatch = [&](Player p, std::size_t a, std::size_t b, std::optional<Rat> expected) {
    v.mismatches.push_back({p, names[a], names[b], std::move(expected), at(p, a, b)});
  };

  std::optional<Rat> w;
  for (const auto& l : linear) {
    if (!l.coef.is_zero()) {
      w = l.rhs / l.coef;
      break;
    }
  }

  if (!w) {
    // C and D are interchangeable everywhere, so S must match them too.
    for (const auto& l : linear) {
      if (!l.rhs.is_zero()) mismatch(l.p, l.a, l.b, at(l.p, l.a, l.b) - l.rhs);
    }
    for (Player p : {Player::one, Player::two}) {
      if (at(p, kS, kS) != at(p, kC, kC)) mismatch(p, kS, kS, at(p, kC, kC));
    }
    if (v.mismatches.empty()) {
      v.status = Consistency::any_weight;
    } else {
      v.reason = "C and D payoffs coincide but S entries differ from them";
    }
    return v;
  }

  const Rat weight = *w;
  if (weight.sign() < 0 || weight > Rat(1)) {
    v.reason = "inferred weight " + weight.to_string() + " is outside [0,1]";
  }
  const Game expected = [&] {
    // Rebuild from the C/D block of g3 (not necessarily a valid dilemma).
    Game e;
    e.u1.assign(3, std::vector<Rat>(3));
    e.u2.assign(3, std::vector<Rat>(3));
    for (Player p : {Player::one, Player::two}) {
      PayoffMatrix base{{at(p, kC, kC), at(p, kC, kD)}, {at(p, kD, kC), at(p, kD, kD)}};
      auto& u = p == Player::one ? e.u1 : e.u2;
      for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) u[a][b] = detail::mixture_entry(base, a, b, weight);
      }
    }
    return e;
  }();
  for (Player p : {Player::one, Player::two}) {
    const auto& u = expected.tensor(p);
    for (auto [a, b] : std::array<std::pair<std::size_t, std::size_t>, 5>{
             {{kS, kC}, {kS, kD}, {kC, kS}, {kD, kS}, {kS, kS}}}) {
      if (u[a][b] != at(p, a, b)) mismatch(p, a, b, u[a][b]);
    }
  }
  if (v.mismatches.empty() && v.reason.empty()) {
    v.status = Consistency::unique_weight;
    v.weight = weight;
  } else if (v.reason.empty()) {
    v.reason = "no single weight reproduces every S entry";
  }
  return v;
}

struct SweepRow {
  Rat w;
  std::vector<std::string> labels;  // strategy names, shared by both players
  std::vector<std::pair<std::string, std::string>> pure_equilibria;  // (row, col) labels
  std::vector<DominanceFact> dominance;                              // strict facts
};

/// generalized_pd under Mixture(k/steps) for k = 0..steps, in increasing w.
inline std::vector<SweepRow> sweep_mixture(const PdParams& params, int steps) {
  if (steps < 1) throw InvalidParameters("sweep needs at least one step");
  require_valid(params);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) {
    SweepRow row;
    row.w = rat(k, steps);
    const Game g = generalized_pd(params, Mixture{row.w});
    for (const auto& p : pure_equilibria(g)) {
      row.pure_equilibria.emplace_back(g.labels1[p.row], g.labels2[p.col]);
    }
    row.labels = g.labels1;
    row.dominance = dominance_facts(g, DominanceMode::strict);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gpd

#endif  // GPD_DILEMMA_HPP
