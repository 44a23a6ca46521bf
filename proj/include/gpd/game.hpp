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

#ifndef GPD_GAME_HPP
#define GPD_GAME_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpd/rational.hpp"

namespace gpd {

enum class Player { one = 1, two = 2 };

inline int to_int(Player p) { return static_cast<int>(p); }
inline Player opponent(Player p) { return p == Player::one ? Player::two : Player::one; }

using PayoffMatrix = std::vector<std::vector<Rat>>;

/// Thrown when a game fails its structural invariants.
class InvalidGame : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/*
 * Two-player normal-form game.  Row player is Player::one, column player is
 * Player::two; u1[i][j] and u2[i][j] are the payoffs when player one picks
 * labels1[i] and player two picks labels2[j].  Index order is file order.
 *
 * The struct is a plain aggregate so that malformed games can be represented
 * and diagnosed by validate_game(); every constructor in this library
 * returns a valid game.
 */
struct Game {
  std::vector<std::string> labels1;
  std::vector<std::string> labels2;
  PayoffMatrix u1;
  PayoffMatrix u2;

  std::size_t rows() const { return labels1.size(); }
  std::size_t cols() const { return labels2.size(); }

  std::size_t num_strategies(Player p) const { return p == Player::one ? rows() : cols(); }
  const std::vector<std::string>& labels(Player p) const {
    return p == Player::one ? labels1 : labels2;
  }
  const PayoffMatrix& tensor(Player p) const { return p == Player::one ? u1 : u2; }

  std::optional<std::size_t> index_of(Player p, std::string_view label) const {
    const auto& ls = labels(p);
    auto it = std::find(ls.begin(), ls.end(), label);
    if (it == ls.end()) return std::nullopt;
    return static_cast<std::size_t>(it - ls.begin());
  }

  friend bool operator==(const Game&, const Game&) = default;
};

struct PureProfile {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const PureProfile&, const PureProfile&) = default;
  friend auto operator<=>(const PureProfile&, const PureProfile&) = default;
};

/// A pair of probability vectors, x over player one's strategies and y over
/// player two's.
struct MixedProfile {
  std::vector<Rat> x;
  std::vector<Rat> y;

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;
};

inline void check_profile(const Game& g, const PureProfile& p) {
  if (p.row >= g.rows() || p.col >= g.cols()) {
    throw std::out_of_range("pure profile (" + std::to_string(p.row) + "," +
                            std::to_string(p.col) + ") outside a " +
                            std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                            " game");
  }
}

inline const Rat& payoff(const Game& g, Player player, const PureProfile& p) {
  check_profile(g, p);
  return g.tensor(player)[p.row][p.col];
}

/// Probability vector with all mass on `index`.
inline std::vector<Rat> point_mass(std::size_t size, std::size_t index) {
  std::vector<Rat> v(size);
  v.at(index) = 1;
  return v;
}

inline bool is_probability_vector(const std::vector<Rat>& v) {
  Rat total;
  for (const Rat& p : v) {
    if (p.sign() < 0) return false;
    total += p;
  }
  return total == Rat(1);
}

inline bool is_valid_mixed(const Game& g, const MixedProfile& m) {
  return m.x.size() == g.rows() && m.y.size() == g.cols() && is_probability_vector(m.x) &&
         is_probability_vector(m.y);
}

enum class ViolationKind {
  empty_strategy_set,
  empty_label,
  malformed_label,
  duplicate_label,
  dimension_mismatch,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

/// Labels double as file tokens, so they may not contain whitespace or the
/// separators used by the text formats.
inline bool is_well_formed_label(std::string_view label) {
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',' || c == ':' ||
           c == ';';
  });
}

inline std::vector<Violation> validate_game(const Game& g) {
  std::vector<Violation> out;
  for (Player p : {Player::one, Player::two}) {
    const std::string who = "player " + std::to_string(to_int(p));
    const auto& ls = g.labels(p);
    if (ls.empty()) {
      out.push_back({ViolationKind::empty_strategy_set, who + " has no strategies"});
    }
    std::set<std::string> seen;
    for (std::size_t k = 0; k < ls.size(); ++k) {
      if (ls[k].empty()) {
        out.push_back({ViolationKind::empty_label,
                       who + " strategy " + std::to_string(k) + " has an empty label"});
        continue;
      }
      if (!is_well_formed_label(ls[k])) {
        out.push_back({ViolationKind::malformed_label,
                       who + " label '" + ls[k] + "' contains whitespace or one of ,:;"});
      }
      if (!seen.insert(ls[k]).second) {
        out.push_back({ViolationKind::duplicate_label,
                       who + " has duplicate label '" + ls[k] + "'"});
      }
    }
  }
  for (Player p : {Player::one, Player::two}) {
    const std::string name = "u" + std::to_string(to_int(p));
    const auto& u = g.tensor(p);
    if (u.size() != g.rows()) {
      out.push_back({ViolationKind::dimension_mismatch,
                     name + " has " + std::to_string(u.size()) + " rows, expected " +
                         std::to_string(g.rows())});
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i].size() != g.cols()) {
        out.push_back({ViolationKind::dimension_mismatch,
                       name + " row " + std::to_string(i) + " has " +
                           std::to_string(u[i].size()) + " columns, expected " +
                           std::to_string(g.cols())});
      }
    }
  }
  return out;
}

inline void require_valid(const Game& g) {
  auto violations = validate_game(g);
  if (!violations.empty()) throw InvalidGame(violations.front().message);
}

/// Swaps the roles of the players: the result's row player is g's column
/// player, and both tensors are transposed.
inline Game transpose(const Game& g) {
  Game t;
  t.labels1 = g.labels2;
  t.labels2 = g.labels1;
  t.u1.assign(g.cols(), std::vector<Rat>(g.rows()));
  t.u2.assign(g.cols(), std::vector<Rat>(g.rows()));
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      t.u1[j][i] = g.u2[i][j];
      t.u2[j][i] = g.u1[i][j];
    }
  }
  return t;
}

}  // namespace gpd

#endif  // GPD_GAME_HPP
