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

#ifndef GPD_TESTS_TEST_ORACLE_HPP
#define GPD_TESTS_TEST_ORACLE_HPP

// Test-only oracles and generators.  Nothing here calls the solver paths it
// is used to check: payoffs are read straight from the tensors.

#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gpd/dilemma.hpp"
#include "gpd/game.hpp"
#include "gpd/rational.hpp"

namespace gpd::testing {

/// Rational with numerator in [-9, 9] and denominator in {1, 2, 3}.
inline Rat random_small_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  return rat(num(rng), den(rng));
}

inline Game random_game(std::mt19937_64& rng, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  const std::size_t r = dim(rng);
  const std::size_t c = dim(rng);
  Game g;
  for (std::size_t i = 0; i < r; ++i) g.labels1.push_back("r" + std::to_string(i));
  for (std::size_t j = 0; j < c; ++j) g.labels2.push_back("c" + std::to_string(j));
  g.u1.assign(r, std::vector<Rat>(c));
  g.u2.assign(r, std::vector<Rat>(c));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      g.u1[i][j] = random_small_rat(rng);
      g.u2[i][j] = random_small_rat(rng);
    }
  }
  return g;
}

/// Random valid dilemma sentences: four distinct increasing values built from
/// positive rational gaps.
inline PdParams random_pd_params(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> start(0, 6);
  PdParams p;
  p.years_free = rat(start(rng), den(rng));
  p.years_both_coop = p.years_free + rat(num(rng), den(rng));
  p.years_both_defect = p.years_both_coop + rat(num(rng), den(rng));
  p.years_sucker = p.years_both_defect + rat(num(rng), den(rng));
  return p;
}

/// Direct reading of the two Nash inequalities over every profile.
inline std::set<std::pair<std::size_t, std::size_t>> brute_force_pure_nash(const Game& g) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      bool ok = true;
      for (std::size_t a = 0; a < g.rows() && ok; ++a) ok = !(g.u1[a][j] > g.u1[i][j]);
      for (std::size_t b = 0; b < g.cols() && ok; ++b) ok = !(g.u2[i][b] > g.u2[i][j]);
      if (ok) out.insert({i, j});
    }
  }
  return out;
}

struct MixedCheck {
  bool ok = true;
  std::string why;
};

/// Exact mixed-equilibrium conditions: probabilities valid, every support
/// strategy earns the maximum against the opponent, off-support ones at most
/// that.  Expected payoffs are summed here, not taken from the library.
inline MixedCheck check_mixed_equilibrium(const Game& g, const std::vector<Rat>& x,
                                          const std::vector<Rat>& y) {
  MixedCheck r;
  auto fail = [&](std::string why) {
    r.ok = false;
    r.why = std::move(why);
    return r;
  };
  if (x.size() != g.rows() || y.size() != g.cols()) return fail("dimensions");
  Rat sx, sy;
  for (const auto& p : x) {
    if (p.sign() < 0) return fail("negative x");
    sx += p;
  }
  for (const auto& p : y) {
    if (p.sign() < 0) return fail("negative y");
    sy += p;
  }
  if (sx != Rat(1) || sy != Rat(1)) return fail("probabilities do not sum to 1");

  std::vector<Rat> row_value(g.rows()), col_value(g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      row_value[i] += g.u1[i][j] * y[j];
      col_value[j] += g.u2[i][j] * x[i];
    }
  }
  Rat v1 = row_value[0], v2 = col_value[0];
  for (const auto& v : row_value) v1 = v > v1 ? v : v1;
  for (const auto& v : col_value) v2 = v > v2 ? v : v2;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (x[i].sign() > 0 && row_value[i] != v1) return fail("row " + std::to_string(i) + " not indifferent");
  }
  for (std::size_t j = 0; j < g.cols(); ++j) {
    if (y[j].sign() > 0 && col_value[j] != v2) return fail("col " + std::to_string(j) + " not indifferent");
  }
  return r;
}

inline Game matching_pennies() {
  Game g;
  g.labels1 = {"H", "T"};
  g.labels2 = {"H", "T"};
  g.u1 = {{1, -1}, {-1, 1}};
  g.u2 = {{-1, 1}, {1, -1}};
  return g;
}

inline Game coordination() {
  Game g;
  g.labels1 = {"A", "B"};
  g.labels2 = {"A", "B"};
  g.u1 = {{1, 0}, {0, 1}};
  g.u2 = {{1, 0}, {0, 1}};
  return g;
}

}  // namespace gpd::testing

#endif  // GPD_TESTS_TEST_ORACLE_HPP
