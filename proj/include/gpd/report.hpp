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

#ifndef GPD_REPORT_HPP
#define GPD_REPORT_HPP

// Report emitters.  All output is deterministic and rationals are always in
// canonical reduced form.
//
// CSV sections, each introduced by its header row:
//   kind,row,col,strictness                    pure equilibria
//   kind,x,y                                   mixed equilibria; vectors are
//                                              '/'-joined rationals
//   kind,player,dominated,dominator,mode       dominance facts
//   w,equilibria,dominance                     sweep rows; equilibria are
//                                              "row:col" joined by ';',
//                                              dominance "player:dominated<dominator"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gpd/dilemma.hpp"
#include "gpd/equilibrium.hpp"
#include "gpd/game.hpp"
#include "gpd/game_io.hpp"

namespace gpd {

enum class Format { table, csv, json };

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "table") return Format::table;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  return std::nullopt;
}

namespace detail {

inline std::string join(const std::vector<Rat>& v, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += sep;
    out += v[k].to_string();
  }
  return out;
}

inline nlohmann::json rat_array(const std::vector<Rat>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : v) a.push_back(r.to_string());
  return a;
}

inline const std::string& label_of(const Game& g, Player p, std::size_t k) {
  return g.labels(p)[k];
}

inline std::string csv_report(const Game& g, const EquilibriumReport& r) {
  std::string out;
  if (r.pure) {
    out += "kind,row,col,strictness\n";
    for (const auto& e : *r.pure) {
      out += "pure," + g.labels1[e.profile.row] + "," + g.labels2[e.profile.col] + "," +
             (e.strict ? "strict" : "weak") + "\n";
    }
  }
  if (r.mixed) {
    out += "kind,x,y\n";
    for (const auto& m : *r.mixed) out += "mixed," + join(m.x, "/") + "," + join(m.y, "/") + "\n";
  }
  if (r.dominance) {
    out += "kind,player,dominated,dominator,mode\n";
    for (const auto& f : *r.dominance) {
      out += "dominance," + std::to_string(to_int(f.player)) + "," +
             label_of(g, f.player, f.dominated) + "," + label_of(g, f.player, f.dominator) + "," +
             to_string(f.mode) + "\n";
    }
  }
  return out;
}

inline std::string json_report(const Game& g, std::string_view name, const EquilibriumReport& r) {
  nlohmann::json j;
  j["game"] = game_to_json(g, name);
  if (r.pure) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : *r.pure) {
      a.push_back({{"row", g.labels1[e.profile.row]},
                   {"col", g.labels2[e.profile.col]},
                   {"strict", e.strict}});
    }
    j["pure"] = std::move(a);
  }
  if (r.mixed) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& m : *r.mixed) a.push_back({{"x", rat_array(m.x)}, {"y", rat_array(m.y)}});
    j["mixed"] = {{"equilibria", std::move(a)}, {"degenerate", r.mixed_degenerate}};
  }
  if (r.dominance) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& f : *r.dominance) {
      a.push_back({{"player", to_int(f.player)},
                   {"dominated", label_of(g, f.player, f.dominated)},
                   {"dominator", label_of(g, f.player, f.dominator)}});
    }
    j["dominance"] = {{"mode", to_string(r.dominance_mode)}, {"facts", std::move(a)}};
  }
  return j.dump(2) + "\n";
}

inline std::string table_report(const Game& g, std::string_view name, const EquilibriumReport& r) {
  std::string out = "game " + std::string(name) + " (" + std::to_string(g.rows()) + "x" +
                    std::to_string(g.cols()) + ")\n";
  if (r.pure) {
    out += "\npure equilibria: " + std::to_string(r.pure->size()) + "\n";
    for (const auto& e : *r.pure) {
      out += "  (" + g.labels1[e.profile.row] + ", " + g.labels2[e.profile.col] + ")  " +
             (e.strict ? "strict" : "weak") + "\n";
    }
  }
  if (r.mixed) {
    out += "\nmixed equilibria: " + std::to_string(r.mixed->size()) + "\n";
    for (const auto& m : *r.mixed) {
      out += "  x = (" + join(m.x, ", ") + ")  y = (" + join(m.y, ", ") + ")\n";
    }
    if (r.mixed_degenerate) {
      out += "  degenerate: unplayed strategies tie; listed profiles are vertices of the "
             "equilibrium set\n";
    }
  }
  if (r.dominance) {
    out += "\n" + std::string(to_string(r.dominance_mode)) +
           " dominance: " + std::to_string(r.dominance->size()) + "\n";
    for (const auto& f : *r.dominance) {
      out += "  player " + std::to_string(to_int(f.player)) + ": " +
             label_of(g, f.player, f.dominated) + " dominated by " +
             label_of(g, f.player, f.dominator) + "\n";
    }
  }
  return out;
}

inline std::string sweep_equilibria(const SweepRow& row, std::string_view pair_sep,
                                    std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < row.pure_equilibria.size(); ++k) {
    if (k) out += sep;
    out += row.pure_equilibria[k].first;
    out += pair_sep;
    out += row.pure_equilibria[k].second;
  }
  return out;
}

inline std::string sweep_dominance(const SweepRow& row, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < row.dominance.size(); ++k) {
    const auto& f = row.dominance[k];
    if (k) out += sep;
    out += std::to_string(to_int(f.player)) + ":" + row.labels[f.dominated] + "<" +
           row.labels[f.dominator];
  }
  return out;
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace detail

inline std::string emit_report(const Game& g, std::string_view name, const EquilibriumReport& r,
                               Format format) {
  switch (format) {
    case Format::csv:
      return detail::csv_report(g, r);
    case Format::json:
      return detail::json_report(g, name, r);
    case Format::table:
      break;
  }
  return detail::table_report(g, name, r);
}

inline std::string emit_sweep(const std::vector<SweepRow>& rows, Format format) {
  if (format == Format::csv) {
    std::string out = "w,equilibria,dominance\n";
    for (const auto& row : rows) {
      out += row.w.to_string() + "," + detail::sweep_equilibria(row, ":", ";") + "," +
             detail::sweep_dominance(row, ";") + "\n";
    }
    return out;
  }
  if (format == Format::json) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json eq = nlohmann::json::array();
      for (const auto& [r, c] : row.pure_equilibria) eq.push_back({{"row", r}, {"col", c}});
      nlohmann::json dom = nlohmann::json::array();
      for (const auto& f : row.dominance) {
        dom.push_back({{"player", to_int(f.player)},
                       {"dominated", row.labels[f.dominated]},
                       {"dominator", row.labels[f.dominator]},
                       {"mode", to_string(f.mode)}});
      }
      a.push_back({{"w", row.w.to_string()}, {"equilibria", std::move(eq)}, {"dominance", std::move(dom)}});
    }
    return a.dump(2) + "\n";
  }

  std::vector<std::string> ws, eqs, doms;
  std::size_t ww = 1, ew = 15;
  for (const auto& row : rows) {
    std::string eq;
    for (const auto& [r, c] : row.pure_equilibria) {
      if (!eq.empty()) eq += ' ';
      eq += "(" + r + "," + c + ")";
    }
    ws.push_back(row.w.to_string());
    eqs.push_back(std::move(eq));
    doms.push_back(detail::sweep_dominance(row, " "));
    ww = std::max(ww, ws.back().size());
    ew = std::max(ew, eqs.back().size());
  }
  std::string out = detail::pad("w", ww) + "  " + detail::pad("pure equilibria", ew) +
                    "  strict dominance (player:dominated<dominator)\n";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::string line = detail::pad(ws[k], ww) + "  " + detail::pad(eqs[k], ew) + "  " + doms[k];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace gpd

#endif  // GPD_REPORT_HPP
