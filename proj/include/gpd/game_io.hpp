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

#ifndef GPD_GAME_IO_HPP
#define GPD_GAME_IO_HPP

// Text format:
//
//   game <name>
//   rows <label> <label> ...
//   cols <label> <label> ...
//   payoffs
//   <row label> : <u1 u2>  <u1 u2>  ...     (one line per row, in order)
//
// Rationals are "a" or "a/b" with an optional leading minus.  Lines whose
// first non-blank character is '#' and blank lines are ignored.  The parser
// accepts any run of spaces or tabs between tokens; serialize_game() writes
// the canonical spacing (single space inside a cell, two between cells).

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gpd/game.hpp"
#include "gpd/rational.hpp"

namespace gpd {

struct SourceSpan {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan at, const std::string& message)
      : std::runtime_error("line " + std::to_string(at.line) + ", column " +
                           std::to_string(at.column) + ": " + message),
        at_(at),
        message_(message) {}

  std::size_t line() const { return at_.line; }
  std::size_t column() const { return at_.column; }
  const std::string& message() const { return message_; }

 private:
  SourceSpan at_;
  std::string message_;
};

struct GameDocument {
  std::string name;
  Game game;

  // Token positions, for diagnostics downstream of parsing.  Empty when the
  // document was not read from text.
  SourceSpan name_span;
  std::vector<SourceSpan> label1_spans;
  std::vector<SourceSpan> label2_spans;
  std::vector<std::vector<SourceSpan>> u1_spans;
  std::vector<std::vector<SourceSpan>> u2_spans;
};

inline bool is_valid_game_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
  }
  return true;
}

namespace detail {

struct Token {
  std::string_view text;
  SourceSpan at;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

inline std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    Line line{number, {}};
    std::size_t k = 0;
    while (k < raw.size()) {
      while (k < raw.size() && (raw[k] == ' ' || raw[k] == '\t')) ++k;
      if (k == raw.size()) break;
      const std::size_t start = k;
      while (k < raw.size() && raw[k] != ' ' && raw[k] != '\t') ++k;
      line.tokens.push_back({raw.substr(start, k - start), {number, start + 1}});
    }
    const bool comment = !line.tokens.empty() && line.tokens.front().text.front() == '#';
    if (!line.tokens.empty() && !comment) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

inline SourceSpan after(const Line& l) {
  const Token& last = l.tokens.back();
  return {l.number, last.at.column + last.text.size()};
}

}  // namespace detail

/// Parses and validates a game document; every failure is a ParseError
/// carrying the position of the offending token.
inline GameDocument parse_game(std::string_view text) {
  using detail::Line;
  using detail::Token;
  const auto lines = detail::significant_lines(text);
  std::size_t next = 0;
  const std::size_t eof_line =
      static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;

  auto require_line = [&](const char* what) -> const Line& {
    if (next == lines.size()) {
      throw ParseError({eof_line, 1}, std::string("missing section '") + what + "'");
    }
    return lines[next++];
  };
  auto expect_keyword = [&](const Line& l, const char* keyword) {
    if (l.tokens.front().text != keyword) {
      throw ParseError(l.tokens.front().at, std::string("expected '") + keyword + "', found '" +
                                                std::string(l.tokens.front().text) + "'");
    }
  };

  GameDocument doc;

  const Line& header = require_line("game");
  expect_keyword(header, "game");
  if (header.tokens.size() < 2) throw ParseError(detail::after(header), "missing game name");
  if (header.tokens.size() > 2) {
    throw ParseError(header.tokens[2].at, "game name must be a single token");
  }
  doc.name = std::string(header.tokens[1].text);
  doc.name_span = header.tokens[1].at;

  auto read_labels = [&](const char* keyword, std::vector<std::string>& labels,
                         std::vector<SourceSpan>& spans) {
    const Line& l = require_line(keyword);
    expect_keyword(l, keyword);
    if (l.tokens.size() < 2) {
      throw ParseError(detail::after(l), std::string("'") + keyword + "' lists no strategies");
    }
    std::set<std::string_view> seen;
    for (std::size_t k = 1; k < l.tokens.size(); ++k) {
      const Token& t = l.tokens[k];
      if (!is_well_formed_label(t.text)) {
        throw ParseError(t.at, "strategy label '" + std::string(t.text) +
                                   "' may not contain ',', ':' or ';'");
      }
      if (!seen.insert(t.text).second) {
        throw ParseError(t.at, "duplicate strategy label '" + std::string(t.text) + "'");
      }
      labels.emplace_back(t.text);
      spans.push_back(t.at);
    }
  };
  read_labels("rows", doc.game.labels1, doc.label1_spans);
  read_labels("cols", doc.game.labels2, doc.label2_spans);

  const Line& payoffs = require_line("payoffs");
  expect_keyword(payoffs, "payoffs");
  if (payoffs.tokens.size() > 1) {
    throw ParseError(payoffs.tokens[1].at, "unexpected token after 'payoffs'");
  }

  const std::size_t ncols = doc.game.cols();
  for (const std::string& label : doc.game.labels1) {
    if (next == lines.size()) {
      throw ParseError({eof_line, 1}, "missing payoff row for '" + label + "'");
    }
    const Line& l = lines[next++];
    if (l.tokens.front().text != label) {
      throw ParseError(l.tokens.front().at, "expected payoff row for '" + label + "', found '" +
                                                std::string(l.tokens.front().text) + "'");
    }
    if (l.tokens.size() < 2 || l.tokens[1].text != ":") {
      throw ParseError(l.tokens.size() < 2 ? detail::after(l) : l.tokens[1].at,
                       "expected ':' after row label '" + label + "'");
    }
    const std::size_t values = l.tokens.size() - 2;
    if (values != 2 * ncols) {
      const SourceSpan at = values > 2 * ncols ? l.tokens[2 + 2 * ncols].at : detail::after(l);
      std::string msg = "row '" + label + "' has ";
      msg += values % 2 == 0 ? std::to_string(values / 2) + " payoff cells"
                             : std::to_string(values) + " payoff values (cells are pairs)";
      msg += ", expected " + std::to_string(ncols) + " cells";
      throw ParseError(at, msg);
    }
    std::vector<Rat> r1, r2;
    std::vector<SourceSpan> s1, s2;
    for (std::size_t k = 0; k < values; ++k) {
      const Token& t = l.tokens[2 + k];
      auto parsed = parse_rat(t.text);
      if (!parsed.value) {
        throw ParseError(t.at, "bad rational literal '" + std::string(t.text) + "'" +
                                   (parsed.error == RatParseError::zero_denominator
                                        ? " (zero denominator)"
                                        : ""));
      }
      (k % 2 == 0 ? r1 : r2).push_back(*parsed.value);
      (k % 2 == 0 ? s1 : s2).push_back(t.at);
    }
    doc.game.u1.push_back(std::move(r1));
    doc.game.u2.push_back(std::move(r2));
    doc.u1_spans.push_back(std::move(s1));
    doc.u2_spans.push_back(std::move(s2));
  }
  if (next != lines.size()) {
    throw ParseError(lines[next].tokens.front().at, "unexpected content after the payoff rows");
  }
  // The grammar guarantees the invariants; this guards future edits.
  if (auto v = validate_game(doc.game); !v.empty()) {
    throw ParseError(doc.name_span, v.front().message);
  }
  return doc;
}

inline std::string serialize_game(const Game& g, std::string_view name) {
  require_valid(g);
  if (!is_valid_game_name(name)) {
    throw std::invalid_argument("game name must be a non-empty token without whitespace");
  }
  std::string out = "game ";
  out += name;
  out += "\nrows";
  for (const auto& l : g.labels1) out += " " + l;
  out += "\ncols";
  for (const auto& l : g.labels2) out += " " + l;
  out += "\npayoffs\n";
  for (std::size_t i = 0; i < g.rows(); ++i) {
    out += g.labels1[i] + " :";
    for (std::size_t j = 0; j < g.cols(); ++j) {
      out += j == 0 ? " " : "  ";
      out += g.u1[i][j].to_string() + " " + g.u2[i][j].to_string();
    }
    out += '\n';
  }
  return out;
}

inline std::string serialize_game(const GameDocument& doc) {
  return serialize_game(doc.game, doc.name);
}

/// {"name", "labels1", "labels2", "u1", "u2"}; rationals are strings.
inline nlohmann::json game_to_json(const Game& g, std::string_view name) {
  require_valid(g);
  auto tensor = [](const PayoffMatrix& u) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : u) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& v : r) row.push_back(v.to_string());
      rows.push_back(std::move(row));
    }
    return rows;
  };
  return {{"name", std::string(name)},
          {"labels1", g.labels1},
          {"labels2", g.labels2},
          {"u1", tensor(g.u1)},
          {"u2", tensor(g.u2)}};
}

inline GameDocument game_from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("game JSON: " + what);
  };
  if (!j.is_object()) fail("expected an object");
  for (const char* key : {"name", "labels1", "labels2", "u1", "u2"}) {
    if (!j.contains(key)) fail(std::string("missing key '") + key + "'");
  }
  GameDocument doc;
  if (!j["name"].is_string()) fail("'name' must be a string");
  doc.name = j["name"].get<std::string>();
  if (!is_valid_game_name(doc.name)) fail("invalid name");
  for (const char* key : {"labels1", "labels2"}) {
    if (!j[key].is_array()) fail(std::string("'") + key + "' must be an array");
    auto& labels = std::string_view(key) == "labels1" ? doc.game.labels1 : doc.game.labels2;
    for (const auto& l : j[key]) {
      if (!l.is_string()) fail(std::string("'") + key + "' entries must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  for (const char* key : {"u1", "u2"}) {
    auto& u = std::string_view(key) == "u1" ? doc.game.u1 : doc.game.u2;
    if (!j[key].is_array()) fail(std::string("'") + key + "' must be an array of rows");
    for (const auto& row : j[key]) {
      if (!row.is_array()) fail(std::string("'") + key + "' rows must be arrays");
      std::vector<Rat> r;
      for (const auto& v : row) {
        if (!v.is_string()) fail("payoffs must be rational strings");
        auto parsed = parse_rat(v.get<std::string>());
        if (!parsed.value) fail("bad rational '" + v.get<std::string>() + "'");
        r.push_back(*parsed.value);
      }
      u.push_back(std::move(r));
    }
  }
  if (auto v = validate_game(doc.game); !v.empty()) fail(v.front().message);
  return doc;
}

}  // namespace gpd

#endif  // GPD_GAME_IO_HPP
