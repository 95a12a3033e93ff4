/* Copyright 2026 The qscat authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/** @file qscat/potential.hpp
 *  @brief Piecewise-constant potentials with compact support and their
 *         line-oriented text format.
 *
 *  File format:
 *    - `#` starts a comment, blank lines are ignored
 *    - optional headers `mass <m>` and `hbar <h>` (each at most once,
 *      before any segment)
 *    - `segment width=<w> V=<v>` appends one slab
 *    - `repeat <n> { ... }` repeats the enclosed segments, nesting up to
 *      depth 4
 *  Serialization always emits the flat expanded segment list.
 */
#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "qscat/error.hpp"

namespace qscat {

/// One slab of constant potential `height` extending over `width`.
struct Segment {
  double width;
  double height;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Ordered slabs covering [0, l]; the potential vanishes outside. Units are
/// dimensionless with mass and hbar kept as explicit scale factors so
/// effective-mass runs only need a rescaled header.
struct PotentialSpec {
  std::vector<Segment> segments;
  double mass = 1.0;
  double hbar = 1.0;

  friend bool operator==(const PotentialSpec&, const PotentialSpec&) = default;
};

inline double total_length(const PotentialSpec& spec) {
  double l = 0.0;
  for (const Segment& s : spec.segments) l += s.width;
  return l;
}

/// Checks the structural invariants; throws domain_error on violation.
inline void validate(const PotentialSpec& spec) {
  if (spec.segments.empty()) throw domain_error("empty segment list");
  if (!(spec.mass > 0.0) || !std::isfinite(spec.mass))
    throw domain_error("non-positive mass");
  if (!(spec.hbar > 0.0) || !std::isfinite(spec.hbar))
    throw domain_error("non-positive hbar");
  for (std::size_t i = 0; i < spec.segments.size(); ++i) {
    const Segment& s = spec.segments[i];
    if (!(s.width > 0.0) || !std::isfinite(s.width))
      throw domain_error("non-positive width in segment " + std::to_string(i + 1));
    if (!std::isfinite(s.height))
      throw domain_error("non-finite height in segment " + std::to_string(i + 1));
  }
}

/// Concatenates `n` copies of `cell`. Mass and hbar are inherited.
inline PotentialSpec repeat_cell(const PotentialSpec& cell, std::size_t n) {
  validate(cell);
  if (n == 0) throw domain_error("repeat count must be >= 1");
  PotentialSpec out;
  out.mass = cell.mass;
  out.hbar = cell.hbar;
  out.segments.reserve(cell.segments.size() * n);
  for (std::size_t i = 0; i < n; ++i)
    out.segments.insert(out.segments.end(), cell.segments.begin(),
                        cell.segments.end());
  return out;
}

/// True iff V(l/2 + u) = V(l/2 - u) within tol, decided by comparing the
/// segment list against its reversal element by element.
inline bool is_inversion_symmetric(const PotentialSpec& spec, double tol) {
  const auto& segs = spec.segments;
  const std::size_t n = segs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Segment& a = segs[i];
    const Segment& b = segs[n - 1 - i];
    if (std::abs(a.width - b.width) > tol) return false;
    if (std::abs(a.height - b.height) > tol) return false;
  }
  return true;
}

namespace detail {

struct Token {
  std::string text;
  int line;
};

inline std::vector<Token> tokenize_potential(std::string_view text) {
  std::vector<Token> toks;
  int line = 1;
  std::string cur;
  int cur_line = 1;
  auto flush = [&] {
    if (!cur.empty()) {
      toks.push_back({cur, cur_line});
      cur.clear();
    }
  };
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') {
      flush();
      in_comment = false;
      ++line;
      continue;
    }
    if (in_comment) continue;
    if (c == '#') {
      flush();
      in_comment = true;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      flush();
      continue;
    }
    if (c == '{' || c == '}') {
      flush();
      toks.push_back({std::string(1, c), line});
      continue;
    }
    if (cur.empty()) cur_line = line;
    cur.push_back(c);
  }
  flush();
  return toks;
}

inline double parse_number(const Token& tok, std::string_view what) {
  double v = 0.0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last)
    throw parse_error("expected a " + std::string(what) + ", got '" + tok.text + "'",
                      tok.line);
  return v;
}

inline double parse_keyed_number(const Token& tok, std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (tok.text.rfind(prefix, 0) != 0)
    throw parse_error("expected '" + prefix + "<number>', got '" + tok.text + "'",
                      tok.line);
  Token value{tok.text.substr(prefix.size()), tok.line};
  return parse_number(value, "number");
}

inline std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

/// Parses the potential file format. `repeat` blocks are fully expanded, so
/// the result always holds a flat segment list.
inline PotentialSpec parse_potential(std::string_view text) {
  using detail::Token;
  const std::vector<Token> toks = detail::tokenize_potential(text);
  PotentialSpec spec;
  bool seen_mass = false, seen_hbar = false, seen_segment = false;
  std::size_t pos = 0;

  auto need = [&](std::string_view what) -> const Token& {
    if (pos >= toks.size()) {
      int line = toks.empty() ? 1 : toks.back().line;
      throw parse_error("unexpected end of input, expected " + std::string(what),
                        line);
    }
    return toks[pos];
  };

  // Parses one segment/repeat item into `out`; depth counts repeat nesting.
  auto parse_items = [&](auto&& self, std::vector<Segment>& out, int depth,
                         bool stop_at_brace) -> void {
    while (pos < toks.size()) {
      const Token& tok = toks[pos];
      if (tok.text == "}") {
        if (!stop_at_brace) throw parse_error("unmatched '}'", tok.line);
        return;
      }
      if (tok.text == "segment") {
        ++pos;
        const double width = detail::parse_keyed_number(need("width=<number>"), "width");
        const int wline = toks[pos].line;
        ++pos;
        const double height = detail::parse_keyed_number(need("V=<number>"), "V");
        ++pos;
        if (!(width > 0.0) || !std::isfinite(width))
          throw parse_error("non-positive width", wline);
        if (!std::isfinite(height)) throw parse_error("non-finite V", wline);
        out.push_back(Segment{width, height});
        seen_segment = true;
        continue;
      }
      if (tok.text == "repeat") {
        if (depth + 1 > 4)
          throw parse_error("repeat nesting deeper than 4", tok.line);
        ++pos;
        const Token& count_tok = need("repeat count");
        const double count_val = detail::parse_number(count_tok, "repeat count");
        if (!(count_val >= 1.0) || count_val != std::floor(count_val))
          throw parse_error("repeat count must be a positive integer", count_tok.line);
        ++pos;
        const Token& brace = need("'{'");
        if (brace.text != "{") throw parse_error("expected '{' after repeat count", brace.line);
        ++pos;
        std::vector<Segment> block;
        self(self, block, depth + 1, true);
        const Token& close = need("'}'");
        ++pos;  // consume '}'
        if (block.empty())
          throw parse_error("empty repeat block", close.line);
        const auto n = static_cast<std::size_t>(count_val);
        for (std::size_t i = 0; i < n; ++i)
          out.insert(out.end(), block.begin(), block.end());
        seen_segment = true;
        continue;
      }
      if (tok.text == "mass" || tok.text == "hbar") {
        if (depth > 0)
          throw parse_error("'" + tok.text + "' not allowed inside repeat", tok.line);
        if (seen_segment)
          throw parse_error("'" + tok.text + "' must come before segments", tok.line);
        bool& seen = (tok.text == "mass") ? seen_mass : seen_hbar;
        if (seen) throw parse_error("duplicate '" + tok.text + "' header", tok.line);
        seen = true;
        const bool is_mass = tok.text == "mass";
        ++pos;
        const Token& val_tok = need("a number");
        const double v = detail::parse_number(val_tok, "number");
        if (!(v > 0.0) || !std::isfinite(v))
          throw parse_error(std::string("non-positive ") + (is_mass ? "mass" : "hbar"),
                            val_tok.line);
        ++pos;
        (is_mass ? spec.mass : spec.hbar) = v;
        continue;
      }
      throw parse_error("unknown directive '" + tok.text + "'", tok.line);
    }
    if (stop_at_brace) {
      int line = toks.empty() ? 1 : toks.back().line;
      throw parse_error("missing '}'", line);
    }
  };

  parse_items(parse_items, spec.segments, 0, false);
  if (spec.segments.empty()) {
    int line = toks.empty() ? 1 : toks.back().line;
    throw parse_error("empty segment list", line);
  }
  validate(spec);
  return spec;
}

/// Emits the flat expanded form; parse_potential(serialize_potential(s)) == s.
inline std::string serialize_potential(const PotentialSpec& spec) {
  std::string out;
  out += "mass " + detail::format_g17(spec.mass) + "\n";
  out += "hbar " + detail::format_g17(spec.hbar) + "\n";
  for (const Segment& s : spec.segments) {
    out += "segment width=" + detail::format_g17(s.width) +
           " V=" + detail::format_g17(s.height) + "\n";
  }
  return out;
}

}  // namespace qscat
