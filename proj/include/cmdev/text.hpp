#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "cmdev/errors.hpp"
#include "cmdev/polynomial.hpp"

namespace cmdev {

/// Parses `3*x1^2*x2 - x3 + 7` style text. Variables are the ring's declared
/// names; whitespace is insignificant. Errors report the 1-based column.
inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, int line = 1) {
  const auto& F = ring->field();
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg, line, static_cast<int>(pos) + 1);
  };
  auto read_int = [&]() -> std::int64_t {
    std::size_t start = pos;
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > (std::int64_t{1} << 40)) throw fail("integer too large");
      ++pos;
    }
    if (pos == start) throw fail("expected an integer");
    return v;
  };
  auto read_var = [&]() -> std::size_t {
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    std::string_view name = text.substr(start, pos - start);
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      if (ring->names()[i] == name) return i;
    pos = start;
    throw fail("unknown variable '" + std::string(name) + "'");
  };

  TermVec terms;
  skip();
  if (pos == text.size()) throw fail("empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    std::int64_t sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Coeff coef = F.from_int(sign);
    Monomial mon;
    bool have_factor = false;
    while (true) {
      skip();
      if (pos == text.size()) break;
      char c = text[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (have_factor) throw fail("coefficient must precede variables");
        coef = F.mul(coef, F.from_int(read_int()));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t v = read_var();
        skip();
        int e = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          std::int64_t ev = read_int();
          if (ev > kMaxExponent) throw fail("exponent too large");
          e = static_cast<int>(ev);
        }
        mon.set(v, mon[v] + e);
      } else {
        throw fail(std::string("unexpected character '") + c + "'");
      }
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
        if (pos == text.size()) throw fail("dangling '*'");
        continue;
      }
      break;
    }
    if (!have_factor) throw fail("missing term");
    if (coef) terms.push_back({mon, 0, coef});
  }
  return Polynomial(ring, std::move(terms));
}

inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const auto& F = f.ring()->field();
  const auto& names = f.ring()->names();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = F.to_signed(t.coef);
    if (c < 0) {
      out += "-";
      c = -c;
    } else if (!first) {
      out += "+";
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < names.size(); ++i) {
      int e = t.mon[i];
      if (!e) continue;
      if (!factors.empty()) factors += "*";
      factors += names[i];
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty())
      out += std::to_string(c);
    else if (c == 1)
      out += factors;
    else
      out += std::to_string(c) + "*" + factors;
  }
  return out;
}

}  // namespace cmdev
