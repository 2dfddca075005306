#pragma once

// System file format:
//
//   # comment
//   vars: x y z
//   field: gf 23        (or: q)
//   order: grevlex      (lex | grlex | grevlex)
//   x^2 + 18*x*y + 19*y^2
//   ...
//
// Header lines come first; every following non-blank line is one polynomial.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "f5b/error.hpp"
#include "f5b/field.hpp"
#include "f5b/polynomial.hpp"

namespace f5b {

enum class FieldKind { Rationals, Prime };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::int64_t modulus = 0;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct SystemFile {
  struct Line {
    std::string text;
    std::size_t number = 0;
  };
  std::vector<std::string> variables;
  FieldSpec field;
  OrderKind order = OrderKind::GrevLex;
  std::vector<Line> polynomials;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

/// Recursive-descent reader for one polynomial line.
template <CoefficientField K>
class PolyReader {
 public:
  PolyReader(const RingPtr<K>& ring, std::string_view text, std::size_t line, std::size_t col0)
      : ring_(ring), text_(text), line_(line), col0_(col0) {}

  Polynomial<K> read() {
    using Term = typename Polynomial<K>::Term;
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("expected a polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    terms.push_back(read_term(negative));
    for (skip_ws(); !at_end(); skip_ws()) {
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-' between terms");
      negative = peek() == '-';
      ++pos_;
      skip_ws();
      terms.push_back(read_term(negative));
    }
    return Polynomial<K>::from_terms(ring_, std::move(terms));
  }

 private:
  typename Polynomial<K>::Term read_term(bool negative) {
    const K& k = ring_->field;
    Rational coeff(1);
    Monomial mono = ring_->one();
    bool have_factor = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = read_coefficient();
      have_factor = true;
      skip_ws();
      if (at_end() || peek() != '*') return finish(k, coeff, mono, negative);
      ++pos_;
      skip_ws();
    }
    for (;;) {
      if (at_end() || !is_ident_start(peek())) {
        fail(have_factor ? "expected a variable after '*'" : "expected a coefficient or variable");
      }
      const std::size_t start = pos_;
      while (!at_end() && is_ident_char(peek())) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      std::size_t var = ring_->arity();
      for (std::size_t i = 0; i < ring_->arity(); ++i) {
        if (ring_->variables[i] == name) var = i;
      }
      if (var == ring_->arity()) fail_at(start, "unknown variable '" + name + "'");
      std::uint32_t exp = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        exp = read_exponent();
      }
      std::vector<Monomial::Exponent> e(ring_->arity(), 0);
      e[var] = exp;
      mono = mono * Monomial(e);
      have_factor = true;
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      skip_ws();
    }
    return finish(k, coeff, mono, negative);
  }

  typename Polynomial<K>::Term finish(const K& k, const Rational& c, Monomial m, bool negative) {
    try {
      auto e = k.from_rational(negative ? Rational(-c) : c);
      return {std::move(e), std::move(m)};
    } catch (const DivisionByZero&) {
      fail("coefficient denominator vanishes in this field");
    }
  }

  Rational read_coefficient() {
    BigInt num = read_digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      BigInt den = read_digits();
      if (den == 0) fail_at(at, "zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  BigInt read_digits() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint32_t read_exponent() {
    const std::size_t at = pos_;
    BigInt e = read_digits();
    if (e > 1'000'000) fail_at(at, "exponent too large");
    return e.convert_to<std::uint32_t>();
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    throw ParseError(what, line_, col0_ + at + 1);
  }

  const RingPtr<K>& ring_;
  std::string_view text_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Reads the header and collects polynomial lines; polynomials are parsed by
/// parse_polynomials once the field type is known.
inline SystemFile parse_system_file(std::string_view text) {
  SystemFile sys;
  bool have_vars = false;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (detail::trim(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon != std::string_view::npos) {
      if (!sys.polynomials.empty()) {
        throw ParseError("header line after polynomials", number, colon + 1);
      }
      const std::string key(detail::trim(line.substr(0, colon)));
      const auto words = detail::split_words(line.substr(colon + 1));
      const auto value_at = line.find_first_not_of(" \t", colon + 1);
      const std::size_t value_col = (value_at == std::string_view::npos ? colon + 1 : value_at) + 1;
      std::size_t cursor = colon + 1;
      auto column_of = [&](const std::string& w) {
        const auto at = raw.find(w, cursor);
        cursor = at + w.size();
        return at + 1;
      };
      if (key == "vars") {
        if (words.empty()) throw ParseError("no variables declared", number, value_col);
        for (const auto& w : words) {
          const auto col = column_of(w);
          if (!detail::is_ident_start(w.front()) ||
              !std::all_of(w.begin(), w.end(), detail::is_ident_char)) {
            throw ParseError("invalid variable name '" + w + "'", number, col);
          }
          if (std::find(sys.variables.begin(), sys.variables.end(), w) != sys.variables.end()) {
            throw ParseError("duplicate variable '" + w + "'", number, col);
          }
          sys.variables.push_back(w);
        }
        have_vars = true;
      } else if (key == "field") {
        if (words.size() == 1 && words[0] == "q") {
          sys.field = {FieldKind::Rationals, 0};
        } else if (words.size() == 2 && words[0] == "gf") {
          std::int64_t p = 0;
          try {
            std::size_t used = 0;
            p = std::stoll(words[1], &used);
            if (used != words[1].size()) throw std::invalid_argument("trailing");
          } catch (const std::exception&) {
            throw ParseError("invalid modulus '" + words[1] + "'", number, raw.find(words[1]) + 1);
          }
          if (p < 2 || p >= (std::int64_t{1} << 32) || !is_prime(static_cast<std::uint64_t>(p))) {
            throw ParseError("modulus " + words[1] + " is not a prime below 2^32", number,
                             raw.find(words[1]) + 1);
          }
          sys.field = {FieldKind::Prime, p};
        } else {
          throw ParseError("field must be 'q' or 'gf P'", number, value_col);
        }
      } else if (key == "order") {
        if (words.size() != 1) throw ParseError("order must be lex, grlex or grevlex", number, value_col);
        if (words[0] == "lex") {
          sys.order = OrderKind::Lex;
        } else if (words[0] == "grlex") {
          sys.order = OrderKind::GrLex;
        } else if (words[0] == "grevlex") {
          sys.order = OrderKind::GrevLex;
        } else {
          throw ParseError("unknown order '" + words[0] + "'", number, raw.find(words[0]) + 1);
        }
      } else {
        throw ParseError("unknown header key '" + key + "'", number, 1);
      }
      continue;
    }
    if (!have_vars) throw ParseError("polynomial before 'vars:' header", number, 1);
    sys.polynomials.push_back({std::string(line), number});
  }
  if (!have_vars) throw ParseError("missing 'vars:' header", number == 0 ? 1 : number, 1);
  if (sys.polynomials.empty()) throw ParseError("empty system", number == 0 ? 1 : number, 1);
  return sys;
}

template <CoefficientField K>
Polynomial<K> parse_polynomial(const RingPtr<K>& ring, std::string_view text, std::size_t line = 1,
                               std::size_t column_offset = 0) {
  return detail::PolyReader<K>(ring, text, line, column_offset).read();
}

/// Parses every polynomial line; a line that evaluates to zero is an error.
template <CoefficientField K>
std::vector<Polynomial<K>> parse_polynomials(const RingPtr<K>& ring, const SystemFile& sys) {
  std::vector<Polynomial<K>> out;
  for (const auto& l : sys.polynomials) {
    auto p = parse_polynomial(ring, l.text, l.number);
    if (p.is_zero()) {
      const auto first = l.text.find_first_not_of(" \t");
      throw ParseError("zero generator", l.number, first == std::string::npos ? 1 : first + 1);
    }
    out.push_back(std::move(p));
  }
  return out;
}

/// Builds the concrete field and ring for `sys` and calls
/// `fn(ring, polynomials)` with the matching coefficient type.
template <typename Fn>
decltype(auto) visit_system(const SystemFile& sys, Fn&& fn) {
  if (sys.field.kind == FieldKind::Prime) {
    auto ring = make_ring(PrimeField(sys.field.modulus), sys.variables, MonomialOrder(sys.order));
    auto polys = parse_polynomials(ring, sys);
    return fn(ring, std::move(polys));
  }
  auto ring = make_ring(RationalField{}, sys.variables, MonomialOrder(sys.order));
  auto polys = parse_polynomials(ring, sys);
  return fn(ring, std::move(polys));
}

template <CoefficientField K>
std::string field_header(const K& k) {
  return k.name();
}

/// Renders a complete system file; parse_system_file accepts the result unchanged.
template <CoefficientField K>
std::string to_system_text(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& polys) {
  std::string out = "vars:";
  for (const auto& v : ring->variables) out += ' ' + v;
  out += "\nfield: " + field_header(ring->field);
  out += "\norder: " + std::string(to_string(ring->order.kind())) + '\n';
  for (const auto& p : polys) out += to_string(p) + '\n';
  return out;
}

}  // namespace f5b
