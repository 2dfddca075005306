#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "f5b/error.hpp"

namespace f5b {

/// A power product x_1^a_1 ... x_n^a_n. The arity is fixed at construction.
class Monomial {
 public:
  using Exponent = std::uint32_t;
  using Storage = boost::container::small_vector<Exponent, 6>;

  Monomial() = default;

  /// The constant monomial 1 in `arity` variables.
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}

  Monomial(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {
    for (Exponent e : exps_) degree_ += e;
  }

  explicit Monomial(const std::vector<Exponent>& exps) : exps_(exps.begin(), exps.end()) {
    for (Exponent e : exps_) degree_ += e;
  }

  /// x_i as a monomial of the given arity.
  static Monomial variable(std::size_t arity, std::size_t i) {
    Monomial m(arity);
    m.exps_.at(i) = 1;
    m.degree_ = 1;
    return m;
  }

  std::size_t arity() const noexcept { return exps_.size(); }
  std::uint64_t degree() const noexcept { return degree_; }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  const Storage& exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_arity(a, b);
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    r.degree_ += b.degree_;
    return r;
  }

  static void check_arity(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) {
      throw ArityError("monomial arity mismatch: " + std::to_string(a.arity()) + " vs " +
                       std::to_string(b.arity()));
    }
  }

 private:
  friend Monomial lcm(const Monomial&, const Monomial&);
  friend Monomial gcd(const Monomial&, const Monomial&);
  friend Monomial quotient(const Monomial&, const Monomial&);

  Storage exps_;
  std::uint64_t degree_ = 0;
};

/// True when `a` divides `b` (exponent-wise a <= b).
inline bool divides(const Monomial& a, const Monomial& b) {
  Monomial::check_arity(a, b);
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// b / a; requires divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw NotDivisible();
  Monomial r = b;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= a.exps_[i];
  r.degree_ -= a.degree_;
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial::check_arity(a, b);
  Monomial r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial::check_arity(a, b);
  Monomial r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) { return gcd(a, b).is_one(); }

enum class OrderKind { Lex, GrLex, GrevLex };

inline std::string_view to_string(OrderKind k) {
  switch (k) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    case OrderKind::GrevLex: return "grevlex";
  }
  return "?";
}

/// Admissible order on power products with x_1 > x_2 > ... > x_n.
class MonomialOrder {
 public:
  constexpr MonomialOrder() = default;
  constexpr explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  constexpr OrderKind kind() const noexcept { return kind_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    Monomial::check_arity(a, b);
    const std::size_t n = a.arity();
    switch (kind_) {
      case OrderKind::Lex:
        return lex(a, b, n);
      case OrderKind::GrLex:
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        return lex(a, b, n);
      case OrderKind::GrevLex:
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        // Smaller exponent in the last differing variable is the larger monomial.
        for (std::size_t i = n; i-- > 0;) {
          if (a[i] != b[i]) return b[i] <=> a[i];
        }
        return std::strong_ordering::equal;
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  static std::strong_ordering lex(const Monomial& a, const Monomial& b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }

  OrderKind kind_ = OrderKind::GrevLex;
};

/// Renders `x^2*y*z^3`; the constant monomial renders as "1".
inline std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// Every monomial of total degree `d` in `arity` variables, in no particular order.
inline std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<Monomial::Exponent> exps(arity, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (arity == 0) {
      if (left == 0) out.emplace_back(exps);
      return;
    }
    if (i + 1 == arity) {
      exps[i] = left;
      out.emplace_back(exps);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      exps[i] = e;
      self(self, i + 1, left - e);
    }
    exps[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace f5b
