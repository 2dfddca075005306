#pragma once

// Coefficient fields: the rationals (exact, arbitrary precision) and prime
// fields GF(p). A field is a small context object; elements are plain values
// and every operation goes through the field, e.g. `K.add(a, b)`.

#include <concepts>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "f5b/error.hpp"

namespace f5b {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Deterministic trial-division primality test (desk-scale moduli only).
constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

template <typename K>
concept CoefficientField = std::equality_comparable<K> && requires(const K k, typename K::Element a,
                                                                   const Rational& q) {
  { k.zero() } -> std::same_as<typename K::Element>;
  { k.one() } -> std::same_as<typename K::Element>;
  { k.from_rational(q) } -> std::same_as<typename K::Element>;
  { k.add(a, a) } -> std::same_as<typename K::Element>;
  { k.sub(a, a) } -> std::same_as<typename K::Element>;
  { k.neg(a) } -> std::same_as<typename K::Element>;
  { k.mul(a, a) } -> std::same_as<typename K::Element>;
  { k.inv(a) } -> std::same_as<typename K::Element>;
  { k.div(a, a) } -> std::same_as<typename K::Element>;
  { k.is_zero(a) } -> std::convertible_to<bool>;
  { k.is_canonical(a) } -> std::convertible_to<bool>;
  { k.to_string(a) } -> std::convertible_to<std::string>;
  { k.name() } -> std::convertible_to<std::string>;
};

/// GF(p) for a prime p < 2^32, so products of two residues fit in 64 bits.
class PrimeField {
 public:
  struct Element {
    std::uint64_t value = 0;
    friend bool operator==(Element, Element) = default;
  };

  explicit PrimeField(std::int64_t modulus) {
    if (modulus < 2 || modulus >= (std::int64_t{1} << 32) ||
        !is_prime(static_cast<std::uint64_t>(modulus))) {
      throw NotPrime("modulus " + std::to_string(modulus) + " is not a prime below 2^32");
    }
    p_ = static_cast<std::uint64_t>(modulus);
  }

  std::uint64_t modulus() const noexcept { return p_; }

  Element zero() const noexcept { return {0}; }
  Element one() const noexcept { return {1}; }

  /// Euclidean remainder into [0, p), so negative inputs are accepted.
  Element from_integer(std::int64_t x) const noexcept {
    auto r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return {static_cast<std::uint64_t>(r)};
  }

  Element from_integer(const BigInt& x) const {
    BigInt r = x % p_;
    if (r < 0) r += p_;
    return {r.convert_to<std::uint64_t>()};
  }

  Element from_rational(const Rational& q) const {
    Element den = from_integer(BigInt(boost::multiprecision::denominator(q)));
    if (den.value == 0) throw DivisionByZero();
    return div(from_integer(BigInt(boost::multiprecision::numerator(q))), den);
  }

  Element add(Element a, Element b) const noexcept {
    std::uint64_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  Element sub(Element a, Element b) const noexcept {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  Element neg(Element a) const noexcept { return {a.value == 0 ? 0 : p_ - a.value}; }
  Element mul(Element a, Element b) const noexcept { return {(a.value * b.value) % p_}; }

  /// Extended Euclid on (a, p).
  Element inv(Element a) const {
    if (a.value == 0) throw DivisionByZero();
    std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(a.value);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      r0 = r1;
      r1 = r2;
      std::int64_t t2 = t0 - q * t1;
      t0 = t1;
      t1 = t2;
    }
    return from_integer(t0);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const noexcept { return a.value == 0; }
  bool is_one(Element a) const noexcept { return a.value == 1; }
  bool is_canonical(Element a) const noexcept { return a.value < p_; }
  bool is_negative(Element) const noexcept { return false; }

  std::string to_string(Element a) const { return std::to_string(a.value); }
  std::string name() const { return "gf " + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_ = 2;
};

/// The field of rational numbers; elements are always in lowest terms.
class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_integer(std::int64_t x) const { return Element(x); }
  Element from_integer(const BigInt& x) const { return Element(x); }
  Element from_rational(const Rational& q) const { return q; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (a == 0) throw DivisionByZero();
    return Element(1) / a;
  }
  Element div(const Element& a, const Element& b) const {
    if (b == 0) throw DivisionByZero();
    return a / b;
  }

  bool is_zero(const Element& a) const { return a == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool is_canonical(const Element& a) const {
    const BigInt num = boost::multiprecision::numerator(a);
    const BigInt den = boost::multiprecision::denominator(a);
    if (den <= 0) return false;
    if (num == 0) return den == 1;
    return boost::multiprecision::gcd(num, den) == 1;
  }

  bool is_negative(const Element& a) const { return a < 0; }

  std::string to_string(const Element& a) const { return a.str(); }
  std::string name() const { return "q"; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

static_assert(CoefficientField<PrimeField>);
static_assert(CoefficientField<RationalField>);

}  // namespace f5b
