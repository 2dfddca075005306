#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "f5b/error.hpp"
#include "f5b/field.hpp"
#include "f5b/monomial.hpp"

namespace f5b {

/// Coefficient field, monomial order and variable names shared by a family of polynomials.
template <CoefficientField K>
struct Ring {
  K field;
  MonomialOrder order;
  std::vector<std::string> variables;

  std::size_t arity() const noexcept { return variables.size(); }
  Monomial one() const { return Monomial(arity()); }
  Monomial variable(std::size_t i) const { return Monomial::variable(arity(), i); }

  friend bool operator==(const Ring&, const Ring&) = default;
};

template <CoefficientField K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <CoefficientField K>
RingPtr<K> make_ring(K field, std::vector<std::string> variables,
                     MonomialOrder order = MonomialOrder(OrderKind::GrevLex)) {
  return std::make_shared<const Ring<K>>(Ring<K>{std::move(field), order, std::move(variables)});
}

/// Sparse polynomial: nonzero terms sorted strictly descending in the ring's order.
/// The zero polynomial has no terms.
template <CoefficientField K>
class Polynomial {
 public:
  using Field = K;
  using Element = typename K::Element;

  struct Term {
    Element coeff;
    Monomial mono;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr<K> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const auto& ord = p.ring_->order;
    for (const Term& t : terms) {
      if (t.mono.arity() != p.ring_->arity()) {
        throw ArityError("term arity does not match the ring");
      }
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    const K& k = p.ring_->field;
    for (Term& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = k.add(p.terms_.back().coeff, t.coeff);
        if (k.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!k.is_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Wraps terms already in canonical form.
  static Polynomial from_sorted_terms(RingPtr<K> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial constant(RingPtr<K> ring, const Element& c) {
    Polynomial p(ring);
    if (!ring->field.is_zero(c)) p.terms_.push_back({c, ring->one()});
    return p;
  }

  const RingPtr<K>& ring() const noexcept { return ring_; }
  const K& field() const { return ring_->field; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  const Monomial& lpp() const {
    if (is_zero()) throw ZeroPolynomial();
    return terms_.front().mono;
  }
  const Element& lc() const {
    if (is_zero()) throw ZeroPolynomial();
    return terms_.front().coeff;
  }
  const Term& lm() const {
    if (is_zero()) throw ZeroPolynomial();
    return terms_.front();
  }
  /// Maximal total degree over all terms.
  std::uint64_t degree() const {
    if (is_zero()) throw ZeroPolynomial();
    std::uint64_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
  }

  /// Equal terms; rings are compared by value.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  RingPtr<K> ring_;
  std::vector<Term> terms_;
};

namespace detail {

template <CoefficientField K>
const RingPtr<K>& common_ring(const Polynomial<K>& f, const Polynomial<K>& g) {
  if (f.ring() != g.ring() && !(f.ring() && g.ring() && *f.ring() == *g.ring())) {
    throw RingMismatch();
  }
  return f.ring();
}

}  // namespace detail

/// f - c*m*g in one merge pass.
template <CoefficientField K>
Polynomial<K> sub_scaled(const Polynomial<K>& f, const typename K::Element& c, const Monomial& m,
                         const Polynomial<K>& g) {
  const auto& ring = detail::common_ring(f, g);
  const K& k = ring->field;
  const auto& ord = ring->order;
  using Term = typename Polynomial<K>::Term;
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  const auto& a = f.terms();
  const auto& b = g.terms();
  std::size_t i = 0, j = 0;
  if (k.is_zero(c)) return f;
  auto scaled = [&](std::size_t idx) { return Term{k.neg(k.mul(c, b[idx].coeff)), m * b[idx].mono}; };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Term t = scaled(j);
    if (i == a.size()) {
      out.push_back(std::move(t));
      ++j;
      continue;
    }
    auto cmp = ord.compare(a[i].mono, t.mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(t));
      ++j;
    } else {
      auto s = k.add(a[i].coeff, t.coeff);
      if (!k.is_zero(s)) out.push_back(Term{std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  return Polynomial<K>::from_sorted_terms(ring, std::move(out));
}

/// c*m*f
template <CoefficientField K>
Polynomial<K> scale_mono(const typename K::Element& c, const Monomial& m, const Polynomial<K>& f) {
  const K& k = f.field();
  if (k.is_zero(c)) return Polynomial<K>(f.ring());
  std::vector<typename Polynomial<K>::Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({k.mul(c, t.coeff), m * t.mono});
  return Polynomial<K>::from_sorted_terms(f.ring(), std::move(out));
}

template <CoefficientField K>
Polynomial<K> add(const Polynomial<K>& f, const Polynomial<K>& g) {
  const auto& ring = detail::common_ring(f, g);
  return sub_scaled(f, ring->field.neg(ring->field.one()), ring->one(), g);
}

template <CoefficientField K>
Polynomial<K> sub(const Polynomial<K>& f, const Polynomial<K>& g) {
  const auto& ring = detail::common_ring(f, g);
  return sub_scaled(f, ring->field.one(), ring->one(), g);
}

template <CoefficientField K>
Polynomial<K> make_monic(const Polynomial<K>& f) {
  if (f.is_zero() || f.field().is_one(f.lc())) return f;
  return scale_mono(f.field().inv(f.lc()), f.ring()->one(), f);
}

/// u*f - v*g with u = (L/lpp f)/lc f and v = (L/lpp g)/lc g, L = lcm of the lpps,
/// so both products have leading monomial exactly 1*L.
template <CoefficientField K>
Polynomial<K> spoly(const Polynomial<K>& f, const Polynomial<K>& g) {
  detail::common_ring(f, g);
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial();
  const K& k = f.field();
  const Monomial l = lcm(f.lpp(), g.lpp());
  Polynomial<K> uf = scale_mono(k.inv(f.lc()), quotient(l, f.lpp()), f);
  return sub_scaled(uf, k.inv(g.lc()), quotient(l, g.lpp()), g);
}

/// Full reduction of f by G: no term of the result is divisible by any lpp(g).
/// `steps`, when given, is incremented once per elementary reduction.
template <CoefficientField K>
Polynomial<K> normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> G,
                          std::uint64_t* steps = nullptr) {
  for (const auto& g : G) {
    detail::common_ring(f, g);
    if (g.is_zero()) throw ZeroPolynomial();
  }
  const K& k = f.field();
  using Term = typename Polynomial<K>::Term;
  std::vector<Term> rest;
  Polynomial<K> p = f;
  while (!p.is_zero()) {
    const Term& lead = p.lm();
    const Polynomial<K>* reducer = nullptr;
    for (const auto& g : G) {
      if (divides(g.lpp(), lead.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      p = sub_scaled(p, k.div(lead.coeff, reducer->lc()), quotient(lead.mono, reducer->lpp()), *reducer);
      if (steps) ++*steps;
    } else {
      rest.push_back(lead);
      std::vector<Term> tail(p.terms().begin() + 1, p.terms().end());
      p = Polynomial<K>::from_sorted_terms(p.ring(), std::move(tail));
    }
  }
  return Polynomial<K>::from_sorted_terms(f.ring(), std::move(rest));
}

template <CoefficientField K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& G,
                          std::uint64_t* steps = nullptr) {
  return normal_form(f, std::span<const Polynomial<K>>(G), steps);
}

/// Text form: `3*x^2*y - 1/2*z + 7`, descending, declared variable names.
template <CoefficientField K>
std::string to_string(const Polynomial<K>& f) {
  if (f.is_zero()) return "0";
  const K& k = f.field();
  const auto& names = f.ring()->variables;
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = k.is_negative(t.coeff);
    const auto mag = negative ? k.neg(t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += k.to_string(mag);
    } else if (k.is_one(mag)) {
      out += to_string(t.mono, names);
    } else {
      out += k.to_string(mag) + '*' + to_string(t.mono, names);
    }
  }
  return out;
}

}  // namespace f5b
