#pragma once

// Labeled polynomials and the signature machinery of F5: the POT module
// order, critical pairs, the Syzygy and Rewritten criteria and F5-reduction.
//
// Only the leading term x^a*e_i of the hidden module representation is kept
// (the Signature); full module vectors are never built.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "f5b/error.hpp"
#include "f5b/polynomial.hpp"

namespace f5b {

/// x^a * e_index, with index in [1, m].
struct Signature {
  Monomial monomial;
  std::size_t index = 1;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Position over term: e_1 > e_2 > ... > e_m, monomials break ties.
inline std::strong_ordering sig_cmp(const Signature& s, const Signature& t, const MonomialOrder& ord) {
  if (s.index != t.index) return t.index <=> s.index;
  return ord.compare(s.monomial, t.monomial);
}

inline Signature operator*(const Monomial& m, const Signature& s) { return {m * s.monomial, s.index}; }

inline std::string to_string(const Signature& s, const std::vector<std::string>& names) {
  std::string out = s.monomial.is_one() ? "" : to_string(s.monomial, names) + '*';
  return out + 'e' + std::to_string(s.index);
}

using TraceSink = std::function<void(const std::string&)>;

template <CoefficientField K>
struct LabeledPoly {
  Signature sig;
  Polynomial<K> poly;
  std::uint64_t gen = 0;  ///< creation ordinal; larger means generated later

  std::size_t index() const noexcept { return sig.index; }
};

template <CoefficientField K>
using LabeledRef = std::shared_ptr<const LabeledPoly<K>>;

/// The set B of an F5 run. Members are immutable once inserted.
template <CoefficientField K>
using LabeledSet = std::vector<LabeledRef<K>>;

template <CoefficientField K>
std::string label_name(const LabeledPoly<K>& f) {
  return "F" + std::to_string(f.gen);
}

/// (u, F, v, G) with u*lm(F) = v*lm(G) = 1*lcm(lpp F, lpp G).
template <CoefficientField K>
struct CriticalPair {
  using Element = typename K::Element;

  Element u_coeff;
  Monomial u;
  LabeledRef<K> F;
  Element v_coeff;
  Monomial v;
  LabeledRef<K> G;
  Monomial lcm;
  std::uint64_t degree = 0;
  std::uint64_t ordinal = 0;  ///< creation order, used as the age tie-break

  Signature u_sig() const { return u * F->sig; }
  Signature v_sig() const { return v * G->sig; }
  /// min of the two indices, i.e. the index of the larger signature.
  std::size_t index() const { return std::min(F->index(), G->index()); }

  std::string name() const { return "[" + label_name(*F) + "," + label_name(*G) + "]"; }
};

template <CoefficientField K>
CriticalPair<K> make_pair(LabeledRef<K> F, LabeledRef<K> G, std::uint64_t ordinal = 0) {
  if (F->poly.is_zero() || G->poly.is_zero()) throw ZeroPolynomial();
  const K& k = F->poly.field();
  Monomial l = lcm(F->poly.lpp(), G->poly.lpp());
  CriticalPair<K> p{k.inv(F->poly.lc()), quotient(l, F->poly.lpp()), F,
                    k.inv(G->poly.lc()), quotient(l, G->poly.lpp()), G,
                    l, 0, ordinal};
  p.degree = p.lcm.degree();
  return p;
}

/// The side with the larger signature goes first, so spoly = (larger side) - (smaller side).
template <CoefficientField K>
CriticalPair<K> make_ordered_pair(LabeledRef<K> A, LabeledRef<K> B, const MonomialOrder& ord,
                                  std::uint64_t ordinal = 0) {
  auto p = make_pair(A, B, ordinal);
  if (sig_cmp(p.u_sig(), p.v_sig(), ord) < 0) return make_pair(std::move(B), std::move(A), ordinal);
  return p;
}

template <CoefficientField K>
bool is_signature_tie(const CriticalPair<K>& p, const MonomialOrder& ord) {
  return sig_cmp(p.u_sig(), p.v_sig(), ord) == 0;
}

/// u*F - v*G labeled with the larger of the two multiplied signatures.
/// Equal signatures have no recoverable signature and are rejected.
template <CoefficientField K>
LabeledPoly<K> spoly_labeled(const CriticalPair<K>& p, std::uint64_t gen, const MonomialOrder& ord) {
  const Signature su = p.u_sig(), sv = p.v_sig();
  const auto cmp = sig_cmp(su, sv, ord);
  if (cmp == 0) throw InputError("critical pair " + p.name() + " has equal multiplied signatures");
  auto uf = scale_mono(p.u_coeff, p.u, p.F->poly);
  auto poly = sub_scaled(uf, p.v_coeff, p.v, p.G->poly);
  return {cmp > 0 ? su : sv, std::move(poly), gen};
}

/// m*F is divisible by B: some G with nonzero poly and a larger index has
/// lpp(poly G) dividing the monomial part of sign(m*F).
template <CoefficientField K>
bool is_divisible(const Monomial& m, const LabeledPoly<K>& F, std::span<const LabeledRef<K>> B) {
  const Monomial target = m * F.sig.monomial;
  for (const auto& G : B) {
    if (G->poly.is_zero() || G->index() <= F.index()) continue;
    if (divides(G->poly.lpp(), target)) return true;
  }
  return false;
}

/// m*F is rewritable by B: some G generated later than F, in the same
/// index, whose signature divides sign(m*F). Zero-poly members count.
template <CoefficientField K>
bool is_rewritable(const Monomial& m, const LabeledPoly<K>& F, std::span<const LabeledRef<K>> B) {
  const Monomial target = m * F.sig.monomial;
  for (const auto& G : B) {
    if (G->gen <= F.gen || G->index() != F.index()) continue;
    if (divides(G->sig.monomial, target)) return true;
  }
  return false;
}

template <CoefficientField K>
bool syzygy_criterion(const CriticalPair<K>& p, std::span<const LabeledRef<K>> B) {
  return is_divisible(p.u, *p.F, B) || is_divisible(p.v, *p.G, B);
}

template <CoefficientField K>
bool rewritten_criterion(const CriticalPair<K>& p, std::span<const LabeledRef<K>> B) {
  return is_rewritable(p.u, *p.F, B) || is_rewritable(p.v, *p.G, B);
}

struct ReductionConfig {
  /// Drops the not-divisible / not-rewritable conditions on reducers.
  bool relaxed = false;
  bool check_divisible = true;
  bool check_rewritable = true;
};

/// Counters checked by the test suites on every reduction.
struct ReductionAudit {
  std::uint64_t calls = 0;
  std::uint64_t steps = 0;
  std::uint64_t signature_violations = 0;  ///< output signature differed from input
  std::uint64_t one_way_violations = 0;    ///< reducer product signature was not smaller
};

template <CoefficientField K>
struct Reducer {
  LabeledRef<K> G;
  typename K::Element coeff;
  Monomial multiplier;
};

/// Finds G in B with lpp(G) | lpp(F), sign(c*x^g*G) < sign(F) and, unless
/// relaxed, c*x^g*G neither divisible nor rewritable by B. Each of the last two
/// tests can also be switched off on its own. When given, reducers are taken
/// from candidates (a subset of B) while the tests still look at all of B.
template <CoefficientField K>
std::optional<Reducer<K>> f5_reduce_step(const LabeledPoly<K>& F, std::span<const LabeledRef<K>> B,
                                         const MonomialOrder& ord, ReductionConfig cfg = {},
                                         std::span<const LabeledRef<K>> candidates = {}) {
  if (F.poly.is_zero()) return std::nullopt;
  const Monomial& lead = F.poly.lpp();
  for (const auto& G : candidates.empty() ? B : candidates) {
    if (G->poly.is_zero() || !divides(G->poly.lpp(), lead)) continue;
    Monomial gamma = quotient(lead, G->poly.lpp());
    if (sig_cmp(F.sig, gamma * G->sig, ord) <= 0) continue;
    if (!cfg.relaxed) {
      if (cfg.check_divisible && is_divisible(gamma, *G, B)) continue;
      if (cfg.check_rewritable && is_rewritable(gamma, *G, B)) continue;
    }
    const K& k = F.poly.field();
    return Reducer<K>{G, k.div(F.poly.lc(), G->poly.lc()), std::move(gamma)};
  }
  return std::nullopt;
}

/// Repeats f5_reduce_step to a fixpoint. Signature and gen are preserved.
template <CoefficientField K>
LabeledPoly<K> f5_reduce(LabeledPoly<K> F, std::span<const LabeledRef<K>> B, const MonomialOrder& ord,
                         ReductionConfig cfg = {}, ReductionAudit* audit = nullptr,
                         const TraceSink* trace = nullptr, std::span<const LabeledRef<K>> candidates = {}) {
  const Signature before = F.sig;
  if (audit) ++audit->calls;
  while (auto r = f5_reduce_step(F, B, ord, cfg, candidates)) {
    if (audit) {
      ++audit->steps;
      if (sig_cmp(r->multiplier * r->G->sig, F.sig, ord) >= 0) ++audit->one_way_violations;
    }
    F.poly = sub_scaled(F.poly, r->coeff, r->multiplier, r->G->poly);
    if (trace && *trace) {
      const auto& names = F.poly.ring()->variables;
      (*trace)("reduce " + label_name(F) + " by " + to_string(r->multiplier, names) + "*" +
               label_name(*r->G) + " -> " + to_string(F.poly));
    }
  }
  if (audit && !(F.sig == before)) ++audit->signature_violations;
  return F;
}

}  // namespace f5b
