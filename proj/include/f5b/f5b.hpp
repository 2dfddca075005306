#pragma once

// The F5 algorithm in Buchberger's style: pairs are selected one at a time,
// filtered by the Syzygy and Rewritten criteria, and their S-polynomials are
// F5-reduced by the current set B. Every result joins B, zero or not.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f5b/error.hpp"
#include "f5b/labeled.hpp"
#include "f5b/stats.hpp"
#include "f5b/strategy.hpp"

namespace f5b {

struct F5bConfig {
  Strategy strategy = Strategy::MinDegree;
  bool syzygy_criterion = true;
  bool rewritten_criterion = true;
  bool relaxed_reduction = false;
  std::optional<std::uint64_t> degree_cap;  ///< abort once a selected pair exceeds this lcm degree
  std::optional<std::uint64_t> pair_limit;  ///< abort once more pairs than this were created
  TraceSink trace;
};

template <CoefficientField K>
struct F5bResult {
  std::vector<Polynomial<K>> basis;
  RunStats stats;
  ReductionAudit audit;
  LabeledSet<K> labeled;  ///< final B, including zero-poly members
};

namespace detail {

template <CoefficientField K>
void check_generators(const std::vector<Polynomial<K>>& inputs) {
  if (inputs.empty()) throw InputError("no input polynomials");
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].is_zero()) throw InputError("generator " + std::to_string(i + 1) + " is zero");
    common_ring(inputs[0], inputs[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (inputs[i] == inputs[j]) {
        throw InputError("generators " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                         " are identical");
      }
    }
  }
}

}  // namespace detail

template <CoefficientField K>
F5bResult<K> f5b(const std::vector<Polynomial<K>>& inputs, const F5bConfig& cfg = {}) {
  const auto start = std::chrono::steady_clock::now();
  detail::check_generators(inputs);
  const auto& ring = inputs.front().ring();
  const MonomialOrder& ord = ring->order;
  const auto& names = ring->variables;
  const TraceSink* trace = cfg.trace ? &cfg.trace : nullptr;
  auto emit = [&](const std::string& line) {
    if (trace) (*trace)(line);
  };

  F5bResult<K> res;
  LabeledSet<K>& B = res.labeled;
  RunStats& stats = res.stats;
  std::uint64_t gen = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    B.push_back(std::make_shared<const LabeledPoly<K>>(
        LabeledPoly<K>{Signature{ring->one(), i + 1}, inputs[i], ++gen}));
  }

  LabeledSet<K> nonzero = B;
  PairQueue<K> pairs(cfg.strategy);
  std::uint64_t ordinal = 0;
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = i + 1; j < B.size(); ++j) {
      pairs.push(make_ordered_pair(B[i], B[j], ord, ordinal++));
      ++stats.pairs_created;
    }
  }

  const ReductionConfig rcfg{cfg.relaxed_reduction, cfg.syzygy_criterion, cfg.rewritten_criterion};
  while (!pairs.empty()) {
    CriticalPair<K> cp = pairs.pop();

    if (cfg.degree_cap && cp.degree > *cfg.degree_cap) {
      throw DegreeCapExceeded(static_cast<unsigned>(cp.degree), static_cast<unsigned>(*cfg.degree_cap));
    }
    emit("select " + cp.name() + " u=" + to_string(cp.u, names) + " v=" + to_string(cp.v, names) +
         " lcm=" + to_string(cp.lcm, names) + " deg=" + std::to_string(cp.degree));

    const std::span<const LabeledRef<K>> current(B);
    if (cfg.syzygy_criterion && syzygy_criterion(cp, current)) {
      ++stats.rejected_syzygy;
      emit("reject syzygy " + cp.name());
      continue;
    }
    if (cfg.rewritten_criterion && rewritten_criterion(cp, current)) {
      ++stats.rejected_rewritten;
      emit("reject rewritten " + cp.name());
      continue;
    }
    if (is_signature_tie(cp, ord)) {
      ++stats.rejected_sig_tie;
      emit("reject sig-tie " + cp.name());
      continue;
    }

    LabeledPoly<K> sp = spoly_labeled(cp, ++gen, ord);
    emit("spoly " + label_name(sp) + " sig=" + to_string(sp.sig, names) + " poly=" + to_string(sp.poly));
    const std::uint64_t steps_before = res.audit.steps;
    LabeledPoly<K> P = f5_reduce(std::move(sp), current, ord, rcfg, &res.audit, trace,
                                 std::span<const LabeledRef<K>>(nonzero));
    stats.reduction_steps += res.audit.steps - steps_before;
    P.poly = make_monic(P.poly);

    if (P.poly.is_zero()) ++stats.zero_reductions;
    // Without the Rewritten Criterion nothing depends on generation order, so a
    // copy of an element already in B adds no pairs of its own.
    const bool present = !cfg.rewritten_criterion && std::any_of(B.begin(), B.end(), [&](const LabeledRef<K>& Q) {
      return Q->sig == P.sig && Q->poly == P.poly;
    });
    if (present) {
      emit("duplicate " + label_name(P) + " sig=" + to_string(P.sig, names));
      continue;
    }

    auto ref = std::make_shared<const LabeledPoly<K>>(std::move(P));
    if (!ref->poly.is_zero()) {
      for (const auto& Q : nonzero) {
        pairs.push(make_ordered_pair(ref, Q, ord, ordinal++));
        ++stats.pairs_created;
      }
      if (cfg.pair_limit && stats.pairs_created > *cfg.pair_limit) throw PairLimitExceeded(*cfg.pair_limit);
    }
    emit("insert " + label_name(*ref) + " sig=" + to_string(ref->sig, names) + " poly=" + to_string(ref->poly));
    if (!ref->poly.is_zero()) nonzero.push_back(ref);
    B.push_back(std::move(ref));
  }

  for (const auto& F : B) {
    if (!F->poly.is_zero()) res.basis.push_back(F->poly);
  }
  stats.basis_size = res.basis.size();
  stats.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return res;
}

}  // namespace f5b
