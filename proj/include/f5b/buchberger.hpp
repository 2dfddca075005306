#pragma once

// Plain Buchberger (normal selection, coprime-lead skip) plus Groebner basis
// verification and reduced-basis canonicalization. Shares no criterion code
// with the F5 engines, which it is used to check.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "f5b/error.hpp"
#include "f5b/polynomial.hpp"
#include "f5b/stats.hpp"

namespace f5b {

template <CoefficientField K>
struct BuchbergerResult {
  std::vector<Polynomial<K>> basis;
  RunStats stats;
};

template <CoefficientField K>
BuchbergerResult<K> buchberger_run(const std::vector<Polynomial<K>>& inputs) {
  const auto start = std::chrono::steady_clock::now();
  if (inputs.empty()) throw InputError("no input polynomials");
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].is_zero()) throw InputError("generator " + std::to_string(i + 1) + " is zero");
    detail::common_ring(inputs[0], inputs[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (inputs[i] == inputs[j]) throw InputError("duplicate generators");
    }
  }

  BuchbergerResult<K> res;
  auto& G = res.basis;
  auto& stats = res.stats;
  struct Pair {
    std::size_t i, j;
    std::uint64_t degree, ordinal;
  };
  std::vector<Pair> pairs;
  std::uint64_t ordinal = 0;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      pairs.push_back({i, k, lcm(G[i].lpp(), G[k].lpp()).degree(), ordinal++});
      ++stats.pairs_created;
    }
  };
  for (const auto& f : inputs) {
    G.push_back(make_monic(f));
    add_pairs_for(G.size() - 1);
  }

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      return std::tie(a.degree, a.ordinal) < std::tie(b.degree, b.ordinal);
    });
    const Pair p = *it;
    *it = pairs.back();
    pairs.pop_back();
    if (coprime(G[p.i].lpp(), G[p.j].lpp())) continue;
    auto h = normal_form(spoly(G[p.i], G[p.j]), G, &stats.reduction_steps);
    if (h.is_zero()) {
      ++stats.zero_reductions;
      continue;
    }
    G.push_back(make_monic(h));
    add_pairs_for(G.size() - 1);
  }
  stats.basis_size = G.size();
  stats.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return res;
}

/// A Groebner basis of the ideal generated by `inputs`.
template <CoefficientField K>
std::vector<Polynomial<K>> buchberger(const std::vector<Polynomial<K>>& inputs) {
  return buchberger_run(inputs).basis;
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
template <CoefficientField K>
bool is_groebner(const std::vector<Polynomial<K>>& G) {
  for (const auto& g : G) {
    if (g.is_zero()) throw ZeroPolynomial();
  }
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (!normal_form(spoly(G[i], G[j]), G).is_zero()) return false;
    }
  }
  return true;
}

/// The reduced Groebner basis (minimal, monic, interreduced), sorted
/// descending by leading power product. Requires G to be a Groebner basis.
template <CoefficientField K>
std::vector<Polynomial<K>> reduce_basis(const std::vector<Polynomial<K>>& G) {
  std::vector<Polynomial<K>> monic;
  for (const auto& g : G) {
    if (!g.is_zero()) monic.push_back(make_monic(g));
  }
  if (monic.empty()) return {};
  const auto& ord = monic.front().ring()->order;
  std::sort(monic.begin(), monic.end(),
            [&](const Polynomial<K>& a, const Polynomial<K>& b) { return ord.greater(a.lpp(), b.lpp()); });

  // Minimal: drop g when another kept member's lpp divides lpp(g).
  std::vector<Polynomial<K>> minimal;
  for (std::size_t i = 0; i < monic.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < monic.size() && !redundant; ++j) {
      if (i == j || !divides(monic[j].lpp(), monic[i].lpp())) continue;
      // Equal leads: keep the later one in sorted order only.
      redundant = !(monic[j].lpp() == monic[i].lpp()) || j > i;
    }
    if (!redundant) minimal.push_back(monic[i]);
  }

  std::vector<Polynomial<K>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced.push_back(make_monic(normal_form(minimal[i], others)));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial<K>& a, const Polynomial<K>& b) { return ord.greater(a.lpp(), b.lpp()); });
  return reduced;
}

}  // namespace f5b
