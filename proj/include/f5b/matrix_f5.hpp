#pragma once

// Degree-by-degree Matrix F5 for homogeneous input over GF(p).
//
// At degree d every pending pair of that degree is filtered by the two
// criteria; both multiplied sides of each surviving pair become rows labeled
// by their signatures. Reducer rows are added for every non-leading column
// monomial, then the matrix is eliminated one way: a row is only ever reduced
// by rows with a strictly smaller label. Rows whose leading column moved are
// the new polynomials of that degree.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "f5b/error.hpp"
#include "f5b/labeled.hpp"
#include "f5b/stats.hpp"

namespace f5b {

template <CoefficientField K>
struct MatrixRow {
  Signature label;
  Monomial multiplier;  ///< the row is multiplier * source
  LabeledRef<K> source;
  std::vector<typename K::Element> coeffs;
};

template <CoefficientField K>
struct MacaulayMatrix {
  std::uint64_t degree = 0;
  std::vector<Monomial> columns;  ///< descending in the monomial order
  std::vector<MatrixRow<K>> rows;

  bool empty() const noexcept { return rows.empty(); }
};

/// One elementary row operation: row `reducee` -= c * row `reducer`.
struct EliminationEvent {
  Signature reducer;
  Signature reducee;
  std::size_t column = 0;
};

template <CoefficientField K>
struct Elimination {
  MacaulayMatrix<K> matrix;  ///< rows in echelon order (by leading column), zero rows last
  std::vector<EliminationEvent> events;
  /// Per output row: leading column changed during elimination and the row is nonzero.
  std::vector<bool> is_new;
  std::vector<bool> is_zero;
};

namespace detail {

template <CoefficientField K>
std::optional<std::size_t> leading_column(const K& k, const std::vector<typename K::Element>& row) {
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (!k.is_zero(row[c])) return c;
  }
  return std::nullopt;
}

template <CoefficientField K>
void axpy_row(const K& k, std::vector<typename K::Element>& row, const typename K::Element& c,
              const std::vector<typename K::Element>& pivot, std::size_t from) {
  for (std::size_t i = from; i < row.size(); ++i) {
    if (!k.is_zero(pivot[i])) row[i] = k.sub(row[i], k.mul(c, pivot[i]));
  }
}

}  // namespace detail

/// One-way elimination of M (rows must be ascending by label). Rows are
/// top-reduced by smaller-labeled pivots; rows whose leading column moved are
/// then fully reduced the same way. Every nonzero row ends monic.
template <CoefficientField K>
Elimination<K> one_way_eliminate(const MacaulayMatrix<K>& M, const MonomialOrder& ord, const K& k) {
  Elimination<K> out;
  out.matrix.degree = M.degree;
  out.matrix.columns = M.columns;
  std::vector<MatrixRow<K>> rows = M.rows;
  std::map<std::size_t, std::size_t> pivot;  // column -> row position
  std::vector<std::optional<std::size_t>> lead_of(rows.size());
  std::vector<bool> changed(rows.size(), false);

  auto reduce_at = [&](std::size_t r, std::size_t col) -> bool {
    auto it = pivot.find(col);
    if (it == pivot.end()) return false;
    const auto& p = rows[it->second];
    if (sig_cmp(p.label, rows[r].label, ord) >= 0) return false;
    const auto c = rows[r].coeffs[col];
    detail::axpy_row(k, rows[r].coeffs, c, p.coeffs, col);
    out.events.push_back({p.label, rows[r].label, col});
    return true;
  };

  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto original = detail::leading_column(k, rows[r].coeffs);
    auto lead = original;
    while (lead && reduce_at(r, *lead)) lead = detail::leading_column(k, rows[r].coeffs);
    if (!lead) continue;
    changed[r] = lead != original;
    if (changed[r]) {
      for (std::size_t c = *lead + 1; c < rows[r].coeffs.size(); ++c) {
        if (!k.is_zero(rows[r].coeffs[c])) reduce_at(r, c);
      }
    }
    const auto inv = k.inv(rows[r].coeffs[*lead]);
    for (auto& e : rows[r].coeffs) e = k.mul(e, inv);
    lead_of[r] = lead;
    pivot.emplace(*lead, r);
  }

  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (!lead_of[a] || !lead_of[b]) return lead_of[a].has_value() && !lead_of[b].has_value();
    return *lead_of[a] < *lead_of[b];
  });
  for (std::size_t i : order) {
    out.matrix.rows.push_back(std::move(rows[i]));
    out.is_zero.push_back(!lead_of[i].has_value());
    out.is_new.push_back(lead_of[i].has_value() && changed[i]);
  }
  return out;
}

/// Text dump: a header with the column monomials, then `label<TAB>c1 c2 ...`.
template <CoefficientField K>
std::string format_matrix(const MacaulayMatrix<K>& M, const K& k, const std::vector<std::string>& names) {
  std::string out = "label\t";
  for (std::size_t c = 0; c < M.columns.size(); ++c) {
    if (c) out += ' ';
    out += to_string(M.columns[c], names);
  }
  out += '\n';
  for (const auto& row : M.rows) {
    out += to_string(row.label, names) + '\t';
    for (std::size_t c = 0; c < row.coeffs.size(); ++c) {
      if (c) out += ' ';
      out += k.to_string(row.coeffs[c]);
    }
    out += '\n';
  }
  return out;
}

enum class MatrixPhase { Pre, Post };

struct MatrixF5Config {
  std::uint64_t max_degree = 0;
  bool syzygy_criterion = true;
  bool rewritten_criterion = true;
  TraceSink trace;
};

template <CoefficientField K>
struct MatrixF5Result {
  std::vector<Polynomial<K>> basis;  ///< inputs followed by harvested polynomials
  LabeledSet<K> labeled;
  LabeledSet<K> harvested;
  RunStats stats;
  std::vector<EliminationEvent> events;
  bool stabilized = false;  ///< no pairs remained when the run stopped
};

/// Called with every matrix before and after elimination; `pass` counts
/// repeated passes at the same degree from 1.
template <CoefficientField K>
using MatrixObserver =
    std::function<void(std::uint64_t degree, unsigned pass, MatrixPhase, const MacaulayMatrix<K>&)>;

template <CoefficientField K>
class MatrixF5 {
 public:
  explicit MatrixF5(const std::vector<Polynomial<K>>& inputs, MatrixF5Config cfg = {})
      : cfg_(std::move(cfg)) {
    if (inputs.empty()) throw InputError("no input polynomials");
    if constexpr (!std::is_same_v<K, PrimeField>) {
      throw UnsupportedField("matrix F5 runs over prime fields only");
    }
    ring_ = inputs.front().ring();
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (inputs[i].is_zero()) throw InputError("generator " + std::to_string(i + 1) + " is zero");
      detail::common_ring(inputs.front(), inputs[i]);
      if (!inputs[i].is_homogeneous()) throw NotHomogeneous();
      for (std::size_t j = 0; j < i; ++j) {
        if (inputs[i] == inputs[j]) throw InputError("duplicate generators");
      }
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      B_.push_back(std::make_shared<const LabeledPoly<K>>(
          LabeledPoly<K>{Signature{ring_->one(), i + 1}, inputs[i], ++gen_}));
    }
    for (std::size_t i = 0; i < B_.size(); ++i) {
      for (std::size_t j = i + 1; j < B_.size(); ++j) add_pair(B_[i], B_[j]);
    }
  }

  const LabeledSet<K>& labeled() const noexcept { return B_; }
  const RunStats& stats() const noexcept { return stats_; }
  bool has_pairs_up_to(std::uint64_t d) const {
    return std::any_of(pairs_.begin(), pairs_.end(), [d](const auto& p) { return p.degree <= d; });
  }
  bool has_pairs() const noexcept { return !pairs_.empty(); }
  std::uint64_t min_degree() const {
    std::uint64_t d = B_.front()->poly.degree();
    for (const auto& F : B_) d = std::min(d, F->poly.degree());
    return d;
  }

  /// Consumes the pending pairs of degree <= d and builds their matrix.
  MacaulayMatrix<K> build_matrix(std::uint64_t d) {
    const MonomialOrder& ord = ring_->order;
    const auto& names = ring_->variables;
    std::vector<CriticalPair<K>> now;
    std::vector<CriticalPair<K>> later;
    for (auto& p : pairs_) (p.degree <= d ? now : later).push_back(std::move(p));
    pairs_ = std::move(later);
    std::sort(now.begin(), now.end(), [](const auto& a, const auto& b) { return a.ordinal < b.ordinal; });

    auto by_label = [&ord](const Signature& a, const Signature& b) { return sig_cmp(a, b, ord) < 0; };
    std::map<Signature, std::pair<Monomial, LabeledRef<K>>, decltype(by_label)> rows(by_label);
    const std::span<const LabeledRef<K>> current(B_);
    for (const auto& cp : now) {
      if (cfg_.syzygy_criterion && syzygy_criterion(cp, current)) {
        ++stats_.rejected_syzygy;
        emit("reject syzygy " + cp.name());
        continue;
      }
      if (cfg_.rewritten_criterion && rewritten_criterion(cp, current)) {
        ++stats_.rejected_rewritten;
        emit("reject rewritten " + cp.name());
        continue;
      }
      if (is_signature_tie(cp, ord)) {
        ++stats_.rejected_sig_tie;
        emit("reject sig-tie " + cp.name());
        continue;
      }
      emit("select " + cp.name() + " u=" + to_string(cp.u, names) + " v=" + to_string(cp.v, names) +
           " lcm=" + to_string(cp.lcm, names) + " deg=" + std::to_string(cp.degree));
      rows.try_emplace(cp.u_sig(), cp.u, cp.F);
      rows.try_emplace(cp.v_sig(), cp.v, cp.G);
    }

    MacaulayMatrix<K> M;
    M.degree = d;
    if (rows.empty()) return M;

    // Reducer rows for every column monomial that no row leads.
    auto desc = [&ord](const Monomial& a, const Monomial& b) { return ord.greater(a, b); };
    std::set<Monomial, decltype(desc)> seen(desc), leads(desc);
    std::set<Monomial, decltype(desc)> todo(desc);
    auto add_terms = [&](const Monomial& m, const LabeledRef<K>& G) {
      leads.insert(m * G->poly.lpp());
      for (const auto& t : G->poly.terms()) {
        Monomial x = m * t.mono;
        if (seen.insert(x).second) todo.insert(std::move(x));
      }
    };
    for (const auto& [label, src] : rows) add_terms(src.first, src.second);
    while (!todo.empty()) {
      Monomial m = *todo.begin();
      todo.erase(todo.begin());
      if (leads.count(m)) continue;
      std::optional<std::pair<Monomial, LabeledRef<K>>> best;
      std::optional<Signature> best_sig;
      for (const auto& G : B_) {
        if (G->poly.is_zero() || !divides(G->poly.lpp(), m)) continue;
        Monomial t = quotient(m, G->poly.lpp());
        if (cfg_.syzygy_criterion && is_divisible(t, *G, current)) continue;
        if (cfg_.rewritten_criterion && is_rewritable(t, *G, current)) continue;
        Signature s = t * G->sig;
        if (!best_sig || sig_cmp(s, *best_sig, ord) < 0) {
          best_sig = s;
          best.emplace(std::move(t), G);
        }
      }
      if (!best || rows.count(*best_sig)) continue;
      rows.emplace(*best_sig, *best);
      add_terms(best->first, best->second);
    }

    for (const auto& [label, src] : rows) {
      for (const auto& t : src.second->poly.terms()) M.columns.push_back(src.first * t.mono);
    }
    std::sort(M.columns.begin(), M.columns.end(), desc);
    M.columns.erase(std::unique(M.columns.begin(), M.columns.end()), M.columns.end());

    const K& k = ring_->field;
    for (const auto& [label, src] : rows) {
      MatrixRow<K> row{label, src.first, src.second, std::vector<typename K::Element>(M.columns.size(), k.zero())};
      for (const auto& t : src.second->poly.terms()) {
        const Monomial x = src.first * t.mono;
        auto pos = std::lower_bound(M.columns.begin(), M.columns.end(), x, desc);
        row.coeffs[static_cast<std::size_t>(pos - M.columns.begin())] = t.coeff;
      }
      M.rows.push_back(std::move(row));
    }
    return M;
  }

  /// Adds the new rows (and zero rows) of an elimination to B and forms their pairs.
  LabeledSet<K> harvest(const Elimination<K>& E) {
    const MonomialOrder& ord = ring_->order;
    const K& k = ring_->field;
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < E.matrix.rows.size(); ++i) {
      if (E.is_new[i] || E.is_zero[i]) picked.push_back(i);
    }
    std::sort(picked.begin(), picked.end(), [&](std::size_t a, std::size_t b) {
      return sig_cmp(E.matrix.rows[a].label, E.matrix.rows[b].label, ord) < 0;
    });
    LabeledSet<K> fresh;
    for (std::size_t i : picked) {
      const auto& row = E.matrix.rows[i];
      std::vector<typename Polynomial<K>::Term> terms;
      for (std::size_t c = 0; c < row.coeffs.size(); ++c) {
        if (!k.is_zero(row.coeffs[c])) terms.push_back({row.coeffs[c], E.matrix.columns[c]});
      }
      auto ref = std::make_shared<const LabeledPoly<K>>(
          LabeledPoly<K>{row.label, Polynomial<K>::from_sorted_terms(ring_, std::move(terms)), ++gen_});
      if (ref->poly.is_zero()) {
        ++stats_.zero_reductions;
      } else {
        for (const auto& Q : B_) {
          if (!Q->poly.is_zero()) add_pair(ref, Q);
        }
        fresh.push_back(ref);
      }
      emit("insert " + label_name(*ref) + " sig=" + to_string(ref->sig, ring_->variables) +
           " poly=" + to_string(ref->poly));
      B_.push_back(std::move(ref));
    }
    return fresh;
  }

  MatrixF5Result<K> run(const MatrixObserver<K>& observe = {}) {
    const auto start = std::chrono::steady_clock::now();
    MatrixF5Result<K> res;
    const MonomialOrder& ord = ring_->order;
    const K& k = ring_->field;
    for (std::uint64_t d = min_degree(); d <= cfg_.max_degree && has_pairs(); ++d) {
      for (unsigned pass = 1; has_pairs_up_to(d); ++pass) {
        MacaulayMatrix<K> M = build_matrix(d);
        if (M.empty()) continue;
        emit("matrix deg=" + std::to_string(d) + " pass=" + std::to_string(pass) +
             " rows=" + std::to_string(M.rows.size()) + " cols=" + std::to_string(M.columns.size()));
        if (observe) observe(d, pass, MatrixPhase::Pre, M);
        Elimination<K> E = one_way_eliminate(M, ord, k);
        if (observe) observe(d, pass, MatrixPhase::Post, E.matrix);
        stats_.reduction_steps += E.events.size();
        res.events.insert(res.events.end(), E.events.begin(), E.events.end());
        auto fresh = harvest(E);
        res.harvested.insert(res.harvested.end(), fresh.begin(), fresh.end());
      }
    }
    res.stabilized = !has_pairs();
    res.labeled = B_;
    for (const auto& F : B_) {
      if (!F->poly.is_zero()) res.basis.push_back(F->poly);
    }
    stats_.basis_size = res.basis.size();
    stats_.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    res.stats = stats_;
    return res;
  }

 private:
  void add_pair(const LabeledRef<K>& a, const LabeledRef<K>& b) {
    pairs_.push_back(make_ordered_pair(a, b, ring_->order, ordinal_++));
    ++stats_.pairs_created;
  }
  void emit(const std::string& line) const {
    if (cfg_.trace) cfg_.trace(line);
  }

  MatrixF5Config cfg_;
  RingPtr<K> ring_;
  LabeledSet<K> B_;
  std::vector<CriticalPair<K>> pairs_;
  RunStats stats_;
  std::uint64_t gen_ = 0;
  std::uint64_t ordinal_ = 0;
};

template <CoefficientField K>
MatrixF5Result<K> matrix_f5(const std::vector<Polynomial<K>>& inputs, MatrixF5Config cfg,
                            const std::type_identity_t<MatrixObserver<K>>& observe = {}) {
  return MatrixF5<K>(inputs, std::move(cfg)).run(observe);
}

}  // namespace f5b
