#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "f5b/f5b.hpp"
#include "f5b/strategy.hpp"
#include "support.hpp"

using namespace f5b;
using namespace f5b::testing;

namespace {

using QRef = LabeledRef<RationalField>;
using QSet = LabeledSet<RationalField>;

std::span<const QRef> view(const QSet& B) { return {B.data(), B.size()}; }

struct OneWay {
  // x*z^2 + y^2, x*y + x*z, y*z + z with P and Q as produced by the loop
  RingPtr<RationalField> r = q_ring({"x", "y", "z"});
  QRef F1 = labeled(r, "1", 1, "x*z^2 + y^2", 1);
  QRef F2 = labeled(r, "1", 2, "x*y + x*z", 2);
  QRef F3 = labeled(r, "1", 3, "y*z + z", 3);
  QRef P = labeled(r, "z", 2, "x*z^2 - x*z", 4);
  QRef Q = labeled(r, "1", 1, "y^2 + x*z", 5);
};

}  // namespace

TEST(Signature, OrderAndMultiplication) {
  auto r = q_ring({"x", "y", "z"});
  const MonomialOrder ord = r->order;
  EXPECT_TRUE(sig_cmp(sig(r, "y", 1), sig(r, "x", 2), ord) > 0);
  EXPECT_TRUE(sig_cmp(sig(r, "z", 2), sig(r, "x", 2), ord) < 0);
  EXPECT_TRUE(sig_cmp(sig(r, "x*y", 3), sig(r, "x*y", 3), ord) == 0);
  EXPECT_TRUE(sig_cmp(sig(r, "1", 1), sig(r, "x^5", 2), ord) > 0);
  EXPECT_EQ(mono(r, "x") * sig(r, "y", 1), sig(r, "x*y", 1));
  EXPECT_EQ(mono(r, "1") * sig(r, "y*z", 2), sig(r, "y*z", 2));
  EXPECT_EQ(to_string(mono(r, "z") * sig(r, "1", 2), r->variables), "z*e2");
  EXPECT_EQ(to_string(sig(r, "1", 1), r->variables), "e1");
}

TEST(CriticalPairs, Construction) {
  OneWay w;
  const auto p = make_pair(w.F2, w.F3);
  EXPECT_EQ(p.u, mono(w.r, "z"));
  EXPECT_EQ(p.v, mono(w.r, "x"));
  EXPECT_EQ(p.lcm, mono(w.r, "x*y*z"));
  EXPECT_EQ(p.degree, 3u);
  EXPECT_EQ(p.index(), 2u);

  auto r = q_ring({"x", "y", "z"});
  const auto F3 = labeled(r, "y", 1, "y^2 + x*z", 3);
  const auto F2 = labeled(r, "1", 2, "x*y - z", 2);
  const auto q = make_pair(F3, F2);
  EXPECT_EQ(q.u, mono(r, "x"));
  EXPECT_EQ(q.v, mono(r, "y"));
  EXPECT_EQ(q.lcm, mono(r, "x*y^2"));

  const auto self = make_pair(w.F1, w.F1);
  EXPECT_TRUE(self.u.is_one());
  EXPECT_TRUE(self.v.is_one());
  EXPECT_EQ(self.lcm, w.F1->poly.lpp());
  EXPECT_TRUE(is_signature_tie(self, r->order));

  // cofactor coefficients make both multiplied leading terms monic
  auto g = gf_ring(23, {"x", "y"});
  const auto A = labeled(g, "1", 1, "3*x^2 + y", 1);
  const auto B = labeled(g, "1", 2, "5*x*y + 1", 2);
  const auto c = make_pair(A, B);
  EXPECT_TRUE(g->field.is_one(g->field.mul(c.u_coeff, A->poly.lc())));
  EXPECT_TRUE(g->field.is_one(g->field.mul(c.v_coeff, B->poly.lc())));
  EXPECT_THROW(make_pair(A, labeled(g, "1", 3, "0", 3)), ZeroPolynomial);
}

TEST(CriticalPairs, OrderedPairPutsLargerSignatureFirst) {
  OneWay w;
  const auto p = make_ordered_pair(w.F3, w.F2, w.r->order);
  EXPECT_EQ(p.F, w.F2);
  EXPECT_EQ(p.u_sig(), sig(w.r, "z", 2));
  const auto q = make_ordered_pair(w.P, w.F1, w.r->order);
  EXPECT_EQ(q.F, w.F1);
}

TEST(CriticalPairs, LabeledSPolynomials) {
  auto r = q_ring({"x", "y", "z"});
  const auto F1 = labeled(r, "1", 1, "x^2 + y", 1);
  const auto F2 = labeled(r, "1", 2, "x*y - z", 2);
  const auto s = spoly_labeled(make_ordered_pair(F1, F2, r->order), 3, r->order);
  EXPECT_EQ(s.sig, sig(r, "y", 1));
  EXPECT_EQ(to_string(s.poly), "y^2 + x*z");
  EXPECT_EQ(s.gen, 3u);

  OneWay w;
  const auto P = spoly_labeled(make_ordered_pair(w.F2, w.F3, w.r->order), 4, w.r->order);
  EXPECT_EQ(P.sig, sig(w.r, "z", 2));
  EXPECT_EQ(to_string(P.poly), "x*z^2 - x*z");
  const auto Q = spoly_labeled(make_ordered_pair(w.F1, w.P, w.r->order), 5, w.r->order);
  EXPECT_EQ(Q.sig, sig(w.r, "1", 1));
  EXPECT_EQ(to_string(Q.poly), "y^2 + x*z");

  EXPECT_THROW(spoly_labeled(make_pair(F1, F1), 9, r->order), InputError);
}

TEST(Criteria, Divisibility) {
  auto r = q_ring({"x", "y", "z"});
  const auto F1 = labeled(r, "1", 1, "x^2 + y", 1);
  const auto F2 = labeled(r, "1", 2, "x*y - z", 2);
  const auto F3 = labeled(r, "y", 1, "y^2 + x*z", 3);
  const QSet B = {F1, F2, F3};
  EXPECT_TRUE(is_divisible(mono(r, "x"), *F3, view(B)));
  EXPECT_FALSE(is_divisible(mono(r, "1"), *F1, view(B)));
  EXPECT_TRUE(syzygy_criterion(make_ordered_pair(F3, F2, r->order), view(B)));
  EXPECT_FALSE(syzygy_criterion(make_ordered_pair(F1, F2, r->order), view(QSet{F1, F2})));
  // only larger indices count
  EXPECT_FALSE(is_divisible(mono(r, "x^2"), *F2, view(B)));

  OneWay w;
  const QSet B3 = {w.F1, w.F2, w.F3};
  EXPECT_FALSE(is_divisible(mono(w.r, "z"), *w.F2, view(B3)));
  EXPECT_FALSE(syzygy_criterion(make_ordered_pair(w.F2, w.F3, w.r->order), view(B3)));
}

TEST(Criteria, Rewriting) {
  auto r = q_ring({"x", "y"});
  const auto F1 = labeled(r, "1", 1, "x^2 + x*y", 1);
  const auto F2 = labeled(r, "1", 2, "x^2 + y", 2);
  const auto F3 = labeled(r, "1", 1, "x*y - y", 3);
  const QSet B = {F1, F2, F3};
  EXPECT_TRUE(is_rewritable(mono(r, "y"), *F1, view(B)));
  EXPECT_FALSE(is_rewritable(mono(r, "y"), *F1, view(QSet{F1})));
  EXPECT_FALSE(is_rewritable(mono(r, "y"), *F3, view(B)));
  EXPECT_TRUE(rewritten_criterion(make_ordered_pair(F1, F3, r->order), view(B)));
  EXPECT_FALSE(rewritten_criterion(make_ordered_pair(F1, F2, r->order), view(QSet{F1, F2})));

  OneWay w;
  const QSet B5 = {w.F1, w.F2, w.F3, w.P, w.Q};
  EXPECT_TRUE(rewritten_criterion(make_ordered_pair(w.F1, w.P, w.r->order), view(B5)));
  // zero-poly members still rewrite
  const auto Z = labeled(r, "x", 2, "0", 4);
  EXPECT_TRUE(is_rewritable(mono(r, "x*y"), *F2, view(QSet{F1, F2, Z})));
}

TEST(F5Reduction, SignatureConditionBlocksReducer) {
  OneWay w;
  const QSet B = {w.F1, w.F2, w.F3};
  EXPECT_FALSE(f5_reduce_step(*w.P, view(B), w.r->order).has_value());
  ReductionAudit audit;
  const auto out = f5_reduce(*w.P, view(B), w.r->order, {}, &audit);
  EXPECT_EQ(out.poly, w.P->poly);
  EXPECT_EQ(out.sig, w.P->sig);
  EXPECT_EQ(audit.steps, 0u);

  const auto alone = f5_reduce(*w.F1, view(QSet{}), w.r->order);
  EXPECT_EQ(alone.poly, w.F1->poly);

  // lpp(f6) = y*lpp(f5) but y*e1 > x*e2
  auto g = gf_ring(23, {"x", "y", "z"});
  const auto F5 = labeled(g, "1", 1, "y^2 + 12*x*z + 20*y*z + 18*z^2", 5);
  const auto F6 = labeled(g, "x", 2, "y^3 + 8*y^2*z + x*z^2 + 18*y*z^2 + 15*z^3", 6);
  const LabeledSet<PrimeField> G = {F5};
  EXPECT_FALSE(f5_reduce_step(*F6, std::span<const LabeledRef<PrimeField>>(G), g->order).has_value());
}

TEST(F5Reduction, ConditionsThreeAndFour) {
  auto g = gf_ring(23, {"x", "y", "z"});
  const auto G = labeled(g, "1", 3, "x^2 + 18*x*y + 19*y^2 + 8*x*z + 5*y*z + 7*z^2", 1);
  const auto F = labeled(g, "x", 2, "x^2*z + y*z^2", 7);
  LabeledSet<PrimeField> B = {G};
  auto span = [](const LabeledSet<PrimeField>& s) { return std::span<const LabeledRef<PrimeField>>(s); };
  auto r = f5_reduce_step(*F, span(B), g->order);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->G, G);
  EXPECT_EQ(r->multiplier, mono(g, "z"));
  EXPECT_TRUE(g->field.is_one(r->coeff));

  // a later element with signature z*e3 makes z*G rewritable
  const auto H = labeled(g, "z", 3, "y^3", 2);
  B.push_back(H);
  EXPECT_FALSE(f5_reduce_step(*F, span(B), g->order).has_value());
  EXPECT_TRUE(f5_reduce_step(*F, span(B), g->order, ReductionConfig{true}).has_value());
  EXPECT_TRUE(f5_reduce_step(*F, span(B), g->order, ReductionConfig{false, true, false}).has_value());

  // an index-4 element with lpp z makes z*G divisible
  // (R keeps D itself out: x^2*D is rewritable by R)
  const auto D = labeled(g, "1", 4, "z", 3);
  const auto R = labeled(g, "x", 4, "y^4", 8);
  const LabeledSet<PrimeField> BD = {G, D, R};
  EXPECT_FALSE(f5_reduce_step(*F, span(BD), g->order).has_value());
  const auto by_G = f5_reduce_step(*F, span(BD), g->order, ReductionConfig{false, false, true});
  ASSERT_TRUE(by_G.has_value());
  EXPECT_EQ(by_G->G, G);
}

TEST(F5Reduction, ChainReachesFixpointAndKeepsSignature) {
  auto g = gf_ring(7, {"x", "y", "z"});
  const auto G = labeled(g, "1", 2, "x*y - z", 2);
  const auto H = labeled(g, "1", 3, "y^2 - 1", 3);
  const auto F = labeled(g, "1", 1, "x^2*y^2", 4);
  const LabeledSet<PrimeField> B = {G, H};
  ReductionAudit audit;
  const auto out = f5_reduce(*F, std::span<const LabeledRef<PrimeField>>(B), g->order, {}, &audit);
  EXPECT_EQ(to_string(out.poly), "z^2");
  EXPECT_EQ(out.sig, F->sig);
  EXPECT_EQ(out.gen, F->gen);
  EXPECT_EQ(audit.calls, 1u);
  EXPECT_EQ(audit.steps, 2u);
  EXPECT_EQ(audit.signature_violations, 0u);
  EXPECT_EQ(audit.one_way_violations, 0u);
  EXPECT_FALSE(f5_reduce_step(out, std::span<const LabeledRef<PrimeField>>(B), g->order).has_value());
}

TEST(Strategy, SelectPair) {
  auto r = q_ring({"x", "y", "z"});
  const auto F1 = labeled(r, "1", 1, "x^2 + y", 1);
  const auto F2 = labeled(r, "1", 2, "x*y - z", 2);
  const auto F3 = labeled(r, "1", 3, "y^3 + z", 3);
  std::vector<CriticalPair<RationalField>> pairs = {
      make_ordered_pair(F1, F2, r->order, 0),  // index 1, degree 3
      make_ordered_pair(F2, F3, r->order, 1),  // index 2, degree 4
      make_ordered_pair(F1, F3, r->order, 2),  // index 1, degree 5
  };
  std::span<const CriticalPair<RationalField>> all(pairs);
  EXPECT_EQ(select_pair(all, Strategy::MinDegree), 0u);
  EXPECT_EQ(select_pair(all, Strategy::Incremental), 1u);
  EXPECT_EQ(select_pair(all.subspan(2), Strategy::Incremental), 0u);
  EXPECT_THROW(select_pair(all.subspan(3), Strategy::MinDegree), EmptySet);

  // equal degree: the oldest wins
  std::vector<CriticalPair<RationalField>> tied = {make_ordered_pair(F1, F2, r->order, 5),
                                                   make_ordered_pair(F1, F2, r->order, 4)};
  EXPECT_EQ(select_pair(std::span<const CriticalPair<RationalField>>(tied), Strategy::MinDegree), 1u);
  EXPECT_EQ(to_string(Strategy::Incremental), "incremental");
  EXPECT_EQ(to_string(Strategy::MinDegree), "mindeg");
}

TEST(Strategy, QueueAgreesWithSelectPair) {
  auto g = gf_ring(7, {"x", "y", "z"});
  std::mt19937_64 rng(5);
  const std::vector<std::string> monos = {"x^2", "x*y", "y^2", "x*z", "y*z", "z^2", "x^3", "y*z^2", "x"};
  LabeledSet<PrimeField> elems;
  for (std::uint64_t i = 0; i < 12; ++i) {
    elems.push_back(labeled(g, "1", 1 + rng() % 4, monos[rng() % monos.size()] + " + 1", i + 1));
  }
  for (auto strategy : {Strategy::Incremental, Strategy::MinDegree}) {
    std::vector<CriticalPair<PrimeField>> pending;
    PairQueue<PrimeField> queue(strategy);
    std::uint64_t ordinal = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        auto p = make_ordered_pair(elems[i], elems[j], g->order, ordinal++);
        pending.push_back(p);
        queue.push(p);
      }
    }
    while (!pending.empty()) {
      const auto at = select_pair(std::span<const CriticalPair<PrimeField>>(pending), strategy);
      const auto next = queue.pop();
      EXPECT_EQ(next.ordinal, pending[at].ordinal);
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(at));
    }
    EXPECT_TRUE(queue.empty());
    EXPECT_THROW(queue.pop(), EmptySet);
  }
}

TEST(F5B, SyzygyExample) {
  auto r = q_ring({"x", "y", "z"});
  const auto in = polys(r, {"x^2 + y", "x*y - z"});
  std::vector<std::string> trace;
  F5bConfig cfg;
  cfg.trace = [&](const std::string& l) { trace.push_back(l); };
  const auto res = f5b::f5b(in, cfg);
  EXPECT_GE(res.stats.rejected_syzygy, 1u);
  EXPECT_EQ(reduced(res.basis), reduced(buchberger(in)));
  EXPECT_NE(std::find(trace.begin(), trace.end(), "spoly F3 sig=y*e1 poly=y^2 + x*z"), trace.end());
  EXPECT_NE(std::find(trace.begin(), trace.end(), "reject syzygy [F3,F2]"), trace.end());
  EXPECT_EQ(res.audit.signature_violations, 0u);
}

TEST(F5B, RewrittenExample) {
  auto r = q_ring({"x", "y"});
  const auto in = polys(r, {"x^2 + x*y", "x^2 + y"});
  for (auto strategy : {Strategy::Incremental, Strategy::MinDegree}) {
    F5bConfig cfg;
    cfg.strategy = strategy;
    const auto res = f5b::f5b(in, cfg);
    EXPECT_GE(res.stats.rejected_rewritten, 1u);
    EXPECT_EQ(reduced(res.basis), reduced(buchberger(in)));
  }
}

TEST(F5B, SingleInputAndInputErrors) {
  auto r = q_ring({"x", "y"});
  const auto one = f5b::f5b(polys(r, {"x*y + 1"}));
  EXPECT_EQ(render(one.basis), (std::vector<std::string>{"x*y + 1"}));
  EXPECT_EQ(one.stats.pairs_created, 0u);
  EXPECT_EQ(one.stats.basis_size, 1u);
  EXPECT_EQ(one.stats.reduction_steps + one.stats.zero_reductions + one.stats.rejected_syzygy +
                one.stats.rejected_rewritten + one.stats.rejected_sig_tie,
            0u);

  EXPECT_THROW(f5b::f5b(std::vector<Polynomial<RationalField>>{}), InputError);
  EXPECT_THROW(f5b::f5b(std::vector<Polynomial<RationalField>>{poly(r, "x"), Polynomial<RationalField>(r)}),
               InputError);
  EXPECT_THROW(f5b::f5b(polys(r, {"x + y", "y + x"})), InputError);
}

TEST(F5B, SafeguardsRaiseDiagnostics) {
  auto r = q_ring({"x", "y", "z"});
  const auto in = polys(r, {"x^2 + y", "x*y - z"});
  F5bConfig capped;
  capped.degree_cap = 2;
  EXPECT_THROW(f5b::f5b(in, capped), DegreeCapExceeded);
  F5bConfig limited;
  limited.pair_limit = 1;
  limited.syzygy_criterion = false;
  EXPECT_THROW(f5b::f5b(in, limited), PairLimitExceeded);
}

TEST(F5B, CriteriaOffAndRelaxedStillAgree) {
  auto r = q_ring({"x", "y", "z"});
  const auto in = polys(r, {"x*z^2 + y^2", "x*y + x*z", "y*z + z"});
  const auto ref = reduced(buchberger(in));
  F5bConfig off;
  off.syzygy_criterion = off.rewritten_criterion = false;
  EXPECT_EQ(reduced(f5b::f5b(in, off).basis), ref);
  F5bConfig relaxed;
  relaxed.relaxed_reduction = true;
  EXPECT_EQ(reduced(f5b::f5b(in, relaxed).basis), ref);
  const auto on = f5b::f5b(in);
  EXPECT_LE(on.stats.pairs_created, f5b::f5b(in, off).stats.pairs_created);
}
