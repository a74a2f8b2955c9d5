#include <gtest/gtest.h>

#include <random>

#include "laistry/points/classify.hpp"
#include "laistry/points/sequence.hpp"
#include "laistry/points/system.hpp"
#include "laistry/points/verify.hpp"
#include "laistry/points/zeta.hpp"

using namespace laistry;

namespace {

FieldElem rnd(std::mt19937_64& rng, const QSpec& s, long lo = -20, long hi = 20) {
  std::uniform_int_distribution<long> num(lo, hi), den(1, 6);
  mpq_class v(num(rng), den(rng));
  v.canonicalize();
  return FieldElem(s, v);
}

QSpec random_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(2, 30), den(1, 7), sign(0, 1);
  for (;;) {
    mpq_class v(num(rng) * (sign(rng) ? 1 : -1), den(rng));
    v.canonicalize();
    if (v != 1 && v != -1) return QSpec::numeric(v);
  }
}

PointSequence constant_sequence(const AlgebraParams& p, const ProjPoint& pt, unsigned D) {
  return PointSequence{p, std::vector<ProjPoint>(D + 1, pt)};
}

}  // namespace

TEST(ProjPoint, Normalization) {
  const ProjPoint p(FieldElem(2), FieldElem(4), FieldElem(0));
  EXPECT_EQ(p.a(), FieldElem(1));
  EXPECT_EQ(p.b(), FieldElem(2));
  EXPECT_EQ(p, ProjPoint(FieldElem(1), FieldElem(2), FieldElem(0)));
  EXPECT_EQ(ProjPoint(FieldElem(0), FieldElem(-3), FieldElem(6)), ProjPoint(FieldElem(0), FieldElem(1), FieldElem(-2)));
  EXPECT_THROW(ProjPoint(FieldElem(0), FieldElem(0), FieldElem(0)), InvalidSpec);
  EXPECT_EQ(ProjPoint::parse("2:1/2:0", QSpec::generic()), ProjPoint(FieldElem(1), FieldElem(mpq_class(1, 4)), FieldElem(0)));
  EXPECT_THROW(ProjPoint::parse("1:0", QSpec::generic()), InvalidSpec);
}

TEST(Propagate, Examples) {
  const AlgebraParams p(1, QSpec::numeric(2));
  const auto s = propagate(ProjPoint(FieldElem(1), FieldElem(0), FieldElem(0)), p, 3);
  ASSERT_EQ(s.pts.size(), 4u);
  for (unsigned i = 0; i < 4; ++i)
    EXPECT_EQ(s.pts[i], ProjPoint(FieldElem(1), FieldElem(mpq_class(-static_cast<long>(i), 2)), FieldElem(0)));
  const FieldElem c(p.q, 5);
  const auto t = propagate(ProjPoint(FieldElem(0), FieldElem(1), c), p, 2);
  EXPECT_EQ(t.pts[1], ProjPoint(FieldElem(0), FieldElem(1), c / FieldElem(2)));
  EXPECT_EQ(t.pts[2], ProjPoint(FieldElem(0), FieldElem(1), c / FieldElem(4)));
  const ProjPoint z(FieldElem(0), FieldElem(0), FieldElem(1));
  for (const auto& pt : propagate(z, p, 6).pts) EXPECT_EQ(pt, z);
  EXPECT_THROW(propagate(ProjPoint(FieldElem(1), FieldElem(5), FieldElem(1)), p, 3), NotOnVariety);
}

TEST(Verify, Examples) {
  const AlgebraParams p1(1, QSpec::numeric(2));
  EXPECT_TRUE(verify_truncated(propagate(ProjPoint(FieldElem(1), FieldElem(0), FieldElem(0)), p1, 5)).passed());
  const AlgebraParams p3(1, QSpec::numeric(3));
  EXPECT_TRUE(verify_truncated(propagate(ProjPoint(FieldElem(0), FieldElem(1), FieldElem(1)), p3, 5)).passed());
  const ProjPoint one(FieldElem(0), FieldElem(1), FieldElem(1));
  const Report bad = verify_truncated(constant_sequence(p1, one, 5));
  EXPECT_FALSE(bad.passed());
  EXPECT_THROW(bad.enforce<RelationFailure>(), RelationFailure);
  EXPECT_THROW(verify_truncated(constant_sequence(p1, one, 2)), InvalidSpec);
}

TEST(Verify, PropagateRoundTrip) {
  std::mt19937_64 rng(21);
  for (unsigned G = 1; G <= 4; ++G)
    for (int t = 0; t < 10; ++t) {
      const AlgebraParams p(G, random_q(rng));
      const unsigned D = G + 4;
      const FieldElem x = rnd(rng, p.q);
      for (const ProjPoint& p0 : {ProjPoint(FieldElem(1), x, FieldElem(0)), ProjPoint(FieldElem(0), FieldElem(1), x),
                                  ProjPoint(FieldElem(0), FieldElem(0), FieldElem(1))}) {
        const Report r = verify_truncated(propagate(p0, p, D));
        EXPECT_TRUE(r.passed()) << G << " " << p0.to_string() << " " << r.first_failure()->name;
      }
    }
}

TEST(Verify, RootOfUnityAndGenericRoundTrip) {
  for (const auto& q : {QSpec::root_of_unity(3), QSpec::generic()}) {
    const AlgebraParams p(2, q);
    EXPECT_TRUE(verify_truncated(propagate(ProjPoint(FieldElem(0), FieldElem(1), FieldElem(7)), p, 6)).passed());
    EXPECT_TRUE(verify_truncated(propagate(ProjPoint(FieldElem(1), FieldElem(3), FieldElem(0)), p, 6)).passed());
  }
}

TEST(Verify, WordAndScalarArmsAgree) {
  // Random sequences (mostly failing) and perturbed valid ones: both arms
  // must give the same verdict per relation.
  std::mt19937_64 rng(22);
  for (unsigned G = 1; G <= 3; ++G)
    for (int t = 0; t < 12; ++t) {
      const AlgebraParams p(G, random_q(rng));
      const unsigned D = G + 4;
      PointSequence s;
      if (t % 2 == 0) {
        s = propagate(ProjPoint(FieldElem(0), FieldElem(1), rnd(rng, p.q, 1, 9)), p, D);
        std::vector<ProjPoint> pts = s.pts;
        const std::size_t k = static_cast<std::size_t>(t / 2) % (D + 1);
        pts[k] = ProjPoint(pts[k].a(), pts[k].b(), pts[k].c() + FieldElem(1));
        s.pts = pts;
      } else {
        s.params = p;
        for (unsigned i = 0; i <= D; ++i) s.pts.emplace_back(FieldElem(0), rnd(rng, p.q, 1, 9), rnd(rng, p.q));
      }
      const Report r = verify_truncated(s);
      std::map<std::string, bool> word_ok, scalar_ok;
      for (const auto& c : r.checks) {
        const bool is_word = c.name.rfind("word ", 0) == 0;
        std::string rel = c.name.substr(is_word ? 5 : 7);
        auto& m = is_word ? word_ok : scalar_ok;
        if (!m.count(rel)) m[rel] = true;
        m[rel] = m[rel] && c.pass;
      }
      for (const auto& [rel, ok] : scalar_ok) EXPECT_EQ(word_ok.at(rel), ok) << rel;
      EXPECT_FALSE(r.passed());
    }
}

TEST(Verify, NonzeroAOnlyEverywhereOrNowhere) {
  // Switching chart in the middle of a sequence breaks it.
  const AlgebraParams p(2, QSpec::numeric(5));
  auto s = propagate(ProjPoint(FieldElem(1), FieldElem(2), FieldElem(0)), p, 6);
  for (std::size_t k = 1; k <= 6; ++k) {
    auto bad = s;
    bad.pts[k] = ProjPoint(FieldElem(0), FieldElem(1), FieldElem(0));
    EXPECT_FALSE(verify_truncated(bad).passed()) << k;
  }
  auto t = propagate(ProjPoint(FieldElem(0), FieldElem(1), FieldElem(3)), p, 6);
  for (std::size_t k = 0; k <= 6; ++k) {
    auto bad = t;
    bad.pts[k] = ProjPoint(FieldElem(1), bad.pts[k].c(), FieldElem(0));
    EXPECT_FALSE(verify_truncated(bad).passed()) << k;
  }
  // In every passing sequence, a_0 = 0 iff some a_i = 0 iff all a_i = 0.
  std::mt19937_64 rng(23);
  for (int t2 = 0; t2 < 20; ++t2) {
    const ProjPoint p0 = t2 % 2 ? ProjPoint(FieldElem(1), rnd(rng, p.q), FieldElem(0))
                                : ProjPoint(FieldElem(0), FieldElem(1), rnd(rng, p.q));
    const auto seq = propagate(p0, p, 6);
    ASSERT_TRUE(verify_truncated(seq).passed());
    bool some = false, all = true;
    for (const auto& pt : seq.pts) {
      some = some || pt.a().is_zero();
      all = all && pt.a().is_zero();
    }
    EXPECT_EQ(seq.pts[0].a().is_zero(), some);
    EXPECT_EQ(some, all);
  }
}

TEST(Zeta, ClosedFormMatchesRecursion) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 10; ++t) {
    const QSpec s = random_q(rng);
    SequenceScalars<FieldElem> sc{{}, {}, {}, FieldElem::q(s)};
    for (int i = 0; i <= 8; ++i) {
      sc.a.push_back(FieldElem(s));
      sc.b.push_back(rnd(rng, s, 1, 15));
      sc.c.push_back(rnd(rng, s));
    }
    const ZetaTable zt(sc, 4);
    for (unsigned n = 0; n <= 4; ++n)
      for (std::size_t i = 0; i + n <= 8; ++i) EXPECT_EQ(zt.zeta(i, n), zt.beta(i, n) * zt.lambda(i, n));
  }
}

TEST(Zeta, SumOverBinomials) {
  // zeta_i^(n) = sum_k C(n,k) (-q)^k zeta_{i+k}^(0) prod_{h != k} b_{i+h}, symbolically.
  const FieldElem q = FieldElem::q(QSpec::generic());
  SequenceScalars<MultiPoly> s{{}, {}, {}, q};
  for (int i = 0; i <= 7; ++i) {
    s.a.emplace_back();
    s.b.push_back(MultiPoly::variable("b" + std::to_string(i)));
    s.c.push_back(MultiPoly::variable("c" + std::to_string(i)));
  }
  const ZetaTableT<MultiPoly> zt(s, 4);
  for (unsigned n = 0; n <= 4; ++n)
    for (std::size_t i = 0; i + n <= 7; ++i) {
      MultiPoly sum;
      for (unsigned k = 0; k <= n; ++k) {
        MultiPoly t(binomial(n, k) * (-q).pow(k));
        for (unsigned h = 0; h <= n; ++h)
          if (h != k) t = t * s.b[i + h];
        sum += t * s.c[i + k];
      }
      EXPECT_EQ(zt.zeta(i, n), sum) << i << " " << n;
    }
  // The same value from the expanded word acting on v_i.
  for (unsigned n = 1; n <= 3; ++n) EXPECT_EQ(act_on_v(z_via_x2_z0(q, n), 1, s), zt.zeta(1, n));
}

TEST(Zeta, Errors) {
  SequenceScalars<FieldElem> sc{{FieldElem(0), FieldElem(0)}, {FieldElem(0), FieldElem(1)}, {FieldElem(1), FieldElem(1)}, FieldElem(2)};
  const ZetaTable zt(sc, 3);
  EXPECT_THROW(zt.zeta(0, 2), IndexOutOfRange);
  EXPECT_THROW(zt.lambda(0, 0), DivisionByZero);
}

TEST(ChartA, ObstructionConstant) {
  for (unsigned G = 1; G <= 5; ++G) {
    const Report r = chart_a_obstruction(AlgebraParams(G, QSpec::generic()));
    EXPECT_TRUE(r.passed()) << G << " " << r.first_failure()->name;
  }
  EXPECT_TRUE(chart_a_obstruction(AlgebraParams(2, QSpec::numeric(7))).passed());
}

TEST(Classify, GhostOne) {
  const ClassifyResult r = classify_truncated(AlgebraParams(1, QSpec::numeric(2)), 5);
  EXPECT_TRUE(r.matches_variety);
  EXPECT_TRUE(r.guards.passed());
  for (const auto& f : r.families) EXPECT_TRUE(f.pending.empty()) << f.to_string() << " " << f.pending.front();
}

TEST(Classify, GhostTwo) {
  const ClassifyResult r = classify_truncated(AlgebraParams(2, QSpec::numeric(3)), 6);
  EXPECT_TRUE(r.matches_variety);
  for (const auto& f : r.families) EXPECT_TRUE(f.pending.empty()) << f.to_string() << " " << f.pending.front();
}

TEST(Classify, RandomQ) {
  std::mt19937_64 rng(25);
  for (const auto& [G, D] : std::vector<std::pair<unsigned, unsigned>>{{1, 5}, {2, 6}, {3, 7}})
    for (int t = 0; t < 5; ++t) {
      const QSpec q = random_q(rng);
      const ClassifyResult r = classify_truncated(AlgebraParams(G, q), D);
      EXPECT_TRUE(r.matches_variety) << G << " " << q.to_string();
    }
}

TEST(Classify, ShallowWindowMissesTheObstruction) {
  // With only G+1 points, x2_zG never applies and chart A keeps c0 free;
  // one more point forces c0 = 0.
  const AlgebraParams p(2, QSpec::numeric(3));
  ClassifyOptions opt;
  opt.allow_shallow = true;
  bool c0_free = false;
  for (const auto& f : classify_truncated(p, 2, opt).families)
    if (f.chart == Chart::A && !f.c0.is_zero()) c0_free = true;
  EXPECT_TRUE(c0_free);
  for (const auto& f : classify_truncated(p, 3, opt).families)
    if (f.chart == Chart::A) EXPECT_TRUE(f.c0.is_zero());
}

TEST(Classify, Preconditions) {
  EXPECT_THROW(classify_truncated(AlgebraParams(1, QSpec::numeric(2)), 3), InvalidSpec);
  EXPECT_THROW(classify_truncated(AlgebraParams(1, QSpec::root_of_unity(3)), 5), Unsupported);
  EXPECT_THROW(classify_truncated(AlgebraParams(1, QSpec::numeric(-1)), 5), Unsupported);
  // A root of unity of order beyond the window is allowed.
  EXPECT_NO_THROW(classify_truncated(AlgebraParams(1, QSpec::root_of_unity(7)), 5));
}

TEST(System, ClosedForm) {
  EXPECT_TRUE(system_check(1, 6, SystemMode::ClosedForm).passed());
  EXPECT_TRUE(system_check(2, 8, SystemMode::ClosedForm).passed());
  EXPECT_TRUE(system_check(3, 9, SystemMode::ClosedForm, 1, 1, QSpec::root_of_unity(5)).passed());
  EXPECT_THROW(system_check(2, 4, SystemMode::ClosedForm), InvalidSpec);
}

TEST(System, ZeroIsASolution) {
  const FieldElem q = FieldElem::q(QSpec::generic());
  for (const auto& eq : truncated_system(std::vector<MultiPoly>(8), 2, q)) EXPECT_TRUE(eq.poly.is_zero());
}

TEST(System, WrongRatioFails) {
  const FieldElem q = FieldElem::q(QSpec::generic());
  std::vector<MultiPoly> lam;
  for (int j = 0; j <= 6; ++j) lam.push_back(MultiPoly::variable("x").scaled(q.pow(j)));
  bool any = false;
  for (const auto& eq : truncated_system(lam, 1, q)) any = any || !eq.poly.is_zero();
  EXPECT_TRUE(any);
}

TEST(System, NumericUniqueness) {
  EXPECT_TRUE(system_check(1, 5, SystemMode::NumericUniqueness, 7).passed());
  const Report r2 = system_check(2, 8, SystemMode::NumericUniqueness, 8);
  EXPECT_TRUE(r2.passed()) << (r2.first_failure() ? r2.first_failure()->name + " " + r2.first_failure()->detail : "");
}

TEST(System, EliminationIdentities) {
  for (unsigned g = 1; g <= 5; ++g) {
    const Report r = elimination_identities(g);
    EXPECT_TRUE(r.passed()) << g << " " << r.first_failure()->name;
  }
  EXPECT_TRUE(elimination_identities(2, QSpec::numeric(mpq_class(3, 7))).passed());
}
