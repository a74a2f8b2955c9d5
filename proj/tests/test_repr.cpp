#include <gtest/gtest.h>

#include <random>

#include "laistry/repr/characters.hpp"
#include "laistry/repr/obstruction.hpp"
#include "laistry/repr/qp_modules.hpp"
#include "laistry/repr/rep.hpp"

using namespace laistry;

namespace {

FieldElem random_nonzero(std::mt19937_64& rng, const QSpec& spec) {
  std::uniform_int_distribution<long> num(1, 30), den(1, 7), sign(0, 1);
  return FieldElem(spec, mpq_class(num(rng) * (sign(rng) ? 1 : -1), den(rng)));
}

QSpec random_numeric_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(2, 50), den(1, 11), sign(0, 1);
  for (;;) {
    const mpq_class v(num(rng) * (sign(rng) ? 1 : -1), den(rng));
    if (v != 1 && v != -1) return QSpec::numeric(v);
  }
}

}  // namespace

TEST(QPModules, CyclicAtMinusOne) {
  const QSpec s = QSpec::root_of_unity(2);
  const QPRep m = build_qp_module(QPModuleSpec::cyclic(FieldElem(1), FieldElem(1), 2), s);
  EXPECT_EQ(m.X, Matrix::from_rows({{FieldElem(1), FieldElem(0)}, {FieldElem(0), FieldElem(-1)}}));
  EXPECT_EQ(m.Y, Matrix::from_rows({{FieldElem(0), FieldElem(1)}, {FieldElem(1), FieldElem(0)}}));
  EXPECT_TRUE(m.relation_holds());
}

TEST(QPModules, RelationHolds) {
  std::mt19937_64 rng(11);
  for (unsigned N = 2; N <= 6; ++N) {
    const QSpec s = QSpec::root_of_unity(N);
    for (int t = 0; t < 3; ++t) {
      const QPRep m = build_qp_module(QPModuleSpec::cyclic(random_nonzero(rng, s), random_nonzero(rng, s), N), s);
      EXPECT_TRUE(m.relation_holds());
      EXPECT_EQ(m.dim(), N);
    }
  }
  const QSpec s = random_numeric_q(rng);
  EXPECT_TRUE(build_qp_module(QPModuleSpec::char_x(FieldElem(3)), s).relation_holds());
  EXPECT_TRUE(build_qp_module(QPModuleSpec::char_y(FieldElem(3)), s).relation_holds());
}

TEST(QPModules, Errors) {
  EXPECT_THROW(build_qp_module(QPModuleSpec::char_x(FieldElem(0)), QSpec::numeric(2)), InvalidSpec);
  EXPECT_THROW(build_qp_module(QPModuleSpec::cyclic(FieldElem(1), FieldElem(1), 2), QSpec::numeric(2)), InvalidSpec);
  EXPECT_THROW(build_qp_module(QPModuleSpec::cyclic(FieldElem(1), FieldElem(1), 2), QSpec::generic()), InvalidSpec);
  EXPECT_THROW(build_qp_module(QPModuleSpec::cyclic(FieldElem(1), FieldElem(1), 3), QSpec::root_of_unity(2)), InvalidSpec);
  EXPECT_THROW(build_qp_module(QPModuleSpec::cyclic(FieldElem(1), FieldElem(0), 2), QSpec::root_of_unity(2)), InvalidSpec);
  EXPECT_NO_THROW(build_qp_module(QPModuleSpec::cyclic(FieldElem(1), FieldElem(1), 2), QSpec::numeric(-1)));
}

TEST(Pullback, CyclicPassesRepCheck) {
  const QSpec s = QSpec::root_of_unity(2);
  const MatrixRep rep = pullback(build_qp_module(QPModuleSpec::cyclic(FieldElem(1), FieldElem(1), 2), s), 1);
  const Report r = rep_check(rep);
  EXPECT_TRUE(r.passed());
  EXPECT_GE(r.checks.size(), 5u);
  EXPECT_TRUE(rep[X1].is_zero());
  EXPECT_TRUE(rep[z(1)].is_zero());
  EXPECT_TRUE(is_simple(rep));
}

TEST(Pullback, AllSimplesPassAndAreSimple) {
  std::mt19937_64 rng(12);
  for (unsigned G = 1; G <= 3; ++G)
    for (unsigned N = 2; N <= 5; ++N) {
      const QSpec s = QSpec::root_of_unity(N);
      const MatrixRep rep =
          pullback(build_qp_module(QPModuleSpec::cyclic(random_nonzero(rng, s), random_nonzero(rng, s), N), s), G);
      EXPECT_TRUE(rep_check(rep).passed()) << G << " " << N;
      EXPECT_TRUE(is_simple(rep));
      EXPECT_TRUE(rep[X1].is_zero());
      for (unsigned n = 1; n <= G; ++n) EXPECT_TRUE(rep[z(n)].is_zero());
      EXPECT_FALSE(rep[z(0)].determinant().is_zero());
      for (unsigned j = 1; j <= 4; ++j) EXPECT_TRUE(top_commutation_holds(rep, j));
    }
}

TEST(Pullback, Characters) {
  const QSpec s = QSpec::numeric(3);
  const FieldElem a(s, 7);
  const Character cy = Character::of(pullback(build_qp_module(QPModuleSpec::char_y(a), s), 2));
  EXPECT_TRUE(cy.alpha.is_zero());
  EXPECT_TRUE(cy.beta.is_zero());
  EXPECT_EQ(cy.gamma[0], a);
  EXPECT_TRUE(cy.gamma[1].is_zero() && cy.gamma[2].is_zero());
  const MatrixRep xr = pullback(build_qp_module(QPModuleSpec::char_x(a), s), 2);
  const Character cx = Character::of(xr);
  EXPECT_EQ(cx.beta, a);
  EXPECT_TRUE(cx.gamma[0].is_zero());
  EXPECT_TRUE(xr[z(0)].pow(1).is_zero());
}

TEST(RepCheck, Examples) {
  const AlgebraParams p(1, QSpec::numeric(2));
  EXPECT_TRUE(rep_check(zero_rep(p, 3)).passed());
  MatrixRep bad = zero_rep(p, 2);
  bad[X1] = Matrix::identity(2, FieldElem(p.q, 1));
  const Report r = rep_check(bad);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.first_failure()->name, "jordan");
  EXPECT_THROW(r.enforce<RelationFailure>(), RelationFailure);
}

TEST(RepCheck, TruncatedRegularRepresentation) {
  for (unsigned G = 1; G <= 2; ++G) {
    const Engine e(AlgebraParams(G, QSpec::numeric(mpq_class(3, 2))));
    const MatrixRep rep = truncated_regular_rep(e, 4);
    EXPECT_TRUE(rep_check(rep).passed()) << G;
    EXPECT_FALSE(rep[X1].is_zero());
    EXPECT_FALSE(rep[z(G)].is_zero());
    for (unsigned j = 1; j <= 4; ++j) EXPECT_TRUE(top_commutation_holds(rep, j));
    // A perturbed matrix breaks at least one relation.
    MatrixRep bad = rep;
    bad[X2](1, 0) += FieldElem(1);
    EXPECT_FALSE(rep_check(bad).passed());
  }
}

TEST(RepCheck, RootOfUnityRegularRepresentation) {
  const Engine e(AlgebraParams(2, QSpec::root_of_unity(3)));
  const MatrixRep rep = truncated_regular_rep(e, 3);
  EXPECT_TRUE(rep_check(rep).passed());
  for (unsigned j = 1; j <= 4; ++j) EXPECT_TRUE(top_commutation_holds(rep, j));
}

TEST(IsSimple, Examples) {
  const AlgebraParams p(1, QSpec::numeric(2));
  MatrixRep one = zero_rep(p, 1);
  EXPECT_TRUE(is_simple(one));
  MatrixRep split = zero_rep(p, 2);
  split[X2](0, 0) = FieldElem(1);
  split[X2](1, 1) = FieldElem(2);
  EXPECT_FALSE(is_simple(split));
  // Non-diagonal x2 falls back to the generated algebra.
  MatrixRep jordan = zero_rep(p, 2);
  jordan[X2](0, 1) = FieldElem(1);
  EXPECT_FALSE(is_simple(jordan));
  MatrixRep full = zero_rep(p, 2);
  full[X2](0, 1) = FieldElem(1);
  full[z(0)](1, 0) = FieldElem(1);
  EXPECT_TRUE(is_simple(full));
  EXPECT_THROW(is_simple(zero_rep(p, 0)), Unsupported);
  EXPECT_THROW(is_simple(zero_rep(p, 5)), Unsupported);
}

TEST(IsSimple, CyclicSubquotientsAreNotSimple) {
  // Direct sum of two cyclic modules: x2 has repeated eigenvalues unless the
  // a's differ, in which case the eigenvector test finds the summands.
  const QSpec s = QSpec::root_of_unity(2);
  const QPRep m1 = build_qp_module(QPModuleSpec::cyclic(FieldElem(1), FieldElem(1), 2), s);
  const QPRep m2 = build_qp_module(QPModuleSpec::cyclic(FieldElem(3), FieldElem(5), 2), s);
  MatrixRep sum = zero_rep(AlgebraParams(1, s), 4);
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j) {
      sum[X2](i, j) = m1.X(i, j);
      sum[z(0)](i, j) = m1.Y(i, j);
      sum[X2](i + 2, j + 2) = m2.X(i, j);
      sum[z(0)](i + 2, j + 2) = m2.Y(i, j);
    }
  EXPECT_TRUE(rep_check(sum).passed());
  EXPECT_FALSE(is_simple(sum));
}

TEST(Invariants, DeterminantsSeparateClasses) {
  std::mt19937_64 rng(13);
  for (unsigned N = 2; N <= 5; ++N) {
    const QSpec s = QSpec::root_of_unity(N);
    const FieldElem q = FieldElem::q(s);
    for (int t = 0; t < 4; ++t) {
      const FieldElem a = random_nonzero(rng, s), b = random_nonzero(rng, s);
      const MatrixRep rep = pullback(build_qp_module(QPModuleSpec::cyclic(a, b, N), s), 1);
      const CyclicInvariants inv = cyclic_invariants(rep);
      const FieldElem sign(N % 2 == 1 ? 1 : -1);
      EXPECT_EQ(inv.det_x2, sign * a.pow(N));
      EXPECT_EQ(inv.det_x2, a.pow(N) * q.pow(N * (N - 1) / 2));
      EXPECT_EQ(inv.det_z0, sign * b);
      EXPECT_EQ(std::make_pair(inv.a_power, inv.b), cyclic_class(a, b, s));
      // Rotating a by q gives an isomorphic module with the same invariants.
      const MatrixRep rot = pullback(build_qp_module(QPModuleSpec::cyclic(a * q, b, N), s), 1);
      EXPECT_EQ(cyclic_class(a * q, b, s), cyclic_class(a, b, s));
      // Intertwiner: columns f_i = e_{i+1} (i < N), f_N = b e_1.
      Matrix T(N, N, FieldElem(s));
      for (unsigned i = 0; i + 1 < N; ++i) T(i + 1, i) = FieldElem(s, 1);
      T(0, N - 1) = b;
      EXPECT_EQ(rep[X2] * T, T * rot[X2]);
      EXPECT_EQ(rep[z(0)] * T, T * rot[z(0)]);
      // Changing b or the N-th power of a changes the class.
      EXPECT_NE(cyclic_class(a, b + FieldElem(1), s), cyclic_class(a, b, s));
      EXPECT_NE(cyclic_class(a * FieldElem(2), b, s), cyclic_class(a, b, s));
    }
  }
}

TEST(Characters, SystemMatchesHandWrittenEquations) {
  const Engine e(AlgebraParams(2, QSpec::generic()));
  const auto sys = character_system(e);
  const FieldElem q = e.q();
  const MultiPoly al = MultiPoly::variable("alpha"), be = MultiPoly::variable("beta");
  const MultiPoly g0 = MultiPoly::variable("gamma0"), g1 = MultiPoly::variable("gamma1"),
                  g2 = MultiPoly::variable("gamma2");
  const FieldElem one(1);
  std::vector<MultiPoly> expected{
      (al * al).scaled(FieldElem(mpq_class(1, 2))),
      (al * g0).scaled(one - q),
      (g0 * g1).scaled(one - q.inverse()),
      (g1 * g2).scaled(one - q.inverse()),
      (be * g0).scaled(one - q) - g1,
      (be * g1).scaled(one - q) - g2,
      (be * g2).scaled(one - q),
  };
  ASSERT_EQ(sys.size(), expected.size());
  for (const auto& m : expected) {
    bool found = false;
    for (const auto& c : sys) found = found || c.poly == m || c.poly == -m;
    EXPECT_TRUE(found) << m.to_string();
  }
}

TEST(Characters, NumericTwoGhostTwo) {
  const auto cases = solve_characters(AlgebraParams(2, QSpec::numeric(2)));
  ASSERT_EQ(cases.size(), 1u);
  const auto& fams = cases[0].families;
  ASSERT_EQ(fams.size(), 2u);
  EXPECT_TRUE(cases[0].unresolved.empty());
  const QSpec s = QSpec::numeric(2);
  const Character cx = Character::of(pullback(build_qp_module(QPModuleSpec::char_x(FieldElem(5)), s), 2));
  const Character cy = Character::of(pullback(build_qp_module(QPModuleSpec::char_y(FieldElem(5)), s), 2));
  for (const auto& f : fams) {
    ASSERT_EQ(f.free.size(), 1u);
    EXPECT_TRUE(f.values.at("alpha").is_zero());
    EXPECT_TRUE(f.free[0] == "beta" || f.free[0] == "gamma0");
    EXPECT_EQ(f.contains(cx), f.free[0] == "beta");
    EXPECT_EQ(f.contains(cy), f.free[0] == "gamma0");
  }
}

TEST(Characters, QEqualsOne) {
  const auto cases = solve_characters(AlgebraParams(1, QSpec::numeric(1)));
  ASSERT_EQ(cases.size(), 1u);
  EXPECT_EQ(cases[0].label, "q = 1");
  ASSERT_EQ(cases[0].families.size(), 1u);
  const auto& f = cases[0].families[0];
  EXPECT_EQ(f.free, (std::vector<std::string>{"beta", "gamma0"}));
  EXPECT_TRUE(f.values.at("alpha").is_zero());
  EXPECT_TRUE(f.values.at("gamma1").is_zero());
}

TEST(Characters, GenericSplitsIntoCases) {
  for (unsigned G = 1; G <= 4; ++G) {
    const auto cases = solve_characters(AlgebraParams(G, QSpec::generic()));
    ASSERT_EQ(cases.size(), 2u);
    EXPECT_EQ(cases[0].label, "q != 1");
    EXPECT_EQ(cases[0].families.size(), 2u);
    EXPECT_EQ(cases[1].families.size(), 1u);
    EXPECT_EQ(cases[1].families[0].free.size(), 2u);
    for (const auto& c : cases)
      for (const auto& f : c.families) EXPECT_TRUE(f.values.at("alpha").is_zero());
  }
}

TEST(Characters, OracleAgreesWithPullbacks) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 20; ++t) {
    const QSpec s = random_numeric_q(rng);
    const unsigned G = 1 + static_cast<unsigned>(t % 4);
    const AlgebraParams p(G, s);
    const auto cases = solve_characters(p);
    ASSERT_EQ(cases.size(), 1u);
    ASSERT_EQ(cases[0].families.size(), 2u);
    for (const auto& f : cases[0].families) {
      ASSERT_EQ(f.free.size(), 1u);
      const FieldElem a = random_nonzero(rng, s);
      const QPModuleSpec ms = f.free[0] == "beta" ? QPModuleSpec::char_x(a) : QPModuleSpec::char_y(a);
      const MatrixRep rep = pullback(build_qp_module(ms, s), G);
      EXPECT_TRUE(f.contains(Character::of(rep)));
      // A point of the family is a representation.
      std::map<std::string, MultiPoly> pt{{f.free[0], MultiPoly(a)}};
      Character c{FieldElem(s), FieldElem(s), std::vector<FieldElem>(G + 1, FieldElem(s))};
      auto val = [&](const std::string& v) {
        const MultiPoly m = f.values.count(v) ? f.values.at(v).substitute(pt) : MultiPoly(a);
        return m.constant_term();
      };
      c.alpha = val("alpha");
      c.beta = val("beta");
      for (unsigned n = 0; n <= G; ++n) c.gamma[n] = val("gamma" + std::to_string(n));
      EXPECT_TRUE(rep_check(c.to_rep(p)).passed());
      EXPECT_EQ(Character::of(rep).beta, c.beta);
      EXPECT_EQ(Character::of(rep).gamma[0], c.gamma[0]);
    }
  }
}

TEST(Characters, RootOfUnity) {
  const auto cases = solve_characters(AlgebraParams(2, QSpec::root_of_unity(4)));
  ASSERT_EQ(cases.size(), 1u);
  EXPECT_EQ(cases[0].families.size(), 2u);
}

TEST(Obstruction, TopInvertibleCandidatesFail) {
  for (unsigned N = 2; N <= 3; ++N)
    for (unsigned l = 1; l <= 2; ++l) {
      const Report r = top_invertible_obstruction(N, l, 100 + N * 10 + l);
      EXPECT_TRUE(r.passed()) << r.suite << " " << (r.first_failure() ? r.first_failure()->name : "");
    }
}

TEST(Obstruction, LambdaZeroCloses) {
  // With lambda = 0 the closing condition is B_1 A = A B_1, met by A = B_1 = I.
  const QSpec s = QSpec::root_of_unity(3);
  const Matrix I = Matrix::identity(2, FieldElem(s, 1));
  const TopInvertibleCandidate c = top_invertible_candidate(3, 2, FieldElem(0), I, I);
  EXPECT_TRUE(c.closing_residual().is_zero());
  EXPECT_TRUE(rep_check(c.rep).passed());
}
