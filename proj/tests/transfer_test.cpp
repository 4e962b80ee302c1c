#include <gtest/gtest.h>

#include "rinfty/errors.hpp"
#include "rinfty/transfer.hpp"
#include "support.hpp"

namespace rinfty {
namespace {

using test::in;
using test::load;
using test::out;

struct Prepared {
  AlgebraSpec spec;
  SchoutenAlg s;
};

Prepared prepare(const std::string& name, TruncationPolicy policy = {}) {
  AlgebraSpec spec = load(name);
  spec.algebra.certify(policy);
  SchoutenAlg s = schouten_extend(spec.algebra, policy);
  return {std::move(spec), std::move(s)};
}

TEST(NMap, SlotsFromGenerators) {
  auto b = make_basis({{"x", 0}, {"y", 0}});
  auto single = n_map(in(b, {"x"}));
  ASSERT_EQ(single.size(), 1u);
  ASSERT_EQ(single[0].slots.size(), 1u);
  EXPECT_EQ(single[0].slots[0], out(b, {"x"}));

  auto unit = n_map(Elem::unit(b, Shift::inputs()));
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_TRUE(unit[0].slots.empty());

  auto pair = n_map(in(b, {"x", "y"}));
  ASSERT_EQ(pair.size(), 1u);
  EXPECT_EQ(pair[0].coefficient, 1);
  ASSERT_EQ(pair[0].slots.size(), 2u);
  EXPECT_EQ(pair[0].slots[1], out(b, {"y"}));
  EXPECT_THROW(n_map(out(b, {"x"})), InvalidInput);
}

TEST(CanonicalPhi, ZeroAndAbelian) {
  auto [spec, s] = prepare("two_dim");
  const Elem zeros[2] = {Elem(s.basis(), Shift::outputs()), out(s.basis(), {"x"})};
  EXPECT_TRUE(canonical_phi(zeros, s, {}).map.is_zero());

  auto [ab, sa] = prepare("abelian1");
  const Elem xs[1] = {out(sa.basis(), {"x"})};
  EXPECT_TRUE(canonical_phi(xs, sa, {}).map.is_zero());
}

TEST(CanonicalPhi, DegreeAndCertification) {
  auto [spec, s] = prepare("l3");
  const auto& b = s.basis();
  const Elem xs[2] = {out(b, {"a", "b"}), out(b, {"c"})};
  const PhiValue v = canonical_phi(xs, s, {});
  EXPECT_TRUE(v.certified);
  EXPECT_TRUE(v.diagnostics.empty());
  EXPECT_EQ(v.map.degree(), 1 + 0 + (-1));
  CheckReport degrees;
  check_entry_degrees(v.map, v.map.degree(), "phi", degrees);
  EXPECT_TRUE(degrees.passed());

  TruncationPolicy tight;
  tight.max_arity = 2;
  const PhiValue capped = canonical_phi(std::span(xs, 2), s, tight);
  EXPECT_FALSE(capped.certified);
  EXPECT_FALSE(capped.diagnostics.empty());
}

TEST(GeneralizedMc, ClassicalAndTrivial) {
  auto [spec, s] = prepare("two_dim");
  EXPECT_TRUE(check_generalized_mc(*spec.rmatrix, s).passed());
  EXPECT_TRUE(check_generalized_mc(RMatrix(3), s).passed());

  RMatrix curved(3);
  curved.set(0, out(s.basis(), {"x", "y"}));
  EXPECT_THROW(check_generalized_mc(curved, s), InvalidInput);
  RMatrix wrong(3);
  wrong.set(1, out(s.basis(), {"x"}));
  EXPECT_THROW(check_generalized_mc(wrong, s), InvalidInput);
}

TEST(GeneralizedMc, ClassicalYangBaxter) {
  auto [spec, s] = prepare("heisenberg");
  const auto& b = s.basis();
  RMatrix bad(1);
  bad.set(1, out(b, {"x", "y"}));
  EXPECT_FALSE(check_generalized_mc(bad, s).passed());
  RMatrix good(1);
  good.set(1, out(b, {"y", "z"}));
  EXPECT_TRUE(check_generalized_mc(good, s).passed());
}

TEST(GeneralizedMc, DgWitnessAtFirstOrder) {
  auto [broken, s] = prepare("dg_broken");
  const CheckReport r = check_generalized_mc(*broken.rmatrix, s);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.failures.front().where.rfind("lambda^1", 0), 0u);

  auto [fixed, s2] = prepare("dg");
  EXPECT_TRUE(check_generalized_mc(*fixed.rmatrix, s2).passed());
  auto [l3, s3] = prepare("l3");
  EXPECT_TRUE(check_generalized_mc(*l3.rmatrix, s3).passed());
}

TEST(LInftyMorphism, Fixtures) {
  for (const char* name : {"abelian1", "two_dim", "heisenberg", "sl2", "so3", "solvable3", "dg_minimal", "dg", "l3"}) {
    auto [spec, s] = prepare(name);
    const CheckReport r = check_linfty_morphism(s, {});
    EXPECT_TRUE(r.passed()) << name << ": " << (r.failures.empty() ? "" : r.failures.front().where);
    EXPECT_GT(r.cases, 0u);
  }
}

TEST(LInftyMorphism, WiderCapsOnTernaryAlgebra) {
  TruncationPolicy wide;
  wide.max_arity = 5;
  wide.max_weight = 5;
  auto [spec, s] = prepare("l3", wide);
  EXPECT_TRUE(check_linfty_morphism(s, wide).passed());
}

TEST(Transfer, TwoDimensionalCobracket) {
  auto [spec, s] = prepare("two_dim");
  const BialgebraStructure t = transfer(*spec.rmatrix, s, {});
  const auto& b = s.basis();
  const PolyMap* delta = t.mu.at(1);
  ASSERT_NE(delta, nullptr);
  EXPECT_EQ(delta->evaluate(Word{*b->rank_of("x")}), out(b, {"x", "y"}));
  EXPECT_TRUE(delta->evaluate(Word{*b->rank_of("y")}).is_zero());
  EXPECT_EQ(t.mu.coefficients().size(), 2u);
  EXPECT_TRUE(t.classical_mode);
  EXPECT_TRUE(t.mc.passed());
  EXPECT_TRUE(t.mc_deformed.passed());
  EXPECT_TRUE(t.degrees.passed());
  EXPECT_TRUE(big_bracket(*delta, *delta).is_zero());
}

TEST(Transfer, ZeroRGivesTheAlgebra) {
  auto [spec, s] = prepare("dg");
  const BialgebraStructure t = transfer(RMatrix(3), s, {});
  ASSERT_EQ(t.mu.coefficients().size(), 1u);
  EXPECT_EQ(*t.mu.at(0), spec.algebra.brackets());
  EXPECT_TRUE(t.mc.passed());
}

TEST(Transfer, DgSupportShape) {
  auto [spec, s] = prepare("dg");
  const BialgebraStructure t = transfer(*spec.rmatrix, s, {});
  std::set<std::pair<int, int>> support;
  for (const auto& [q, m] : t.mu.coefficients())
    for (auto mn : m.support()) support.insert(mn);
  for (auto [m, n] : support) EXPECT_TRUE((m == 1 && n >= 1) || (m == 2 && n == 1)) << m << "," << n;
  EXPECT_TRUE(support.count({1, 2}));
  EXPECT_TRUE(t.mc.passed());
  EXPECT_EQ(t.mu.at(1)->evaluate(Word{*s.basis()->rank_of("x")}), out(s.basis(), {"y", "z"}));
}

TEST(Transfer, RejectsNonSolutions) {
  auto [spec, s] = prepare("dg_broken");
  try {
    transfer(*spec.rmatrix, s, {});
    FAIL() << "expected rejection";
  } catch (const TransferRejected& e) {
    EXPECT_FALSE(e.report().passed());
  }
}

TEST(Transfer, ClassicalCollapse) {
  for (const char* name : {"two_dim", "sl2", "solvable3", "heisenberg"}) {
    auto [spec, s] = prepare(name);
    const BialgebraStructure t = transfer(*spec.rmatrix, s, {});
    PolyMap expected = ce_differential(spec.algebra, *spec.rmatrix->at(1), {});
    const PolyMap* got = t.mu.at(1);
    if (expected.is_zero()) {
      EXPECT_EQ(got, nullptr) << name;
    } else {
      ASSERT_NE(got, nullptr) << name;
      EXPECT_EQ(*got, expected) << name;
    }
    for (int q = 2; q <= 3; ++q) EXPECT_EQ(t.mu.at(q), nullptr) << name;
  }
}

TEST(Transfer, MorphismAndMceImplyMc) {
  for (const char* name : {"two_dim", "heisenberg", "sl2", "solvable3", "dg", "l3"}) {
    auto [spec, s] = prepare(name);
    const bool morphism = check_linfty_morphism(s, {}).passed();
    const bool mce = check_generalized_mc(*spec.rmatrix, s).passed();
    ASSERT_TRUE(morphism && mce) << name;
    const BialgebraStructure t = transfer(*spec.rmatrix, s, {});
    EXPECT_TRUE(t.mc.passed()) << name;
    EXPECT_EQ(is_mc(t.mu, {}).passed(), t.mc.passed());
    EXPECT_EQ(t.mc.passed(), t.mc_deformed.passed()) << name;
    EXPECT_TRUE(t.degrees.passed()) << name;
  }
}

TEST(Transfer, LambdaOrderBookkeeping) {
  auto [spec, s] = prepare("l3");
  RMatrix extended = *spec.rmatrix;
  RMatrix wider(3);
  for (const auto& [q, c] : extended.coefficients()) wider.set(q, c);
  // a third-order term only affects mu at lambda^3 and above
  wider.set(3, out(s.basis(), {"t", "b", "c"}));
  if (!check_generalized_mc(wider, s).passed()) GTEST_SKIP() << "third-order variant is not a solution";
  const BialgebraStructure a = transfer(extended, s, {});
  const BialgebraStructure c = transfer(wider, s, {});
  for (int q = 0; q <= 2; ++q) {
    ASSERT_EQ(a.mu.at(q) == nullptr, c.mu.at(q) == nullptr) << q;
    if (a.mu.at(q)) {
      EXPECT_EQ(*a.mu.at(q), *c.mu.at(q)) << q;
    }
  }
}

TEST(Transfer, SeriesMcDetectsCorruption) {
  // H^1(sl2, sl2 ^ sl2) = 0 and no ad-coboundary is supported on e alone
  auto [spec, s] = prepare("sl2");
  const auto& b = s.basis();
  BialgebraStructure t = transfer(*spec.rmatrix, s, {});
  LambdaSeries<PolyMap> bad = t.mu;
  PolyMap delta = *bad.at(1);
  delta.add(Word{*b->rank_of("e")}, out(b, {"h", "f"}));
  bad.set(1, delta);
  const CheckReport r = is_mc(bad, {});
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.failures.front().where.rfind("lambda^1", 0), 0u) << r.failures.front().where;
}

}  // namespace
}  // namespace rinfty
