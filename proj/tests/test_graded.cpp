#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace lmweyl;
using oracle::in_span;
using oracle::numerators;
using oracle::span_rank;

namespace {

SubspaceSpec cusp() { return *catalog_spec("cusp"); }

const std::vector<Weight> kWeights{{1, 1}, {1, 2}, {2, 1}, {2, 3}};

}  // namespace

TEST(ModulePiece, CuspDegreeTwo) {
  GradedPiece p = module_piece(cusp(), {1, 1}, 2);
  EXPECT_EQ(p.kind, PieceKind::Module);
  ASSERT_EQ(p.dim(), 2u);
  // Frozen from the 6-unknown brute-force nullspace.
  EXPECT_EQ(oracle::brute_hom(trivial_spec(), cusp(), {1, 1}, 2).dim(), 2);
  std::vector<WeylEl> expected{parse_weyl("x^2"), parse_weyl("x*d - 1")};
  EXPECT_EQ(span_rank(numerators(p)), 2u);
  for (const auto& e : expected) EXPECT_TRUE(in_span(numerators(p), e)) << e.str();
  // Deterministic normalization returns exactly these two.
  EXPECT_EQ(p.basis[0].u, expected[0]);
  EXPECT_EQ(p.basis[1].u, expected[1]);
}

TEST(ModulePiece, CuspDegreeThree) {
  GradedPiece p = module_piece(cusp(), {1, 1}, 3);
  ASSERT_EQ(p.dim(), 5u);
  EXPECT_EQ(oracle::brute_hom(trivial_spec(), cusp(), {1, 1}, 3).dim(), 5);
  std::vector<WeylEl> expected{parse_weyl("1 - x*d"), parse_weyl("d - x*d^2"), parse_weyl("x^2"),
                               parse_weyl("x^3"), parse_weyl("x^2*d")};
  EXPECT_EQ(span_rank(expected), 5u);
  for (const auto& e : expected) EXPECT_TRUE(in_span(numerators(p), e)) << e.str();
}

TEST(ModulePiece, TrivialIsWholeFilteredPiece) {
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(static_cast<long>(module_piece(trivial_spec(), {1, 1}, k).dim()), dim_A({1, 1}, k));
}

TEST(HomPiece, CuspEndomorphismsDegreeTwo) {
  GradedPiece p = hom_piece(cusp(), cusp(), {1, 1}, 2);
  ASSERT_EQ(p.dim(), 4u);
  EXPECT_EQ(oracle::brute_hom(cusp(), cusp(), {1, 1}, 2).dim(), 4);
  EXPECT_EQ(p.g, Poly::monomial(1, 2));
  // d^2 - 2 x^{-1} d written as (x^2 d^2 + 2 x d - 2) x^{-2}.
  WeylEl u = parse_weyl("x^2*d^2 + 2*x*d - 2");
  EXPECT_TRUE(in_span(numerators(p), u));
  QFraction op{u, p.g};
  EXPECT_EQ(op.wdegree({1, 1}), 2);
  // Oracle: (d^2 - 2x^{-1} d) x^s = s(s-3) x^{s-2}, on the monomials of V.
  for (int s = 0; s <= 8; ++s) {
    if (s == 1) continue;
    RatFunc image = apply_ratfunc(u, RatFunc::reduce(Poly::monomial(1, s), p.g));
    ASSERT_TRUE(image.is_polynomial());
    EXPECT_EQ(image.numerator(), s >= 2 ? Poly::monomial(s * (s - 3), s - 2) : Poly{});
  }
}

TEST(HomPiece, CuspEndomorphismsDegreeOneAreScalars) {
  GradedPiece p = hom_piece(cusp(), cusp(), {1, 1}, 1);
  ASSERT_EQ(p.dim(), 1u);
  EXPECT_EQ(oracle::brute_hom(cusp(), cusp(), {1, 1}, 1).dim(), 1);
  // The identity is x^2 * x^{-2}.
  EXPECT_TRUE(in_span(numerators(p), parse_weyl("x^2")));
}

TEST(HomPiece, TrivialIsA) {
  for (int k = 0; k <= 8; ++k)
    EXPECT_EQ(static_cast<long>(hom_piece(trivial_spec(), trivial_spec(), {1, 1}, k).dim()), dim_A({1, 1}, k));
}

TEST(HomPiece, DimensionsMatchBruteForceOracle) {
  auto cat = catalog();
  for (const auto& v1 : cat)
    for (const auto& v2 : {cat[0], cat[1], cat[5], cat[6]})
      for (Weight w : {Weight{1, 1}, Weight{2, 3}})
        for (int k = -2; k <= 4; ++k)
          EXPECT_EQ(hom_dim(v1, v2, w, k), oracle::brute_hom(v1, v2, w, k).dim())
              << v1.name() << " -> " << v2.name() << " w=" << w.str() << " k=" << k;
}

TEST(HomPiece, RankDimensionAgreesWithBasis) {
  for (const auto& v : catalog())
    for (int k = 0; k <= 5; ++k) EXPECT_EQ(hom_dim(v, v, {1, 2}, k), static_cast<long>(hom_piece(v, v, {1, 2}, k).dim()));
}

TEST(GradedInvariants, VerificationByActionModulePieces) {
  for (const auto& v : catalog()) {
    int dmax = 0;
    for (const auto& g : v.groups()) dmax = std::max(dmax, g.max_order);
    for (Weight w : {Weight{1, 1}, Weight{2, 1}}) {
      const int k = 5;
      GradedPiece p = module_piece(v, w, k);
      int bmax = k / w.w2;
      for (const auto& q : p.basis) {
        EXPECT_LE(wdegree(q.u, w), k);
        for (int s = 0; s <= dmax + bmax + 3; ++s)
          EXPECT_TRUE(contains(v, apply_poly(q.u, Poly::monomial(1, s)))) << v.name() << " " << q.u.str();
      }
    }
  }
}

TEST(GradedInvariants, VerificationByActionHomPieces) {
  auto cat = catalog();
  for (const auto& v1 : cat)
    for (const auto& v2 : {cat[1], cat[5], cat[0]}) {
      GradedPiece p = hom_piece(v1, v2, {1, 1}, 4);
      std::vector<RatFunc> tests;
      for (const auto& b : v1.low_basis()) tests.push_back(RatFunc::reduce(b, p.g));
      for (int s = 0; s <= 6; ++s) tests.push_back(RatFunc::reduce(p.g.shift_up(s), p.g));
      for (const auto& q : p.basis) {
        EXPECT_LE(q.wdegree({1, 1}), 4);
        for (const auto& f : tests) {
          RatFunc img = apply_ratfunc(q.u, f);
          ASSERT_TRUE(img.is_polynomial()) << v1.name() << " " << q.u.str();
          EXPECT_TRUE(contains(v2, img.numerator()));
        }
      }
    }
}

TEST(GradedInvariants, EndomorphismsStartAtDegreeZero) {
  for (const auto& v : catalog())
    for (const auto& w : kWeights) {
      EXPECT_EQ(hom_dim(v, v, w, 0), 1) << v.name() << " " << w.str();
      for (int k = -3; k < 0; ++k) EXPECT_EQ(hom_dim(v, v, w, k), 0) << v.name() << " " << w.str();
    }
}

TEST(GradedInvariants, NestedAndNonDecreasing) {
  for (const auto& v : catalog()) {
    GradedPiece prev = endo_piece(v, {1, 1}, 0);
    for (int k = 1; k <= 5; ++k) {
      GradedPiece cur = endo_piece(v, {1, 1}, k);
      EXPECT_GE(cur.dim(), prev.dim());
      auto cur_u = numerators(cur);
      for (const auto& q : prev.basis) EXPECT_TRUE(in_span(cur_u, q.u)) << v.name() << " k=" << k;
      prev = std::move(cur);
    }
  }
}

TEST(GradedInvariants, DoubledWeightDoublesDegree) {
  for (const auto& v : catalog())
    for (int k = 0; k <= 5; ++k) {
      EXPECT_EQ(hom_dim(v, v, {1, 1}, k), hom_dim(v, v, {2, 2}, 2 * k)) << v.name();
      EXPECT_EQ(module_dim(v, {1, 1}, k), module_dim(v, {2, 2}, 2 * k)) << v.name();
    }
}

TEST(GrSymbolSpace, CuspDegreeTwo) {
  auto syms = gr_symbol_space(endo_piece(cusp(), {1, 1}, 2), endo_piece(cusp(), {1, 1}, 1));
  ASSERT_EQ(syms.size(), 3u);
  // Numerator forms live in degree 2 + deg g = 4 and span X^2 Y^2, X^3 Y, X^4.
  std::vector<WeylEl> as_elems;
  for (const auto& s : syms) {
    WeylEl e;
    for (const auto& [m, c] : s.terms()) {
      EXPECT_EQ(m.a + m.b, 4);
      e.add_term(c, m);
    }
    as_elems.push_back(e);
  }
  for (const char* t : {"x^2*d^2", "x^3*d", "x^4"}) EXPECT_TRUE(in_span(as_elems, parse_weyl(t))) << t;
}

TEST(GrSymbolSpace, TrivialDegreeOneAndDegreeZero) {
  auto t = trivial_spec();
  auto syms = gr_symbol_space(endo_piece(t, {1, 1}, 1), endo_piece(t, {1, 1}, 0));
  ASSERT_EQ(syms.size(), 2u);
  for (const auto& v : catalog()) {
    auto s0 = gr_symbol_space(endo_piece(v, {1, 1}, 0), endo_piece(v, {1, 1}, -1));
    ASSERT_EQ(s0.size(), 1u) << v.name();
    int dg = std::max(v.conductor().degree(), 0);
    EXPECT_EQ(s0[0].terms().size(), 1u);
    EXPECT_EQ(s0[0].coeff(dg, 0), 1) << v.name();
  }
}

TEST(GrSymbolSpace, RejectsMismatchedPieces) {
  auto c = cusp();
  EXPECT_THROW(gr_symbol_space(endo_piece(c, {1, 1}, 2), endo_piece(c, {1, 2}, 1)), std::invalid_argument);
  EXPECT_THROW(gr_symbol_space(endo_piece(c, {1, 1}, 2), endo_piece(trivial_spec(), {1, 1}, 1)),
               std::invalid_argument);
  EXPECT_THROW(gr_symbol_space(endo_piece(c, {1, 1}, 3), endo_piece(c, {1, 1}, 1)), std::invalid_argument);
}

TEST(GrInclusion, Examples) {
  EXPECT_TRUE(gr_inclusion_check(cusp(), {1, 1}, 2));
  EXPECT_TRUE(gr_inclusion_check(cusp(), {1, 2}, 3));
  for (const auto& w : kWeights)
    for (int k = 0; k <= 4; ++k) EXPECT_TRUE(gr_inclusion_check(trivial_spec(), w, k));
}

TEST(PieceJson, SerializesBasis) {
  auto j = piece_to_json(module_piece(cusp(), {1, 1}, 2));
  EXPECT_EQ(j["kind"], "module");
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["basis"][0], "x^2");
  auto h = piece_to_json(hom_piece(cusp(), cusp(), {1, 1}, 1));
  EXPECT_EQ(h["kind"], "hom");
  EXPECT_EQ(h["basis"][0]["g"], "x^2");
  EXPECT_EQ(parse_poly(h["basis"][0]["g"].get<std::string>()), Poly::monomial(1, 2));
}
