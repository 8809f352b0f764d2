#include <gtest/gtest.h>

#include <vector>

#include "hasse/fgl.hpp"
#include "hasse/hsd.hpp"
#include "hasse/poly_ops.hpp"
#include "support.hpp"

using namespace hasse;
using hasse::test::P;

namespace {

// Pascal's triangle mod p.
std::vector<std::vector<unsigned>> pascal(unsigned n, unsigned p) {
  std::vector<std::vector<unsigned>> c(n + 1, std::vector<unsigned>(n + 1, 0));
  for (unsigned a = 0; a <= n; ++a) {
    c[a][0] = 1 % p;
    for (unsigned b = 1; b <= a; ++b) c[a][b] = (c[a - 1][b - 1] + c[a - 1][b]) % p;
  }
  return c;
}

IterativityConstants binomial_oracle(const MultiIndex& i, const MultiIndex& j, unsigned p,
                                     const std::vector<std::vector<unsigned>>& c) {
  unsigned v = 1;
  for (std::size_t k = 0; k < i.size(); ++k) v = v * c[i[k] + j[k]][i[k]] % p;
  IterativityConstants out;
  if (v) out[i + j] = v;
  return out;
}

// Coefficient of X̄^i Ȳ^j in the untruncated product F_1^{l_1}···F_e^{l_e}.
IterativityConstants full_expansion_oracle(const FormalGroupLaw& law, const MultiIndex& i, const MultiIndex& j) {
  const std::size_t e = i.size();
  const Monomial target = Monomial::from_index(Block::X, i) * Monomial::from_index(Block::Y, j);
  IterativityConstants out;
  for (const auto& l : indices_up_to_total(e, static_cast<unsigned>(i.total() + j.total()))) {
    FpPoly prod = FpPoly::constant(law.field(), 1);
    for (std::size_t k = 0; k < e; ++k) prod *= law.component(static_cast<unsigned>(k + 1)).pow(l[k]);
    if (const auto c = prod.coefficient(target)) out[l] = c;
  }
  return out;
}

}  // namespace

TEST(MakeFgl, BuiltIns) {
  const auto ga = make_fgl(LawKind::additive, Params(3, 2));
  EXPECT_EQ(ga.components(), (std::vector<FpPoly>{P("X1 + Y1", 3), P("X2 + Y2", 3)}));
  const auto w = make_fgl(LawKind::witt, Params(2, 2));
  EXPECT_EQ(w.components(), (std::vector<FpPoly>{P("X1 + Y1", 2), P("X2 + Y2 + X1*Y1", 2)}));
  const auto gm = make_fgl(LawKind::multiplicative, Params(2, 1));
  EXPECT_EQ(gm.component(1), P("X1 + Y1 + X1*Y1", 2, 1));
  EXPECT_THROW(make_fgl(LawKind::multiplicative, Params(2, 2)), std::invalid_argument);
  EXPECT_EQ(parse_law_kind("ga"), LawKind::additive);
  EXPECT_EQ(to_string(LawKind::multiplicative), "gm");
  EXPECT_THROW(parse_law_kind("ring"), std::invalid_argument);
}

TEST(FglAxioms, BuiltInsPassAndCorruptionIsCaught) {
  EXPECT_TRUE(fgl_axiom_check(make_fgl(LawKind::witt, Params(3, 2))).all_pass());
  EXPECT_TRUE(fgl_axiom_check(make_fgl(LawKind::additive, Params(2, 3))).all_pass());
  EXPECT_TRUE(fgl_axiom_check(make_fgl(LawKind::multiplicative, Params(5, 1))).all_pass());
  const Params params(2, 2);
  const FormalGroupLaw bad(params, LawKind::custom, {P("X1 + Y1 + 1", 2), P("X2 + Y2", 2)});
  const auto report = fgl_axiom_check(bad);
  EXPECT_FALSE(report.left_unit);
  EXPECT_FALSE(report.all_pass());
  const FormalGroupLaw skew(params, LawKind::custom, {P("X1 + Y1", 2), P("X2 + Y2 + X1^2*Y1", 2)});
  EXPECT_FALSE(fgl_axiom_check(skew).commutative);
}

TEST(MultByN, Examples) {
  const Params params(2, 2);
  const auto w = make_fgl(LawKind::witt, params);
  EXPECT_EQ(mult_by_N(w, 1), (std::vector<FpPoly>{P("X1", 2), P("X2", 2)}));
  EXPECT_EQ(mult_by_N(w, 2), (std::vector<FpPoly>{P("0", 2), P("X1^2", 2)}));
  for (unsigned p : {2u, 3u, 5u}) {
    const auto ga = make_fgl(LawKind::additive, Params(p, 3));
    for (const auto& c : mult_by_N(ga, p)) EXPECT_TRUE(c.is_zero());
  }
  EXPECT_THROW(mult_by_N(w, 0), std::invalid_argument);
}

TEST(MultByN, AdditiveInN) {
  for (unsigned p : {2u, 3u}) {
    const auto law = make_fgl(LawKind::witt, Params(p, 3));
    std::vector<std::vector<FpPoly>> m(7);
    for (unsigned n = 1; n <= 6; ++n) m[n] = mult_by_N(law, n);
    for (unsigned n = 1; n <= 5; ++n)
      for (unsigned k = 1; n + k <= 6; ++k) EXPECT_EQ(law.apply(m[n], m[k]), m[n + k]) << n << "+" << k;
  }
}

TEST(Iterativity, AdditiveTablesAreBinomialProducts) {
  for (unsigned p : {2u, 3u, 5u}) {
    const auto c = pascal(8, p);
    for (unsigned e : {1u, 2u, 3u}) {
      const IterativityTable table(make_fgl(LawKind::additive, Params(p, e)), 8);
      const auto idx = indices_up_to_total(e, 8);
      for (const auto& i : idx)
        for (const auto& j : idx) {
          if (i.total() + j.total() > 8) continue;
          ASSERT_EQ(table.constants(i, j), binomial_oracle(i, j, p, c)) << i.to_string() << j.to_string();
        }
    }
  }
}

TEST(Iterativity, W1EqualsGa) {
  for (unsigned p : {2u, 3u, 5u}) {
    const IterativityTable w1(make_fgl(LawKind::witt, Params(p, 1)), 8);
    const IterativityTable ga(make_fgl(LawKind::additive, Params(p, 1)), 8);
    for (std::uint32_t a = 0; a <= 8; ++a)
      for (std::uint32_t b = 0; a + b <= 8; ++b)
        EXPECT_EQ(w1.constants(MultiIndex{a}, MultiIndex{b}), ga.constants(MultiIndex{a}, MultiIndex{b}));
  }
}

TEST(Iterativity, WittExampleAndUnitColumn) {
  const auto law = make_fgl(LawKind::witt, Params(2, 2));
  const auto c = iterativity_constants(law, MultiIndex{1, 0}, MultiIndex{1, 0});
  EXPECT_EQ(c, (IterativityConstants{{MultiIndex{0, 1}, 1}}));
  const IterativityTable table(law, 6);
  for (const auto& i : indices_up_to_total(2, 6))
    EXPECT_EQ(table.constants(i, MultiIndex{0, 0}), (IterativityConstants{{i, 1}}));
}

TEST(Iterativity, TableMatchesUntruncatedExpansion) {
  for (auto [p, e] : {std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{2u, 3u}}) {
    const auto law = make_fgl(LawKind::witt, Params(p, e));
    const IterativityTable table(law, 5);
    const auto idx = indices_up_to_total(e, 5);
    for (const auto& i : idx)
      for (const auto& j : idx) {
        if (i.total() + j.total() > 5) continue;
        EXPECT_EQ(table.constants(i, j), full_expansion_oracle(law, i, j)) << i.to_string() << j.to_string();
        EXPECT_EQ(table.constants(i, j), table.constants(j, i));
      }
  }
}

TEST(Iterativity, MultiplicativeLaw) {
  // (X + Y + XY)^l: coefficient of X^i Y^j, checked against the untruncated product
  const auto law = make_fgl(LawKind::multiplicative, Params(3, 1));
  const IterativityTable table(law, 6);
  for (std::uint32_t a = 0; a <= 6; ++a)
    for (std::uint32_t b = 0; a + b <= 6; ++b)
      EXPECT_EQ(table.constants(MultiIndex{a}, MultiIndex{b}), full_expansion_oracle(law, MultiIndex{a}, MultiIndex{b}));
}

TEST(Iterativity, BoundIsEnforced) {
  const IterativityTable table(make_fgl(LawKind::witt, Params(2, 2)), 3);
  EXPECT_THROW(table.constants(MultiIndex{2, 0}, MultiIndex{1, 1}), std::out_of_range);
}

TEST(Iterativity, ReplayOnCanonicalDerivation) {
  // D_i(D_j(f)) = Σ α_{i,j}(l) D_l(f) with α from the table
  const Params params(3, 2);
  const auto law = make_fgl(LawKind::witt, params);
  const auto d = HSDerivation::for_law(law);
  const IterativityTable table(law, 5);
  const auto idx = indices_up_to_total(2, 5);
  for (const auto& f : {P("X1^2*X2", 3), P("X2^2 + X1", 3), P("X1*X2^3", 3)})
    for (const auto& i : idx)
      for (const auto& j : idx) {
        if (i.total() + j.total() > 5) continue;
        FpPoly rhs(d.field());
        for (const auto& [l, a] : table.constants(i, j)) rhs += d.component(l, f).scaled(a);
        EXPECT_EQ(d.component(i, d.component(j, f)), rhs);
      }
}

TEST(Iterativity, ConcurrentLookupsAgree) {
  const IterativityTable table(make_fgl(LawKind::witt, Params(3, 2)), 6);
  const auto idx = indices_up_to_total(2, 3);
  std::vector<IterativityConstants> parallel(idx.size() * idx.size());
#pragma omp parallel for
  for (long long k = 0; k < static_cast<long long>(parallel.size()); ++k)
    parallel[k] = table.constants(idx[k / idx.size()], idx[k % idx.size()]);
  const IterativityTable fresh(make_fgl(LawKind::witt, Params(3, 2)), 6);
  for (std::size_t k = 0; k < parallel.size(); ++k)
    EXPECT_EQ(parallel[k], fresh.constants(idx[k / idx.size()], idx[k % idx.size()]));
}
