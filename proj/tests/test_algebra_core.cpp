#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hasse/format.hpp"
#include "hasse/linalg.hpp"
#include "hasse/monomial.hpp"
#include "hasse/params.hpp"
#include "hasse/poly_ops.hpp"
#include "hasse/ratfun.hpp"
#include "hasse/series.hpp"
#include "support.hpp"

using namespace hasse;
using hasse::test::P;
using hasse::test::PolyGen;
using hasse::test::R;

TEST(Params, ValidatesPrimeAndDimension) {
  EXPECT_NO_THROW(Params(2, 1));
  EXPECT_NO_THROW(Params(17, 4));
  EXPECT_THROW(Params(4, 2), ParamError);
  EXPECT_THROW(Params(1, 2), ParamError);
  EXPECT_THROW(Params(19, 2), ParamError);
  EXPECT_THROW(Params(2, 0), ParamError);
  EXPECT_THROW(Params(2, 5), ParamError);
  EXPECT_EQ(Params(3, 2).power_of_p(3), 27u);
}

TEST(MultiIndex, ParseAndPrint) {
  EXPECT_EQ(MultiIndex::parse("(1,0,2)"), (MultiIndex{1, 0, 2}));
  EXPECT_EQ(MultiIndex::parse("1 0"), (MultiIndex{1, 0}));
  EXPECT_EQ((MultiIndex{3, 1}).to_string(), "(3,1)");
  EXPECT_EQ((MultiIndex{3, 1}).total(), 4u);
  EXPECT_TRUE((MultiIndex{1, 0}).dominated_by(MultiIndex{1, 2}));
  EXPECT_FALSE((MultiIndex{2, 0}).dominated_by(MultiIndex{1, 2}));
}

TEST(MultiIndex, EnumerationCountsAndOrder) {
  // C(d + e, e) indices of total degree <= d
  EXPECT_EQ(indices_up_to_total(2, 6).size(), 28u);
  EXPECT_EQ(indices_up_to_total(3, 4).size(), 35u);
  const auto first = indices_up_to_total(2, 1);
  ASSERT_EQ(first.size(), 3u);
  EXPECT_EQ(first[1], (MultiIndex{1, 0}));
  EXPECT_EQ(first[2], (MultiIndex{0, 1}));
  EXPECT_EQ(indices_in_box(2, 3).size(), 9u);
}

TEST(Monomial, CanonicalOrder) {
  const auto f = P("Y1 + X2 + X1 + X1*Y1 + 1", 5);
  EXPECT_EQ(to_text(f), "X1*Y1 + X1 + X2 + Y1 + 1");
}

TEST(PolyArith, SpecExamples) {
  EXPECT_TRUE((P("X1", 2) + P("X1", 2)).is_zero());
  EXPECT_EQ(P("X1 + Y1", 2) * P("X1 + Y1", 2), P("X1^2 + Y1^2", 2));
  EXPECT_EQ(P("X1 + X2", 3).pow(3), P("X1^3 + X2^3", 3));
}

TEST(PolyArith, Errors) {
  EXPECT_THROW(P("X1", 2).pow(-1), DomainError);
  EXPECT_THROW(P("X1", 2) + P("X1", 3), DomainError);
}

TEST(PolyArith, RingLawsOnRandomTriples) {
  PolyGen gen(7);
  for (unsigned p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto f = gen.poly(p, 2, 4, 3, true);
      const auto g = gen.poly(p, 2, 4, 3, true);
      const auto h = gen.poly(p, 2, 4, 3, true);
      EXPECT_EQ((f + g) + h, f + (g + h));
      EXPECT_EQ((f * g) * h, f * (g * h));
      EXPECT_EQ(f * g, g * f);
      EXPECT_EQ(f * (g + h), f * g + f * h);
      EXPECT_TRUE((f - f).is_zero());
      EXPECT_EQ((f + g).pow(p), f.pow(p) + g.pow(p));
    }
  }
}

TEST(PolyArith, IntegerCoefficientsAreExact) {
  PolyGen gen(11);
  const auto f = gen.zpoly(2, 5, 4);
  const auto g = gen.zpoly(2, 5, 4);
  EXPECT_EQ((f * g).pow(3), f.pow(3) * g.pow(3));
  const ZPoly big = ZPoly::constant(Integers{}, 1000000007).pow(5);
  EXPECT_EQ(big.constant_term(), BigInt("1000000035000000490000003430000012005000016807"));
}

TEST(Substitute, SpecExamples) {
  const PrimeField f2(2);
  Substitution<PrimeField> zero{{Var{Block::X, 1}, FpPoly(f2)}, {Var{Block::X, 2}, FpPoly(f2)}};
  EXPECT_TRUE(substitute(P("X1 + X2", 2), zero).is_zero());

  Substitution<PrimeField> law{{Var{Block::X, 1}, P("X1 + Y1", 2)}, {Var{Block::X, 2}, P("X2 + Y2 + X1*Y1", 2)}};
  EXPECT_EQ(substitute(P("X1*X2", 2), law), P("X1*X2 + X1*Y2 + X1^2*Y1 + X2*Y1 + Y1*Y2 + X1*Y1^2", 2));

  const auto f = P("X1^2*X2 + 1", 2);
  Substitution<PrimeField> id{{Var{Block::X, 1}, P("X1", 2)}, {Var{Block::X, 2}, P("X2", 2)}};
  EXPECT_EQ(substitute(f, id), f);
}

TEST(Substitute, StrictModeRejectsMissingImage) {
  Substitution<PrimeField> partial{{Var{Block::X, 1}, P("Y1", 2)}};
  EXPECT_THROW(substitute(P("X1*X2", 2), partial, Strictness::strict), SubstitutionError);
  EXPECT_EQ(substitute(P("X1*X2", 2), partial), P("X2*Y1", 2));
}

TEST(Substitute, IsRingHomomorphism) {
  PolyGen gen(3);
  for (int trial = 0; trial < 25; ++trial) {
    const auto f = gen.poly(3, 2, 4, 3);
    const auto g = gen.poly(3, 2, 4, 3);
    Substitution<PrimeField> s{{Var{Block::X, 1}, gen.poly(3, 2, 3, 2, true)},
                               {Var{Block::X, 2}, gen.poly(3, 2, 3, 2, true)}};
    EXPECT_EQ(substitute(f * g, s), substitute(f, s) * substitute(g, s));
    EXPECT_EQ(substitute(f + g, s), substitute(f, s) + substitute(g, s));
  }
}

TEST(CoefficientOf, SpecExamples) {
  EXPECT_EQ(coefficient_of(P("X2 + Y2 + X1*Y1", 2), Block::Y, MultiIndex{1, 0}), P("X1", 2));
  EXPECT_EQ(coefficient_of(P("X2 + Y2 + X1*Y1", 2), Block::Y, MultiIndex{0, 0}), P("X2", 2));
  EXPECT_TRUE(coefficient_of(P("X1 + Y1", 2), Block::Y, MultiIndex{0, 1}).is_zero());
}

TEST(CoefficientOf, ReassemblesTheInput) {
  PolyGen gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = gen.poly(5, 2, 6, 3, true);
    FpPoly sum(PrimeField(5));
    for (const auto& j : indices_up_to_total(2, 6))
      sum += coefficient_of(f, Block::Y, j).times_monomial(Monomial::from_index(Block::Y, j));
    EXPECT_EQ(sum, f);
  }
}

TEST(SeriesInverse, GeometricSeriesOverF2) {
  const auto s = TruncSeries::from_poly(P("1 + Y1", 2), 2, 3);
  const auto inv = series_inverse(s, 3);
  const PrimeField f2(2);
  for (std::uint32_t k = 0; k <= 3; ++k) EXPECT_EQ(inv.coefficient(MultiIndex{k, 0}), RatFun::constant(f2, 1));
  EXPECT_EQ(inv.coefficients().size(), 4u);
}

TEST(SeriesInverse, ConstantAndZeroConstantTerm) {
  const auto one = TruncSeries::from_poly(P("1", 3), 2, 5);
  EXPECT_EQ(series_inverse(one, 5), one);
  EXPECT_THROW(series_inverse(TruncSeries::from_poly(P("Y1", 3), 2, 3), 3), ZeroConstantTermError);
}

TEST(SeriesInverse, ProductIsOne) {
  PolyGen gen(9);
  for (int trial = 0; trial < 10; ++trial) {
    FpPoly f = gen.poly(3, 2, 4, 2, true) + FpPoly::constant(PrimeField(3), 1);
    if (f.filtered([](const Monomial& m) { return !m.uses(Block::Y); }).is_zero()) continue;
    const auto s = TruncSeries::from_poly(f, 2, 3);
    const auto prod = s * series_inverse(s, 3);
    EXPECT_EQ(prod, TruncSeries::constant(RatFun::constant(PrimeField(3), 1), 2, 3));
  }
}

TEST(SeriesArith, BoundIsMinimum) {
  const auto a = TruncSeries::from_poly(P("1 + Y1", 2), 2, 3);
  const auto b = TruncSeries::from_poly(P("1 + Y2", 2), 2, 2);
  EXPECT_EQ((a * b).bound(), 2u);
  EXPECT_EQ((a + b).bound(), 2u);
}

TEST(FrobeniusRoot, SpecExamples) {
  EXPECT_EQ(frobenius_root(P("X1^2", 2), 2), P("X1", 2));
  EXPECT_EQ(frobenius_root(P("X1^2*X2^4 + X2^2", 2), 2), P("X1*X2^2 + X2", 2));
  EXPECT_THROW(frobenius_root(P("X1", 2), 2), NotPthPowerError);
}

TEST(FrobeniusRoot, InvertsExponentScaling) {
  PolyGen gen(13);
  for (unsigned p : {2u, 3u, 5u}) {
    const auto f = gen.poly(p, 3, 5, 3, true);
    EXPECT_EQ(frobenius_root(exponent_scale(f, p), p), f);
    EXPECT_EQ(exponent_scale(f, p), f.pow(p));
  }
}

TEST(RatFun, NormalizeExamples) {
  EXPECT_EQ(ratfun_normalize(P("X1^2", 2), P("X1", 2)), RatFun(P("X1", 2)));
  const auto r = ratfun_normalize(P("X1 + X2", 2), P("1", 2));
  EXPECT_EQ(r.num(), P("X1 + X2", 2));
  EXPECT_TRUE(r.den().is_one());
  EXPECT_EQ(ratfun_normalize(P("2*X1", 3), P("2", 3)), RatFun(P("X1", 3)));
  EXPECT_THROW(ratfun_normalize(P("X1", 3), P("0", 3)), DomainError);
}

TEST(RatFun, DenominatorIsMonic) {
  const auto r = ratfun_normalize(P("X1", 5), P("3*X2 + 1", 5));
  EXPECT_EQ(r.den().leading_coefficient(), 1u);
  EXPECT_EQ(r.num(), P("2*X1", 5));
}

TEST(RatFun, FieldLaws) {
  PolyGen gen(17);
  for (int trial = 0; trial < 15; ++trial) {
    const auto a = gen.ratfun(3, 2, 2);
    const auto b = gen.ratfun(3, 2, 2);
    const auto c = gen.ratfun(3, 2, 2);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a / b) * b, a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.frobenius_power(1), a.pow(3));
  }
}

TEST(RatFun, FromFactorsMatchesDirectNormalization) {
  PolyGen gen(19);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = gen.poly(2, 2, 2, 2) + FpPoly::constant(PrimeField(2), 1);
    const auto h = gen.poly(2, 2, 2, 2) + FpPoly::constant(PrimeField(2), 1);
    const auto num = gen.poly(2, 2, 3, 3) * g;
    EXPECT_EQ(RatFun::from_factors(num, {g, h, g}), RatFun(num, g * h * g));
    EXPECT_EQ(ratfun_over_power(num * g, g, 3), RatFun(num * g, g.pow(3)));
  }
}

TEST(Gcd, DividesBothAndFindsCommonFactor) {
  PolyGen gen(23);
  for (unsigned p : {2u, 3u}) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto a = gen.poly(p, 3, 3, 2);
      const auto b = gen.poly(p, 3, 3, 2);
      const auto c = gen.poly(p, 3, 2, 2) + FpPoly::constant(PrimeField(p), 1);
      if (a.is_zero() || b.is_zero()) continue;
      const auto g = gcd(a * c, b * c);
      EXPECT_TRUE(divide_exact(a * c, g).has_value());
      EXPECT_TRUE(divide_exact(b * c, g).has_value());
      EXPECT_TRUE(divide_exact(g, make_monic(c)).has_value());
      EXPECT_EQ(g.leading_coefficient(), 1u);
    }
  }
}

TEST(Format, TextAndParseRoundTrip) {
  const auto f = P("2*X1^2*Y2 + X2 + 1", 3);
  EXPECT_EQ(to_text(f), "2*X1^2*Y2 + X2 + 1");
  EXPECT_EQ(parse_poly(to_text(f), PrimeField(3), 2), f);
  EXPECT_EQ(to_text(FpPoly(PrimeField(3))), "0");
  EXPECT_EQ(to_text(R("1/(1+X1)", 2)), "(1)/(X1 + 1)");
  EXPECT_THROW(P("X1 +", 3), ParseError);
  EXPECT_THROW(P("X3", 3), ParseError);
}

TEST(Format, IntegerText) {
  ZPoly f{Integers{}};
  f.add_term(Monomial::var(Var{Block::X, 1}, 2), BigInt(-1));
  f.add_term(Monomial::var(Var{Block::X, 2}), BigInt(2));
  EXPECT_EQ(to_text(f), "-X1^2 + 2*X2");
}

TEST(Format, JsonShape) {
  const auto j = to_json(P("X1*Y2", 2), 2);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["coeff"], 1);
  EXPECT_EQ(j[0]["exponents"]["X"], nlohmann::json({1, 0}));
  EXPECT_EQ(j[0]["exponents"]["Y"], nlohmann::json({0, 1}));
  EXPECT_EQ(j[0]["exponents"]["Z"], nlohmann::json({0, 0}));
}

namespace {

// All x in F_p^cols with a x = 0, by enumeration.
std::size_t brute_force_nullity(const FpMatrix& a) {
  const unsigned p = a.field().characteristic();
  std::size_t total = 1;
  for (std::size_t c = 0; c < a.cols(); ++c) total *= p;
  std::size_t zeros = 0;
  std::vector<PrimeField::value_type> x(a.cols(), 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t v = code;
    for (auto& xi : x) {
      xi = static_cast<PrimeField::value_type>(v % p);
      v /= p;
    }
    const auto y = a.apply(x);
    if (std::all_of(y.begin(), y.end(), [](auto t) { return t == 0; })) ++zeros;
  }
  std::size_t dim = 0;
  for (std::size_t n = 1; n < zeros; n *= p) ++dim;
  return dim;
}

}  // namespace

TEST(LinearAlgebra, KernelAgreesWithEnumeration) {
  std::mt19937 rng(29);
  for (unsigned p : {2u, 3u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const PrimeField field(p);
      FpMatrix a(field, 3 + trial % 3, 5);
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = rng() % (trial % 2 ? p : 2);
      const auto kernel = kernel_basis(a);
      EXPECT_EQ(kernel.size(), brute_force_nullity(a));
      EXPECT_EQ(rank(a) + kernel.size(), a.cols());
      for (const auto& v : kernel) {
        const auto y = a.apply(v);
        EXPECT_TRUE(std::all_of(y.begin(), y.end(), [](auto t) { return t == 0; }));
      }
    }
  }
}
