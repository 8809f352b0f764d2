#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hasse/fgl.hpp"
#include "hasse/format.hpp"
#include "hasse/poly_ops.hpp"
#include "hasse/witt.hpp"
#include "support.hpp"

using namespace hasse;
using hasse::test::P;

namespace {

BigInt eval(const ZPoly& f, const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
  BigInt total = 0;
  for (const auto& [m, c] : f.terms()) {
    BigInt t = c;
    for (unsigned k = 1; k <= x.size(); ++k) {
      t *= boost::multiprecision::pow(x[k - 1], m.exponent(Var{Block::X, k}));
      t *= boost::multiprecision::pow(y[k - 1], m.exponent(Var{Block::Y, k}));
    }
    total += t;
  }
  return total;
}

// Witt sum of two integer vectors by inverting ghost components numerically.
std::vector<BigInt> numeric_witt_sum(unsigned p, const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
  auto ghost = [p](const std::vector<BigInt>& v, unsigned m) {
    BigInt w = 0;
    BigInt pi = 1;
    for (unsigned i = 0; i <= m; ++i) {
      w += pi * boost::multiprecision::pow(v[i], static_cast<unsigned>(std::pow(p, m - i)));
      pi *= p;
    }
    return w;
  };
  std::vector<BigInt> s;
  BigInt pm = 1;
  for (unsigned m = 0; m < x.size(); ++m) {
    s.push_back(0);
    const BigInt rest = ghost(x, m) + ghost(y, m) - ghost(s, m);
    EXPECT_EQ(rest % pm, 0);
    s.back() = rest / pm;
    pm *= p;
  }
  return s;
}

}  // namespace

TEST(WittPolynomial, Examples) {
  EXPECT_EQ(to_text(witt_polynomial(2, 0)), "X1");
  EXPECT_EQ(to_text(witt_polynomial(2, 1)), "X1^2 + 2*X2");
  EXPECT_EQ(to_text(witt_polynomial(3, 2)), "X1^9 + 3*X2^3 + 9*X3");
  EXPECT_EQ(to_text(witt_polynomial(3, 1, Block::Y)), "Y1^3 + 3*Y2");
}

TEST(WittLaw, SmallCases) {
  const auto l22 = witt_addition_law(Params(2, 2));
  EXPECT_EQ(l22.reduced[0], P("X1 + Y1", 2));
  EXPECT_EQ(l22.reduced[1], P("X2 + Y2 + X1*Y1", 2));
  const auto l32 = witt_addition_law(Params(3, 2));
  EXPECT_EQ(l32.reduced[1], P("X2 + Y2 + 2*X1^2*Y1 + 2*X1*Y1^2", 3));
  EXPECT_EQ(to_text(l32.integral[1]), "-X1^2*Y1 - X1*Y1^2 + X2 + Y2");
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const auto l = witt_addition_law(Params(p, 1));
    ASSERT_EQ(l.reduced.size(), 1u);
    EXPECT_EQ(l.reduced[0], P("X1 + Y1", p, 1));
  }
}

TEST(WittLaw, GhostIdentityOnGrid) {
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned e : {1u, 2u, 3u}) {
      const auto law = witt_addition_law(Params(p, e));
      for (unsigned m = 0; m < e; ++m) EXPECT_TRUE(ghost_identity_holds(law, m)) << p << " " << e << " " << m;
      for (unsigned k = 0; k < e; ++k) EXPECT_EQ(reduce_mod(law.integral[k], PrimeField(p)), law.reduced[k]);
    }
}

TEST(WittLaw, AgreesWithNumericGhostInversion) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coord(-6, 6);
  for (unsigned p : {2u, 3u}) {
    const unsigned e = 3;
    const auto law = witt_addition_law(Params(p, e));
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<BigInt> x, y;
      for (unsigned k = 0; k < e; ++k) {
        x.push_back(coord(rng));
        y.push_back(coord(rng));
      }
      const auto s = numeric_witt_sum(p, x, y);
      for (unsigned k = 0; k < e; ++k) EXPECT_EQ(eval(law.integral[k], x, y), s[k]);
    }
  }
}

TEST(WittLaw, GroupAxiomsAndTriangularity) {
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned e : {1u, 2u, 3u}) {
      const auto law = make_fgl(LawKind::witt, Params(p, e));
      const auto report = fgl_axiom_check(law);
      EXPECT_TRUE(report.all_pass()) << p << " " << e;
      for (unsigned k = 1; k <= e; ++k)
        for (unsigned later = k + 1; later <= e; ++later) {
          EXPECT_EQ(law.component(k).degree(Var{Block::X, later}), 0u);
          EXPECT_EQ(law.component(k).degree(Var{Block::Y, later}), 0u);
        }
    }
}

TEST(WittLaw, CachedLawMatchesFreshConstruction) {
  const Params params(3, 3);
  const auto cached = cached_witt_law(params);
  EXPECT_EQ(cached->reduced, witt_addition_law(params).reduced);
  EXPECT_EQ(cached.get(), cached_witt_law(params).get());
}

TEST(WittEndomorphism, Examples) {
  const std::vector<FpPoly> x12{P("X1", 2), P("X2", 2)};
  EXPECT_EQ(witt_endomorphism(WittEndomorphism::frobenius, x12, 2, 2),
            (std::vector<FpPoly>{P("X1^2", 2), P("X2^2", 2)}));
  EXPECT_EQ(witt_endomorphism(WittEndomorphism::verschiebung, {P("X1", 2)}, 1, 2),
            (std::vector<FpPoly>{P("0", 2), P("X1", 2)}));
  EXPECT_EQ(witt_endomorphism(WittEndomorphism::restriction, x12, 2, 2), (std::vector<FpPoly>{P("X1", 2)}));
  EXPECT_THROW(witt_endomorphism(WittEndomorphism::restriction, x12, 3, 2), std::invalid_argument);
}

TEST(WittEndomorphism, FrVeReEqualsMultiplicationByP) {
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned e : {1u, 2u, 3u}) {
      const Params params(p, e);
      EXPECT_EQ(frobenius_verschiebung_restriction(params), mult_by_N(make_fgl(LawKind::witt, params), p))
          << p << " " << e;
    }
}
