#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "hasse/hsd.hpp"
#include "hasse/mw.hpp"
#include "hasse/verifier.hpp"
#include "support.hpp"

using namespace hasse;
using hasse::test::P;

namespace {

VerifyConfig small_config(Execution exec = Execution::parallel) {
  VerifyConfig c;
  c.degree_bound = 4;
  c.order_bound = 4;
  c.scheme_bound = 4;
  c.random_count = 3;
  c.n = 2;
  c.rational_count = 6;
  c.pbasis_j_bound = 2;
  c.exec = exec;
  return c;
}

}  // namespace

TEST(MwCoefficients, PadicAndRational) {
  EXPECT_EQ(padic_expansion(10, 3).digits, (std::vector<unsigned>{1, 0, 1}));
  EXPECT_EQ(padic_expansion(0, 2).digits, (std::vector<unsigned>{0}));
  EXPECT_EQ(padic_expansion(12, 2).digits, (std::vector<unsigned>{0, 0, 1, 1}));
  const auto r3 = mw_rational(3, 2);
  EXPECT_EQ(r3.num, 1);
  EXPECT_EQ(r3.den, 3);
  const auto r4 = mw_rational(4, 2);
  EXPECT_EQ(r4.num, 1);
  EXPECT_EQ(r4.den, 1);
  EXPECT_EQ(mw_coefficient(3, 2), 1u);
  EXPECT_THROW(mw_coefficient(0, 2), std::invalid_argument);
  EXPECT_EQ(mw_operator(3, Params(2, 2)).to_string(), "D(1,0)*D(2,0)");
  EXPECT_EQ(mw_operator(0, Params(2, 2)).to_string(), OperatorExpr::identity().to_string());
}

TEST(MwCoefficients, AreUnitsForSmallN) {
  for (unsigned p : {2u, 3u, 5u})
    for (std::uint64_t n = 1; n <= 30; ++n) EXPECT_NE(mw_coefficient(n, p), 0u) << p << " " << n;
}

TEST(H5Witness, MatchesFactorialOnGrid) {
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned e : {1u, 2u}) {
      const auto r = h5_witness(Params(p, e));
      EXPECT_EQ(r.verdict, Verdict::pass) << p << " " << e;
    }
  const auto r = h5_witness(Params(3, 2));
  EXPECT_EQ(r.witness["value"], "1");
  EXPECT_EQ(r.witness["expected"], 1);
  EXPECT_EQ(r.witness["x"], "X1^2*X2^2");
}

TEST(MwCounterexample, FindsX1X2) {
  const auto r = mw_counterexample(3);
  EXPECT_EQ(r.verdict, Verdict::witness_found);
  EXPECT_EQ(r.witness["x"], "X1*X2");
  EXPECT_EQ(r.witness["delta"], "X1");
  EXPECT_EQ(r.parameters["coefficient_D3"], 1);
  EXPECT_TRUE(r.ok());
}

TEST(MwCounterexample, DirectComputation) {
  // D_3(xy) - Σ D_a(x) D_b(y) at x = X1*X2, y = D_1(D_1(x))
  const auto d = canonical_witt_derivation(Params(2, 2));
  auto d1 = [&](const FpPoly& f) { return d.component(MultiIndex{1, 0}, f); };
  auto d2 = [&](const FpPoly& f) { return d.component(MultiIndex{2, 0}, f); };
  auto d3 = [&](const FpPoly& f) { return d1(d2(f)); };
  const auto x = P("X1*X2", 2);
  const auto y = d1(d1(x));
  const auto delta = d3(x * y) - (d3(x) * y + d2(x) * d1(y) + d1(x) * d2(y) + x * d3(y));
  EXPECT_EQ(delta, P("X1", 2));
}

TEST(Checks, PassOnSmallParameters) {
  const auto config = small_config();
  for (auto [p, e] : {std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{2u, 3u}, std::pair{5u, 1u}}) {
    const Params params(p, e);
    std::vector<CheckReport> reports{
        check_witt_law(params),
        check_multiplication_by_p(params),
        check_iterativity_tables(params, 4),
        check_iterativity_replay(params, config),
        check_nilpotence(params, config),
        check_partial_iteration(params, config),
        check_factorization(params, config),
        check_witt_splitting(params, config),
        check_twisted_substitution(params, LawKind::witt, config),
        check_twisted_substitution(params, LawKind::additive, config),
        strictness_kernel_check(params, 4),
    };
    for (auto s : {Scheme::H1, Scheme::H2, Scheme::H3, Scheme::H4, Scheme::H8})
      reports.push_back(check_axiom_scheme(s, params, config));
    for (const auto& r : reports) {
      EXPECT_EQ(r.verdict, Verdict::pass) << r.id << " p=" << p << " e=" << e << " " << r.witness.dump();
      EXPECT_EQ(r.p, p);
      EXPECT_EQ(r.e, e);
    }
  }
}

TEST(Checks, PBasisEquivalence) {
  const auto r = pbasis_equivalence_check(Params(2, 2), small_config());
  EXPECT_EQ(r.verdict, Verdict::pass) << r.witness.dump();
}

TEST(Checks, TwistedSubstitutionRejectsOtherLaws) {
  EXPECT_THROW(check_twisted_substitution(Params(2, 1), LawKind::multiplicative, small_config()), std::invalid_argument);
}

TEST(Checks, SerialAndParallelReportsAgree) {
  for (auto [p, e] : {std::pair{2u, 2u}, std::pair{3u, 2u}}) {
    const Params params(p, e);
    const auto par = run_suite("all", params, small_config(Execution::parallel));
    const auto ser = run_suite("all", params, small_config(Execution::serial));
    ASSERT_EQ(par.size(), ser.size());
    for (std::size_t k = 0; k < par.size(); ++k) EXPECT_EQ(par[k].to_json(), ser[k].to_json()) << par[k].id;
  }
}

TEST(Checks, ReportJsonShape) {
  auto r = h5_witness(Params(2, 2));
  const auto j = r.to_json();
  EXPECT_EQ(j["id"], "h5-witness");
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_FALSE(j.contains("wall_ms"));
  EXPECT_TRUE(r.to_json(true).contains("wall_ms"));
  EXPECT_EQ(to_string(Verdict::witness_found), "witness-found");
}

TEST(Suites, NamesAndErrors) {
  const auto& names = suite_names();
  EXPECT_NE(std::find(names.begin(), names.end(), "all"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "pbasis"), names.end());
  EXPECT_THROW(run_suite("nope", Params(2, 2), small_config()), std::invalid_argument);
  EXPECT_EQ(parse_scheme("H8"), Scheme::H8);
  EXPECT_THROW(parse_scheme("H7"), std::invalid_argument);
  EXPECT_THROW(parse_scheme("H0"), std::invalid_argument);
  for (const auto& name : names) {
    if (name == "all" || name == "pbasis") continue;
    for (const auto& r : run_suite(name, Params(2, 2), small_config())) EXPECT_TRUE(r.ok()) << name << " " << r.id;
  }
}
