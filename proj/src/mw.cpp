#include "hasse/mw.hpp"

#include <stdexcept>

namespace hasse {

PAdicExpansion padic_expansion(std::uint64_t n, unsigned p) {
  if (p < 2) throw std::invalid_argument("p-adic expansion needs p >= 2");
  PAdicExpansion out{n, p, {}};
  if (n == 0) {
    out.digits.push_back(0);
    return out;
  }
  while (n) {
    out.digits.push_back(static_cast<unsigned>(n % p));
    n /= p;
  }
  return out;
}

namespace {

BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace

MwRational mw_rational(std::uint64_t n, unsigned p) {
  const auto exp = padic_expansion(n, p);
  BigInt num = 1;
  std::uint64_t pt = 1;
  for (std::size_t t = 0; t < exp.digits.size(); ++t) {
    if (t > 0) num *= boost::multiprecision::pow(factorial(pt), exp.digits[t]);
    pt *= p;
  }
  BigInt den = factorial(n);
  const BigInt g = boost::multiprecision::gcd(num, den);
  return {num / g, den / g};
}

PrimeField::value_type mw_coefficient(std::uint64_t n, unsigned p) {
  if (n < 1) throw std::invalid_argument("mw_coefficient needs n >= 1");
  const auto r = mw_rational(n, p);
  if (r.num % p == 0 || r.den % p == 0)
    throw NonUnitCoefficientError("coefficient of D_" + std::to_string(n) + " is not a p-adic unit");
  const PrimeField field(p);
  return field.mul(field.from_big(r.num), field.inv(field.from_big(r.den)));
}

OperatorExpr mw_operator(std::uint64_t n, const Params& params) {
  if (n == 0) return OperatorExpr::identity();
  const std::size_t e = params.e();
  const auto exp = padic_expansion(n, params.p());
  OperatorTerm term;
  term.coeff = mw_coefficient(n, params.p());
  std::uint64_t pt = 1;
  for (std::size_t t = 0; t < exp.digits.size(); ++t) {
    if (exp.digits[t] != 0)
      term.factors.push_back(OperatorFactor{MultiIndex::unit(e, 1, static_cast<std::uint32_t>(pt)), exp.digits[t]});
    pt *= params.p();
  }
  return OperatorExpr({term});
}

}  // namespace hasse
