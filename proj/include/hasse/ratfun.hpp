#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hasse/poly.hpp"

namespace hasse {

// Greatest common divisor in F_p[X̄,Ȳ,Z̄], normalized to leading coefficient 1.
// gcd(0, 0) = 0.
FpPoly gcd(const FpPoly& a, const FpPoly& b);

// Element of F_p(X̄): num/den with gcd(num, den) = 1 and den monic in the
// canonical order. Zero is 0/1. Representational equality is field equality.
class RatFun {
 public:
  explicit RatFun(const PrimeField& field);
  explicit RatFun(FpPoly poly);
  RatFun(FpPoly num, FpPoly den);

  static RatFun constant(const PrimeField& field, long long c);
  // num / Π den_factors. Cancels against each factor separately, which is
  // much cheaper than one gcd against the product when the factors are small.
  static RatFun from_factors(FpPoly num, std::vector<FpPoly> den_factors);

  const FpPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }
  const PrimeField& field() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFun inverse() const;
  RatFun pow(long long k) const;
  // x^(p^n) computed by exponent scaling; valid in characteristic p.
  RatFun frobenius_power(unsigned n) const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  RatFun operator-() const;

  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  struct Normalized {};
  RatFun(FpPoly num, FpPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  RatFun with_monic_den() const;

  FpPoly num_;
  FpPoly den_;
};

// Normalize num/den; throws DomainError on a zero denominator.
RatFun ratfun_normalize(const FpPoly& num, const FpPoly& den);

// num / base^power. Factors of base are cancelled by exact division before
// normalizing, which keeps the gcd inputs small when most of them cancel.
RatFun ratfun_over_power(FpPoly num, const FpPoly& base, std::uint64_t power);

}  // namespace hasse
