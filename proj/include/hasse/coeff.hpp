#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "hasse/params.hpp"

namespace hasse {

using BigInt = boost::multiprecision::cpp_int;

// Residues modulo a small prime, stored in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(unsigned p) : p_(p) {
    if (!is_prime(p)) throw ParamError("modulus " + std::to_string(p) + " is not prime");
  }

  unsigned characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }

  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }
  value_type from_big(const BigInt& v) const {
    BigInt r = v % p_;
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }

  value_type add(value_type a, value_type b) const {
    auto s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type pow(value_type a, std::uint64_t k) const {
    value_type r = one();
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(a, p_ - 2);
  }

  std::string to_string(value_type a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  unsigned p_;
};

// Arbitrary-precision integers.
class Integers {
 public:
  using value_type = BigInt;

  unsigned characteristic() const { return 0; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  value_type from_int(long long v) const { return v; }
  value_type from_big(const BigInt& v) const { return v; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type pow(value_type a, std::uint64_t k) const {
    value_type r = 1;
    while (k) {
      if (k & 1) r *= a;
      a *= a;
      k >>= 1;
    }
    return r;
  }

  std::string to_string(const value_type& a) const { return a.str(); }

  friend bool operator==(const Integers&, const Integers&) = default;
};

}  // namespace hasse
