#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hasse {

inline constexpr unsigned kMaxPrime = 17;
inline constexpr unsigned kMaxDim = 4;

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Characteristic p and dimension e (the degree of imperfection).
class Params {
 public:
  Params(unsigned p, unsigned e, unsigned max_prime = kMaxPrime) : p_(p), e_(e) {
    if (!is_prime(p)) throw ParamError("p = " + std::to_string(p) + " is not prime");
    if (p > max_prime)
      throw ParamError("p = " + std::to_string(p) + " exceeds the configured bound " +
                       std::to_string(max_prime));
    if (e < 1 || e > kMaxDim)
      throw ParamError("e = " + std::to_string(e) + " outside [1, " + std::to_string(kMaxDim) + "]");
  }

  unsigned p() const { return p_; }
  unsigned e() const { return e_; }

  // p^k as an unsigned 64-bit value.
  std::uint64_t power_of_p(unsigned k) const {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r *= p_;
    return r;
  }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  unsigned p_;
  unsigned e_;
};

}  // namespace hasse
