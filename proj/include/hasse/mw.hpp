#pragma once

#include <cstdint>
#include <vector>

#include "hasse/coeff.hpp"
#include "hasse/hsd.hpp"

namespace hasse {

// n = Σ γ_t p^t with 0 <= γ_t < p; digits are least significant first and
// the leading digit is nonzero unless n = 0 (then digits = {0}).
struct PAdicExpansion {
  std::uint64_t n = 0;
  unsigned p = 2;
  std::vector<unsigned> digits;
};

PAdicExpansion padic_expansion(std::uint64_t n, unsigned p);

// The scalar (p!)^{γ_1}···((p^s)!)^{γ_s} / n! in lowest terms.
struct MwRational {
  BigInt num;
  BigInt den;
};

MwRational mw_rational(std::uint64_t n, unsigned p);

class NonUnitCoefficientError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// mw_rational(n, p) reduced mod p. Throws NonUnitCoefficientError if it is
// not a p-adic unit.
PrimeField::value_type mw_coefficient(std::uint64_t n, unsigned p);

// The operator D_n = c_n · D_1^{(γ_0)} ∘ D_p^{(γ_1)} ∘ ... ∘ D_{p^s}^{(γ_s)} of the
// original axiomatization, with D_{p^t} realized as D_{(p^t, 0, ..., 0)}.
// D_0 is the identity.
OperatorExpr mw_operator(std::uint64_t n, const Params& params);

}  // namespace hasse
