#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "hasse/params.hpp"
#include "hasse/poly.hpp"

namespace hasse {

class WittLawError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Ghost polynomial Σ_{i=0..m} p^i · V_{i+1}^{p^(m-i)} in the variables of `block`.
ZPoly witt_polynomial(unsigned p, unsigned m, Block block = Block::X);

// Witt addition law of length e. `integral[k]` is S_{k+1} over Z in X̄, Ȳ and
// `reduced[k]` is H_{k+1} = S_{k+1} mod p.
struct WittLawSet {
  Params params;
  std::vector<ZPoly> integral;
  std::vector<FpPoly> reduced;
};

// Builds S_1..S_e from ghost components by exact division and re-checks
// the ghost identity before returning. Throws WittLawError if either fails.
WittLawSet witt_addition_law(const Params& params);

// Shared, memoized variant of witt_addition_law.
std::shared_ptr<const WittLawSet> cached_witt_law(const Params& params);

// W_m(S_1, ..., S_{m+1}) == W_m(X̄) + W_m(Ȳ) over Z, for 0 <= m < e.
bool ghost_identity_holds(const WittLawSet& law, unsigned m);

enum class WittEndomorphism { frobenius, verschiebung, restriction };

// fr: (v_1..v_n) -> (v_1^p..v_n^p); ve: -> (0, v_1..v_n); re: -> (v_1..v_{n-1}).
// Lengths must match `n`, the source length expected by the caller.
std::vector<FpPoly> witt_endomorphism(WittEndomorphism kind, const std::vector<FpPoly>& v, std::size_t n,
                                      unsigned p);

// fr∘ve∘re applied to the coordinates (X_1..X_e).
std::vector<FpPoly> frobenius_verschiebung_restriction(const Params& params);

}  // namespace hasse
