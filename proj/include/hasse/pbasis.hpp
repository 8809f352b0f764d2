#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hasse/hsd.hpp"
#include "hasse/ratfun.hpp"

namespace hasse {

// i ∈ [p^n]^e -> α_i, nonzero entries only.
using Decomposition = std::map<MultiIndex, RatFun>;

// x = Σ α_i^{p^n} X̄^i. Polynomials split each exponent as p^n·q + r; for
// f/g the polynomial f·g^{p^n - 1} is split and each part divided by g.
Decomposition p_power_decompose(const RatFun& x, unsigned n, const Params& params);
// Σ α_i^{p^n} X̄^i.
RatFun reassemble(const Decomposition& parts, unsigned n, const Params& params);

// Result of p_independence_check. The verdict only covers coefficients of
// degree <= degree_bound.
struct IndependenceVerdict {
  bool independent = false;
  unsigned degree_bound = 0;
  // When dependent: i -> x_i with Σ x_i^p b̄^i = 0 and some x_i != 0.
  std::map<MultiIndex, FpPoly> kernel_witness;

  std::string label() const;
};

// Decides whether Σ_{i∈[p]^e} x_i^p b̄^i = 0 forces every x_i = 0, for x_i in
// F_p[X̄] of degree <= degree_bound, by exact linear algebra. Candidates
// must be polynomials.
IndependenceVerdict p_independence_check(const std::vector<RatFun>& candidates, unsigned degree_bound,
                                         const Params& params);

// Fixed p-basis b̄ = X̄ of F_p(X̄) with the canonical derivation and a lazily
// filled δ table. Construction verifies that X̄ is p-independent.
class PBasisContext {
 public:
  explicit PBasisContext(const Params& params, unsigned independence_degree = 6);

  const Params& params() const { return params_; }
  const HSDerivation& derivation() const { return derivation_; }
  const IndependenceVerdict& basis_verdict() const { return verdict_; }

  // δ_j^i(X̄), memoized.
  const FpPoly& delta(const MultiIndex& i, const MultiIndex& j) const;

  // Basis conditions on the box i ∈ [0,max_i]^e, j ∈ [0,max_j]^e: D_j(b̄^i), computed through
  // the rational extension, equals δ_j^i(b̄).
  bool basis_conditions_hold(unsigned max_i, unsigned max_j) const;

 private:
  Params params_;
  HSDerivation derivation_;
  IndependenceVerdict verdict_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<MultiIndex, MultiIndex>, std::unique_ptr<FpPoly>> deltas_;
};

class PBasisBoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Σ_i α_i^{p^n} δ_j^i(X̄) for the decomposition of x at level n. Requires
// n >= max(j_1, ..., j_e).
RatFun derivation_via_pbasis(const PBasisContext& ctx, const RatFun& x, const MultiIndex& j, unsigned n);

}  // namespace hasse
