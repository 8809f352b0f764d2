#pragma once

#include <limits>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hasse/fgl.hpp"
#include "hasse/monomial.hpp"
#include "hasse/params.hpp"
#include "hasse/poly.hpp"
#include "hasse/ratfun.hpp"
#include "hasse/series.hpp"

namespace hasse {

class HSConditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ȳ-expansion of D(X̄^a): j -> D_j(X̄^a).
using Expansion = std::map<MultiIndex, FpPoly>;

// Hasse–Schmidt derivation on F_p[X̄] presented by the images G_k = D(X_k)
// in F_p[X̄][Ȳ]. D acts as the substitution X_k -> G_k and D_j(f) is the
// coefficient of Ȳ^j. Expansions of monomials are memoized; lookups are safe
// from concurrent threads.
class HSDerivation {
 public:
  static constexpr unsigned kUnbounded = std::numeric_limits<unsigned>::max();

  // Throws HSConditionError unless G_k(X̄, 0̄) = X_k for every k.
  HSDerivation(const Params& params, std::vector<FpPoly> images);

  // ev_F, the derivation attached to a polynomial formal group law.
  static HSDerivation for_law(const FormalGroupLaw& law);

  const Params& params() const { return params_; }
  const PrimeField& field() const { return field_; }
  const std::vector<FpPoly>& images() const { return images_; }

  // D(f) in F_p[X̄, Ȳ].
  FpPoly apply(const FpPoly& f) const;
  // D(f) with every term of Ȳ-degree above `ybound` dropped.
  FpPoly apply_truncated(const FpPoly& f, unsigned ybound) const;
  // D_j(f).
  FpPoly component(const MultiIndex& j, const FpPoly& f) const;

  // Memoized expansion of D(X̄^a) truncated at Ȳ-degree `ybound`.
  std::shared_ptr<const Expansion> expansion(const Monomial& a, unsigned ybound = kUnbounded) const;

 private:
  struct Key {
    Monomial mono;
    unsigned bound;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return MonomialHash{}(k.mono) ^ (k.bound * 0x9e3779b9u); }
  };

  void check_input(const FpPoly& f) const;

  Params params_;
  PrimeField field_;
  std::vector<FpPoly> images_;
  std::vector<Expansion> image_expansions_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Key, std::shared_ptr<const Expansion>, KeyHash> cache_;
};

// ev_H for the Witt law H of length e.
HSDerivation canonical_witt_derivation(const Params& params);

FpPoly hsd_apply(const HSDerivation& d, const FpPoly& f);
FpPoly hsd_component(const HSDerivation& d, const MultiIndex& j, const FpPoly& f);

// One factor D_index^{(repeat)} of a composite.
struct OperatorFactor {
  MultiIndex index;
  unsigned repeat = 1;
};

// c · F_1 ∘ F_2 ∘ ... ∘ F_k, applied right to left. No factors is the identity.
struct OperatorTerm {
  PrimeField::value_type coeff = 1;
  std::vector<OperatorFactor> factors;
};

// F_p-linear combination of composites of component operators.
class OperatorExpr {
 public:
  OperatorExpr() = default;
  explicit OperatorExpr(std::vector<OperatorTerm> terms) : terms_(std::move(terms)) {}

  static OperatorExpr identity();
  static OperatorExpr component(const MultiIndex& j, unsigned repeat = 1);
  // ∂_{i,n}: the component operator with n in 1-based position i.
  static OperatorExpr partial(std::size_t e, unsigned i, unsigned n, unsigned repeat = 1);
  // D_{n_1}∘D_{n_2}^{(p)}∘...∘D_{n_e}^{(p^{e-1})} with D_n = D_{(n,0,...,0)}.
  static OperatorExpr first_axis_factorization(const MultiIndex& i, unsigned p);

  const std::vector<OperatorTerm>& terms() const { return terms_; }

  // this ∘ other
  OperatorExpr then_after(const OperatorExpr& other) const;
  OperatorExpr operator+(const OperatorExpr& other) const;
  OperatorExpr scaled(PrimeField::value_type c, const PrimeField& field) const;

  // "D(1,0)^2 * D(0,1)" style; "id" is the identity; terms may carry "c*" prefixes and join with "+".
  static OperatorExpr parse(const std::string& text, std::size_t e);
  std::string to_string() const;

 private:
  std::vector<OperatorTerm> terms_;
};

FpPoly operator_eval(const HSDerivation& d, const OperatorExpr& expr, const FpPoly& f);

// ev_{[p]_F(Ȳ^{1/p})}(D(f)): D(f) with Ȳ replaced by the Frobenius root of [p]_F.
FpPoly twisted_series(const HSDerivation& d, const FpPoly& f, const FormalGroupLaw& law);
// Σ_i D_i^{(p)}(f) Ȳ^i by direct p-fold composition.
FpPoly p_fold_series(const HSDerivation& d, const FpPoly& f);
// Frobenius root of [p]_F moved to the Ȳ block.
std::vector<FpPoly> twisted_argument(const FormalGroupLaw& law);

// δ_j^i(X̄) = d_j(X̄^i) for the canonical derivation.
struct DeltaTable {
  Params params;
  std::map<std::pair<MultiIndex, MultiIndex>, FpPoly> entries;  // (i, j) -> δ_j^i

  const FpPoly& at(const MultiIndex& i, const MultiIndex& j) const;
};

// All i in [0, max_i]^e and j in [0, max_j]^e.
DeltaTable delta_table(const Params& params, unsigned max_i, unsigned max_j);
// δ_j^i computed from a given derivation, without tabulating.
FpPoly delta(const HSDerivation& d, const MultiIndex& i, const MultiIndex& j);

// D(num)·D(den)^{-1} as a Ȳ-series over F_p(X̄) up to Ȳ-degree `ybound`.
TruncSeries extend_to_rational(const HSDerivation& d, const RatFun& r, unsigned ybound = 4);

}  // namespace hasse
