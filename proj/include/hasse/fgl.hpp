#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hasse/monomial.hpp"
#include "hasse/params.hpp"
#include "hasse/poly.hpp"

namespace hasse {

enum class LawKind { additive, multiplicative, witt, custom };

std::string to_string(LawKind kind);
LawKind parse_law_kind(const std::string& name);  // "ga", "gm", "witt"

// e-dimensional formal group law F(X̄, Ȳ) with components in F_p[X̄, Ȳ].
// All built-in laws are polynomial, so every identity is checked exactly.
class FormalGroupLaw {
 public:
  FormalGroupLaw(const Params& params, LawKind kind, std::vector<FpPoly> components);

  const Params& params() const { return params_; }
  LawKind kind() const { return kind_; }
  const PrimeField& field() const { return field_; }
  const std::vector<FpPoly>& components() const { return components_; }
  const FpPoly& component(unsigned k) const { return components_.at(k - 1); }  // 1-based
  bool is_polynomial() const { return true; }

  // F(a, b): X̄ := a, Ȳ := b, with a and b e-tuples over X̄, Ȳ, Z̄.
  std::vector<FpPoly> apply(const std::vector<FpPoly>& a, const std::vector<FpPoly>& b) const;

 private:
  Params params_;
  LawKind kind_;
  PrimeField field_;
  std::vector<FpPoly> components_;
};

// additive: X̄ + Ȳ; multiplicative (e = 1): X + Y + XY; witt: reduced Witt addition law.
FormalGroupLaw make_fgl(LawKind kind, const Params& params);

struct FglAxiomReport {
  bool left_unit = false;      // F(X̄, 0̄) = X̄
  bool right_unit = false;     // F(0̄, Ȳ) = Ȳ
  bool associative = false;
  bool commutative = false;
  bool exact = true;
  bool all_pass() const { return left_unit && right_unit && associative && commutative; }
};

FglAxiomReport fgl_axiom_check(const FormalGroupLaw& law);

// [1]_F = X̄, [N+1]_F = F(X̄, [N]_F); components over X̄.
std::vector<FpPoly> mult_by_N(const FormalGroupLaw& law, unsigned n);

// α_{i,j}(l): the coefficient of X̄^i Ȳ^j in F_1^{l_1}···F_e^{l_e}, for every l
// with |l| <= |i| + |j|. Only nonzero constants are returned.
using IterativityConstants = std::map<MultiIndex, PrimeField::value_type>;

// Lazily memoized α-tables for one law, valid for |i| + |j| <= max_order.
// Safe for concurrent lookups.
class IterativityTable {
 public:
  IterativityTable(FormalGroupLaw law, unsigned max_order);

  const FormalGroupLaw& law() const { return law_; }
  unsigned max_order() const { return max_order_; }

  // Throws std::out_of_range ("insufficient truncation bound") when |i|+|j| > max_order.
  const IterativityConstants& constants(const MultiIndex& i, const MultiIndex& j) const;
  PrimeField::value_type alpha(const MultiIndex& i, const MultiIndex& j, const MultiIndex& l) const;

 private:
  void ensure_powers() const;

  FormalGroupLaw law_;
  unsigned max_order_;
  mutable std::once_flag powers_once_;
  mutable std::map<MultiIndex, FpPoly> powers_;  // F^l truncated at total degree max_order
  mutable std::mutex mutex_;
  mutable std::map<std::pair<MultiIndex, MultiIndex>, std::unique_ptr<IterativityConstants>> memo_;
};

// One-shot computation of α_{i,j}(·).
IterativityConstants iterativity_constants(const FormalGroupLaw& law, const MultiIndex& i, const MultiIndex& j);

}  // namespace hasse
