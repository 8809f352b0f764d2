#pragma once

#include <map>
#include <string>

#include "hasse/monomial.hpp"
#include "hasse/ratfun.hpp"

namespace hasse {

class ZeroConstantTermError : public std::domain_error {
 public:
  ZeroConstantTermError() : std::domain_error("zero constant term") {}
};

// Power series in Ȳ with coefficients in F_p(X̄), known up to total Ȳ-degree
// `bound`. Arithmetic results carry the smaller operand bound.
class TruncSeries {
 public:
  using Coefficients = std::map<MultiIndex, RatFun>;

  TruncSeries(const PrimeField& field, std::size_t e, unsigned bound);

  // A polynomial in X̄, Ȳ read as a series in Ȳ (terms above the bound dropped).
  static TruncSeries from_poly(const FpPoly& f, std::size_t e, unsigned bound);
  static TruncSeries constant(const RatFun& c, std::size_t e, unsigned bound);

  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return e_; }
  unsigned bound() const { return bound_; }
  const Coefficients& coefficients() const { return coeffs_; }

  RatFun coefficient(const MultiIndex& j) const;
  RatFun constant_term() const { return coefficient(MultiIndex::zero(e_)); }
  void set_coefficient(const MultiIndex& j, RatFun c);

  bool is_zero() const { return coeffs_.empty(); }

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

  TruncSeries with_bound(unsigned bound) const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.e_ == b.e_ && a.bound_ == b.bound_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_compatible(const TruncSeries& o) const;

  PrimeField field_;
  std::size_t e_;
  unsigned bound_;
  Coefficients coeffs_;
};

// f · result ≡ 1 modulo terms of Ȳ-degree above min(d, f.bound()).
TruncSeries series_inverse(const TruncSeries& f, unsigned d);

}  // namespace hasse
