#include "hasse/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "hasse/poly_ops.hpp"

namespace hasse {

TruncSeries::TruncSeries(const PrimeField& field, std::size_t e, unsigned bound)
    : field_(field), e_(e), bound_(bound) {}

TruncSeries TruncSeries::from_poly(const FpPoly& f, std::size_t e, unsigned bound) {
  TruncSeries s(f.ring(), e, bound);
  for (auto& [ymono, coeff] : split_by_block(f, Block::Y)) {
    if (ymono.degree() > bound) continue;
    s.set_coefficient(ymono.index(Block::Y, e), RatFun(coeff));
  }
  return s;
}

TruncSeries TruncSeries::constant(const RatFun& c, std::size_t e, unsigned bound) {
  TruncSeries s(c.field(), e, bound);
  s.set_coefficient(MultiIndex::zero(e), c);
  return s;
}

RatFun TruncSeries::coefficient(const MultiIndex& j) const {
  auto it = coeffs_.find(j);
  return it == coeffs_.end() ? RatFun(field_) : it->second;
}

void TruncSeries::set_coefficient(const MultiIndex& j, RatFun c) {
  if (j.size() != e_) throw std::invalid_argument("series index width mismatch");
  if (j.total() > bound_) return;
  if (c.is_zero()) {
    coeffs_.erase(j);
  } else {
    coeffs_.insert_or_assign(j, std::move(c));
  }
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
  if (!(field_ == o.field_) || e_ != o.e_) throw DomainError("series domains differ");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  check_compatible(o);
  bound_ = std::min(bound_, o.bound_);
  std::erase_if(coeffs_, [this](const auto& kv) { return kv.first.total() > bound_; });
  for (const auto& [j, c] : o.coeffs_) {
    if (j.total() > bound_) continue;
    set_coefficient(j, coefficient(j) + c);
  }
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  check_compatible(o);
  TruncSeries neg(o.field_, o.e_, o.bound_);
  for (const auto& [j, c] : o.coeffs_) neg.coeffs_.emplace(j, -c);
  return *this += neg;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.check_compatible(b);
  TruncSeries r(a.field_, a.e_, std::min(a.bound_, b.bound_));
  for (const auto& [ja, ca] : a.coeffs_) {
    for (const auto& [jb, cb] : b.coeffs_) {
      const MultiIndex j = ja + jb;
      if (j.total() > r.bound_) continue;
      r.set_coefficient(j, r.coefficient(j) + ca * cb);
    }
  }
  return r;
}

TruncSeries TruncSeries::with_bound(unsigned bound) const {
  TruncSeries r(field_, e_, std::min(bound, bound_));
  for (const auto& [j, c] : coeffs_)
    if (j.total() <= r.bound_) r.coeffs_.emplace(j, c);
  return r;
}

TruncSeries series_inverse(const TruncSeries& f, unsigned d) {
  const RatFun c0 = f.constant_term();
  if (c0.is_zero()) throw ZeroConstantTermError();
  const unsigned bound = std::min(d, f.bound());
  const RatFun inv_c0 = c0.inverse();
  TruncSeries g(f.field(), f.dim(), bound);
  for (const MultiIndex& j : indices_up_to_total(f.dim(), bound)) {
    if (j.is_zero()) {
      g.set_coefficient(j, inv_c0);
      continue;
    }
    RatFun acc(f.field());
    for (const auto& [k, fk] : f.coefficients()) {
      if (k.is_zero() || !k.dominated_by(j)) continue;
      MultiIndex rest = j;
      for (std::size_t t = 0; t < rest.size(); ++t) rest[t] -= k[t];
      const RatFun gr = g.coefficient(rest);
      if (!gr.is_zero()) acc += fk * gr;
    }
    if (!acc.is_zero()) g.set_coefficient(j, -(acc * inv_c0));
  }
  return g;
}

}  // namespace hasse
