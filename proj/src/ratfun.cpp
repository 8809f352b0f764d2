#include "hasse/ratfun.hpp"

#include <optional>
#include <vector>

#include "hasse/poly_ops.hpp"

namespace hasse {

namespace {

// A polynomial viewed as univariate in one slot, coefficients free of it.
using Univariate = std::vector<FpPoly>;

Univariate to_univariate(const FpPoly& f, std::size_t slot) {
  Univariate u;
  for (const auto& [m, c] : f.terms()) {
    const auto k = m.at(slot);
    while (u.size() <= k) u.emplace_back(f.ring());
    Monomial rest = m;
    rest.at(slot) = 0;
    u[k].add_term(rest, c);
  }
  while (!u.empty() && u.back().is_zero()) u.pop_back();
  return u;
}

FpPoly from_univariate(const Univariate& u, std::size_t slot, const PrimeField& field) {
  FpPoly f(field);
  for (std::size_t k = 0; k < u.size(); ++k) {
    Monomial vk;
    vk.at(slot) = static_cast<std::uint32_t>(k);
    f += u[k].times_monomial(vk);
  }
  return f;
}

FpPoly content(const Univariate& u, const PrimeField& field) {
  FpPoly g(field);
  for (const auto& c : u) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Univariate divide_coefficients(const Univariate& u, const FpPoly& d) {
  Univariate r;
  r.reserve(u.size());
  for (const auto& c : u) {
    auto q = divide_exact(c, d);
    if (!q) throw std::logic_error("content does not divide coefficient");
    r.push_back(std::move(*q));
  }
  return r;
}

Univariate primitive_part(const Univariate& u, const PrimeField& field) {
  if (u.empty()) return u;
  const FpPoly c = content(u, field);
  if (c.is_one()) return u;
  return divide_coefficients(u, c);
}

// lc(b)^k a - q b with deg r < deg b; b nonzero.
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const std::size_t n = b.size() - 1;
  const FpPoly& lb = b.back();
  while (!a.empty() && a.size() - 1 >= n) {
    const std::size_t shift = a.size() - 1 - n;
    const FpPoly la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k <= n; ++k) a[k + shift] -= la * b[k];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return a;
}

std::optional<std::size_t> first_used_slot(const FpPoly& a, const FpPoly& b) {
  for (std::size_t s = 0; s < Monomial::kSlots; ++s) {
    for (const FpPoly* f : {&a, &b})
      for (const auto& [m, c] : f->terms())
        if (m.at(s) != 0) return s;
  }
  return std::nullopt;
}

}  // namespace

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  a.check_domain(b);
  const PrimeField& field = a.ring();
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return FpPoly::constant(field, 1);
  if (a == b) return make_monic(a);

  const auto slot = first_used_slot(a, b);
  if (!slot) return FpPoly::constant(field, 1);

  const Univariate ua = to_univariate(a, *slot);
  const Univariate ub = to_univariate(b, *slot);
  const FpPoly ca = content(ua, field);
  const FpPoly cb = content(ub, field);
  const FpPoly c = gcd(ca, cb);

  Univariate pa = divide_coefficients(ua, ca);
  Univariate pb = divide_coefficients(ub, cb);
  if (pa.size() < pb.size()) std::swap(pa, pb);

  Univariate g;
  if (pb.size() <= 1) {
    g = {FpPoly::constant(field, 1)};
  } else {
    while (true) {
      Univariate r = pseudo_remainder(pa, pb);
      if (r.empty()) {
        g = pb;
        break;
      }
      if (r.size() == 1) {
        g = {FpPoly::constant(field, 1)};
        break;
      }
      pa = std::move(pb);
      pb = primitive_part(r, field);
    }
  }
  return make_monic(c * from_univariate(primitive_part(g, field), *slot, field));
}

RatFun::RatFun(const PrimeField& field) : num_(field), den_(FpPoly::constant(field, 1)) {}

RatFun::RatFun(FpPoly poly) : num_(std::move(poly)), den_(FpPoly::constant(num_.ring(), 1)) {}

RatFun::RatFun(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
  num_.check_domain(den_);
  normalize();
}

RatFun RatFun::constant(const PrimeField& field, long long c) { return RatFun(FpPoly::constant(field, c)); }

void RatFun::normalize() {
  if (den_.is_zero()) throw DomainError("zero denominator");
  if (num_.is_zero()) {
    den_ = FpPoly::constant(field(), 1);
    return;
  }
  if (!den_.is_constant()) {
    const FpPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  const auto inv = field().inv(den_.leading_coefficient());
  if (!field().is_one(inv)) {
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFun ratfun_normalize(const FpPoly& num, const FpPoly& den) { return RatFun(num, den); }

RatFun RatFun::from_factors(FpPoly num, std::vector<FpPoly> den_factors) {
  for (const auto& f : den_factors) {
    num.check_domain(f);
    if (f.is_zero()) throw DomainError("zero denominator");
  }
  if (num.is_zero()) return RatFun(num.ring());
  // gcd(num, Π f) = 1 once gcd(num, f) = 1 for every remaining factor.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& f : den_factors) {
      if (f.is_constant()) continue;
      const FpPoly g = gcd(num, f);
      if (g.is_constant()) continue;
      num = *divide_exact(num, g);
      f = *divide_exact(f, g);
      changed = true;
    }
  }
  FpPoly den = FpPoly::constant(num.ring(), 1);
  for (const auto& f : den_factors) den *= f;
  return RatFun(std::move(num), std::move(den), Normalized{}).with_monic_den();
}

RatFun ratfun_over_power(FpPoly num, const FpPoly& base, std::uint64_t power) {
  if (base.is_zero()) throw DomainError("zero denominator");
  while (power > 0 && !base.is_constant()) {
    auto quotient = divide_exact(num, base);
    if (!quotient) break;
    num = std::move(*quotient);
    --power;
  }
  return RatFun::from_factors(std::move(num), std::vector<FpPoly>(power, base));
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational function");
  return RatFun(den_, num_);
}

RatFun RatFun::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  return RatFun(num_.pow(k), den_.pow(k), Normalized{}).with_monic_den();
}

RatFun RatFun::with_monic_den() const {
  RatFun r = *this;
  const auto inv = field().inv(den_.leading_coefficient());
  if (!field().is_one(inv)) {
    r.num_ = num_.scaled(inv);
    r.den_ = den_.scaled(inv);
  }
  return r;
}

RatFun RatFun::frobenius_power(unsigned n) const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) q *= field().characteristic();
  return RatFun(exponent_scale(num_, q), exponent_scale(den_, q), Normalized{}).with_monic_den();
}

RatFun& RatFun::operator+=(const RatFun& o) {
  num_.check_domain(o.num_);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  const FpPoly g = gcd(den_, o.den_);
  const FpPoly d1 = *divide_exact(den_, g);
  const FpPoly d2 = *divide_exact(o.den_, g);
  num_ = num_ * d2 + o.num_ * d1;
  den_ = d1 * o.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  num_.check_domain(o.num_);
  if (is_zero() || o.is_zero()) {
    num_ = FpPoly(field());
    den_ = FpPoly::constant(field(), 1);
    return *this;
  }
  const FpPoly g1 = gcd(num_, o.den_);
  const FpPoly g2 = gcd(o.num_, den_);
  FpPoly n = *divide_exact(num_, g1) * *divide_exact(o.num_, g2);
  FpPoly d = *divide_exact(den_, g2) * *divide_exact(o.den_, g1);
  *this = RatFun(std::move(n), std::move(d), Normalized{}).with_monic_den();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Normalized{}); }

}  // namespace hasse
