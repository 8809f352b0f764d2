#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hasse/coeff.hpp"
#include "hasse/monomial.hpp"

namespace hasse {

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sparse multivariate polynomial over `Ring` in the variables X̄, Ȳ, Z̄.
// Terms are kept in canonical descending graded-lex order, with no zero
// coefficients stored.
template <class Ring>
class Poly {
 public:
  using Coeff = typename Ring::value_type;
  using Terms = std::map<Monomial, Coeff, GrlexDesc>;

  explicit Poly(Ring ring) : ring_(std::move(ring)) {}

  static Poly constant(Ring ring, long long c) {
    Poly r(ring);
    r.add_term(Monomial{}, ring.from_int(c));
    return r;
  }
  static Poly constant_of(Ring ring, const Coeff& c) {
    Poly r(ring);
    r.add_term(Monomial{}, c);
    return r;
  }
  static Poly variable(Ring ring, Var v) {
    Poly r(ring);
    r.add_term(Monomial::var(v), ring.one());
    return r;
  }
  static Poly term(Ring ring, const Monomial& m, const Coeff& c) {
    Poly r(ring);
    r.add_term(m, c);
    return r;
  }
  static Poly term(Ring ring, const Monomial& m) { return term(ring, m, ring.one()); }

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  bool is_one() const { return is_constant() && !terms_.empty() && ring_.is_one(terms_.begin()->second); }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ring_.zero() : it->second;
  }
  Coeff constant_term() const { return coefficient(Monomial{}); }

  // Leading term in canonical order; the polynomial must be nonzero.
  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_.begin()->first;
  }
  const Coeff& leading_coefficient() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_.begin()->second;
  }

  std::uint64_t degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
  std::uint64_t degree(Block b) const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree(b));
    return d;
  }
  std::uint32_t degree(Var v) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
  }
  bool uses(Block b) const {
    for (const auto& [m, c] : terms_)
      if (m.uses(b)) return true;
    return false;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check_domain(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_domain(o);
    for (const auto& [m, c] : o.terms_) add_term(m, ring_.neg(c));
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, ring_.neg(c));
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_domain(b);
    Poly r(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.size() * b.size() <= 16) {
      for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, a.ring_.mul(ca, cb));
      return r;
    }
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        auto prod = a.ring_.mul(ca, cb);
        auto [it, inserted] = acc.try_emplace(ma * mb, prod);
        if (!inserted) it->second = a.ring_.add(it->second, prod);
      }
    }
    for (auto& [m, c] : acc)
      if (!a.ring_.is_zero(c)) r.terms_.emplace(m, std::move(c));
    return r;
  }

  Poly scaled(const Coeff& s) const {
    Poly r(ring_);
    if (ring_.is_zero(s)) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, ring_.mul(c, s));
    return r;
  }
  Poly times_monomial(const Monomial& mono) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m * mono, c);
    return r;
  }

  Poly pow(long long k) const {
    if (k < 0) throw DomainError("negative exponent in polynomial power");
    Poly result = constant(ring_, 1);
    Poly base = *this;
    auto n = static_cast<unsigned long long>(k);
    while (n) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  // Apply `fn` to every monomial; monomials that collide are summed.
  template <class Fn>
  Poly map_monomials(Fn&& fn) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) r.add_term(fn(m), c);
    return r;
  }

  // Keep only the terms satisfying `pred`.
  template <class Pred>
  Poly filtered(Pred&& pred) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_)
      if (pred(m)) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
  }

  void check_domain(const Poly& o) const {
    if (!(ring_ == o.ring_)) throw DomainError("polynomial coefficient domains differ");
  }

 private:
  Ring ring_;
  Terms terms_;
};

using FpPoly = Poly<PrimeField>;
using ZPoly = Poly<Integers>;

}  // namespace hasse
