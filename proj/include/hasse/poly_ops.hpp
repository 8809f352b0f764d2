#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hasse/poly.hpp"

namespace hasse {

class NotPthPowerError : public std::domain_error {
 public:
  NotPthPowerError() : std::domain_error("not a p-th power in exponents") {}
};

class SubstitutionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class Ring>
using Substitution = std::map<Var, Poly<Ring>>;

enum class Strictness { lenient, strict };

// Ring-homomorphic substitution of the assigned variables. Unassigned
// variables are kept, unless `strict` is requested, in which case they raise.
template <class Ring>
Poly<Ring> substitute(const Poly<Ring>& f, const Substitution<Ring>& assignment,
                      Strictness strictness = Strictness::lenient) {
  const Ring& ring = f.ring();
  for (const auto& [v, img] : assignment) f.check_domain(img);

  std::array<const Poly<Ring>*, Monomial::kSlots> image{};
  for (const auto& [v, img] : assignment) image[Monomial::slot(v)] = &img;
  std::array<std::vector<Poly<Ring>>, Monomial::kSlots> powers;
  auto power = [&](std::size_t s, std::uint32_t k) -> const Poly<Ring>& {
    auto& cache = powers[s];
    if (cache.empty()) cache.push_back(Poly<Ring>::constant(ring, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * *image[s]);
    return cache[k];
  };

  Poly<Ring> result(ring);
  for (const auto& [m, c] : f.terms()) {
    Monomial kept;
    std::vector<std::pair<std::size_t, std::uint32_t>> replaced;
    for (std::size_t s = 0; s < Monomial::kSlots; ++s) {
      const auto k = m.at(s);
      if (k == 0) continue;
      if (image[s]) {
        replaced.emplace_back(s, k);
      } else {
        if (strictness == Strictness::strict) {
          const Var v = Monomial::var_of_slot(s);
          throw SubstitutionError(std::string("no image for variable ") + block_name(v.block) +
                                  std::to_string(v.index));
        }
        kept.at(s) = k;
      }
    }
    Poly<Ring> acc = Poly<Ring>::term(ring, kept, c);
    for (const auto& [s, k] : replaced) {
      acc *= power(s, k);
      if (acc.is_zero()) break;
    }
    result += acc;
  }
  return result;
}

// The polynomial in the remaining blocks that multiplies block^j.
template <class Ring>
Poly<Ring> coefficient_of(const Poly<Ring>& f, Block block, const MultiIndex& j) {
  const Monomial target = Monomial::from_index(block, j);
  Poly<Ring> r(f.ring());
  for (const auto& [m, c] : f.terms())
    if (m.only(block) == target) r.add_term(m.without(block), c);
  return r;
}

// Group terms by their exponent in `block`: f = Σ key · value, with key a
// pure block monomial and value free of that block.
template <class Ring>
std::map<Monomial, Poly<Ring>, GrlexDesc> split_by_block(const Poly<Ring>& f, Block block) {
  std::map<Monomial, Poly<Ring>, GrlexDesc> out;
  for (const auto& [m, c] : f.terms()) {
    auto it = out.try_emplace(m.only(block), f.ring()).first;
    it->second.add_term(m.without(block), c);
  }
  return out;
}

// f with every variable of `block` set to zero.
template <class Ring>
Poly<Ring> set_block_zero(const Poly<Ring>& f, Block block) {
  return f.filtered([block](const Monomial& m) { return !m.uses(block); });
}

// Rename the variables of block `from` to block `to`.
template <class Ring>
Poly<Ring> rename_block(const Poly<Ring>& f, Block from, Block to) {
  return f.map_monomials([=](const Monomial& m) { return m.moved(from, to); });
}

// Exponentwise division by p. Coefficients are unchanged.
template <class Ring>
Poly<Ring> frobenius_root(const Poly<Ring>& f, unsigned p) {
  Poly<Ring> r(f.ring());
  for (const auto& [m, c] : f.terms()) {
    Monomial q;
    for (std::size_t s = 0; s < Monomial::kSlots; ++s) {
      if (m.at(s) % p != 0) throw NotPthPowerError();
      q.at(s) = m.at(s) / p;
    }
    r.add_term(q, c);
  }
  return r;
}

// Exponentwise multiplication by k. Over F_p with k = p^n this is f^(p^n).
template <class Ring>
Poly<Ring> exponent_scale(const Poly<Ring>& f, std::uint64_t k) {
  return f.map_monomials([k](const Monomial& m) {
    Monomial q;
    for (std::size_t s = 0; s < Monomial::kSlots; ++s) q.at(s) = static_cast<std::uint32_t>(m.at(s) * k);
    return q;
  });
}

// Drop all terms of total degree above `d`.
template <class Ring>
Poly<Ring> truncate_degree(const Poly<Ring>& f, std::uint64_t d) {
  return f.filtered([d](const Monomial& m) { return m.degree() <= d; });
}

// a * b with every term of total degree above `d` discarded.
template <class Ring>
Poly<Ring> truncated_mul(const Poly<Ring>& a, const Poly<Ring>& b, std::uint64_t d) {
  a.check_domain(b);
  Poly<Ring> r(a.ring());
  for (const auto& [ma, ca] : a.terms()) {
    const auto da = ma.degree();
    if (da > d) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (da + mb.degree() > d) continue;
      r.add_term(ma * mb, a.ring().mul(ca, cb));
    }
  }
  return r;
}

// Reduction of an integer polynomial modulo p.
inline FpPoly reduce_mod(const ZPoly& f, const PrimeField& field) {
  FpPoly r(field);
  for (const auto& [m, c] : f.terms()) r.add_term(m, field.from_big(c));
  return r;
}

// Integer polynomial divided by a scalar; nullopt if some coefficient is not divisible.
inline std::optional<ZPoly> divide_exact(const ZPoly& f, const BigInt& d) {
  if (d == 0) throw DomainError("division by zero");
  ZPoly r(f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (c % d != 0) return std::nullopt;
    r.add_term(m, c / d);
  }
  return r;
}

// Exact multivariate division a / b over F_p; nullopt if b does not divide a.
inline std::optional<FpPoly> divide_exact(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  a.check_domain(b);
  const auto& field = a.ring();
  const Monomial& lb = b.leading_monomial();
  const auto inv_lc = field.inv(b.leading_coefficient());
  FpPoly q(field);
  FpPoly r = a;
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!lb.divides(lr)) return std::nullopt;
    const Monomial t = lb.quotient_of(lr);
    const auto c = field.mul(r.leading_coefficient(), inv_lc);
    q.add_term(t, c);
    for (const auto& [m, cb] : b.terms()) r.add_term(m * t, field.neg(field.mul(c, cb)));
  }
  return q;
}

// Scale so that the leading coefficient is 1. Zero stays zero.
inline FpPoly make_monic(const FpPoly& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.ring().inv(f.leading_coefficient()));
}

}  // namespace hasse
