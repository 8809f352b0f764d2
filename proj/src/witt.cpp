#include "hasse/witt.hpp"

#include <map>
#include <mutex>
#include <string>

#include "hasse/poly_ops.hpp"

namespace hasse {

ZPoly witt_polynomial(unsigned p, unsigned m, Block block) {
  const Integers zz;
  ZPoly w(zz);
  BigInt coeff = 1;
  for (unsigned i = 0; i <= m; ++i) {
    std::uint64_t exponent = 1;
    for (unsigned t = i; t < m; ++t) exponent *= p;
    w.add_term(Monomial::var(Var{block, i + 1}, static_cast<std::uint32_t>(exponent)), coeff);
    coeff *= p;
  }
  return w;
}

namespace {

// Σ_{k<=upto} p^k · S_{k+1}^{p^(m-k)}
ZPoly ghost_of_components(const std::vector<ZPoly>& s, unsigned p, unsigned m, unsigned upto) {
  const Integers zz;
  ZPoly acc(zz);
  BigInt pk = 1;
  for (unsigned k = 0; k <= upto; ++k) {
    std::uint64_t exponent = 1;
    for (unsigned t = k; t < m; ++t) exponent *= p;
    acc += s[k].pow(static_cast<long long>(exponent)).scaled(pk);
    pk *= p;
  }
  return acc;
}

}  // namespace

WittLawSet witt_addition_law(const Params& params) {
  const unsigned p = params.p();
  const unsigned e = params.e();
  const PrimeField field(p);
  WittLawSet law{params, {}, {}};
  BigInt pm = 1;
  for (unsigned m = 0; m < e; ++m) {
    ZPoly target = witt_polynomial(p, m, Block::X) + witt_polynomial(p, m, Block::Y);
    if (m > 0) target -= ghost_of_components(law.integral, p, m, m - 1);
    auto next = divide_exact(target, pm);
    if (!next) throw WittLawError("inexact division by p^" + std::to_string(m) + " while building S_" +
                                  std::to_string(m + 1));
    law.integral.push_back(std::move(*next));
    pm *= p;
  }
  for (unsigned m = 0; m < e; ++m) {
    if (!ghost_identity_holds(law, m))
      throw WittLawError("ghost identity fails for W_" + std::to_string(m));
  }
  for (const auto& s : law.integral) law.reduced.push_back(reduce_mod(s, field));
  return law;
}

std::shared_ptr<const WittLawSet> cached_witt_law(const Params& params) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const WittLawSet>> cache;
  const auto key = std::make_pair(params.p(), params.e());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto law = std::make_shared<const WittLawSet>(witt_addition_law(params));
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(law)).first->second;
}

bool ghost_identity_holds(const WittLawSet& law, unsigned m) {
  if (m >= law.integral.size()) return false;
  const unsigned p = law.params.p();
  const ZPoly lhs = ghost_of_components(law.integral, p, m, m);
  const ZPoly rhs = witt_polynomial(p, m, Block::X) + witt_polynomial(p, m, Block::Y);
  return lhs == rhs;
}

std::vector<FpPoly> witt_endomorphism(WittEndomorphism kind, const std::vector<FpPoly>& v, std::size_t n,
                                      unsigned p) {
  if (v.size() != n) throw std::invalid_argument("Witt vector length does not match the source length");
  switch (kind) {
    case WittEndomorphism::frobenius: {
      std::vector<FpPoly> r;
      for (const auto& x : v) r.push_back(x.pow(p));
      return r;
    }
    case WittEndomorphism::verschiebung: {
      if (v.empty()) throw std::invalid_argument("Verschiebung of an empty vector");
      std::vector<FpPoly> r{FpPoly(v.front().ring())};
      r.insert(r.end(), v.begin(), v.end());
      return r;
    }
    case WittEndomorphism::restriction: {
      if (n == 0) throw std::invalid_argument("restriction of W_0");
      return std::vector<FpPoly>(v.begin(), v.end() - 1);
    }
  }
  throw std::invalid_argument("unknown Witt endomorphism");
}

std::vector<FpPoly> frobenius_verschiebung_restriction(const Params& params) {
  const PrimeField field(params.p());
  const std::size_t e = params.e();
  std::vector<FpPoly> x;
  for (unsigned k = 1; k <= e; ++k) x.push_back(FpPoly::variable(field, Var{Block::X, k}));
  if (e == 1) {
    // re: W_1 -> W_0 then ve: W_0 -> W_1 gives the zero vector.
    return {FpPoly(field)};
  }
  auto r = witt_endomorphism(WittEndomorphism::restriction, x, e, params.p());
  auto v = witt_endomorphism(WittEndomorphism::verschiebung, r, e - 1, params.p());
  return witt_endomorphism(WittEndomorphism::frobenius, v, e, params.p());
}

}  // namespace hasse
