#include "hasse/pbasis.hpp"

#include <stdexcept>

#include "hasse/linalg.hpp"
#include "hasse/poly_ops.hpp"

namespace hasse {

namespace {

std::uint64_t power_of(unsigned p, unsigned n) {
  std::uint64_t q = 1;
  for (unsigned k = 0; k < n; ++k) q *= p;
  return q;
}

// f = Σ_r β_r^{q} X̄^r with r ∈ [q]^e, exponentwise.
std::map<MultiIndex, FpPoly> split_exponents(const FpPoly& f, std::uint64_t q, std::size_t e) {
  if (f.uses(Block::Y) || f.uses(Block::Z)) throw DomainError("p-basis decomposition expects F_p(X̄)");
  std::map<MultiIndex, FpPoly> parts;
  for (const auto& [m, c] : f.terms()) {
    MultiIndex r(e);
    Monomial quotient;
    for (unsigned k = 1; k <= e; ++k) {
      const auto a = m.exponent(Var{Block::X, k});
      r[k - 1] = static_cast<std::uint32_t>(a % q);
      quotient.set_exponent(Var{Block::X, k}, static_cast<std::uint32_t>(a / q));
    }
    parts.try_emplace(r, f.ring()).first->second.add_term(quotient, c);
  }
  std::erase_if(parts, [](const auto& kv) { return kv.second.is_zero(); });
  return parts;
}

}  // namespace

Decomposition p_power_decompose(const RatFun& x, unsigned n, const Params& params) {
  const std::uint64_t q = power_of(params.p(), n);
  const std::size_t e = params.e();
  Decomposition out;
  if (x.is_polynomial()) {
    for (auto& [r, beta] : split_exponents(x.num(), q, e)) out.emplace(r, RatFun(std::move(beta)));
    return out;
  }
  const FpPoly& g = x.den();
  const FpPoly h = x.num() * g.pow(static_cast<long long>(q - 1));
  for (auto& [r, beta] : split_exponents(h, q, e)) out.emplace(r, RatFun(std::move(beta), g));
  return out;
}

RatFun reassemble(const Decomposition& parts, unsigned n, const Params& params) {
  // Over the common denominator L = lcm of the den(α_i): Σ (α_i L)^q X̄^i / L^q.
  const PrimeField field(params.p());
  const std::uint64_t q = power_of(params.p(), n);
  FpPoly lcm = FpPoly::constant(field, 1);
  for (const auto& [i, alpha] : parts) {
    const auto& b = alpha.den();
    lcm = lcm * *divide_exact(b, gcd(lcm, b));
  }
  FpPoly num(field);
  for (const auto& [i, alpha] : parts) {
    const FpPoly scaled = alpha.num() * *divide_exact(lcm, alpha.den());
    num += exponent_scale(scaled, q).times_monomial(Monomial::from_index(Block::X, i));
  }
  return ratfun_over_power(std::move(num), lcm, q);
}

std::string IndependenceVerdict::label() const {
  return std::string(independent ? "independent" : "dependent") + " up to degree " + std::to_string(degree_bound);
}

IndependenceVerdict p_independence_check(const std::vector<RatFun>& candidates, unsigned degree_bound,
                                         const Params& params) {
  const std::size_t e = params.e();
  const unsigned p = params.p();
  const PrimeField field(p);
  if (candidates.size() != e) throw std::invalid_argument("need exactly e candidates");
  std::vector<FpPoly> b;
  for (const auto& c : candidates) {
    if (!c.is_polynomial()) throw std::invalid_argument("p-independence check takes polynomial candidates");
    b.push_back(c.num());
  }

  const auto exps = indices_in_box(e, p);                       // i ∈ [p]^e
  const auto monos = indices_up_to_total(e, degree_bound);       // support of x_i
  // column (i, m) -> X̄^{p·m} · b̄^i
  std::vector<FpPoly> columns;
  for (const auto& i : exps) {
    FpPoly bi = FpPoly::constant(field, 1);
    for (std::size_t k = 0; k < e; ++k) bi *= b[k].pow(i[k]);
    for (const auto& m : monos) {
      MultiIndex pm = m;
      for (std::size_t k = 0; k < e; ++k) pm[k] *= p;
      columns.push_back(bi.times_monomial(Monomial::from_index(Block::X, pm)));
    }
  }
  std::map<Monomial, std::size_t, GrlexDesc> rows;
  for (const auto& col : columns)
    for (const auto& [m, c] : col.terms()) rows.try_emplace(m, 0);
  std::size_t r = 0;
  for (auto& [m, idx] : rows) idx = r++;

  FpMatrix a(field, rows.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [m, v] : columns[c].terms()) a(rows.at(m), c) = v;

  IndependenceVerdict verdict;
  verdict.degree_bound = degree_bound;
  const auto kernel = kernel_basis(std::move(a));
  verdict.independent = kernel.empty();
  if (!kernel.empty()) {
    const auto& v = kernel.front();
    for (std::size_t ii = 0; ii < exps.size(); ++ii) {
      FpPoly x(field);
      for (std::size_t mm = 0; mm < monos.size(); ++mm)
        x.add_term(Monomial::from_index(Block::X, monos[mm]), v[ii * monos.size() + mm]);
      if (!x.is_zero()) verdict.kernel_witness.emplace(exps[ii], std::move(x));
    }
  }
  return verdict;
}

PBasisContext::PBasisContext(const Params& params, unsigned independence_degree)
    : params_(params), derivation_(canonical_witt_derivation(params)) {
  const PrimeField field(params.p());
  std::vector<RatFun> basis;
  for (unsigned k = 1; k <= params.e(); ++k) basis.emplace_back(FpPoly::variable(field, Var{Block::X, k}));
  verdict_ = p_independence_check(basis, independence_degree, params);
  if (!verdict_.independent) throw std::logic_error("coordinate basis failed the p-independence check");
}

const FpPoly& PBasisContext::delta(const MultiIndex& i, const MultiIndex& j) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = deltas_.find({i, j}); it != deltas_.end()) return *it->second;
  }
  const auto ex = derivation_.expansion(Monomial::from_index(Block::X, i), static_cast<unsigned>(j.total()));
  auto value = std::make_unique<FpPoly>(PrimeField(params_.p()));
  if (auto it = ex->find(j); it != ex->end()) *value = it->second;
  std::lock_guard lock(mutex_);
  return *deltas_.try_emplace({i, j}, std::move(value)).first->second;
}

bool PBasisContext::basis_conditions_hold(unsigned max_i, unsigned max_j) const {
  const PrimeField field(params_.p());
  const std::size_t e = params_.e();
  for (const auto& i : indices_in_box(e, max_i + 1)) {
    const RatFun bi(FpPoly::term(field, Monomial::from_index(Block::X, i)));
    const TruncSeries series = extend_to_rational(derivation_, bi, max_j * static_cast<unsigned>(e));
    for (const auto& j : indices_in_box(e, max_j + 1))
      if (!(series.coefficient(j) == RatFun(delta(i, j)))) return false;
  }
  return true;
}

RatFun derivation_via_pbasis(const PBasisContext& ctx, const RatFun& x, const MultiIndex& j, unsigned n) {
  const Params& params = ctx.params();
  if (j.size() != params.e()) throw std::invalid_argument("index width differs from e");
  if (n < j.max_entry())
    throw PBasisBoundError("n = " + std::to_string(n) + " is below max(j) = " + std::to_string(j.max_entry()));
  const std::uint64_t q = power_of(params.p(), n);
  const PrimeField field(params.p());
  // α_i = β_i / g, so Σ α_i^q δ_j^i = (Σ β_i^q δ_j^i) / g^q.
  const FpPoly& g = x.den();
  const FpPoly h = x.is_polynomial() ? x.num() : x.num() * g.pow(static_cast<long long>(q - 1));
  FpPoly numerator(field);
  for (const auto& [i, beta] : split_exponents(h, q, params.e()))
    numerator += exponent_scale(beta, q) * ctx.delta(i, j);
  if (x.is_polynomial()) return RatFun(std::move(numerator));
  // The true denominator divides g^{|j|+1}.
  return ratfun_over_power(std::move(numerator), g, q);
}

}  // namespace hasse
