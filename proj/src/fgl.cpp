#include "hasse/fgl.hpp"

#include <stdexcept>

#include "hasse/poly_ops.hpp"
#include "hasse/witt.hpp"

namespace hasse {

std::string to_string(LawKind kind) {
  switch (kind) {
    case LawKind::additive:
      return "ga";
    case LawKind::multiplicative:
      return "gm";
    case LawKind::witt:
      return "witt";
    case LawKind::custom:
      return "custom";
  }
  return "?";
}

LawKind parse_law_kind(const std::string& name) {
  if (name == "ga" || name == "additive") return LawKind::additive;
  if (name == "gm" || name == "multiplicative") return LawKind::multiplicative;
  if (name == "witt") return LawKind::witt;
  throw std::invalid_argument("unknown formal group law: " + name);
}

FormalGroupLaw::FormalGroupLaw(const Params& params, LawKind kind, std::vector<FpPoly> components)
    : params_(params), kind_(kind), field_(params.p()), components_(std::move(components)) {
  if (components_.size() != params.e()) throw std::invalid_argument("law needs exactly e components");
  for (const auto& c : components_) {
    if (!(c.ring() == field_)) throw DomainError("law component over the wrong field");
    if (c.uses(Block::Z)) throw std::invalid_argument("law components must be in X̄, Ȳ only");
  }
}

std::vector<FpPoly> FormalGroupLaw::apply(const std::vector<FpPoly>& a, const std::vector<FpPoly>& b) const {
  const unsigned e = params_.e();
  if (a.size() != e || b.size() != e) throw std::invalid_argument("law arguments need e components");
  Substitution<PrimeField> s;
  for (unsigned k = 1; k <= e; ++k) {
    s.emplace(Var{Block::X, k}, a[k - 1]);
    s.emplace(Var{Block::Y, k}, b[k - 1]);
  }
  std::vector<FpPoly> out;
  for (const auto& c : components_) out.push_back(substitute(c, s, Strictness::strict));
  return out;
}

FormalGroupLaw make_fgl(LawKind kind, const Params& params) {
  const PrimeField field(params.p());
  const unsigned e = params.e();
  auto x = [&](unsigned k) { return FpPoly::variable(field, Var{Block::X, k}); };
  auto y = [&](unsigned k) { return FpPoly::variable(field, Var{Block::Y, k}); };
  std::vector<FpPoly> comps;
  switch (kind) {
    case LawKind::additive:
      for (unsigned k = 1; k <= e; ++k) comps.push_back(x(k) + y(k));
      break;
    case LawKind::multiplicative:
      if (e != 1) throw std::invalid_argument("the multiplicative law requires e = 1");
      comps.push_back(x(1) + y(1) + x(1) * y(1));
      break;
    case LawKind::witt:
      comps = cached_witt_law(params)->reduced;
      break;
    case LawKind::custom:
      throw std::invalid_argument("custom laws are constructed directly");
  }
  return FormalGroupLaw(params, kind, std::move(comps));
}

namespace {

std::vector<FpPoly> block_vars(const PrimeField& field, unsigned e, Block b) {
  std::vector<FpPoly> v;
  for (unsigned k = 1; k <= e; ++k) v.push_back(FpPoly::variable(field, Var{b, k}));
  return v;
}

}  // namespace

FglAxiomReport fgl_axiom_check(const FormalGroupLaw& law) {
  const PrimeField& field = law.field();
  const unsigned e = law.params().e();
  const auto xs = block_vars(field, e, Block::X);
  const auto ys = block_vars(field, e, Block::Y);
  const auto zs = block_vars(field, e, Block::Z);
  const std::vector<FpPoly> zero(e, FpPoly(field));

  FglAxiomReport report;
  report.left_unit = law.apply(xs, zero) == xs;
  report.right_unit = law.apply(zero, ys) == ys;
  report.commutative = law.apply(ys, xs) == law.components();
  report.associative = law.apply(law.components(), zs) == law.apply(xs, law.apply(ys, zs));
  return report;
}

std::vector<FpPoly> mult_by_N(const FormalGroupLaw& law, unsigned n) {
  if (n < 1) throw std::invalid_argument("[N]_F requires N >= 1");
  const auto xs = block_vars(law.field(), law.params().e(), Block::X);
  std::vector<FpPoly> acc = xs;
  for (unsigned k = 1; k < n; ++k) acc = law.apply(xs, acc);
  return acc;
}

IterativityTable::IterativityTable(FormalGroupLaw law, unsigned max_order)
    : law_(std::move(law)), max_order_(max_order) {
  // The cutoff |l| <= |i|+|j| relies on F = X̄ + Ȳ + (terms of degree >= 2).
  const unsigned e = law_.params().e();
  for (unsigned k = 1; k <= e; ++k) {
    const FpPoly& c = law_.component(k);
    const FpPoly linear = truncate_degree(c, 1);
    const FpPoly expected =
        FpPoly::variable(law_.field(), Var{Block::X, k}) + FpPoly::variable(law_.field(), Var{Block::Y, k});
    if (!(linear == expected))
      throw std::invalid_argument("law component " + std::to_string(k) + " does not start with X_k + Y_k");
  }
}

void IterativityTable::ensure_powers() const {
  std::call_once(powers_once_, [this] {
    const unsigned e = law_.params().e();
    const PrimeField& field = law_.field();
    // component_powers[k][a] = F_{k+1}^a truncated at max_order
    std::vector<std::vector<FpPoly>> component_powers(e);
    for (unsigned k = 0; k < e; ++k) {
      const FpPoly base = truncate_degree(law_.components()[k], max_order_);
      component_powers[k].push_back(FpPoly::constant(field, 1));
      for (unsigned a = 1; a <= max_order_; ++a)
        component_powers[k].push_back(truncated_mul(component_powers[k].back(), base, max_order_));
    }
    for (const MultiIndex& l : indices_up_to_total(e, max_order_)) {
      FpPoly acc = FpPoly::constant(field, 1);
      for (unsigned k = 0; k < e; ++k) {
        if (l[k] == 0) continue;
        acc = truncated_mul(acc, component_powers[k][l[k]], max_order_);
      }
      for (const auto& [m, c] : acc.terms())
        if (m.degree() < l.total()) throw std::logic_error("F^l has order below |l|");
      powers_.emplace(l, std::move(acc));
    }
  });
}

const IterativityConstants& IterativityTable::constants(const MultiIndex& i, const MultiIndex& j) const {
  const unsigned e = law_.params().e();
  if (i.size() != e || j.size() != e) throw std::invalid_argument("multi-index width differs from e");
  const auto order = i.total() + j.total();
  if (order > max_order_) throw std::out_of_range("insufficient truncation bound");
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find({i, j}); it != memo_.end()) return *it->second;
  }
  ensure_powers();
  auto result = std::make_unique<IterativityConstants>();
  const Monomial target = Monomial::from_index(Block::X, i) * Monomial::from_index(Block::Y, j);
  for (const auto& [l, power] : powers_) {
    if (l.total() > order) continue;
    const auto c = power.coefficient(target);
    if (c != 0) result->emplace(l, c);
  }
  std::lock_guard lock(mutex_);
  return *memo_.try_emplace({i, j}, std::move(result)).first->second;
}

PrimeField::value_type IterativityTable::alpha(const MultiIndex& i, const MultiIndex& j, const MultiIndex& l) const {
  const auto& table = constants(i, j);
  auto it = table.find(l);
  return it == table.end() ? 0 : it->second;
}

IterativityConstants iterativity_constants(const FormalGroupLaw& law, const MultiIndex& i, const MultiIndex& j) {
  IterativityTable table(law, static_cast<unsigned>(i.total() + j.total()));
  return table.constants(i, j);
}

}  // namespace hasse
