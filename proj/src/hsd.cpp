#include "hasse/hsd.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>

#include "hasse/poly_ops.hpp"
#include "hasse/witt.hpp"

namespace hasse {

namespace {

Expansion split_images(const FpPoly& g, std::size_t e) {
  Expansion out;
  for (auto& [ymono, coeff] : split_by_block(g, Block::Y)) out.emplace(ymono.index(Block::Y, e), std::move(coeff));
  return out;
}

Expansion multiply(const Expansion& a, const Expansion& b, unsigned bound) {
  Expansion out;
  for (const auto& [ja, pa] : a) {
    for (const auto& [jb, pb] : b) {
      MultiIndex j = ja + jb;
      if (j.total() > bound) continue;
      FpPoly prod = pa * pb;
      auto [it, inserted] = out.try_emplace(std::move(j), prod);
      if (!inserted) {
        it->second += prod;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

HSDerivation::HSDerivation(const Params& params, std::vector<FpPoly> images)
    : params_(params), field_(params.p()), images_(std::move(images)) {
  const unsigned e = params_.e();
  if (images_.size() != e) throw HSConditionError("a derivation needs e generator images");
  for (unsigned k = 1; k <= e; ++k) {
    const FpPoly& g = images_[k - 1];
    if (!(g.ring() == field_)) throw DomainError("generator image over the wrong field");
    if (g.uses(Block::Z)) throw HSConditionError("generator images must lie in F_p[X̄, Ȳ]");
    if (!(set_block_zero(g, Block::Y) == FpPoly::variable(field_, Var{Block::X, k})))
      throw HSConditionError("HS condition fails: G_" + std::to_string(k) + "(X̄, 0̄) != X_" + std::to_string(k));
    image_expansions_.push_back(split_images(g, e));
  }
}

HSDerivation HSDerivation::for_law(const FormalGroupLaw& law) { return HSDerivation(law.params(), law.components()); }

HSDerivation canonical_witt_derivation(const Params& params) {
  return HSDerivation(params, cached_witt_law(params)->reduced);
}

void HSDerivation::check_input(const FpPoly& f) const {
  if (!(f.ring() == field_)) throw DomainError("polynomial over the wrong field");
  if (f.uses(Block::Y) || f.uses(Block::Z)) throw DomainError("derivation input must lie in F_p[X̄]");
}

std::shared_ptr<const Expansion> HSDerivation::expansion(const Monomial& a, unsigned ybound) const {
  const Key key{a, ybound};
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  const unsigned e = params_.e();
  Expansion value;
  if (a.is_one()) {
    value.emplace(MultiIndex::zero(e), FpPoly::constant(field_, 1));
  } else {
    std::size_t slot = Monomial::kSlots;
    for (std::size_t s = Monomial::kSlots; s-- > 0;) {
      if (a.at(s) != 0) {
        slot = s;
        break;
      }
    }
    const Var v = Monomial::var_of_slot(slot);
    if (v.block != Block::X || v.index > e) throw DomainError("expansion requested for a non-X̄ monomial");
    Monomial prev = a;
    prev.at(slot) -= 1;
    const auto base = expansion(prev, ybound);
    value = multiply(*base, image_expansions_[v.index - 1], ybound);
  }
  auto ptr = std::make_shared<const Expansion>(std::move(value));
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(key, std::move(ptr)).first->second;
}

FpPoly HSDerivation::apply(const FpPoly& f) const { return apply_truncated(f, kUnbounded); }

FpPoly HSDerivation::apply_truncated(const FpPoly& f, unsigned ybound) const {
  check_input(f);
  FpPoly out(field_);
  for (const auto& [m, c] : f.terms()) {
    const auto ex = expansion(m, ybound);
    for (const auto& [j, poly] : *ex) out += poly.times_monomial(Monomial::from_index(Block::Y, j)).scaled(c);
  }
  return out;
}

FpPoly HSDerivation::component(const MultiIndex& j, const FpPoly& f) const {
  check_input(f);
  if (j.size() != params_.e()) throw std::invalid_argument("component index width differs from e");
  FpPoly out(field_);
  for (const auto& [m, c] : f.terms()) {
    const auto ex = expansion(m, static_cast<unsigned>(j.total()));
    if (auto it = ex->find(j); it != ex->end()) out += it->second.scaled(c);
  }
  return out;
}

FpPoly hsd_apply(const HSDerivation& d, const FpPoly& f) { return d.apply(f); }

FpPoly hsd_component(const HSDerivation& d, const MultiIndex& j, const FpPoly& f) { return d.component(j, f); }

OperatorExpr OperatorExpr::identity() { return OperatorExpr({OperatorTerm{1, {}}}); }

OperatorExpr OperatorExpr::component(const MultiIndex& j, unsigned repeat) {
  return OperatorExpr({OperatorTerm{1, {OperatorFactor{j, repeat}}}});
}

OperatorExpr OperatorExpr::partial(std::size_t e, unsigned i, unsigned n, unsigned repeat) {
  return component(MultiIndex::unit(e, i, n), repeat);
}

OperatorExpr OperatorExpr::first_axis_factorization(const MultiIndex& i, unsigned p) {
  const std::size_t e = i.size();
  OperatorTerm t;
  unsigned repeat = 1;
  for (std::size_t k = 0; k < e; ++k) {
    if (i[k] != 0) t.factors.push_back(OperatorFactor{MultiIndex::unit(e, 1, i[k]), repeat});
    repeat *= p;
  }
  return OperatorExpr({t});
}

OperatorExpr OperatorExpr::then_after(const OperatorExpr& other) const {
  std::vector<OperatorTerm> out;
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      OperatorTerm t;
      t.coeff = a.coeff * b.coeff;  // reduced on evaluation
      t.factors = a.factors;
      t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
      out.push_back(std::move(t));
    }
  }
  return OperatorExpr(std::move(out));
}

OperatorExpr OperatorExpr::operator+(const OperatorExpr& other) const {
  std::vector<OperatorTerm> out = terms_;
  out.insert(out.end(), other.terms_.begin(), other.terms_.end());
  return OperatorExpr(std::move(out));
}

OperatorExpr OperatorExpr::scaled(PrimeField::value_type c, const PrimeField& field) const {
  std::vector<OperatorTerm> out = terms_;
  for (auto& t : out) t.coeff = field.mul(field.from_int(t.coeff), c);
  return OperatorExpr(std::move(out));
}

namespace {

class OperatorParser {
 public:
  OperatorParser(const std::string& text, std::size_t e) : text_(text), e_(e) {}

  OperatorExpr parse() {
    std::vector<OperatorTerm> terms;
    terms.push_back(term());
    while (accept('+')) terms.push_back(term());
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return OperatorExpr(std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("operator expression: " + what + " at position " + std::to_string(pos_) +
                                " in \"" + text_ + "\"");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_word(const std::string& w) {
    skip();
    if (text_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  bool at_digit() {
    skip();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  unsigned long number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoul(text_.substr(start, pos_ - start));
  }

  OperatorTerm term() {
    OperatorTerm t;
    if (at_digit()) {
      t.coeff = static_cast<PrimeField::value_type>(number());
      if (!accept('*')) return t;
    }
    do {
      if (accept_word("id")) continue;
      if (!accept('D')) fail("expected D(...) or id");
      if (!accept('(')) fail("expected '('");
      std::vector<std::uint32_t> idx;
      do {
        idx.push_back(static_cast<std::uint32_t>(number()));
      } while (accept(','));
      if (!accept(')')) fail("expected ')'");
      if (idx.size() != e_) fail("index width differs from e");
      unsigned repeat = 1;
      if (accept('^')) {
        accept('(');
        repeat = static_cast<unsigned>(number());
        accept(')');
      }
      if (repeat == 0) fail("repeat must be at least 1");
      t.factors.push_back(OperatorFactor{MultiIndex(std::move(idx)), repeat});
    } while (accept('*') || (skip(), pos_ < text_.size() && (text_[pos_] == 'D' || text_[pos_] == 'i')));
    return t;
  }

  std::string text_;
  std::size_t pos_ = 0;
  std::size_t e_;
};

}  // namespace

OperatorExpr OperatorExpr::parse(const std::string& text, std::size_t e) { return OperatorParser(text, e).parse(); }

std::string OperatorExpr::to_string() const {
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    std::string body;
    for (const auto& f : t.factors) {
      if (!body.empty()) body += "*";
      body += "D" + f.index.to_string();
      if (f.repeat != 1) body += "^" + std::to_string(f.repeat);
    }
    if (body.empty()) body = "id";
    s += t.coeff == 1 ? body : std::to_string(t.coeff) + "*" + body;
  }
  return s.empty() ? "0" : s;
}

FpPoly operator_eval(const HSDerivation& d, const OperatorExpr& expr, const FpPoly& f) {
  const PrimeField& field = d.field();
  FpPoly out(field);
  for (const auto& t : expr.terms()) {
    const auto c = field.from_int(t.coeff);
    if (c == 0) continue;
    FpPoly g = f;
    for (auto it = t.factors.rbegin(); it != t.factors.rend() && !g.is_zero(); ++it)
      for (unsigned r = 0; r < it->repeat && !g.is_zero(); ++r) g = d.component(it->index, g);
    out += g.scaled(c);
  }
  return out;
}

std::vector<FpPoly> twisted_argument(const FormalGroupLaw& law) {
  std::vector<FpPoly> out;
  for (const auto& c : mult_by_N(law, law.params().p()))
    out.push_back(rename_block(frobenius_root(c, law.params().p()), Block::X, Block::Y));
  return out;
}

FpPoly twisted_series(const HSDerivation& d, const FpPoly& f, const FormalGroupLaw& law) {
  if (!(law.params() == d.params())) throw std::invalid_argument("law and derivation parameters differ");
  const auto arg = twisted_argument(law);
  Substitution<PrimeField> s;
  for (unsigned k = 1; k <= d.params().e(); ++k) s.emplace(Var{Block::Y, k}, arg[k - 1]);
  return substitute(d.apply(f), s);
}

FpPoly p_fold_series(const HSDerivation& d, const FpPoly& f) {
  const unsigned p = d.params().p();
  const std::size_t e = d.params().e();
  FpPoly out(d.field());
  for (const auto& [ymono, coeff] : split_by_block(d.apply(f), Block::Y)) {
    const MultiIndex i = ymono.index(Block::Y, e);
    FpPoly g = coeff;  // D_i(f)
    for (unsigned r = 1; r < p && !g.is_zero(); ++r) g = d.component(i, g);
    out += g.times_monomial(ymono);
  }
  return out;
}

const FpPoly& DeltaTable::at(const MultiIndex& i, const MultiIndex& j) const {
  auto it = entries.find({i, j});
  if (it == entries.end()) throw std::out_of_range("delta table has no entry for " + i.to_string() + ", " + j.to_string());
  return it->second;
}

FpPoly delta(const HSDerivation& d, const MultiIndex& i, const MultiIndex& j) {
  return d.component(j, FpPoly::term(d.field(), Monomial::from_index(Block::X, i)));
}

DeltaTable delta_table(const Params& params, unsigned max_i, unsigned max_j) {
  const HSDerivation d = canonical_witt_derivation(params);
  DeltaTable table{params, {}};
  for (const auto& i : indices_in_box(params.e(), max_i + 1))
    for (const auto& j : indices_in_box(params.e(), max_j + 1)) table.entries.emplace(std::make_pair(i, j), delta(d, i, j));
  return table;
}

TruncSeries extend_to_rational(const HSDerivation& d, const RatFun& r, unsigned ybound) {
  const std::size_t e = d.params().e();
  const FpPoly a = d.apply_truncated(r.num(), ybound);
  if (r.is_polynomial()) return TruncSeries::from_poly(a, e, ybound);
  // S = D(num)/D(den) has S_j = N_j / g^{|j|+1} with g = den and
  // N_j = a_j g^{|j|} - Σ_{k<j} N_k c_{j-k} g^{|j|-|k|-1}, where a = D(num), c = D(den).
  const FpPoly& g = r.den();
  const FpPoly c = d.apply_truncated(g, ybound);
  std::map<MultiIndex, FpPoly> cj;
  for (const auto& [m, coeff] : c.terms()) {
    auto [it, inserted] = cj.try_emplace(m.index(Block::Y, e), d.field());
    it->second.add_term(m.without(Block::Y), coeff);
  }
  std::vector<FpPoly> gpow{FpPoly::constant(d.field(), 1)};
  for (unsigned t = 1; t <= ybound; ++t) gpow.push_back(gpow.back() * g);
  std::map<MultiIndex, FpPoly> numerators;
  TruncSeries out(d.field(), e, ybound);
  for (const auto& j : indices_up_to_total(e, ybound)) {
    const auto total = static_cast<unsigned>(j.total());
    FpPoly nj = coefficient_of(a, Block::Y, j) * gpow[total];
    for (const auto& [k, nk] : numerators) {
      if (k == j || !k.dominated_by(j)) continue;
      MultiIndex diff(e);
      for (std::size_t t = 0; t < e; ++t) diff[t] = j[t] - k[t];
      const auto it = cj.find(diff);
      if (it == cj.end()) continue;
      nj -= nk * it->second * gpow[total - k.total() - 1];
    }
    if (!nj.is_zero()) out.set_coefficient(j, ratfun_over_power(nj, g, total + 1));
    numerators.emplace(j, std::move(nj));
  }
  return out;
}

}  // namespace hasse
