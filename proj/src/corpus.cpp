#include "hasse/corpus.hpp"

#include "hasse/monomial.hpp"
#include "hasse/parallel.hpp"

namespace hasse {

std::string to_string(Execution exec) { return exec == Execution::serial ? "serial" : "parallel"; }

std::vector<FpPoly> monomial_corpus(const Params& params, unsigned degree_bound) {
  const PrimeField field(params.p());
  std::vector<FpPoly> out;
  for (const auto& i : indices_up_to_total(params.e(), degree_bound))
    out.push_back(FpPoly::term(field, Monomial::from_index(Block::X, i)));
  return out;
}

FpPoly random_poly(const Params& params, CorpusRng& rng, unsigned terms, unsigned max_degree) {
  const PrimeField field(params.p());
  const auto support = indices_up_to_total(params.e(), max_degree);
  FpPoly f(field);
  for (unsigned t = 0; t < terms; ++t) {
    const auto& i = support[rng.below(support.size())];
    const auto c = static_cast<PrimeField::value_type>(1 + rng.below(params.p() - 1));
    f.add_term(Monomial::from_index(Block::X, i), c);
  }
  return f;
}

std::vector<FpPoly> make_corpus(const Params& params, const CorpusConfig& config) {
  auto out = monomial_corpus(params, config.degree_bound);
  CorpusRng rng(config.seed);
  for (unsigned k = 0; k < config.random_count; ++k) {
    FpPoly f = random_poly(params, rng, config.random_terms, config.random_degree);
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

RatFun random_unit_rational(const Params& params, CorpusRng& rng, unsigned max_degree) {
  const PrimeField field(params.p());
  FpPoly num(field);
  while (num.is_zero()) num = random_poly(params, rng, 1 + static_cast<unsigned>(rng.below(3)), max_degree);
  FpPoly den = FpPoly::constant(field, 1);
  while (den.is_constant()) {
    den = FpPoly::constant(field, 1);
    const unsigned terms = 1 + static_cast<unsigned>(rng.below(2));
    FpPoly tail = random_poly(params, rng, terms, max_degree);
    den += tail.filtered([](const Monomial& m) { return !m.is_one(); });
  }
  return RatFun(std::move(num), std::move(den));
}

}  // namespace hasse
