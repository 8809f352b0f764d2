#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hasse/params.hpp"
#include "hasse/poly.hpp"
#include "hasse/ratfun.hpp"

namespace hasse {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

// Test corpus for operator identities: every monomial of degree <= degree_bound
// in X̄, followed by `random_count` seeded sparse polynomials. Identities of
// F_p-linear operators on monomials extend to their span; the random
// elements exercise the additivity path and products.
struct CorpusConfig {
  unsigned degree_bound = 6;
  unsigned random_count = 8;
  unsigned random_terms = 4;
  unsigned random_degree = 4;
  std::uint64_t seed = kDefaultSeed;
};

// Monomials of degree <= bound in ascending graded order (1, X1, X2, ..., X1^2, X1*X2, ...).
std::vector<FpPoly> monomial_corpus(const Params& params, unsigned degree_bound);
std::vector<FpPoly> make_corpus(const Params& params, const CorpusConfig& config);

// Reproducible stream; draws use plain modular reduction so results do not
// depend on the standard library's distribution implementations.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

FpPoly random_poly(const Params& params, CorpusRng& rng, unsigned terms, unsigned max_degree);
// num / den with deg num <= max_degree and den = 1 + (terms of degree 1..max_degree),
// so the denominator has a unit constant term.
RatFun random_unit_rational(const Params& params, CorpusRng& rng, unsigned max_degree);

}  // namespace hasse
