#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "hasse/corpus.hpp"
#include "hasse/fgl.hpp"
#include "hasse/parallel.hpp"
#include "hasse/params.hpp"

namespace hasse {

enum class Verdict { pass, fail, witness_found };

std::string to_string(Verdict v);

// Outcome of one verification check. Fail verdicts carry a concrete
// counter-witness; everything except wall_ms is a function of the inputs.
struct CheckReport {
  std::string id;
  unsigned p = 0;
  unsigned e = 0;
  nlohmann::json parameters = nlohmann::json::object();
  Verdict verdict = Verdict::fail;
  nlohmann::json witness = nlohmann::json::object();
  std::string summary;
  double wall_ms = 0.0;

  bool ok() const { return verdict != Verdict::fail; }
  nlohmann::json to_json(bool with_timing = false) const;
};

// Bounds shared by the checks. Defaults follow the CLI defaults.
struct VerifyConfig {
  unsigned degree_bound = 6;   // monomial corpus degree
  unsigned order_bound = 6;    // |i| + |j| for iterativity schemes
  unsigned scheme_bound = 6;   // n for H1'–H4'
  unsigned lemma_bound = 3;    // |i| for nilpotence, factorization and splitting
  unsigned partial_bound = 4;  // n for ∂_{i,n} in the partial iteration check
  unsigned n = 3;              // p-basis level
  unsigned random_count = 8;   // random corpus elements
  unsigned rational_count = 100;
  unsigned rational_degree = 2;
  unsigned pbasis_j_bound = 3;
  std::uint64_t seed = kDefaultSeed;
  Execution exec = Execution::parallel;

  CorpusConfig corpus() const;
};

// Witt law: ghost identity for every m < e, group-law axioms of H, triangularity
// and the splitting (X_1..X_n,0..0) * (0..0,X_{n+1}..X_e) = X̄.
CheckReport check_witt_law(const Params& params);
// [p]_H from the [N]_F induction equals fr∘ve∘re.
CheckReport check_multiplication_by_p(const Params& params);
// 𝔾ₐ tables against binomial products, W_1 against 𝔾ₐ (e = 1), symmetry, and
// the [N+M] = F([N],[M]) identity.
CheckReport check_iterativity_tables(const Params& params, unsigned order_bound);
// D_i(D_j(f)) = Σ_l α_{i,j}(l) D_l(f) on the corpus for the canonical derivation.
CheckReport check_iterativity_replay(const Params& params, const VerifyConfig& config);

// D_i^(p^e) = 0; ∂_{i,n}^(p) = ∂_{i+1,n} with ∂_{e,n}^(p) = 0; the first-axis
// factorization of D_i; the splitting of D_i along a cut of the index.
CheckReport check_nilpotence(const Params& params, const VerifyConfig& config);
CheckReport check_partial_iteration(const Params& params, const VerifyConfig& config);
CheckReport check_factorization(const Params& params, const VerifyConfig& config);
CheckReport check_witt_splitting(const Params& params, const VerifyConfig& config);

// Twisted substitution against direct p-fold composition. kind is witt or additive.
CheckReport check_twisted_substitution(const Params& params, LawKind kind, const VerifyConfig& config);

enum class Scheme { H1, H2, H3, H4, H5, H6, H8 };
std::string to_string(Scheme s);
Scheme parse_scheme(const std::string& name);

// Axiom schemes on the canonical model with D_n := D_{(n,0,...,0)}.
CheckReport check_axiom_scheme(Scheme scheme, const Params& params, const VerifyConfig& config);

// D_1^{(p^e-1)}(X_1^{p-1}···X_e^{p-1}) against ((p-1)!)^e mod p.
CheckReport h5_witness(const Params& params);
// Kernel of ∂_1 on monomials of degree <= degree_bound is spanned by p-th
// power monomials; ∂_i = ∂_1^{(p^{i-1})} on the corpus; ∂_i(X_i) = 1.
CheckReport strictness_kernel_check(const Params& params, unsigned degree_bound,
                                    Execution exec = Execution::parallel);

// Leibniz failure of the composite D_3 at p = e = 2.
CheckReport mw_counterexample(unsigned degree_bound);

// p-basis route against the ev_H route on random rational functions, plus n-stability
// and the Leibniz/p^n-power argument behind it.
CheckReport pbasis_equivalence_check(const Params& params, const VerifyConfig& config);

// Suites: all, witt-law, iterativity, lemma-we-iter, fact-2-25, h-schemes, h5,
// h6, mw-counterexample, pbasis.
const std::vector<std::string>& suite_names();
std::vector<CheckReport> run_suite(const std::string& suite, const Params& params, const VerifyConfig& config);

}  // namespace hasse
