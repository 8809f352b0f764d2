#pragma once

#include <random>
#include <string>

#include "hasse/format.hpp"
#include "hasse/poly.hpp"
#include "hasse/ratfun.hpp"

namespace hasse::test {

inline FpPoly P(const std::string& text, unsigned p, std::size_t e = 2) { return parse_poly(text, PrimeField(p), e); }
inline RatFun R(const std::string& text, unsigned p, std::size_t e = 2) {
  return parse_ratfun(text, PrimeField(p), e);
}

// Sparse random polynomial over the given blocks, independent of the corpus generator.
class PolyGen {
 public:
  explicit PolyGen(unsigned seed) : rng_(seed) {}

  FpPoly poly(unsigned p, std::size_t e, unsigned terms, unsigned max_exp, bool use_y = false) {
    const PrimeField field(p);
    FpPoly f(field);
    std::uniform_int_distribution<unsigned> coeff(1, p - 1);
    std::uniform_int_distribution<unsigned> expo(0, max_exp);
    for (unsigned t = 0; t < terms; ++t) {
      Monomial m;
      for (unsigned k = 1; k <= e; ++k) {
        m.set_exponent(Var{Block::X, k}, expo(rng_));
        if (use_y) m.set_exponent(Var{Block::Y, k}, expo(rng_));
      }
      f.add_term(m, coeff(rng_));
    }
    return f;
  }

  ZPoly zpoly(std::size_t e, unsigned terms, unsigned max_exp) {
    ZPoly f{Integers{}};
    std::uniform_int_distribution<int> coeff(-50, 50);
    std::uniform_int_distribution<unsigned> expo(0, max_exp);
    for (unsigned t = 0; t < terms; ++t) {
      Monomial m;
      for (unsigned k = 1; k <= e; ++k) m.set_exponent(Var{Block::X, k}, expo(rng_));
      f.add_term(m, coeff(rng_));
    }
    return f;
  }

  // num / den with den != 0.
  RatFun ratfun(unsigned p, std::size_t e, unsigned max_exp) {
    FpPoly num = poly(p, e, 3, max_exp);
    while (num.is_zero()) num = poly(p, e, 3, max_exp);
    FpPoly den = poly(p, e, 2, max_exp) + FpPoly::constant(PrimeField(p), 1);
    while (den.is_zero()) den = poly(p, e, 2, max_exp) + FpPoly::constant(PrimeField(p), 1);
    return RatFun(num, den);
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace hasse::test
