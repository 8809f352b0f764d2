#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "hasse/poly.hpp"
#include "hasse/ratfun.hpp"
#include "hasse/series.hpp"

namespace hasse {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Textual form: terms in canonical order joined by " + ", each "c*X1^a*Y2^b"
// with c omitted when 1. Zero prints as "0". Integer polynomials print
// negative terms with " - ".
std::string to_text(const FpPoly& f);
std::string to_text(const ZPoly& f);
// "num" when the denominator is 1, otherwise "(num)/(den)".
std::string to_text(const RatFun& r);
// "c0 + (c1)*Y1 + ... + O(Y^(bound+1))"
std::string to_text(const TruncSeries& s);

// [{"coeff": c, "exponents": {"X": [...], "Y": [...], "Z": [...]}}, ...]
nlohmann::json to_json(const FpPoly& f, std::size_t e);
nlohmann::json to_json(const ZPoly& f, std::size_t e);
nlohmann::json to_json(const RatFun& r, std::size_t e);

// Rational expressions in X1..Xe, Y1..Ye, Z1..Ze built from integers,
// + - * / ^ and parentheses, evaluated over F_p.
RatFun parse_ratfun(const std::string& text, const PrimeField& field, std::size_t e);
// As parse_ratfun, but the result must be a polynomial.
FpPoly parse_poly(const std::string& text, const PrimeField& field, std::size_t e);

}  // namespace hasse
