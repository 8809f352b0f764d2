#include "hasse/format.hpp"

#include <cctype>

namespace hasse {

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (std::size_t slot = 0; slot < Monomial::kSlots; ++slot) {
    const auto k = m.at(slot);
    if (k == 0) continue;
    const Var v = Monomial::var_of_slot(slot);
    if (!s.empty()) s += '*';
    s += block_name(v.block);
    s += std::to_string(v.index);
    if (k != 1) s += '^' + std::to_string(k);
  }
  return s;
}

template <class Ring>
std::string term_text(const Ring& ring, const Monomial& m, const typename Ring::value_type& c) {
  const std::string mono = monomial_text(m);
  if (mono.empty()) return ring.to_string(c);
  if (ring.is_one(c)) return mono;
  return ring.to_string(c) + "*" + mono;
}

template <class Ring>
nlohmann::json poly_json(const Poly<Ring>& f, std::size_t e) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    nlohmann::json exps;
    for (Block b : {Block::X, Block::Y, Block::Z}) exps[std::string(1, block_name(b))] = m.index(b, e).entries();
    nlohmann::json coeff;
    if constexpr (std::is_same_v<Ring, Integers>) {
      if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
        coeff = static_cast<long long>(c);
      } else {
        coeff = c.str();
      }
    } else {
      coeff = c;
    }
    out.push_back({{"coeff", coeff}, {"exponents", exps}});
  }
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, const PrimeField& field, std::size_t e)
      : text_(text), field_(field), e_(e) {}

  RatFun parse() {
    RatFun r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  unsigned long long number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoull(text_.substr(start, pos_ - start));
  }

  RatFun expr() {
    bool negate = accept('-');
    if (!negate) accept('+');
    RatFun acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFun term() {
    RatFun acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        RatFun d = factor();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFun factor() {
    RatFun b = base();
    if (accept('^')) {
      const auto k = number();
      b = b.pow(static_cast<long long>(k));
    }
    return b;
  }

  RatFun base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFun r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto n = number();
      return RatFun::constant(field_, static_cast<long long>(n % field_.characteristic()));
    }
    if (c == 'X' || c == 'Y' || c == 'Z') {
      ++pos_;
      const auto k = number();
      if (k < 1 || k > e_) fail("variable index out of range");
      const Block b = c == 'X' ? Block::X : (c == 'Y' ? Block::Y : Block::Z);
      return RatFun(FpPoly::variable(field_, Var{b, static_cast<unsigned>(k)}));
    }
    fail("unexpected character");
  }

  std::string text_;
  std::size_t pos_ = 0;
  PrimeField field_;
  std::size_t e_;
};

}  // namespace

std::string to_text(const FpPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    s += term_text(f.ring(), m, c);
  }
  return s;
}

std::string to_text(const ZPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  const Integers& zz = f.ring();
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    s += term_text(zz, m, mag);
  }
  return s;
}

std::string to_text(const RatFun& r) {
  if (r.is_polynomial()) return to_text(r.num());
  return "(" + to_text(r.num()) + ")/(" + to_text(r.den()) + ")";
}

std::string to_text(const TruncSeries& s) {
  std::string out;
  for (const auto& [j, c] : s.coefficients()) {
    if (!out.empty()) out += " + ";
    const std::string mono = monomial_text(Monomial::from_index(Block::Y, j));
    if (mono.empty()) {
      out += to_text(c);
    } else {
      out += "(" + to_text(c) + ")*" + mono;
    }
  }
  if (out.empty()) out = "0";
  return out + " + O(Y^" + std::to_string(s.bound() + 1) + ")";
}

nlohmann::json to_json(const FpPoly& f, std::size_t e) { return poly_json(f, e); }
nlohmann::json to_json(const ZPoly& f, std::size_t e) { return poly_json(f, e); }
nlohmann::json to_json(const RatFun& r, std::size_t e) {
  return {{"num", to_json(r.num(), e)}, {"den", to_json(r.den(), e)}, {"text", to_text(r)}};
}

RatFun parse_ratfun(const std::string& text, const PrimeField& field, std::size_t e) {
  return Parser(text, field, e).parse();
}

FpPoly parse_poly(const std::string& text, const PrimeField& field, std::size_t e) {
  RatFun r = parse_ratfun(text, field, e);
  if (!r.den().is_constant()) throw ParseError("expected a polynomial: " + text);
  return r.num().scaled(field.inv(r.den().constant_term()));
}

}  // namespace hasse
