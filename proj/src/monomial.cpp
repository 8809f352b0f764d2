#include "hasse/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hasse {

char block_name(Block b) {
  switch (b) {
    case Block::X:
      return 'X';
    case Block::Y:
      return 'Y';
    case Block::Z:
      return 'Z';
  }
  return '?';
}

MultiIndex MultiIndex::unit(std::size_t e, unsigned k, std::uint32_t value) {
  if (k < 1 || k > e) throw std::out_of_range("unit index out of range");
  MultiIndex m(e);
  m.entries_[k - 1] = value;
  return m;
}

std::uint64_t MultiIndex::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

std::uint32_t MultiIndex::max_entry() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

bool MultiIndex::dominated_by(const MultiIndex& other) const {
  if (other.size() != size()) throw std::invalid_argument("multi-index width mismatch");
  for (std::size_t k = 0; k < size(); ++k)
    if (entries_[k] > other.entries_[k]) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.size() != size()) throw std::invalid_argument("multi-index width mismatch");
  MultiIndex r(*this);
  for (std::size_t k = 0; k < size(); ++k) r.entries_[k] += other.entries_[k];
  return r;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(entries_[k]);
  }
  return s + ")";
}

MultiIndex MultiIndex::parse(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::string digits;
  auto flush = [&] {
    if (!digits.empty()) {
      out.push_back(static_cast<std::uint32_t>(std::stoul(digits)));
      digits.clear();
    }
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
    } else if (c == ',' || c == ' ' || c == '(' || c == ')') {
      flush();
    } else {
      throw std::invalid_argument("malformed multi-index: " + text);
    }
  }
  flush();
  if (out.empty()) throw std::invalid_argument("empty multi-index: " + text);
  return MultiIndex(std::move(out));
}

namespace {

void enumerate_total(std::size_t e, std::size_t pos, unsigned remaining, MultiIndex& cur,
                     std::vector<MultiIndex>& out) {
  if (pos + 1 == e) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned v = remaining + 1; v-- > 0;) {
    cur[pos] = v;
    enumerate_total(e, pos + 1, remaining - v, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> indices_up_to_total(std::size_t e, unsigned bound) {
  std::vector<MultiIndex> out;
  if (e == 0) return out;
  MultiIndex cur(e);
  for (unsigned t = 0; t <= bound; ++t) enumerate_total(e, 0, t, cur, out);
  return out;
}

std::vector<MultiIndex> indices_in_box(std::size_t e, std::uint64_t box) {
  std::vector<MultiIndex> out;
  if (box == 0) return out;
  MultiIndex cur(e);
  while (true) {
    out.push_back(cur);
    std::size_t k = e;
    while (k > 0) {
      --k;
      if (cur[k] + 1 < box) {
        ++cur[k];
        break;
      }
      cur[k] = 0;
      if (k == 0) return out;
    }
  }
}

Monomial Monomial::var(Var v, std::uint32_t power) {
  Monomial m;
  m.exps_[slot(v)] = power;
  return m;
}

Monomial Monomial::from_index(Block b, const MultiIndex& i) {
  if (i.size() > kMaxDim) throw std::out_of_range("multi-index wider than kMaxDim");
  Monomial m;
  for (std::size_t k = 0; k < i.size(); ++k)
    m.exps_[static_cast<std::size_t>(b) * kMaxDim + k] = i[k];
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto x : exps_) d += x;
  return d;
}

std::uint64_t Monomial::degree(Block b) const {
  std::uint64_t d = 0;
  const auto base = static_cast<std::size_t>(b) * kMaxDim;
  for (std::size_t k = 0; k < kMaxDim; ++k) d += exps_[base + k];
  return d;
}

MultiIndex Monomial::index(Block b, std::size_t e) const {
  MultiIndex i(e);
  const auto base = static_cast<std::size_t>(b) * kMaxDim;
  for (std::size_t k = 0; k < e; ++k) i[k] = exps_[base + k];
  return i;
}

Monomial Monomial::without(Block b) const {
  Monomial m(*this);
  const auto base = static_cast<std::size_t>(b) * kMaxDim;
  for (std::size_t k = 0; k < kMaxDim; ++k) m.exps_[base + k] = 0;
  return m;
}

Monomial Monomial::only(Block b) const {
  Monomial m;
  const auto base = static_cast<std::size_t>(b) * kMaxDim;
  for (std::size_t k = 0; k < kMaxDim; ++k) m.exps_[base + k] = exps_[base + k];
  return m;
}

Monomial Monomial::moved(Block from, Block to) const {
  if (from == to) return *this;
  Monomial m = without(from);
  const auto fb = static_cast<std::size_t>(from) * kMaxDim;
  const auto tb = static_cast<std::size_t>(to) * kMaxDim;
  for (std::size_t k = 0; k < kMaxDim; ++k) {
    if (exps_[fb + k] != 0 && m.exps_[tb + k] != 0)
      throw std::invalid_argument("block move would merge occupied variables");
    m.exps_[tb + k] += exps_[fb + k];
  }
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t s = 0; s < kSlots; ++s) m.exps_[s] = exps_[s] + other.exps_[s];
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t s = 0; s < kSlots; ++s)
    if (exps_[s] > other.exps_[s]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial m;
  for (std::size_t s = 0; s < kSlots; ++s) m.exps_[s] = other.exps_[s] - exps_[s];
  return m;
}

}  // namespace hasse
