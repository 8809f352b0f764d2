#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "hasse/params.hpp"

namespace hasse {

// Variable blocks X̄, Ȳ, Z̄, each of width e.
enum class Block : std::uint8_t { X = 0, Y = 1, Z = 2 };
inline constexpr std::size_t kNumBlocks = 3;

char block_name(Block b);

// A single variable, e.g. Y2 is {Block::Y, 2}. Indices are 1-based.
struct Var {
  Block block;
  unsigned index;

  friend auto operator<=>(const Var&, const Var&) = default;
};

// Exponent vector in N^e.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t e) : entries_(e, 0) {}
  MultiIndex(std::initializer_list<std::uint32_t> entries) : entries_(entries) {}
  explicit MultiIndex(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {}

  static MultiIndex zero(std::size_t e) { return MultiIndex(e); }
  // The unit vector with a 1 in 1-based position k.
  static MultiIndex unit(std::size_t e, unsigned k, std::uint32_t value = 1);

  std::size_t size() const { return entries_.size(); }
  std::uint32_t operator[](std::size_t k) const { return entries_[k]; }
  std::uint32_t& operator[](std::size_t k) { return entries_[k]; }
  const std::vector<std::uint32_t>& entries() const { return entries_; }

  std::uint64_t total() const;
  std::uint32_t max_entry() const;
  bool is_zero() const { return total() == 0; }
  // Componentwise <=.
  bool dominated_by(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& other) const;

  // "(1,0,2)"
  std::string to_string() const;
  // Accepts "(1,0)", "1,0" or "1 0".
  static MultiIndex parse(const std::string& text);

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::uint32_t> entries_;
};

// Every multi-index in N^e with total degree <= bound, in ascending graded
// order (by total, then reverse-lex so that (1,0) precedes (0,1)).
std::vector<MultiIndex> indices_up_to_total(std::size_t e, unsigned bound);
// Every multi-index with all entries < box (the set [box]^e), lexicographic.
std::vector<MultiIndex> indices_in_box(std::size_t e, std::uint64_t box);

// Exponent vector over all three blocks. Slots are laid out as
// block * kMaxDim + (index - 1), so a monomial does not depend on e.
class Monomial {
 public:
  static constexpr std::size_t kSlots = kNumBlocks * kMaxDim;
  using Storage = std::array<std::uint32_t, kSlots>;

  Monomial() { exps_.fill(0); }

  static Monomial var(Var v, std::uint32_t power = 1);
  static Monomial from_index(Block b, const MultiIndex& i);

  std::uint32_t exponent(Var v) const { return exps_[slot(v)]; }
  void set_exponent(Var v, std::uint32_t value) { exps_[slot(v)] = value; }
  std::uint32_t at(std::size_t s) const { return exps_[s]; }
  std::uint32_t& at(std::size_t s) { return exps_[s]; }

  std::uint64_t degree() const;
  std::uint64_t degree(Block b) const;
  bool is_one() const { return degree() == 0; }
  bool uses(Block b) const { return degree(b) != 0; }

  // Exponents of one block as a MultiIndex of width e.
  MultiIndex index(Block b, std::size_t e) const;
  // This monomial with one block cleared.
  Monomial without(Block b) const;
  Monomial only(Block b) const;
  // Move the exponents of block `from` onto block `to` (which must be empty).
  Monomial moved(Block from, Block to) const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Requires divides(other) == true; returns other / *this.
  Monomial quotient_of(const Monomial& other) const;

  const Storage& storage() const { return exps_; }

  static std::size_t slot(Var v) {
    if (v.index < 1 || v.index > kMaxDim) throw std::out_of_range("variable index out of range");
    return static_cast<std::size_t>(v.block) * kMaxDim + (v.index - 1);
  }
  static Var var_of_slot(std::size_t s) {
    return Var{static_cast<Block>(s / kMaxDim), static_cast<unsigned>(s % kMaxDim) + 1};
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Storage exps_;
};

// Canonical order: graded lexicographic, descending, with X1 > X2 > ... > Y1 > ... > Z_e.
// Containers ordered with this comparator iterate from the leading term down.
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da > db;
    return a.storage() > b.storage();
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.storage()) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace hasse
