#pragma once

#include <cstddef>
#include <vector>

#include "hasse/coeff.hpp"

namespace hasse {

// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  using value_type = PrimeField::value_type;

  FpMatrix(const PrimeField& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  value_type operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<value_type> apply(const std::vector<value_type>& x) const;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

// Basis of {x : A x = 0}, one vector per free column of the reduced row
// echelon form, each with a 1 in its free column.
std::vector<std::vector<PrimeField::value_type>> kernel_basis(FpMatrix a);

std::size_t rank(FpMatrix a);

}  // namespace hasse
