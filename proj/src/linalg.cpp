#include "hasse/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hasse {

std::vector<FpMatrix::value_type> FpMatrix::apply(const std::vector<value_type>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length does not match matrix");
  std::vector<value_type> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] = field_.add(y[r], field_.mul((*this)(r, c), x[c]));
  return y;
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(FpMatrix& a) {
  const PrimeField& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    const auto inv = f.inv(a(row, col));
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) = f.mul(a(row, c), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const auto factor = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<PrimeField::value_type>> kernel_basis(FpMatrix a) {
  const auto pivots = rref(a);
  const PrimeField& f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<PrimeField::value_type>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<PrimeField::value_type> v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(a(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(FpMatrix a) { return rref(a).size(); }

}  // namespace hasse
