#include "cartierlab/gfmatrix.hpp"

#include <algorithm>

#include "cartierlab/errors.hpp"

namespace cartierlab {

GFMatrix::GFMatrix(std::uint64_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
  require_prime_modulus(p);
}

GFMatrix GFMatrix::identity(std::uint64_t p, std::size_t n) {
  GFMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

GFMatrix GFMatrix::mul(const GFMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw Error("matrix shape mismatch");
  GFMatrix r(p_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        std::uint64_t w = o.at(k, j);
        if (w == 0) continue;
        r.a_[i * o.cols_ + j] = (r.a_[i * o.cols_ + j] + mulmod(v, w, p_)) % p_;
      }
    }
  }
  return r;
}

GFMatrix GFMatrix::rref(std::vector<std::size_t>* pivot_cols) const {
  GFMatrix m = *this;
  if (pivot_cols) pivot_cols->clear();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = rows_;
    for (std::size_t i = row; i < rows_; ++i) {
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows_) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.a_[pivot * cols_ + j], m.a_[row * cols_ + j]);
    }
    std::uint64_t inv = invmod(m.at(row, col), p_);
    for (std::size_t j = col; j < cols_; ++j) m.a_[row * cols_ + j] = mulmod(m.at(row, j), inv, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row) continue;
      std::uint64_t f = m.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < cols_; ++j) {
        std::uint64_t sub = mulmod(f, m.at(row, j), p_);
        std::uint64_t cur = m.at(i, j);
        m.a_[i * cols_ + j] = (cur + p_ - sub) % p_;
      }
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++row;
  }
  return m;
}

std::size_t GFMatrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

std::vector<std::vector<std::uint64_t>> GFMatrix::kernel_basis(std::vector<std::size_t>* free_cols) const {
  std::vector<std::size_t> pivots;
  GFMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> frees;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!is_pivot[c]) frees.push_back(c);
  }
  std::vector<std::vector<std::uint64_t>> basis;
  basis.reserve(frees.size());
  for (std::size_t fc : frees) {
    std::vector<std::uint64_t> v(cols_, 0);
    v[fc] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      std::uint64_t entry = r.at(k, fc);
      if (entry != 0) v[pivots[k]] = p_ - entry;
    }
    basis.push_back(std::move(v));
  }
  if (free_cols) *free_cols = std::move(frees);
  return basis;
}

bool GFMatrix::operator==(const GFMatrix& o) const {
  return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

}  // namespace cartierlab
