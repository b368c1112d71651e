#ifndef CARTIERLAB_GFMATRIX_HPP
#define CARTIERLAB_GFMATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cartierlab/field.hpp"

namespace cartierlab {

// Dense matrix over F_p with deterministic Gaussian elimination (pivot =
// first nonzero entry scanning columns left to right).
class GFMatrix {
 public:
  GFMatrix(std::uint64_t p, std::size_t rows, std::size_t cols);
  static GFMatrix identity(std::uint64_t p, std::size_t n);

  std::uint64_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint64_t v) { a_[i * cols_ + j] = v % p_; }

  GFMatrix mul(const GFMatrix& o) const;
  std::size_t rank() const;
  // Reduced row echelon form; pivot column indices appended in order.
  GFMatrix rref(std::vector<std::size_t>* pivot_cols) const;
  // Kernel basis: one vector per free column, listed in column order. Each
  // vector has 1 at its free column and 0 at every other free column.
  std::vector<std::vector<std::uint64_t>> kernel_basis(std::vector<std::size_t>* free_cols) const;

  bool operator==(const GFMatrix& o) const;

 private:
  std::uint64_t p_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> a_;
};

}  // namespace cartierlab

#endif
