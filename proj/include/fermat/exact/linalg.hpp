#pragma once

#include <cstddef>
#include <vector>

#include "fermat/exact/arith.hpp"

namespace fermat {

/// Small dense matrix over the rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  static RationalMatrix from_columns(const std::vector<std::vector<Rational>>& columns,
                                     std::size_t height);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(RationalMatrix m);

/// Basis of {v : m v = 0}.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m);

/// Whether v lies in the span of the given vectors (all of length v.size()).
bool in_span(const std::vector<std::vector<Rational>>& span, const std::vector<Rational>& v);

/// Kronecker product.
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace fermat
