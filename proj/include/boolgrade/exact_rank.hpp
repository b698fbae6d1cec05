#pragma once

// Exact rank of small integer matrices.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace boolgrade {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// a * b; throws InvalidArgument on a shape mismatch.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Rank over the rationals. Fraction-free elimination in 64-bit arithmetic
/// with overflow checks, restarted with GMP integers on overflow.
std::size_t exact_rank(const IntMatrix& m);

/// The same, always with GMP integers.
std::size_t exact_rank_bignum(const IntMatrix& m);

}  // namespace boolgrade
