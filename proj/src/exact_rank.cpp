#include "boolgrade/exact_rank.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <optional>

#include "boolgrade/errors.hpp"

namespace boolgrade {

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::int64_t x) { return x == 0; });
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("cannot multiply " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " by " +
                          std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  }
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += x * b.at(k, j);
    }
  }
  return out;
}

namespace {

// Bareiss elimination on a row-major copy. Returns nullopt on overflow.
template <typename T, typename Ops>
std::optional<std::size_t> bareiss(std::vector<T> a, std::size_t rows,
                                   std::size_t cols, Ops ops) {
  auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * cols + c]; };
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        T x;
        if (!ops.fma_div(at(rank, c), at(r, j), at(r, c), at(rank, j), prev, x)) {
          return std::nullopt;
        }
        at(r, j) = x;
      }
      at(r, c) = 0;
    }
    prev = at(rank, c);
    ++rank;
  }
  return rank;
}

struct CheckedOps {
  // x = (p*a - q*b) / d, exact by Bareiss.
  bool fma_div(std::int64_t p, std::int64_t a, std::int64_t q, std::int64_t b,
               std::int64_t d, std::int64_t& x) const {
    std::int64_t pa = 0;
    std::int64_t qb = 0;
    std::int64_t diff = 0;
    if (__builtin_mul_overflow(p, a, &pa) || __builtin_mul_overflow(q, b, &qb) ||
        __builtin_sub_overflow(pa, qb, &diff)) {
      return false;
    }
    x = diff / d;
    return true;
  }
};

struct BigOps {
  bool fma_div(const mpz_class& p, const mpz_class& a, const mpz_class& q,
               const mpz_class& b, const mpz_class& d, mpz_class& x) const {
    x = p * a - q * b;
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return true;
  }
};

}  // namespace

std::size_t exact_rank_bignum(const IntMatrix& m) {
  std::vector<mpz_class> a;
  a.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      a.emplace_back(static_cast<long>(m.at(r, c)));
    }
  }
  return *bareiss(std::move(a), m.rows(), m.cols(), BigOps{});
}

std::size_t exact_rank(const IntMatrix& m) {
  std::vector<std::int64_t> a;
  a.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a.push_back(m.at(r, c));
  }
  if (auto r = bareiss(std::move(a), m.rows(), m.cols(), CheckedOps{})) return *r;
  return exact_rank_bignum(m);
}

}  // namespace boolgrade
