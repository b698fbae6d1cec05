#include <doctest.h>

#include <random>

#include "boolgrade/errors.hpp"
#include "boolgrade/exact_rank.hpp"
#include "oracles.hpp"

using namespace boolgrade;

namespace {

IntMatrix from_rows(std::vector<std::vector<std::int64_t>> rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<oracle::i128>> widen(const IntMatrix& m) {
  std::vector<std::vector<oracle::i128>> out(m.rows(), std::vector<oracle::i128>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c);
  }
  return out;
}

}  // namespace

TEST_CASE("small ranks") {
  CHECK(exact_rank(IntMatrix(0, 0)) == 0);
  CHECK(exact_rank(IntMatrix(3, 4)) == 0);
  CHECK(exact_rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(exact_rank(from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, -1}})) == 2);
  CHECK(exact_rank(from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == 3);
  // Over Q, not mod 2.
  CHECK(exact_rank(from_rows({{1, 1}, {1, -1}})) == 2);
}

TEST_CASE("overflow falls back to big integers") {
  const std::int64_t big = std::int64_t{1} << 40;
  const auto m = from_rows({{big, big + 1, 3}, {big - 1, big, 7}, {5, big, big}});
  CHECK(exact_rank(m) == exact_rank_bignum(m));
  CHECK(exact_rank(m) == 3);
  const auto singular = from_rows({{big, 2 * big}, {big + 1, 2 * big + 2}});
  CHECK(exact_rank(singular) == 1);
}

TEST_CASE("random matrices agree with a 128-bit oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-1, 1);
  std::uniform_int_distribution<int> dim(1, 9);
  for (int t = 0; t < 500; ++t) {
    IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
    }
    const std::size_t want = oracle::rank(widen(m));
    CHECK(exact_rank(m) == want);
    CHECK(exact_rank_bignum(m) == want);
  }
}

TEST_CASE("multiply") {
  const auto a = from_rows({{1, 2}, {3, 4}});
  const auto b = from_rows({{0, 1}, {1, 0}});
  CHECK(multiply(a, b) == from_rows({{2, 1}, {4, 3}}));
  CHECK_THROWS_AS(multiply(a, IntMatrix(3, 1)), InvalidArgument);
  CHECK(IntMatrix(2, 2).is_zero());
}
