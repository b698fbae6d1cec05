#include <doctest.h>

#include <set>

#include "boolgrade/errors.hpp"
#include "boolgrade/permutation.hpp"
#include "oracles.hpp"

using namespace boolgrade;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

std::set<std::vector<int>> word_set(const Permutation& w) {
  std::set<std::vector<int>> out;
  for (const auto& s : enumerate_reduced_words(w)) {
    out.emplace(s.letters().begin(), s.letters().end());
  }
  return out;
}

}  // namespace

TEST_CASE("compose is right to left") {
  const auto e = Permutation::identity(3);
  const auto s1 = Permutation::simple(3, 1);
  const auto s2 = Permutation::simple(3, 2);
  CHECK(compose(e, P("2,3,1")) == P("2,3,1"));
  CHECK(compose(s1, s1) == e);
  CHECK(compose(s2, s1) == P("3,1,2"));
  CHECK_THROWS_AS(compose(s1, Permutation::identity(4)), DegreeMismatch);
}

TEST_CASE("times_simple swaps positions, simple_times swaps values") {
  const auto w = P("3,1,2");
  CHECK(w.times_simple(1) == P("1,3,2"));
  CHECK(w.simple_times(1) == P("3,2,1"));
  CHECK(w.times_simple(2) == compose(w, Permutation::simple(3, 2)));
}

TEST_CASE("length") {
  CHECK(length(Permutation::identity(5)) == 0);
  CHECK(length(P("4,1,3,2")) == 4);
  CHECK(length(Permutation::longest(4)) == 6);
}

TEST_CASE("reduced words of 4132") {
  CHECK(word_set(P("4,1,3,2")) ==
        std::set<std::vector<int>>{{3, 2, 1, 3}, {3, 2, 3, 1}, {2, 3, 2, 1}});
  const auto e = enumerate_reduced_words(Permutation::identity(3));
  REQUIRE(e.size() == 1);
  CHECK(e[0].empty());
  CHECK(word_set(P("3,1,2")) == std::set<std::vector<int>>{{2, 1}});
}

TEST_CASE("reduced word caps are hard errors") {
  CHECK_THROWS_AS(enumerate_reduced_words(Permutation::longest(6), {16, 1000}),
                  CapExceeded);
  CHECK_THROWS_AS(enumerate_reduced_words(Permutation::longest(7), {10, 1'000'000}),
                  CapExceeded);
}

TEST_CASE("canonical reduced word") {
  CHECK(to_string(canonical_reduced_word(P("4,1,3,2"))) == "2 3 2 1");
  CHECK(canonical_reduced_word(Permutation::identity(4)).empty());
  CHECK(to_compact_string(canonical_reduced_word(P("5,1,2,3,4"))) == "[4321]");
  // Smallest element of R(w) in lexicographic order.
  for (const auto& w : oracle::every(5)) {
    const auto words = enumerate_reduced_words(w);
    CHECK(canonical_reduced_word(w) == *std::min_element(words.begin(), words.end()));
  }
}

TEST_CASE("support from one-line notation") {
  CHECK(support(P("3,1,2,6,4,7,8,9,5")) == LetterSet{1, 2, 4, 5, 6, 7, 8});
  CHECK(support(P("3,2,5,1,8,4,7,6,9")) == LetterSet{1, 2, 3, 4, 5, 6, 7});
  CHECK(support(Permutation::identity(6)).empty());
}

TEST_CASE("boolean test") {
  CHECK_FALSE(is_boolean(P("4,1,3,2")));
  CHECK(is_boolean(P("3,1,2,6,4,7,8,9,5")));
  CHECK(is_boolean(Permutation::identity(3)));
  CHECK(oracle::inversions(P("4,1,3,2")) > support(P("4,1,3,2")).size());
}

TEST_CASE("descents") {
  CHECK(descents(P("4,1,3,2"), Side::Right) == LetterSet{1, 3});
  CHECK(descents(Permutation::identity(4), Side::Left).empty());
  CHECK(descents(Permutation::longest(3), Side::Left) == LetterSet{1, 2});
  CHECK(descents(P("2,3,1"), Side::Left) == descents(P("2,3,1").inverse(), Side::Right));
}

TEST_CASE("pattern containment") {
  CHECK(pattern_contains(P("4,1,3,2"), P("3,2,1")));
  CHECK_FALSE(pattern_contains(Permutation::identity(4), P("3,2,1")));
  CHECK(pattern_contains(P("3,4,1,2"), P("3,4,1,2")));
  CHECK_FALSE(pattern_contains(P("2,1,4,3"), P("3,4,1,2")));
}

TEST_CASE("boolean counts follow odd-index Fibonacci numbers") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(boolean_permutations(n).size() == oracle::boolean_count(n));
  }
  CHECK(boolean_permutations(6).size() == 89);
}

TEST_CASE("text forms round-trip") {
  const auto w = P("5123678(12)49(10)(11)");
  CHECK(w.degree() == 12);
  CHECK(w(8) == 12);
  CHECK(parse_permutation(to_string(w)) == w);
  CHECK(parse_permutation(to_compact_string(w)) == w);
  CHECK(P("3,1,2,6,4,7,8,9,5") == P("312647895"));
  const auto s = parse_reduced_word(12, "(11)43(10)5216798");
  CHECK(s.size() == 11);
  CHECK(to_compact_string(s) == "[(11)43(10)5216798]");
  CHECK(parse_reduced_word(12, to_string(s)) == s);
  CHECK_THROWS_AS(parse_permutation("1,1,2"), InvalidArgument);
  CHECK(parse_reduced_word(4, "1,3,2") == parse_reduced_word(4, "1 3 2"));
  CHECK_THROWS_AS(parse_reduced_word(3, "1 1"), InvalidArgument);
  CHECK_THROWS_AS(parse_reduced_word(3, "3"), InvalidArgument);
}

TEST_CASE("inverse and from_word") {
  for (const auto& w : oracle::every(4)) {
    CHECK(compose(w, w.inverse()) == Permutation::identity(4));
    const auto s = canonical_reduced_word(w);
    CHECK(Permutation::from_word(4, s.letters()) == w);
  }
}
