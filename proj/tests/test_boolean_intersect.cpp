#include <doctest.h>

#include <algorithm>

#include "boolgrade/boolean_intersect.hpp"
#include "boolgrade/errors.hpp"
#include "oracles.hpp"

using namespace boolgrade;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }
Permutation W(int n, std::vector<int> letters) {
  return ReducedWord(n, std::move(letters)).evaluate();
}

std::vector<LetterSet> sets(std::initializer_list<std::initializer_list<int>> xs) {
  std::vector<LetterSet> out;
  for (auto x : xs) out.emplace_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

const Permutation kV = P("312647895");
const Permutation kW = P("325184769");

}  // namespace

TEST_CASE("orientation table of the nine-letter example") {
  using O = Orientation;
  CHECK(orientation(kV, 1) == O::Decreasing);
  CHECK(orientation(kW, 1) == O::Interlaced);
  CHECK(orientation(kV, 4) == O::Decreasing);
  CHECK(orientation(kW, 4) == O::Increasing);
  CHECK(orientation(kV, 5) == O::Increasing);
  CHECK(orientation(kW, 5) == O::Decreasing);
  CHECK(orientation(kV, 6) == O::Increasing);
  CHECK(orientation(kW, 6) == O::Interlaced);
  CHECK(orientations_match(kV, kW, 1));
  CHECK_FALSE(orientations_match(kV, kW, 4));
  CHECK_FALSE(orientations_match(kV, kW, 5));
  CHECK(orientations_match(kV, kW, 6));
  CHECK(orientations_match(O::Increasing, O::Increasing));
  CHECK(orientation(W(5, {2, 3}), 2) == O::Increasing);
  CHECK(orientation(W(5, {3, 2}), 2) == O::Decreasing);
  CHECK(orientation(W(4, {2, 3, 2}), 2) == O::Interlaced);
  CHECK_THROWS_AS(orientation(kV, 3), InvalidArgument);
}

TEST_CASE("orientation agrees with the reduced-word definition") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& w : oracle::every(n)) {
      const auto s = support(w);
      for (int k = 1; k + 1 < n; ++k) {
        if (!s.contains(k) || !s.contains(k + 1)) continue;
        bool all_up = true;
        bool all_down = true;
        for (const auto& word : enumerate_reduced_words(w)) {
          std::vector<int> seq;
          for (int l : word.letters()) {
            if (l == k || l == k + 1) seq.push_back(l);
          }
          all_up = all_up && std::is_sorted(seq.begin(), seq.end());
          all_down = all_down && std::is_sorted(seq.rbegin(), seq.rend());
        }
        const Orientation want = all_up     ? Orientation::Increasing
                                 : all_down ? Orientation::Decreasing
                                            : Orientation::Interlaced;
        CHECK(orientation(w, k) == want);
      }
    }
  }
}

TEST_CASE("maximal selfish lists") {
  CHECK(maximal_selfish(LetterSet::interval(1, 1)).members == sets({{1}}));
  CHECK(maximal_selfish(LetterSet::interval(1, 2)).members == sets({{1}, {2}}));
  CHECK(maximal_selfish(LetterSet::interval(1, 3)).members == sets({{1, 3}, {2}}));
  CHECK(maximal_selfish(LetterSet::interval(1, 4)).members ==
        sets({{1, 3}, {2, 4}, {1, 4}}));
  CHECK(maximal_selfish(LetterSet::interval(1, 5)).members ==
        sets({{1, 3, 5}, {2, 5}, {2, 4}, {1, 4}}));
  CHECK(maximal_selfish(LetterSet{4, 5, 6}).members == sets({{4, 6}, {5}}));
  CHECK(maximal_selfish(LetterSet{}).members == std::vector<LetterSet>{LetterSet{}});
  CHECK(maximal_selfish(LetterSet{1, 2, 5}).members == sets({{1, 5}, {2, 5}}));
}

TEST_CASE("selfish counts") {
  const std::uint64_t want[] = {1, 2, 2, 3, 4, 5, 7, 9, 12, 16, 21, 28, 37, 49, 65};
  for (int k = 1; k <= 15; ++k) {
    CHECK(selfish_count(k) == want[k - 1]);
    // Brute force over all subsets of [1, k].
    std::uint64_t count = 0;
    for (std::uint32_t m = 0; m < (1u << k); ++m) {
      if (m & (m >> 1)) continue;
      bool maximal = true;
      for (int i = 0; i < k && maximal; ++i) {
        const std::uint32_t b = m | (1u << i);
        if (b != m && !(b & (b >> 1))) maximal = false;
      }
      count += maximal ? 1 : 0;
    }
    CHECK(selfish_count(k) == count);
  }
  CHECK_THROWS_AS(selfish_count(0), InvalidArgument);
}

TEST_CASE("obstruction runs") {
  const auto o1 = obstructions(W(4, {3, 2, 1}), W(4, {2, 1, 3, 2}));
  REQUIRE(o1.minimal_runs.size() == 1);
  CHECK(o1.minimal_runs[0] == RunWord{1, 2, RunDirection::Decreasing});
  CHECK_FALSE(o1.all_j_equal_1);

  const auto v2 = W(6, {3, 2, 1, 4, 5});
  const auto w2 = W(6, {4, 5, 2, 1, 3, 2, 4});
  const auto o2 = obstructions(v2, w2);
  CHECK(o2.minimal_runs.size() == 2);
  CHECK(std::count(o2.minimal_runs.begin(), o2.minimal_runs.end(),
                   RunWord{1, 2, RunDirection::Decreasing}) == 1);
  CHECK(std::count(o2.minimal_runs.begin(), o2.minimal_runs.end(),
                   RunWord{3, 2, RunDirection::Increasing}) == 1);

  const auto o3 = obstructions(kV, kW);
  CHECK(o3.mismatched_letters == LetterSet{4, 5, 6});
  CHECK(o3.all_j_equal_1);
  // 8 is in supp(v) but not supp(w).
  CHECK(std::count(o3.minimal_runs.begin(), o3.minimal_runs.end(), RunWord{8, 0}) == 1);
  CHECK_THROWS_AS(obstructions(P("4,1,3,2"), P("4,1,3,2")), InvalidArgument);
}

TEST_CASE("maximal elements of W(v,w) above the obstructions") {
  // W(v,w)^ as permutations: the closed form for a non-j=1 case.
  const auto v1 = W(4, {3, 2, 1});
  const auto m1 = intersection_maximal_closed_form(v1, W(4, {2, 1, 3, 2}));
  std::vector<Permutation> want1{W(4, {2, 1}), W(4, {3, 1}), W(4, {3, 2})};
  std::sort(want1.begin(), want1.end());
  CHECK(m1 == want1);

  const auto v2 = W(6, {3, 2, 1, 4, 5});
  const auto m2 = intersection_maximal_closed_form(v2, W(6, {4, 5, 2, 1, 3, 2, 4}));
  std::vector<Permutation> want2{W(6, {2, 1, 4, 5}), W(6, {3, 1, 4}), W(6, {3, 1, 5}),
                                 W(6, {3, 2, 4}), W(6, {3, 2, 5})};
  std::sort(want2.begin(), want2.end());
  CHECK(m2 == want2);
}

TEST_CASE("closed form for the nine-letter examples") {
  const auto s = canonical_reduced_word(kV);
  std::vector<Permutation> want{subword_element(s, LetterSet{1, 2, 5, 7}),
                                subword_element(s, LetterSet{1, 2, 4, 6, 7})};
  std::sort(want.begin(), want.end());
  CHECK(intersection_maximal_closed_form(kV, kW) == want);
  CHECK(intersection_maximal_closed_form(kV, kV) == std::vector<Permutation>{kV});

  const auto inv = kV.inverse();
  CHECK(canonical_reduced_word(kV) == ReducedWord(9, {2, 1, 5, 4, 6, 7, 8}));
  std::vector<Permutation> eight;
  for (int a : {1, 2}) {
    for (auto rest : {LetterSet{4, 6, 8}, LetterSet{4, 7}, LetterSet{5, 7}, LetterSet{5, 8}}) {
      rest.insert(a);
      eight.push_back(subword_element(s, rest));
    }
  }
  std::sort(eight.begin(), eight.end());
  CHECK(intersection_maximal_closed_form(kV, inv) == eight);
  CHECK(oracle::maximal_common(kV, inv).size() == 8);
}

TEST_CASE("chains of mismatched pairs split the selfish choice") {
  const auto v = P("23451");
  const auto w = P("31524");
  const auto o = obstructions(v, w);
  CHECK(o.mismatched_letters == LetterSet{1, 2, 3, 4});
  CHECK(orientations_match(v, w, 2));
  const auto s = canonical_reduced_word(v);
  std::vector<Permutation> want;
  for (auto x : {LetterSet{1, 3}, LetterSet{1, 4}, LetterSet{2, 3}, LetterSet{2, 4}}) {
    want.push_back(subword_element(s, x));
  }
  std::sort(want.begin(), want.end());
  CHECK(intersection_maximal_closed_form(v, w) == want);
  CHECK(oracle::maximal_common(v, w) == want);
}

TEST_CASE("support components") {
  CHECK(support_components(kV) == std::vector<SupportSet>{{1, 2}, {4, 5, 6, 7, 8}});
  CHECK(support_components(Permutation::simple(4, 2)) == std::vector<SupportSet>{{2}});
  CHECK(support_components(W(6, {1, 3, 5})) ==
        std::vector<SupportSet>{{1}, {3}, {5}});
}

TEST_CASE("wedge inserts a letter inside B(v)") {
  const auto v = P("51234");
  const auto z = W(5, {3});
  CHECK(wedge(v, z, 4) == W(5, {4, 3}));
  CHECK(wedge(v, z, 2) == W(5, {3, 2}));
  CHECK_FALSE(wedge(v, z, 3).has_value());
  CHECK_FALSE(wedge(P("21345"), Permutation::identity(5), 4).has_value());
}
