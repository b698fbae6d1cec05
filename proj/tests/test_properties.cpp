#include <doctest.h>

#include <algorithm>
#include <random>

#include "boolgrade/bgg_homology.hpp"
#include "boolgrade/boolean_intersect.hpp"
#include "boolgrade/rs_afunction.hpp"
#include "boolgrade/runs_matching.hpp"
#include "boolgrade/verify.hpp"
#include "oracles.hpp"

using namespace boolgrade;

namespace {

std::vector<Permutation> sample(std::vector<Permutation> xs, std::size_t k,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Permutation> out;
  std::sample(xs.begin(), xs.end(), std::back_inserter(out), k, rng);
  return out;
}

void require_pass(const std::string& id, VerifyConfig config) {
  config.threads = 4;
  const auto r = verify(id, config);
  INFO(id << ": " << (r.counterexamples.empty() ? "" : r.counterexamples.front()));
  CHECK(r.cases > 0);
  CHECK(r.passed());
}

}  // namespace

TEST_CASE("reduced words evaluate back and have the right length") {
  for (const auto& w : oracle::every(6)) {
    if (w.length() > 10) continue;
    for (const auto& s : enumerate_reduced_words(w)) {
      REQUIRE(s.evaluate() == w);
      REQUIRE(static_cast<int>(s.size()) == oracle::inversions(w));
    }
  }
}

TEST_CASE("three boolean characterizations agree and support matches words") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : oracle::every(n)) {
      REQUIRE(is_boolean(w) == is_boolean_by_patterns(w));
      if (w.length() <= 10) {
        REQUIRE(is_boolean(w) == is_boolean_by_words(w));
        REQUIRE(support(w) == support_by_words(w));
      }
    }
  }
}

TEST_CASE("multiplying by a simple reflection changes length by one") {
  for (const auto& w : oracle::every(6)) {
    for (int i = 1; i < 6; ++i) {
      REQUIRE(std::abs(w.times_simple(i).length() - w.length()) == 1);
    }
  }
}

TEST_CASE("bruhat order agrees with the subword criterion") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = oracle::every(n);
    for (const auto& u : all) {
      for (const auto& w : all) REQUIRE(bruhat_leq(u, w) == bruhat_leq_subword(u, w));
    }
  }
}

TEST_CASE("principal ideals are graded down-sets, hypercubes when boolean") {
  for (const auto& w : oracle::every(5)) {
    const auto b = principal_ideal(w);
    for (std::size_t i = 0; i < b.size(); ++i) {
      REQUIRE(b.rank(i) == b.element(i).length());
      for (const auto& x : covers_of(b.element(i), CoverDirection::Down)) {
        REQUIRE(b.contains(x));
      }
    }
    if (is_boolean(w)) {
      const int l = w.length();
      REQUIRE(b.size() == (std::size_t{1} << l));
      REQUIRE(b.covers().size() == static_cast<std::size_t>(l) * (std::size_t{1} << l) / 2);
      for (const auto& x : b.elements()) REQUIRE(is_boolean(x));
    }
  }
}

TEST_CASE("intersections are symmetric, idempotent and monotone") {
  const auto all = sample(oracle::every(5), 30, 3);
  for (const auto& v : all) {
    REQUIRE(intersect_ideals(v, v).elements() == principal_ideal(v).elements());
    for (const auto& w : all) {
      const auto a = intersect_ideals(v, w);
      REQUIRE(a.elements() == intersect_ideals(w, v).elements());
      for (const auto& x : covers_of(v, CoverDirection::Down)) {
        const auto b = intersect_ideals(x, w);
        for (const auto& y : b.elements()) REQUIRE(a.contains(y));
      }
    }
  }
}

TEST_CASE("maximal elements are subword elements of the canonical word") {
  for (const auto& v : boolean_permutations(5)) {
    const auto s = canonical_reduced_word(v);
    for (const auto& w : oracle::every(5)) {
      for (const auto& m : maximal_elements(intersect_ideals(v, w))) {
        REQUIRE(subword_element(s, support(m)) == m);
      }
    }
  }
}

TEST_CASE("closed form equals brute-force maximal elements") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& v : boolean_permutations(n)) {
      for (const auto& w : oracle::every(n)) {
        REQUIRE(intersection_maximal_closed_form(v, w) == oracle::maximal_common(v, w));
      }
    }
  }
  std::mt19937_64 rng(11);
  const auto vs = boolean_permutations(6);
  const auto ws = oracle::every(6);
  for (int i = 0; i < 300; ++i) {
    const auto& v = vs[rng() % vs.size()];
    const auto& w = ws[rng() % ws.size()];
    REQUIRE(intersection_maximal_closed_form(v, w) == oracle::maximal_common(v, w));
  }
}

TEST_CASE("obstructions do not depend on the reduced word of v") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& v : boolean_permutations(n)) {
      const auto words = enumerate_reduced_words(v);
      for (const auto& w : oracle::every(n)) {
        const auto base = obstructions(v, w, words.front());
        for (const auto& s : words) {
          const auto o = obstructions(v, w, s);
          REQUIRE(o.mismatched_letters == base.mismatched_letters);
          REQUIRE(o.all_j_equal_1 == base.all_j_equal_1);
          std::vector<Permutation> a;
          std::vector<Permutation> b;
          for (const auto& r : o.minimal_runs) a.push_back(subword_element(s, r.letters()));
          for (const auto& r : base.minimal_runs) {
            b.push_back(subword_element(words.front(), r.letters()));
          }
          std::sort(a.begin(), a.end());
          std::sort(b.begin(), b.end());
          REQUIRE(a == b);
        }
      }
    }
  }
}

TEST_CASE("two boolean arguments never produce a long obstruction") {
  for (int n = 2; n <= 6; ++n) {
    const auto vs = boolean_permutations(n);
    for (const auto& v : vs) {
      for (const auto& w : vs) REQUIRE(obstructions(v, w).all_j_equal_1);
    }
  }
}

TEST_CASE("maximal selfish families") {
  for (int k = 1; k <= 15; ++k) {
    const auto u = LetterSet::interval(1, k);
    const auto f = maximal_selfish(u).members;
    REQUIRE(f == maximal_selfish_brute_force(u).members);
    REQUIRE(f.size() == selfish_count(k));
    for (const auto& x : f) {
      REQUIRE((x.bits() & (x.bits() >> 1)) == 0);
      for (const auto& y : f) REQUIRE((x == y || !x.is_subset_of(y)));
    }
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto u = LetterSet::from_bits(static_cast<std::uint32_t>(rng()) & 0xfffeu);
    REQUIRE(maximal_selfish(u).members == maximal_selfish_brute_force(u).members);
  }
}

TEST_CASE("run count equals the second row, up to n = 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& v : boolean_permutations(n)) {
      const auto shape = rs_shape(v);
      REQUIRE(shape.rows() <= 2);
      const int runs = v.is_identity() ? 0 : run_decompose(v).count();
      REQUIRE(shape.row(2) == runs);
      REQUIRE(a_function(v) == runs);
      if (!v.is_identity()) REQUIRE(optimal_rank(v) < v.length());
    }
  }
}

TEST_CASE("shape symmetry under inversion") {
  for (const auto& w : oracle::every(6)) REQUIRE(rs_shape(w) == rs_shape(w.inverse()));
}

TEST_CASE("a-function of longest parabolic elements") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& mu : partitions(n)) {
      const auto w = longest_parabolic_element(mu, n);
      int want = 0;
      for (int p : mu.parts()) want += p * (p - 1) / 2;
      REQUIRE(w.length() == want);
      REQUIRE(a_function(w) == want);
      REQUIRE(rs_shape(w) == mu.transpose());
    }
  }
}

TEST_CASE("one run changes the first row by at most one") {
  std::mt19937_64 rng(9);
  const auto all = oracle::every(7);
  for (int t = 0; t < 300; ++t) {
    const auto& w = all[rng() % all.size()];
    for (int a = 1; a <= 6; ++a) {
      for (int b = 0; a + b <= 6; ++b) {
        for (auto dir : {RunDirection::Increasing, RunDirection::Decreasing}) {
          const auto x = RunWord{a, b, dir}.evaluate(7);
          const int d = rs_shape(compose(w, x)).row(1) - rs_shape(w).row(1);
          REQUIRE(std::abs(d) <= 1);
        }
      }
    }
  }
}

TEST_CASE("partner matchings are almost perfect at the optimal rank") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& v : boolean_permutations(n)) {
      if (v.is_identity()) continue;
      const auto d = run_decompose(v);
      const auto c = build_matching(v, optimal_partner(d, n));
      REQUIRE(verify_matching(c));
      REQUIRE(c.singleton_count() == 1);
      REQUIRE(c.singleton()->length() == v.length() - d.count());
    }
  }
}

TEST_CASE("matching bounds, slimming, and matching-forced homology") {
  require_pass("prop5.8", {});
  require_pass("lem5.6", {});
  require_pass("lem4.3", {});
  require_pass("lem4.4", {});
  require_pass("thm5.10", {1, 6});
}

TEST_CASE("grade does not depend on the sign assignment") {
  for (int n = 1; n <= 4; ++n) {
    const auto a = build_sign_assignment(n);
    const auto b = build_sign_assignment(n, {true, 7});
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (const auto& c : a.down(i)) differs = differs || b.sign(c.lower, i) != c.sign;
    }
    if (n >= 3) CHECK(differs);
    for (const auto& w : oracle::every(n)) {
      const auto ra = grade(w, a);
      const auto rb = grade(w, b);
      REQUIRE(ra.grade == rb.grade);
      REQUIRE(ra.witness_u == rb.witness_u);
      for (const auto& u : oracle::every(n)) {
        REQUIRE(homology_ranks(restricted_complex(w, u, a)) ==
                homology_ranks(restricted_complex(w, u, b)));
      }
    }
  }
}

TEST_CASE("pruned and unpruned grade searches agree") {
  for (int n = 1; n <= 4; ++n) {
    const auto signs = build_sign_assignment(n);
    for (const auto& w : oracle::every(n)) {
      const auto p = grade(w, signs);
      const auto q = grade(w, signs, {false, true});
      REQUIRE(p.grade == q.grade);
      REQUIRE(q.per_u->size() == oracle::every(n).size());
    }
  }
}

TEST_CASE("restricted complexes square to zero") {
  const auto signs = build_sign_assignment(5);
  const auto all = sample(oracle::every(5), 40, 2);
  for (const auto& w : all) {
    for (const auto& u : all) REQUIRE(squares_to_zero(restricted_complex(w, u, signs)));
  }
  CHECK(squares_to_zero(full_complex(build_sign_assignment(6))));
}

TEST_CASE("grade equals run count for boolean elements") {
  for (int n = 1; n <= 6; ++n) {
    const auto signs = build_sign_assignment(n);
    for (const auto& v : boolean_permutations(n)) {
      const int runs = v.is_identity() ? 0 : run_count(v);
      REQUIRE(grade(v, signs).grade == v.length() - optimal_rank(v));
      REQUIRE(grade(v, signs).grade == runs);
    }
  }
}
