#pragma once

// Run decompositions of boolean permutations, the slimming construction,
// optimal partners and ranks, and constructive (almost) perfect matchings of
// B(v) ∩ B(w) certified by coideal filtrations.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "boolgrade/bruhat.hpp"
#include "boolgrade/permutation.hpp"

namespace boolgrade {

struct RunDecomposition {
  std::vector<RunWord> runs;
  ReducedWord word;  // concatenation of the runs

  int count() const { return static_cast<int>(runs.size()); }
};

/// Minimal splitting of a reduced word of v into runs, over all of R(v).
/// Greedy on the canonical word first; falls back to an exact search over
/// linear extensions when the greedy count exceeds lambda_2(v). Requires
/// boolean v.
RunDecomposition run_decompose(const Permutation& v);

/// Greedy split of one fixed word into maximal runs.
std::vector<RunWord> split_into_runs(std::span<const int> letters);

/// run(v).
int run_count(const Permutation& v);

/// The unique maximal permutation with a reduced word that is a subword of
/// s with position i (1-based) deleted.
Permutation slim(const ReducedWord& s, int i);

/// Partner of a single run: (a+1)...(a+b) a (a+1)...(a+b-1) for an
/// increasing run, (a+b-1)...a (a+b)...(a+1) for a decreasing one, empty
/// when b = 0.
std::vector<int> run_partner_word(const RunWord& r);

/// Concatenated per-run partners of the given decomposition.
Permutation optimal_partner(const RunDecomposition& d, int degree);
/// Partner built from run_decompose(v); the identity when v = e.
Permutation optimal_partner(const Permutation& v);

/// ell(v) - run(v).
int optimal_rank(const Permutation& v);

struct MatchedPair {
  Permutation lower;
  Permutation upper;
};

struct Unmatched {
  Permutation element;
};

using MatchingStep = std::variant<MatchedPair, Unmatched>;

/// Steps listed top-down: every prefix union is meant to be a coideal of
/// the ideal. Construction does not validate; use verify_matching.
class MatchingCertificate {
 public:
  MatchingCertificate(BruhatIdeal over, std::vector<MatchingStep> steps)
      : over_(std::move(over)), steps_(std::move(steps)) {}

  const BruhatIdeal& ideal() const { return over_; }
  const std::vector<MatchingStep>& steps() const { return steps_; }
  std::vector<MatchingStep>& mutable_steps() { return steps_; }

  bool is_perfect() const { return !singleton().has_value(); }
  /// The first Unmatched step, if any.
  std::optional<Permutation> singleton() const;
  std::size_t singleton_count() const;

 private:
  BruhatIdeal over_;
  std::vector<MatchingStep> steps_;
};

/// Matching of B(v) ∩ B(w) for boolean v: pair z with z ⋏ s_m for the
/// largest common support letter m, then recurse on the principal filter of
/// what is left. Perfect, or almost perfect with singleton rank at most
/// ell(v) - run(v).
MatchingCertificate build_matching(const Permutation& v, const Permutation& w,
                                   const IdealLimits& limits = {});

/// Run-by-run matching of B(v) ∩ B(w) where w is the partner of the given
/// decomposition; the singleton is v with the smallest letter of each run
/// removed.
MatchingCertificate build_partner_matching(const Permutation& v,
                                           const RunDecomposition& d);

struct MatchingCheck {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// Checks the certificate directly against its ideal: the steps partition
/// the elements, pairs are covers, each prefix is a coideal, and there is
/// at most one singleton.
MatchingCheck verify_matching(const MatchingCertificate& c);

}  // namespace boolgrade
