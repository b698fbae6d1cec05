#pragma once

// Maximal elements of B(v) ∩ B(w) for boolean v, computed without
// enumerating either ideal: orientations of consecutive generators read off
// one-line notation, maximal selfish subsets, and the run obstructions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boolgrade/bruhat.hpp"
#include "boolgrade/permutation.hpp"

namespace boolgrade {

enum class Orientation { Increasing, Decreasing, Interlaced };

std::string to_string(Orientation o);

/// Orientation of the letters k, k+1 in w, decided from one-line notation.
/// Requires {k, k+1} ⊆ supp(w); throws InvalidArgument otherwise.
Orientation orientation(const Permutation& w, int k);

/// The same, by scanning every reduced word of w (oracle).
Orientation orientation_by_words(const Permutation& w, int k,
                                 const WordLimits& limits = {});

/// Two orientations match unless one is increasing and the other decreasing.
bool orientations_match(Orientation a, Orientation b);

/// Requires {k, k+1} ⊆ supp(v) ∩ supp(w).
bool orientations_match(const Permutation& v, const Permutation& w, int k);

/// Inclusion-maximal subsets of a universe with no two consecutive integers.
struct SelfishFamily {
  LetterSet universe;
  std::vector<LetterSet> members;  // sorted
};

/// Splits a set of integers into maximal intervals, ascending.
std::vector<LetterSet> interval_components(LetterSet universe);

/// Product over interval components of the recursively generated families
/// for [1, k]. The empty universe yields {∅}.
SelfishFamily maximal_selfish(LetterSet universe);

/// Exhaustive subset search (oracle).
SelfishFamily maximal_selfish_brute_force(LetterSet universe);

/// |Q_k| from the recursion |Q_k| = |Q_{k-2}| + |Q_{k-3}|, seeds 1, 2, 2.
std::uint64_t selfish_count(int k);

struct ObstructionSet {
  /// Minimal directed runs r in the fixed reduced word of v with r ≰ w and
  /// both one-letter-shorter sub-runs <= w. Includes every single letter of
  /// supp(v) \ supp(w).
  std::vector<RunWord> minimal_runs;
  /// Letters k with a neighbour x = k±1 such that the orientations of
  /// {k, x} in v and w do not match.
  LetterSet mismatched_letters;
  /// No obstruction run has three or more letters.
  bool all_j_equal_1 = true;
};

/// Requires boolean v; uses canonical_reduced_word(v).
ObstructionSet obstructions(const Permutation& v, const Permutation& w);
/// Same, against a caller-chosen reduced word s of v.
ObstructionSet obstructions(const Permutation& v, const Permutation& w,
                            const ReducedWord& s);

/// Maximal elements of B(v) ∩ B(w), sorted, for boolean v.
std::vector<Permutation> intersection_maximal_closed_form(const Permutation& v,
                                                          const Permutation& w);

/// Maximal intervals of supp(v).
std::vector<SupportSet> support_components(const Permutation& v);

/// z ⋏ s_k inside B(v) for boolean v: the element of B(v) whose support is
/// supp(z) ∪ {k}, or nullopt when k ∉ supp(v) or k ∈ supp(z).
/// Requires z <= v.
std::optional<Permutation> wedge(const Permutation& v, const Permutation& z,
                                 int k);

/// The element of B(v) (v boolean, s ∈ R(v)) with the given support.
Permutation subword_element(const ReducedWord& s, LetterSet letters);

}  // namespace boolgrade
