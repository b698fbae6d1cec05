#pragma once

// Signs for the BGG complex on the Bruhat order of S_n, its restrictions to
// convex subsets, exact homology, and the grade of the simple module at w.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boolgrade/bruhat.hpp"
#include "boolgrade/exact_rank.hpp"
#include "boolgrade/permutation.hpp"
#include "boolgrade/rs_afunction.hpp"

namespace boolgrade {

/// Position of w among the n! permutations of its degree in lexicographic
/// order of one-line notation.
std::size_t lehmer_index(const Permutation& w);
Permutation permutation_at(int n, std::size_t index);

struct SignOptions {
  /// Eliminate the unknowns of each system in reverse order. Gives a second,
  /// usually different, valid assignment.
  bool reverse_pivots = false;
  int max_degree = 7;
};

struct SignedCover {
  std::size_t lower;  // lehmer index
  int sign;           // +1 or -1
};

/// A ±1 coefficient on every Bruhat cover of S_n with the product of the
/// four signs around every length-2 interval equal to -1.
class SignAssignment {
 public:
  int degree() const { return degree_; }
  /// n!
  std::size_t size() const { return elements_.size(); }
  const Permutation& element(std::size_t index) const { return elements_[index]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t cover_count() const;

  /// Down-covers of the element at `upper`, with signs, sorted by index.
  std::span<const SignedCover> down(std::size_t upper) const {
    return down_[upper];
  }
  std::span<const std::size_t> up(std::size_t lower) const { return up_[lower]; }

  /// Throws InvalidArgument unless x ⋖ y.
  int sign(const Permutation& x, const Permutation& y) const;
  int sign(std::size_t lower, std::size_t upper) const;

  /// Copy with one sign replaced. The result is not rechecked.
  SignAssignment with_sign(const Permutation& x, const Permutation& y,
                           int sign) const;

  /// Empty when every length-2 interval has sign product -1; otherwise a
  /// description of the first bad interval.
  std::string diamond_violation() const;
  bool satisfies_diamond_condition() const { return diamond_violation().empty(); }

  friend SignAssignment build_sign_assignment(int n, const SignOptions& options);

 private:
  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<std::vector<SignedCover>> down_;
  std::vector<std::vector<std::size_t>> up_;
};

/// Solves, for each element z, the parity system of the intervals [x, z]
/// over GF(2), free unknowns set to +1. Throws CapExceeded when
/// n > options.max_degree.
SignAssignment build_sign_assignment(int n, const SignOptions& options = {});

/// Chain complex on a convex subset of S_n. The element x sits at position
/// length(x) - anchor_length; the differential raises the position by one
/// and has the cover signs as entries.
class RestrictedComplex {
 public:
  int anchor_length() const { return anchor_length_; }
  /// Basis at each occupied position, sorted.
  const std::map<int, std::vector<Permutation>>& bases() const { return bases_; }
  std::size_t dimension(int position) const;
  /// Matrix of the map from `position` to `position + 1` (rows index the
  /// target basis). Zero-sized when either side is empty.
  const IntMatrix& differential(int position) const;
  int min_position() const;
  int max_position() const;
  bool empty() const { return bases_.empty(); }

  friend RestrictedComplex complex_over(std::vector<Permutation> elements,
                                        int anchor_length,
                                        const SignAssignment& signs);

 private:
  int anchor_length_ = 0;
  std::map<int, std::vector<Permutation>> bases_;
  std::map<int, IntMatrix> differentials_;
  IntMatrix empty_;
};

/// The complex over an arbitrary convex subset. Throws InvalidArgument on
/// duplicates or a degree mismatch with the sign assignment.
RestrictedComplex complex_over(std::vector<Permutation> elements,
                               int anchor_length, const SignAssignment& signs);

/// The complex on B(w) ∩ B(u), anchored at w.
RestrictedComplex restricted_complex(const Permutation& w, const Permutation& u,
                                     const SignAssignment& signs);

/// The complex on all of S_n, anchored at the longest element.
RestrictedComplex full_complex(const SignAssignment& signs);

/// Rank of homology at every occupied position (zeros included).
std::map<int, std::size_t> homology_ranks(const RestrictedComplex& c);

/// Every composite of consecutive differentials vanishes.
bool squares_to_zero(const RestrictedComplex& c);

struct UResult {
  Permutation u;
  /// Rightmost position with nonzero homology, nullopt when exact or when
  /// the search stopped before reaching it.
  std::optional<int> rightmost;
  bool pruned = false;
};

struct GradeOptions {
  /// Skip u sharing a descent with w, and u comparable with w (except e).
  bool prune = true;
  /// Record a row per u and search every position (no early exit).
  bool keep_table = false;
};

struct GradeReport {
  Permutation w;
  int grade = 0;
  Permutation witness_u;
  std::optional<std::vector<UResult>> per_u;
};

/// min over u of |rightmost nonzero homology position| of the complex on
/// B(w) ∩ B(u). The smallest u in one-line order attaining it is the witness.
GradeReport grade(const Permutation& w, const SignAssignment& signs,
                  const GradeOptions& options = {});

/// Grade of the longest element of the Young parabolic for mu. Throws
/// std::logic_error if it differs from the length.
GradeReport grade_of_parabolic_longest(const YoungShape& mu, int n,
                                       const SignAssignment& signs);

/// grade(w) == length(w).
bool is_perfect(const Permutation& w, const SignAssignment& signs);

/// w is the longest element of the parabolic subgroup generated by its own
/// support, i.e. supp(w) equals its right descent set.
bool is_longest_parabolic(const Permutation& w);

}  // namespace boolgrade
