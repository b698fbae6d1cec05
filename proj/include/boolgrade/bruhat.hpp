#pragma once

// Bruhat order on S_n: comparison, covers, explicit order ideals and their
// intersections, and run words (the boolean bigrassmannian elements).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "boolgrade/permutation.hpp"

namespace boolgrade {

/// u <= w via sorted prefix sets: for every k the sorted {u(1..k)} is
/// entrywise <= the sorted {w(1..k)}.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// u <= w iff some subword of a reduced word of w is a reduced word of u.
/// Exponential in the worst case; used as an oracle.
bool bruhat_leq_subword(const Permutation& u, const Permutation& w);

/// Every permutation that has a reduced word appearing as a subword of
/// `letters` (the word itself need not be reduced).
std::vector<Permutation> subword_elements(int degree,
                                          std::span<const int> letters);

enum class CoverDirection { Up, Down };

/// Covers of w, found by sweeping w * t over all transpositions t and
/// keeping the length changes of exactly one. Sorted.
std::vector<Permutation> covers_of(const Permutation& w, CoverDirection dir);

struct IdealLimits {
  std::size_t max_elements = 2'000'000;
};

/// An explicit order ideal of (S_n, <=). Elements are stored sorted by
/// (length, one-line notation); covers are index pairs (lower, upper).
class BruhatIdeal {
 public:
  /// Builds the ideal from its element set and recomputes the covers from
  /// scratch: x covers-below y iff ell(y) = ell(x) + 1 and x <= y.
  /// Throws InvalidArgument when `elements` is not downward closed.
  static BruhatIdeal from_elements(int degree,
                                   std::vector<Permutation> elements);

  int degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  int rank(std::size_t i) const { return ranks_[i]; }
  const std::vector<int>& ranks() const { return ranks_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const {
    return covers_;
  }
  std::span<const std::size_t> up(std::size_t i) const { return up_[i]; }
  std::span<const std::size_t> down(std::size_t i) const { return down_[i]; }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_.count(p) != 0; }

 private:
  friend BruhatIdeal principal_ideal(const Permutation&, const IdealLimits&);
  BruhatIdeal() = default;
  void index_elements(std::vector<Permutation> elements);
  void set_covers(std::vector<std::pair<std::size_t, std::size_t>> covers);

  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<int> ranks_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::unordered_map<Permutation, std::size_t> index_;
};

/// B(w), by breadth-first search over down-covers starting at w.
BruhatIdeal principal_ideal(const Permutation& w, const IdealLimits& limits = {});

/// B(v) ∩ B(w), with covers recomputed inside the intersection.
BruhatIdeal intersect_ideals(const Permutation& v, const Permutation& w,
                             const IdealLimits& limits = {});

/// Elements of the ideal with no up-cover inside it, in one-line order.
std::vector<Permutation> maximal_elements(const BruhatIdeal& ideal);

enum class RunDirection { Increasing, Decreasing };

/// The word a(a+1)...(a+b) (increasing) or (a+b)...(a+1)a (decreasing).
struct RunWord {
  int start = 1;
  int span = 0;
  RunDirection direction = RunDirection::Increasing;

  int first_value() const { return start; }
  int last_value() const { return start + span; }
  LetterSet letters() const { return LetterSet::interval(start, start + span); }
  /// Letters in word order.
  std::vector<int> word() const;
  Permutation evaluate(int degree) const;

  friend bool operator==(const RunWord& a, const RunWord& b) {
    // Single letters carry no direction.
    return a.start == b.start && a.span == b.span &&
           (a.span == 0 || a.direction == b.direction);
  }
};

std::string to_string(const RunWord& r);  // "[567]"

/// Whether the run's permutation lies below w.
bool run_word_leq(const RunWord& r, const Permutation& w);

}  // namespace boolgrade
