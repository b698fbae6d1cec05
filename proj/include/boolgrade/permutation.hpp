#pragma once

// Permutations of [1,n] in one-line notation, reduced words, supports,
// descents and the boolean test.
//
// Conventions: permutations are maps composed right to left, so
// (a*b)(i) = a(b(i)). A word i_1 ... i_k stands for the product
// s_{i_1} ... s_{i_k} of simple transpositions s_i = (i, i+1); multiplying
// on the right by s_i swaps the entries in positions i and i+1.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boolgrade {

inline constexpr int kMaxDegree = 16;

/// A set of generator indices (letters) drawn from [1, 31].
class LetterSet {
 public:
  constexpr LetterSet() = default;
  LetterSet(std::initializer_list<int> letters);
  static constexpr LetterSet from_bits(std::uint32_t bits) {
    LetterSet s;
    s.bits_ = bits;
    return s;
  }
  /// All letters in [lo, hi]; empty when lo > hi.
  static LetterSet interval(int lo, int hi);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int k) const {
    return k >= 1 && k <= 31 && ((bits_ >> k) & 1u) != 0;
  }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  int min() const;  // requires !empty()
  int max() const;  // requires !empty()
  std::vector<int> members() const;

  void insert(int k);
  void erase(int k);

  constexpr bool is_subset_of(LetterSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  friend constexpr LetterSet operator|(LetterSet a, LetterSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr LetterSet operator&(LetterSet a, LetterSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr LetterSet operator-(LetterSet a, LetterSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(LetterSet, LetterSet) = default;
  /// Orders by sorted member list, lexicographically.
  friend std::strong_ordering operator<=>(LetterSet a, LetterSet b);

 private:
  std::uint32_t bits_ = 0;
};

using SupportSet = LetterSet;

std::string to_string(LetterSet s);  // "{1,2,4}"

class Permutation {
 public:
  /// images[i] = w(i+1); must be a bijection on [1, n], 1 <= n <= 16.
  explicit Permutation(std::span<const int> images);
  Permutation(std::initializer_list<int> images);

  static Permutation identity(int n);
  static Permutation longest(int n);
  /// The simple transposition s_i in S_n, 1 <= i <= n-1.
  static Permutation simple(int n, int i);
  /// Product s_{l_1} ... s_{l_k}; the word need not be reduced.
  static Permutation from_word(int n, std::span<const int> letters);

  int degree() const { return degree_; }
  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::vector<int> images() const;

  Permutation inverse() const;
  /// w * s_i: swaps positions i and i+1.
  Permutation times_simple(int i) const;
  /// s_i * w: swaps values i and i+1.
  Permutation simple_times(int i) const;
  /// w * (i j) for positions i < j.
  Permutation swap_positions(int i, int j) const;

  /// Number of inversions.
  int length() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Degree first, then one-line notation lexicographically.
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b);

  std::size_t hash() const;

 private:
  Permutation() = default;
  std::array<std::uint8_t, kMaxDegree> images_{};
  std::uint8_t degree_ = 0;
};

enum class Side { Left, Right };

Permutation compose(const Permutation& a, const Permutation& b);
int length(const Permutation& w);

/// Right descents {i : w(i) > w(i+1)}; left descents are those of w^{-1}.
SupportSet descents(const Permutation& w, Side side);

/// supp(w) from one-line notation: k is in the support iff
/// {w(1), ..., w(k)} != {1, ..., k}.
SupportSet support(const Permutation& w);

/// ell(w) == |supp(w)|.
bool is_boolean(const Permutation& w);

/// True iff some subsequence of w is order-isomorphic to p.
bool pattern_contains(const Permutation& w, const Permutation& p);

/// Boolean via avoidance of 321 and 3412 (oracle).
bool is_boolean_by_patterns(const Permutation& w);

/// Every element of S_n in one-line lexicographic order.
std::vector<Permutation> all_permutations(int n);
/// The boolean elements of S_n, same order.
std::vector<Permutation> boolean_permutations(int n);

class ReducedWord {
 public:
  /// Validates letters in [1, n-1] and reducedness.
  ReducedWord(int degree, std::vector<int> letters);

  int degree() const { return degree_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  Permutation evaluate() const;
  /// Subword consisting of the letters belonging to `keep`, in order.
  std::vector<int> restricted_to(LetterSet keep) const;
  /// Index of the first occurrence of `letter`, or -1.
  int position_of(int letter) const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord& a, const ReducedWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  int degree_;
  std::vector<int> letters_;
};

/// True iff the word has as many letters as the length of its product.
bool is_reduced(int degree, std::span<const int> letters);

struct WordLimits {
  int max_length = 16;
  std::size_t max_count = 1'000'000;
};

/// All reduced words of w in lexicographic order, by descent recursion.
/// Throws CapExceeded when ell(w) > max_length or the count exceeds
/// max_count.
std::vector<ReducedWord> enumerate_reduced_words(const Permutation& w,
                                                 const WordLimits& limits = {});

/// Lexicographically smallest reduced word: repeatedly strip the smallest
/// left descent.
ReducedWord canonical_reduced_word(const Permutation& w);

/// Boolean via "no reduced word repeats a letter" over all of R(w) (oracle).
bool is_boolean_by_words(const Permutation& w, const WordLimits& limits = {});

/// Union of the letters over all reduced words (oracle for support()).
SupportSet support_by_words(const Permutation& w, const WordLimits& limits = {});

// Text forms. One-line notation is comma separated ("3,1,2"); a compact
// form with parenthesised multi-digit entries ("5123678(12)49(10)(11)") is
// accepted on input too. Reduced words are space separated ("2 3 2 1"),
// and also accepted in compact form.
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& w);
std::string to_compact_string(const Permutation& w);
ReducedWord parse_reduced_word(int degree, std::string_view text);
std::vector<int> parse_letters(std::string_view text);
std::string to_string(const ReducedWord& s);
/// Compact bracket form used in figures, e.g. "[2321]" or "[(10)9]".
std::string to_compact_string(const ReducedWord& s);
std::string compact_letters(std::span<const int> letters);

}  // namespace boolgrade

template <>
struct std::hash<boolgrade::Permutation> {
  std::size_t operator()(const boolgrade::Permutation& p) const noexcept {
    return p.hash();
  }
};
