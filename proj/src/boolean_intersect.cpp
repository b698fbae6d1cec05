#include "boolgrade/boolean_intersect.hpp"

#include <algorithm>
#include <stdexcept>

#include "boolgrade/errors.hpp"

namespace boolgrade {

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::Increasing:
      return "increasing";
    case Orientation::Decreasing:
      return "decreasing";
    case Orientation::Interlaced:
      return "interlaced";
  }
  return "?";
}

namespace {

void require_pair_in_support(const Permutation& w, int k) {
  const SupportSet s = support(w);
  if (!s.contains(k) || !s.contains(k + 1)) {
    throw InvalidArgument("orientation of {" + std::to_string(k) + "," +
                          std::to_string(k + 1) + "} undefined: not in supp(" +
                          to_string(w) + ")");
  }
}

}  // namespace

Orientation orientation(const Permutation& w, int k) {
  require_pair_in_support(w, k);
  const int n = w.degree();
  const Permutation inv = w.inverse();

  // (a) {w(1..k)} = [1,k+1] \ {x} with x < k+1 and w^{-1}(x) > k+1.
  bool increasing = false;
  {
    std::uint32_t prefix = 0;
    bool within = true;
    for (int i = 1; i <= k; ++i) {
      if (w(i) > k + 1) within = false;
      prefix |= 1u << w(i);
    }
    if (within && ((prefix >> (k + 1)) & 1u)) {
      for (int x = 1; x < k + 1; ++x) {
        if (!((prefix >> x) & 1u)) {
          increasing = inv(x) > k + 1;
          break;
        }
      }
    }
  }

  // (b) {w(k+2..n)} = [k+1,n] \ {y} with y > k+1 and w^{-1}(y) < k+1.
  bool decreasing = false;
  {
    std::uint32_t suffix = 0;
    bool within = true;
    for (int i = k + 2; i <= n; ++i) {
      if (w(i) < k + 1) within = false;
      suffix |= 1u << w(i);
    }
    if (within && ((suffix >> (k + 1)) & 1u)) {
      for (int y = k + 2; y <= n; ++y) {
        if (!((suffix >> y) & 1u)) {
          decreasing = inv(y) < k + 1;
          break;
        }
      }
    }
  }

  // (c) some i <= k with w(i) > k+1 and some j >= k+2 with w(j) < k+1.
  bool big_left = false;
  bool small_right = false;
  for (int i = 1; i <= k; ++i) big_left = big_left || w(i) > k + 1;
  for (int j = k + 2; j <= n; ++j) small_right = small_right || w(j) < k + 1;
  const bool interlaced = big_left && small_right;

  const int holds = int{increasing} + int{decreasing} + int{interlaced};
  if (holds != 1) {
    throw std::logic_error("orientation trichotomy violated for " +
                           to_string(w) + ", k = " + std::to_string(k));
  }
  if (increasing) return Orientation::Increasing;
  if (decreasing) return Orientation::Decreasing;
  return Orientation::Interlaced;
}

Orientation orientation_by_words(const Permutation& w, int k,
                                 const WordLimits& limits) {
  require_pair_in_support(w, k);
  bool all_increasing = true;
  bool all_decreasing = true;
  for (const auto& s : enumerate_reduced_words(w, limits)) {
    int last_k = -1, first_k = -1, last_k1 = -1, first_k1 = -1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const int pos = static_cast<int>(i);
      if (s[i] == k) {
        if (first_k < 0) first_k = pos;
        last_k = pos;
      } else if (s[i] == k + 1) {
        if (first_k1 < 0) first_k1 = pos;
        last_k1 = pos;
      }
    }
    all_increasing = all_increasing && last_k < first_k1;
    all_decreasing = all_decreasing && last_k1 < first_k;
  }
  if (all_increasing) return Orientation::Increasing;
  if (all_decreasing) return Orientation::Decreasing;
  return Orientation::Interlaced;
}

bool orientations_match(Orientation a, Orientation b) {
  return !((a == Orientation::Increasing && b == Orientation::Decreasing) ||
           (a == Orientation::Decreasing && b == Orientation::Increasing));
}

bool orientations_match(const Permutation& v, const Permutation& w, int k) {
  if (v.degree() != w.degree()) throw DegreeMismatch(v.degree(), w.degree());
  return orientations_match(orientation(v, k), orientation(w, k));
}

// ------------------------------------------------------------- selfishness

std::vector<LetterSet> interval_components(LetterSet universe) {
  std::vector<LetterSet> out;
  LetterSet current;
  int previous = -2;
  for (int k : universe.members()) {
    if (k != previous + 1 && !current.empty()) {
      out.push_back(current);
      current = LetterSet{};
    }
    current.insert(k);
    previous = k;
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

namespace {

// Maximal selfish subsets of [1, k] as bitmasks over bit positions 1..k.
// Q_k = {Y ∪ {k} : Y ∈ Q_{k-2}} ∪ {Y ∪ {k-1} : Y ∈ Q_{k-3}}, with
// Q_0 = {∅}; Q_1 and Q_2 are the base cases.
std::vector<std::uint32_t> selfish_interval(int k) {
  std::vector<std::vector<std::uint32_t>> q(static_cast<std::size_t>(k) + 1);
  q[0] = {0u};
  if (k >= 1) q[1] = {1u << 1};
  if (k >= 2) q[2] = {1u << 1, 1u << 2};
  for (int m = 3; m <= k; ++m) {
    for (std::uint32_t y : q[m - 2]) q[m].push_back(y | (1u << m));
    for (std::uint32_t y : q[m - 3]) q[m].push_back(y | (1u << (m - 1)));
  }
  return q[k];
}

bool is_selfish(std::uint32_t bits) { return (bits & (bits >> 1)) == 0; }

}  // namespace

SelfishFamily maximal_selfish(LetterSet universe) {
  std::vector<std::uint32_t> product{0u};
  for (LetterSet comp : interval_components(universe)) {
    const int shift = comp.min() - 1;
    std::vector<std::uint32_t> next;
    for (std::uint32_t base : product) {
      for (std::uint32_t part : selfish_interval(comp.size())) {
        next.push_back(base | (part << shift));
      }
    }
    product = std::move(next);
  }
  SelfishFamily family{universe, {}};
  for (std::uint32_t bits : product) {
    family.members.push_back(LetterSet::from_bits(bits));
  }
  std::sort(family.members.begin(), family.members.end());
  return family;
}

SelfishFamily maximal_selfish_brute_force(LetterSet universe) {
  const auto letters = universe.members();
  const std::size_t m = letters.size();
  if (m > 24) throw CapExceeded("brute-force selfish search limited to 24");
  std::vector<std::uint32_t> selfish;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) bits |= 1u << letters[i];
    }
    if (is_selfish(bits)) selfish.push_back(bits);
  }
  SelfishFamily family{universe, {}};
  for (std::uint32_t x : selfish) {
    bool maximal = true;
    for (int k : letters) {
      const std::uint32_t bigger = x | (1u << k);
      if (bigger != x && is_selfish(bigger)) {
        maximal = false;
        break;
      }
    }
    if (maximal) family.members.push_back(LetterSet::from_bits(x));
  }
  std::sort(family.members.begin(), family.members.end());
  return family;
}

std::uint64_t selfish_count(int k) {
  if (k < 1) throw InvalidArgument("selfish_count needs k >= 1");
  std::vector<std::uint64_t> q{0, 1, 2, 2};  // index 0 unused
  for (int m = 4; m <= k; ++m) q.push_back(q[m - 2] + q[m - 3]);
  return q[static_cast<std::size_t>(k)];
}

// ------------------------------------------------------------ obstructions

Permutation subword_element(const ReducedWord& s, LetterSet letters) {
  const auto sub = s.restricted_to(letters);
  return Permutation::from_word(s.degree(), sub);
}

namespace {

void require_boolean(const Permutation& v) {
  if (!is_boolean(v)) {
    throw InvalidArgument(to_string(v) + " is not boolean");
  }
}

}  // namespace

ObstructionSet obstructions(const Permutation& v, const Permutation& w) {
  return obstructions(v, w, canonical_reduced_word(v));
}

ObstructionSet obstructions(const Permutation& v, const Permutation& w,
                            const ReducedWord& s) {
  if (v.degree() != w.degree()) throw DegreeMismatch(v.degree(), w.degree());
  require_boolean(v);
  if (s.evaluate() != v) {
    throw InvalidArgument("word " + to_string(s) + " is not a reduced word of " +
                          to_string(v));
  }
  const int n = v.degree();
  const SupportSet sv = support(v);
  const SupportSet sw = support(w);

  ObstructionSet out;
  for (int i : sv.members()) {
    RunDirection dir = RunDirection::Increasing;
    for (int j = 0; sv.contains(i + j); ++j) {
      if (j == 1) {
        dir = s.position_of(i) < s.position_of(i + 1)
                  ? RunDirection::Increasing
                  : RunDirection::Decreasing;
      } else if (j > 1) {
        const bool up = s.position_of(i + j - 1) < s.position_of(i + j);
        if (up != (dir == RunDirection::Increasing)) break;
      }
      const RunWord r{i, j, dir};
      if (run_word_leq(r, w)) continue;
      const bool shorter_ok =
          j == 0 || (run_word_leq(RunWord{i, j - 1, dir}, w) &&
                     run_word_leq(RunWord{i + 1, j - 1, dir}, w));
      if (shorter_ok) {
        out.minimal_runs.push_back(r);
        if (j >= 2) out.all_j_equal_1 = false;
      }
      // Every longer run from i contains r, so none of them is minimal.
      break;
    }
  }

  const SupportSet common = sv & sw;
  for (int k = 1; k + 1 < n; ++k) {
    if (common.contains(k) && common.contains(k + 1) &&
        !orientations_match(orientation(v, k), orientation(w, k))) {
      out.mismatched_letters.insert(k);
      out.mismatched_letters.insert(k + 1);
    }
  }
  return out;
}

std::vector<SupportSet> support_components(const Permutation& v) {
  require_boolean(v);
  return interval_components(support(v));
}

namespace {

// Splits the mismatched letters into chains joined by mismatched pairs.
std::vector<LetterSet> mismatch_chains(const Permutation& v,
                                       const Permutation& w,
                                       LetterSet mismatched) {
  std::vector<LetterSet> chains;
  LetterSet current;
  for (int k : mismatched.members()) {
    const bool joins = current.contains(k - 1) &&
                       !orientations_match(orientation(v, k - 1),
                                           orientation(w, k - 1));
    if (!joins && !current.empty()) {
      chains.push_back(current);
      current = LetterSet{};
    }
    current.insert(k);
  }
  if (!current.empty()) chains.push_back(current);
  return chains;
}

}  // namespace

std::vector<Permutation> intersection_maximal_closed_form(
    const Permutation& v, const Permutation& w) {
  const ReducedWord s = canonical_reduced_word(v);
  const ObstructionSet obs = obstructions(v, w, s);
  const SupportSet sv = support(v);
  std::vector<LetterSet> supports;

  if (obs.all_j_equal_1) {
    const LetterSet base = (sv & support(w)) - obs.mismatched_letters;
    std::vector<LetterSet> choices{base};
    for (LetterSet chain : mismatch_chains(v, w, obs.mismatched_letters)) {
      std::vector<LetterSet> next;
      for (LetterSet partial : choices) {
        for (LetterSet x : maximal_selfish(chain).members) {
          next.push_back(partial | x);
        }
      }
      choices = std::move(next);
    }
    supports = std::move(choices);
  } else {
    // Maximal subsets of supp(v) containing no obstruction's letters.
    const auto letters = sv.members();
    const std::size_t m = letters.size();
    std::vector<std::uint32_t> forbidden;
    for (const auto& r : obs.minimal_runs) forbidden.push_back(r.letters().bits());
    auto allowed = [&](std::uint32_t bits) {
      for (std::uint32_t f : forbidden) {
        if ((bits & f) == f) return false;
      }
      return true;
    };
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
      std::uint32_t bits = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if ((mask >> i) & 1u) bits |= 1u << letters[i];
      }
      if (!allowed(bits)) continue;
      bool maximal = true;
      for (int k : letters) {
        const std::uint32_t bigger = bits | (1u << k);
        if (bigger != bits && allowed(bigger)) {
          maximal = false;
          break;
        }
      }
      if (maximal) supports.push_back(LetterSet::from_bits(bits));
    }
  }

  std::vector<Permutation> out;
  for (LetterSet x : supports) out.push_back(subword_element(s, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Permutation> wedge(const Permutation& v, const Permutation& z,
                                 int k) {
  require_boolean(v);
  if (!bruhat_leq(z, v)) {
    throw InvalidArgument(to_string(z) + " is not below " + to_string(v));
  }
  const SupportSet sv = support(v);
  const SupportSet sz = support(z);
  if (!sv.contains(k) || sz.contains(k)) return std::nullopt;
  LetterSet letters = sz;
  letters.insert(k);
  return subword_element(canonical_reduced_word(v), letters);
}

}  // namespace boolgrade
