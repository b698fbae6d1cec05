#include "boolgrade/runs_matching.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "boolgrade/boolean_intersect.hpp"
#include "boolgrade/errors.hpp"
#include "boolgrade/rs_afunction.hpp"

namespace boolgrade {

namespace {

void require_boolean(const Permutation& v) {
  if (!is_boolean(v)) throw InvalidArgument(to_string(v) + " is not boolean");
}

// Direction of the run currently being extended.
enum Dir : std::uint8_t { kNone = 0, kUp = 1, kDown = 2 };

// Exact minimum run count over the reduced words of a boolean v. Since the
// letters of v are distinct, R(v) is the set of reorderings of s that keep
// the relative order of every pair of adjacent letters.
class RunSearch {
 public:
  explicit RunSearch(const ReducedWord& s) : s_(s) {
    for (std::size_t p = 0; p < s.size(); ++p) pos_[s[p]] = static_cast<int>(p);
    for (int x : s.letters()) {
      for (int y : {x - 1, x + 1}) {
        if (pos_.count(y) && pos_[y] < pos_[x]) before_[x] |= 1u << y;
      }
      all_ |= 1u << x;
    }
  }

  int best_from(std::uint32_t used, int last, Dir dir) {
    if (used == all_) return 0;
    const Key key{used, last, dir};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int best = std::numeric_limits<int>::max();
    for (int x : s_.letters()) {
      if (!placeable(used, x)) continue;
      const auto [cost, nd] = step(last, dir, x);
      best = std::min(best, cost + best_from(used | (1u << x), x, nd));
    }
    memo_.emplace(key, best);
    return best;
  }

  // Lexicographically smallest word attaining the optimum.
  std::vector<int> optimal_word() {
    std::vector<int> word;
    std::uint32_t used = 0;
    int last = 0;
    Dir dir = kNone;
    const int target = best_from(0, 0, kNone);
    int spent = 0;
    while (used != all_) {
      std::vector<int> letters(s_.letters().begin(), s_.letters().end());
      std::sort(letters.begin(), letters.end());
      bool advanced = false;
      for (int x : letters) {
        if (!placeable(used, x)) continue;
        const auto [cost, nd] = step(last, dir, x);
        if (spent + cost + best_from(used | (1u << x), x, nd) == target) {
          word.push_back(x);
          used |= 1u << x;
          last = x;
          dir = nd;
          spent += cost;
          advanced = true;
          break;
        }
      }
      if (!advanced) throw std::logic_error("run search lost the optimum");
    }
    return word;
  }

 private:
  struct Key {
    std::uint32_t used;
    int last;
    Dir dir;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return (static_cast<std::size_t>(k.used) << 8) ^
             (static_cast<std::size_t>(k.last) << 2) ^ k.dir;
    }
  };

  bool placeable(std::uint32_t used, int x) const {
    if (used & (1u << x)) return false;
    auto it = before_.find(x);
    const std::uint32_t need = it == before_.end() ? 0 : it->second;
    return (used & need) == need;
  }

  static std::pair<int, Dir> step(int last, Dir dir, int x) {
    if (last == 0) return {1, kNone};
    if (x == last + 1 && dir != kDown) return {0, kUp};
    if (x == last - 1 && dir != kUp) return {0, kDown};
    return {1, kNone};
  }

  const ReducedWord& s_;
  std::unordered_map<int, int> pos_;
  std::unordered_map<int, std::uint32_t> before_;
  std::uint32_t all_ = 0;
  std::unordered_map<Key, int, KeyHash> memo_;
};

}  // namespace

std::vector<RunWord> split_into_runs(std::span<const int> letters) {
  std::vector<RunWord> runs;
  std::size_t i = 0;
  while (i < letters.size()) {
    RunWord r{letters[i], 0, RunDirection::Increasing};
    std::size_t j = i + 1;
    if (j < letters.size() && std::abs(letters[j] - letters[i]) == 1) {
      const int delta = letters[j] - letters[i];
      while (j < letters.size() && letters[j] - letters[j - 1] == delta) ++j;
      const int first = letters[i];
      const int last = letters[j - 1];
      r.start = std::min(first, last);
      r.span = std::abs(last - first);
      r.direction = delta > 0 ? RunDirection::Increasing : RunDirection::Decreasing;
    }
    runs.push_back(r);
    i = j;
  }
  return runs;
}

RunDecomposition run_decompose(const Permutation& v) {
  require_boolean(v);
  const int n = v.degree();
  const int target = rs_shape(v).row(2);
  const ReducedWord s = canonical_reduced_word(v);
  auto runs = split_into_runs(s.letters());
  if (static_cast<int>(runs.size()) == target) {
    return RunDecomposition{std::move(runs), s};
  }
  RunSearch search(s);
  const auto word = search.optimal_word();
  runs = split_into_runs(word);
  if (static_cast<int>(runs.size()) != target) {
    throw std::logic_error("minimal run count " + std::to_string(runs.size()) +
                           " differs from the second row length " +
                           std::to_string(target) + " for " + to_string(v));
  }
  return RunDecomposition{std::move(runs), ReducedWord(n, word)};
}

int run_count(const Permutation& v) { return run_decompose(v).count(); }

Permutation slim(const ReducedWord& s, int i) {
  const int l = static_cast<int>(s.size());
  if (i < 1 || i > l) {
    throw InvalidArgument("deletion position " + std::to_string(i) +
                          " outside [1, " + std::to_string(l) + "]");
  }
  std::vector<int> prefix(s.letters().begin(), s.letters().begin() + (i - 1));
  Permutation u = Permutation::from_word(s.degree(), prefix);
  for (int j = i + 1; j <= l; ++j) {
    const Permutation next = u.times_simple(s[static_cast<std::size_t>(j - 1)]);
    if (next.length() > u.length()) u = next;
  }
  return u;
}

std::vector<int> run_partner_word(const RunWord& r) {
  std::vector<int> out;
  if (r.span == 0) return out;
  const int a = r.start;
  const int b = r.span;
  if (r.direction == RunDirection::Increasing) {
    for (int k = a + 1; k <= a + b; ++k) out.push_back(k);
    out.push_back(a);
    for (int k = a + 1; k <= a + b - 1; ++k) out.push_back(k);
  } else {
    for (int k = a + b - 1; k >= a; --k) out.push_back(k);
    for (int k = a + b; k >= a + 1; --k) out.push_back(k);
  }
  return out;
}

Permutation optimal_partner(const RunDecomposition& d, int degree) {
  std::vector<int> word;
  for (const auto& r : d.runs) {
    const auto t = run_partner_word(r);
    word.insert(word.end(), t.begin(), t.end());
  }
  return Permutation::from_word(degree, word);
}

Permutation optimal_partner(const Permutation& v) {
  if (v.is_identity()) return v;
  return optimal_partner(run_decompose(v), v.degree());
}

int optimal_rank(const Permutation& v) {
  if (v.is_identity()) return 0;
  return v.length() - run_count(v);
}

// ------------------------------------------------------------ certificates

std::optional<Permutation> MatchingCertificate::singleton() const {
  for (const auto& step : steps_) {
    if (const auto* u = std::get_if<Unmatched>(&step)) return u->element;
  }
  return std::nullopt;
}

std::size_t MatchingCertificate::singleton_count() const {
  return static_cast<std::size_t>(
      std::count_if(steps_.begin(), steps_.end(), [](const MatchingStep& st) {
        return std::holds_alternative<Unmatched>(st);
      }));
}

namespace {

// A matching on the elements of an ideal, stored as blocks of indices.
struct Blocks {
  std::vector<std::vector<std::size_t>> members;
};

// Orders blocks so that every prefix union is upward closed. Higher blocks
// go first; ties are broken by the smallest element index.
std::vector<MatchingStep> order_top_down(const BruhatIdeal& ideal,
                                         const Blocks& blocks) {
  const std::size_t nb = blocks.members.size();
  std::vector<std::size_t> block_of(ideal.size(), nb);
  for (std::size_t b = 0; b < nb; ++b) {
    for (std::size_t i : blocks.members[b]) block_of[i] = b;
  }
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (block_of[i] == nb) throw std::logic_error("element left out of matching");
  }
  std::vector<std::vector<std::size_t>> after(nb);
  std::vector<int> indegree(nb, 0);
  for (const auto& [lo, hi] : ideal.covers()) {
    const std::size_t a = block_of[hi];
    const std::size_t b = block_of[lo];
    if (a == b) continue;
    after[a].push_back(b);
    ++indegree[b];
  }
  auto key = [&](std::size_t b) {
    int top = 0;
    std::size_t first = ideal.size();
    for (std::size_t i : blocks.members[b]) {
      top = std::max(top, ideal.rank(i));
      first = std::min(first, i);
    }
    return std::make_pair(-top, first);
  };
  using Entry = std::pair<std::pair<int, std::size_t>, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t b = 0; b < nb; ++b) {
    if (indegree[b] == 0) ready.push({key(b), b});
  }
  std::vector<MatchingStep> steps;
  while (!ready.empty()) {
    const std::size_t b = ready.top().second;
    ready.pop();
    const auto& m = blocks.members[b];
    if (m.size() == 1) {
      steps.emplace_back(Unmatched{ideal.element(m[0])});
    } else {
      const auto lo = ideal.rank(m[0]) < ideal.rank(m[1]) ? m[0] : m[1];
      const auto hi = lo == m[0] ? m[1] : m[0];
      steps.emplace_back(MatchedPair{ideal.element(lo), ideal.element(hi)});
    }
    for (std::size_t c : after[b]) {
      if (--indegree[c] == 0) ready.push({key(c), c});
    }
  }
  if (steps.size() != nb) throw std::logic_error("matching is not acyclic");
  return steps;
}

// Support masks of the elements of an ideal below a boolean v.
std::unordered_map<std::uint32_t, std::size_t> index_by_support(
    const BruhatIdeal& ideal) {
  std::unordered_map<std::uint32_t, std::size_t> out;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    out.emplace(support(ideal.element(i)).bits(), i);
  }
  return out;
}

bool down_closed(const std::unordered_set<std::uint32_t>& family) {
  for (std::uint32_t z : family) {
    for (std::uint32_t bits = z; bits != 0; bits &= bits - 1) {
      const std::uint32_t low = bits & (~bits + 1);
      if (!family.count(z & ~low)) return false;
    }
  }
  return true;
}

}  // namespace

MatchingCertificate build_matching(const Permutation& v, const Permutation& w,
                                   const IdealLimits& limits) {
  if (v.degree() != w.degree()) throw DegreeMismatch(v.degree(), w.degree());
  require_boolean(v);
  BruhatIdeal ideal = intersect_ideals(v, w, limits);
  const auto where = index_by_support(ideal);

  std::unordered_set<std::uint32_t> family;
  for (const auto& [bits, i] : where) family.insert(bits);
  std::uint32_t acc = 0;
  Blocks blocks;

  while (true) {
    if (family.size() == 1 && family.count(0)) {
      blocks.members.push_back({where.at(acc)});
      break;
    }
    std::uint32_t all = 0;
    for (std::uint32_t z : family) all |= z;
    const std::uint32_t m = 1u << (31 - std::countl_zero(all));
    std::unordered_set<std::uint32_t> rest;
    for (std::uint32_t z : family) {
      if (z & m) continue;
      if (family.count(z | m)) {
        blocks.members.push_back({where.at(z | acc), where.at(z | m | acc)});
      } else {
        rest.insert(z);
      }
    }
    if (rest.empty()) break;
    std::uint32_t q = ~0u;
    for (std::uint32_t x : rest) q &= x;
    if (!rest.count(q)) {
      throw std::logic_error("unmatched elements have no least element");
    }
    family.clear();
    for (std::uint32_t x : rest) family.insert(x & ~q);
    if (!down_closed(family)) {
      throw std::logic_error("unmatched elements do not form an interval");
    }
    acc |= q;
  }
  auto steps = order_top_down(ideal, blocks);
  return MatchingCertificate(std::move(ideal), std::move(steps));
}

MatchingCertificate build_partner_matching(const Permutation& v,
                                           const RunDecomposition& d) {
  require_boolean(v);
  const Permutation w = optimal_partner(d, v.degree());
  BruhatIdeal ideal = intersect_ideals(v, w);
  const auto where = index_by_support(ideal);

  std::unordered_set<std::uint32_t> family;
  for (const auto& [bits, i] : where) family.insert(bits);
  Blocks blocks;
  for (const auto& r : d.runs) {
    if (r.span == 0) continue;
    const std::uint32_t head = 1u << r.start;
    const std::uint32_t tail = r.letters().bits() & ~head;
    std::unordered_set<std::uint32_t> kept;
    for (std::uint32_t z : family) {
      if ((z & tail) == tail) {
        kept.insert(z);
      } else if (!(z & head)) {
        if (!family.count(z | head)) {
          throw std::logic_error("run matching partner missing for " +
                                 to_string(LetterSet::from_bits(z)));
        }
        blocks.members.push_back({where.at(z), where.at(z | head)});
      }
    }
    family = std::move(kept);
  }
  for (std::uint32_t z : family) blocks.members.push_back({where.at(z)});
  auto steps = order_top_down(ideal, blocks);
  return MatchingCertificate(std::move(ideal), std::move(steps));
}

MatchingCheck verify_matching(const MatchingCertificate& c) {
  const BruhatIdeal& ideal = c.ideal();
  auto fail = [](std::string why) { return MatchingCheck{false, std::move(why)}; };
  std::vector<char> seen(ideal.size(), 0);
  std::size_t singletons = 0;
  std::size_t step_no = 0;
  for (const auto& step : c.steps()) {
    ++step_no;
    std::vector<std::size_t> added;
    if (const auto* p = std::get_if<MatchedPair>(&step)) {
      const auto lo = ideal.index_of(p->lower);
      const auto hi = ideal.index_of(p->upper);
      if (!lo || !hi) return fail("step " + std::to_string(step_no) + ": element outside the ideal");
      if (p->upper.length() != p->lower.length() + 1 ||
          !bruhat_leq(p->lower, p->upper)) {
        return fail("step " + std::to_string(step_no) + ": " + to_string(p->lower) +
                    " is not covered by " + to_string(p->upper));
      }
      added = {*lo, *hi};
    } else {
      const auto& u = std::get<Unmatched>(step);
      const auto i = ideal.index_of(u.element);
      if (!i) return fail("step " + std::to_string(step_no) + ": element outside the ideal");
      ++singletons;
      added = {*i};
    }
    for (std::size_t i : added) {
      if (seen[i]) {
        return fail("element " + to_string(ideal.element(i)) + " used twice");
      }
      seen[i] = 1;
    }
    for (std::size_t i : added) {
      for (std::size_t j : ideal.up(i)) {
        if (!seen[j]) {
          return fail("prefix ending at step " + std::to_string(step_no) +
                      " is not upward closed: " + to_string(ideal.element(j)) +
                      " missing above " + to_string(ideal.element(i)));
        }
      }
    }
  }
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (!seen[i]) return fail("element " + to_string(ideal.element(i)) + " not covered");
  }
  if (singletons > 1) {
    return fail(std::to_string(singletons) + " unmatched elements");
  }
  return {};
}

}  // namespace boolgrade
