#include "boolgrade/bruhat.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <unordered_set>

#include "boolgrade/errors.hpp"

namespace boolgrade {

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.degree() != w.degree()) throw DegreeMismatch(u.degree(), w.degree());
  const int n = u.degree();
  std::array<int, kMaxDegree> su{};
  std::array<int, kMaxDegree> sw{};
  for (int k = 1; k < n; ++k) {
    // Insert the k-th entries keeping both prefixes sorted.
    auto insert_sorted = [k](std::array<int, kMaxDegree>& a, int v) {
      int j = k - 1;
      while (j > 0 && a[j - 1] > v) {
        a[j] = a[j - 1];
        --j;
      }
      a[j] = v;
    };
    insert_sorted(su, u(k));
    insert_sorted(sw, w(k));
    for (int j = 0; j < k; ++j) {
      if (su[j] > sw[j]) return false;
    }
  }
  return true;
}

std::vector<Permutation> subword_elements(int degree,
                                          std::span<const int> letters) {
  std::vector<Permutation> reach{Permutation::identity(degree)};
  std::unordered_set<Permutation> seen(reach.begin(), reach.end());
  for (int a : letters) {
    const std::size_t count = reach.size();
    for (std::size_t i = 0; i < count; ++i) {
      Permutation next = reach[i].times_simple(a);
      // Only length-increasing extensions keep the subword reduced.
      if (next.length() > reach[i].length() && seen.insert(next).second) {
        reach.push_back(next);
      }
    }
  }
  std::sort(reach.begin(), reach.end());
  return reach;
}

bool bruhat_leq_subword(const Permutation& u, const Permutation& w) {
  if (u.degree() != w.degree()) throw DegreeMismatch(u.degree(), w.degree());
  const ReducedWord s = canonical_reduced_word(w);
  const auto below = subword_elements(w.degree(), s.letters());
  return std::binary_search(below.begin(), below.end(), u);
}

std::vector<Permutation> covers_of(const Permutation& w, CoverDirection dir) {
  const int n = w.degree();
  const int len = w.length();
  const int target = dir == CoverDirection::Up ? len + 1 : len - 1;
  std::vector<Permutation> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // Quick filter: w*(i j) goes up iff w(i) < w(j).
      if ((w(i) < w(j)) != (dir == CoverDirection::Up)) continue;
      Permutation x = w.swap_positions(i, j);
      if (x.length() == target) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// -------------------------------------------------------------- BruhatIdeal

namespace {

bool length_then_lex(const Permutation& a, const Permutation& b) {
  const int la = a.length();
  const int lb = b.length();
  if (la != lb) return la < lb;
  return a < b;
}

}  // namespace

void BruhatIdeal::index_elements(std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end(), length_then_lex);
  elements_ = std::move(elements);
  ranks_.resize(elements_.size());
  index_.clear();
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    ranks_[i] = elements_[i].length();
    index_.emplace(elements_[i], i);
  }
}

void BruhatIdeal::set_covers(
    std::vector<std::pair<std::size_t, std::size_t>> covers) {
  std::sort(covers.begin(), covers.end());
  covers_ = std::move(covers);
  up_.assign(elements_.size(), {});
  down_.assign(elements_.size(), {});
  for (auto [lo, hi] : covers_) {
    up_[lo].push_back(hi);
    down_[hi].push_back(lo);
  }
}

BruhatIdeal BruhatIdeal::from_elements(int degree,
                                       std::vector<Permutation> elements) {
  BruhatIdeal ideal;
  ideal.degree_ = degree;
  for (const auto& p : elements) {
    if (p.degree() != degree) throw DegreeMismatch(degree, p.degree());
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  ideal.index_elements(std::move(elements));

  // Group element indices by rank; covers only join adjacent ranks.
  const auto& el = ideal.elements_;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::size_t lo_begin = 0;
  while (lo_begin < el.size()) {
    const int r = ideal.ranks_[lo_begin];
    std::size_t lo_end = lo_begin;
    while (lo_end < el.size() && ideal.ranks_[lo_end] == r) ++lo_end;
    std::size_t hi_end = lo_end;
    while (hi_end < el.size() && ideal.ranks_[hi_end] == r + 1) ++hi_end;
    for (std::size_t x = lo_begin; x < lo_end; ++x) {
      for (std::size_t y = lo_end; y < hi_end; ++y) {
        if (bruhat_leq(el[x], el[y])) covers.emplace_back(x, y);
      }
    }
    lo_begin = lo_end;
  }
  ideal.set_covers(std::move(covers));

  for (std::size_t i = 0; i < el.size(); ++i) {
    for (const auto& d : covers_of(el[i], CoverDirection::Down)) {
      if (!ideal.contains(d)) {
        throw InvalidArgument("element set is not an order ideal: " +
                              to_string(d) + " < " + to_string(el[i]) +
                              " is missing");
      }
    }
  }
  return ideal;
}

std::optional<std::size_t> BruhatIdeal::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BruhatIdeal principal_ideal(const Permutation& w, const IdealLimits& limits) {
  std::vector<Permutation> order{w};
  std::unordered_map<Permutation, std::vector<Permutation>> below;
  std::unordered_set<Permutation> seen{w};
  std::deque<Permutation> queue{w};
  while (!queue.empty()) {
    Permutation x = queue.front();
    queue.pop_front();
    auto downs = covers_of(x, CoverDirection::Down);
    for (const auto& d : downs) {
      if (seen.insert(d).second) {
        if (seen.size() > limits.max_elements) {
          throw CapExceeded("principal ideal of " + to_string(w) +
                            " exceeds cap of " +
                            std::to_string(limits.max_elements) + " elements");
        }
        order.push_back(d);
        queue.push_back(d);
      }
    }
    below.emplace(x, std::move(downs));
  }

  BruhatIdeal ideal;
  ideal.degree_ = w.degree();
  ideal.index_elements(std::move(order));
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < ideal.elements_.size(); ++i) {
    for (const auto& d : below.at(ideal.elements_[i])) {
      covers.emplace_back(ideal.index_.at(d), i);
    }
  }
  ideal.set_covers(std::move(covers));
  return ideal;
}

BruhatIdeal intersect_ideals(const Permutation& v, const Permutation& w,
                             const IdealLimits& limits) {
  if (v.degree() != w.degree()) throw DegreeMismatch(v.degree(), w.degree());
  // Enumerate the shorter generator's ideal and filter by the other.
  const bool v_first = v.length() <= w.length();
  const Permutation& small = v_first ? v : w;
  const Permutation& other = v_first ? w : v;
  const BruhatIdeal base = principal_ideal(small, limits);
  std::vector<Permutation> kept;
  for (const auto& x : base.elements()) {
    if (bruhat_leq(x, other)) kept.push_back(x);
  }
  return BruhatIdeal::from_elements(v.degree(), std::move(kept));
}

std::vector<Permutation> maximal_elements(const BruhatIdeal& ideal) {
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (ideal.up(i).empty()) out.push_back(ideal.element(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------ RunWord

std::vector<int> RunWord::word() const {
  std::vector<int> out;
  for (int k = 0; k <= span; ++k) {
    out.push_back(direction == RunDirection::Increasing ? start + k
                                                        : start + span - k);
  }
  return out;
}

Permutation RunWord::evaluate(int degree) const {
  const auto w = word();
  return Permutation::from_word(degree, w);
}

std::string to_string(const RunWord& r) {
  return "[" + compact_letters(r.word()) + "]";
}

bool run_word_leq(const RunWord& r, const Permutation& w) {
  if (r.start < 1 || r.start + r.span > w.degree() - 1) {
    throw InvalidArgument("run " + to_string(r) + " leaves S_" +
                          std::to_string(w.degree()));
  }
  return bruhat_leq(r.evaluate(w.degree()), w);
}

}  // namespace boolgrade
