#pragma once

// Brute-force reference implementations used only by the tests. None of
// them call the library routine they are compared against.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "boolgrade/bgg_homology.hpp"
#include "boolgrade/permutation.hpp"

namespace oracle {

using boolgrade::Permutation;
__extension__ typedef __int128 i128;


inline int inversions(const Permutation& w) {
  int c = 0;
  for (int i = 1; i <= w.degree(); ++i) {
    for (int j = i + 1; j <= w.degree(); ++j) c += w(i) > w(j) ? 1 : 0;
  }
  return c;
}

// Rank-matrix criterion: u <= w iff #{k <= i : u(k) >= j} is at most the
// same count for w, for all i, j.
inline bool leq(const Permutation& u, const Permutation& w) {
  const int n = u.degree();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int cu = 0;
      int cw = 0;
      for (int k = 1; k <= i; ++k) {
        cu += u(k) >= j ? 1 : 0;
        cw += w(k) >= j ? 1 : 0;
      }
      if (cu > cw) return false;
    }
  }
  return true;
}

inline std::vector<Permutation> every(int n) {
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

inline std::vector<Permutation> below(const Permutation& w) {
  std::vector<Permutation> out;
  for (const auto& x : every(w.degree())) {
    if (leq(x, w)) out.push_back(x);
  }
  return out;
}

// Maximal elements of {x : x <= v, x <= w}, sorted.
inline std::vector<Permutation> maximal_common(const Permutation& v,
                                               const Permutation& w) {
  std::vector<Permutation> common;
  for (const auto& x : every(v.degree())) {
    if (leq(x, v) && leq(x, w)) common.push_back(x);
  }
  std::vector<Permutation> out;
  for (const auto& x : common) {
    bool maximal = true;
    for (const auto& y : common) {
      if (y != x && leq(x, y)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Longest increasing (or decreasing) subsequence by quadratic DP.
inline int longest_monotone(const Permutation& w, bool increasing) {
  const int n = w.degree();
  std::vector<int> best(static_cast<std::size_t>(n), 1);
  int top = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      const bool ok = increasing ? w(j + 1) < w(i + 1) : w(j + 1) > w(i + 1);
      if (ok) {
        best[static_cast<std::size_t>(i)] = std::max(
            best[static_cast<std::size_t>(i)], best[static_cast<std::size_t>(j)] + 1);
      }
    }
    top = std::max(top, best[static_cast<std::size_t>(i)]);
  }
  return top;
}

// F(2n-1): 1, 2, 5, 13, 34, ...
inline std::size_t boolean_count(int n) {
  std::size_t a = 0;
  std::size_t b = 1;
  for (int i = 1; i < 2 * n - 1; ++i) {
    const std::size_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

// Rank over Q by Bareiss elimination in 128-bit integers. Only for small
// matrices with small entries.
inline std::size_t rank(std::vector<std::vector<i128>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  i128 prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

// Homology ranks of the complex on {x <= w, x <= u}, anchored at w, built
// directly from the cover signs. Position p holds elements of length
// ell(w) + p.
inline std::vector<std::size_t> homology(const Permutation& w,
                                         const Permutation& u,
                                         const boolgrade::SignAssignment& s) {
  const int top = inversions(w);
  std::vector<std::vector<Permutation>> layer(static_cast<std::size_t>(top + 1));
  for (const auto& x : every(w.degree())) {
    if (leq(x, w) && leq(x, u)) {
      layer[static_cast<std::size_t>(inversions(x))].push_back(x);
    }
  }
  // d_l: layer l -> layer l+1; rank_d[l] its rank.
  std::vector<std::size_t> rank_d(static_cast<std::size_t>(top + 1), 0);
  for (int l = 0; l < top; ++l) {
    const auto& src = layer[static_cast<std::size_t>(l)];
    const auto& dst = layer[static_cast<std::size_t>(l + 1)];
    if (src.empty() || dst.empty()) continue;
    std::vector<std::vector<i128>> m(dst.size(),
                                         std::vector<i128>(src.size(), 0));
    for (std::size_t i = 0; i < dst.size(); ++i) {
      for (std::size_t j = 0; j < src.size(); ++j) {
        if (leq(src[j], dst[i])) m[i][j] = s.sign(src[j], dst[i]);
      }
    }
    rank_d[static_cast<std::size_t>(l)] = rank(std::move(m));
  }
  std::vector<std::size_t> h(static_cast<std::size_t>(top + 1), 0);
  for (int l = 0; l <= top; ++l) {
    const std::size_t dim = layer[static_cast<std::size_t>(l)].size();
    const std::size_t out = rank_d[static_cast<std::size_t>(l)];
    const std::size_t in = l > 0 ? rank_d[static_cast<std::size_t>(l - 1)] : 0;
    h[static_cast<std::size_t>(l)] = dim - out - in;
  }
  return h;  // indexed by length; position = length - ell(w)
}

// Grade with no pruning: min over all u of ell(w) - (largest length with
// nonzero homology).
inline int grade(const Permutation& w, const boolgrade::SignAssignment& s) {
  const int top = inversions(w);
  int best = top;
  for (const auto& u : every(w.degree())) {
    const auto h = homology(w, u, s);
    for (int l = top; l >= 0; --l) {
      if (h[static_cast<std::size_t>(l)] != 0) {
        best = std::min(best, top - l);
        break;
      }
    }
  }
  return best;
}

}  // namespace oracle
