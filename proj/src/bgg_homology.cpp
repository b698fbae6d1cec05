#include "boolgrade/bgg_homology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "boolgrade/errors.hpp"

namespace boolgrade {

std::size_t lehmer_index(const Permutation& w) {
  const int n = w.degree();
  std::size_t index = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j <= n; ++j) smaller += w(j) < w(i) ? 1 : 0;
    index = index * static_cast<std::size_t>(n - i + 1) +
            static_cast<std::size_t>(smaller);
  }
  return index;
}

Permutation permutation_at(int n, std::size_t index) {
  std::size_t total = 1;
  for (int k = 2; k <= n; ++k) total *= static_cast<std::size_t>(k);
  if (index >= total) {
    throw InvalidArgument("index " + std::to_string(index) + " out of range for S_" +
                          std::to_string(n));
  }
  std::vector<int> code(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const auto radix = static_cast<std::size_t>(n - i + 1);
    code[static_cast<std::size_t>(i - 1)] = static_cast<int>(index % radix);
    index /= radix;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images;
  for (int c : code) {
    images.push_back(pool[static_cast<std::size_t>(c)]);
    pool.erase(pool.begin() + c);
  }
  return Permutation(images);
}

// ------------------------------------------------------------ signs

std::size_t SignAssignment::cover_count() const {
  std::size_t total = 0;
  for (const auto& d : down_) total += d.size();
  return total;
}

int SignAssignment::sign(std::size_t lower, std::size_t upper) const {
  const auto& d = down_.at(upper);
  auto it = std::lower_bound(d.begin(), d.end(), lower,
                             [](const SignedCover& c, std::size_t i) {
                               return c.lower < i;
                             });
  if (it == d.end() || it->lower != lower) {
    throw InvalidArgument(to_string(elements_[lower]) + " is not covered by " +
                          to_string(elements_[upper]));
  }
  return it->sign;
}

int SignAssignment::sign(const Permutation& x, const Permutation& y) const {
  if (x.degree() != degree_) throw DegreeMismatch(x.degree(), degree_);
  if (y.degree() != degree_) throw DegreeMismatch(y.degree(), degree_);
  return sign(lehmer_index(x), lehmer_index(y));
}

SignAssignment SignAssignment::with_sign(const Permutation& x,
                                         const Permutation& y, int s) const {
  if (s != 1 && s != -1) throw InvalidArgument("sign must be +1 or -1");
  sign(x, y);  // validates the cover
  SignAssignment copy = *this;
  const std::size_t lo = lehmer_index(x);
  for (auto& c : copy.down_[lehmer_index(y)]) {
    if (c.lower == lo) c.sign = s;
  }
  return copy;
}

std::string SignAssignment::diamond_violation() const {
  for (std::size_t z = 0; z < size(); ++z) {
    std::unordered_map<std::size_t, std::pair<int, int>> below;  // count, product
    for (const auto& yc : down_[z]) {
      for (const auto& xc : down_[yc.lower]) {
        auto& [count, product] = below.try_emplace(xc.lower, 0, 1).first->second;
        ++count;
        product *= yc.sign * xc.sign;
      }
    }
    for (const auto& [x, cp] : below) {
      if (cp.first != 2 || cp.second != -1) {
        return "interval [" + to_string(elements_[x]) + ", " +
               to_string(elements_[z]) + "] has " + std::to_string(cp.first) +
               " middle elements and sign product " + std::to_string(cp.second);
      }
    }
  }
  return {};
}

SignAssignment build_sign_assignment(int n, const SignOptions& options) {
  if (n < 1) throw InvalidArgument("degree must be positive");
  if (n > options.max_degree) {
    throw CapExceeded("sign assignment for S_" + std::to_string(n) +
                      " exceeds the degree cap " +
                      std::to_string(options.max_degree));
  }
  SignAssignment out;
  out.degree_ = n;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    out.elements_.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));

  const std::size_t total = out.elements_.size();
  out.down_.resize(total);
  out.up_.resize(total);
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> len(total);
  for (std::size_t i = 0; i < total; ++i) {
    len[i] = out.elements_[i].length();
    for (const auto& x : covers_of(out.elements_[i], CoverDirection::Down)) {
      out.down_[i].push_back({lehmer_index(x), 1});
    }
    std::sort(out.down_[i].begin(), out.down_[i].end(),
              [](const SignedCover& a, const SignedCover& b) {
                return a.lower < b.lower;
              });
    for (const auto& c : out.down_[i]) out.up_[c.lower].push_back(i);
  }
  for (auto& u : out.up_) std::sort(u.begin(), u.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return len[a] < len[b]; });

  for (std::size_t z : order) {
    auto& covers = out.down_[z];
    const std::size_t k = covers.size();
    if (k > 64) throw std::logic_error("too many covers for the parity solver");
    // For each x two below z: the unknowns of its two middles and the
    // parity contributed by the already fixed lower signs.
    std::unordered_map<std::size_t, std::vector<std::pair<std::size_t, int>>> below;
    for (std::size_t j = 0; j < k; ++j) {
      for (const auto& xc : out.down_[covers[j].lower]) {
        below[xc.lower].emplace_back(j, xc.sign);
      }
    }
    struct Row {
      std::uint64_t vars;
      bool rhs;
    };
    std::vector<Row> rows;
    for (const auto& [x, mids] : below) {
      if (mids.size() != 2) {
        throw std::logic_error("interval of length 2 without two middles");
      }
      const bool rhs = true ^ (mids[0].second < 0) ^ (mids[1].second < 0);
      rows.push_back({(1ull << mids[0].first) | (1ull << mids[1].first), rhs});
    }
    // Deterministic row order independent of hash iteration.
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      return a.vars != b.vars ? a.vars < b.vars : a.rhs < b.rhs;
    });

    std::vector<std::size_t> var_order(k);
    std::iota(var_order.begin(), var_order.end(), 0);
    if (options.reverse_pivots) std::reverse(var_order.begin(), var_order.end());
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // variable, row
    std::size_t next = 0;
    for (std::size_t var : var_order) {
      const std::uint64_t bit = 1ull << var;
      std::size_t found = rows.size();
      for (std::size_t r = next; r < rows.size(); ++r) {
        if (rows[r].vars & bit) {
          found = r;
          break;
        }
      }
      if (found == rows.size()) continue;
      std::swap(rows[found], rows[next]);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r != next && (rows[r].vars & bit)) {
          rows[r].vars ^= rows[next].vars;
          rows[r].rhs ^= rows[next].rhs;
        }
      }
      pivots.emplace_back(var, next);
      ++next;
    }
    for (std::size_t r = next; r < rows.size(); ++r) {
      if (rows[r].rhs) {
        throw std::logic_error("sign system inconsistent at " +
                               to_string(out.elements_[z]));
      }
    }
    // Reduced echelon form: each pivot row holds its pivot and free
    // variables only, and free variables are zero.
    std::uint64_t value = 0;
    for (const auto& [var, row] : pivots) {
      if (rows[row].rhs) value |= 1ull << var;
    }
    for (std::size_t j = 0; j < k; ++j) covers[j].sign = (value >> j) & 1u ? -1 : 1;
  }
  return out;
}

// ------------------------------------------------------------ complexes

std::size_t RestrictedComplex::dimension(int position) const {
  auto it = bases_.find(position);
  return it == bases_.end() ? 0 : it->second.size();
}

const IntMatrix& RestrictedComplex::differential(int position) const {
  auto it = differentials_.find(position);
  return it == differentials_.end() ? empty_ : it->second;
}

int RestrictedComplex::min_position() const {
  if (bases_.empty()) throw InvalidArgument("empty complex");
  return bases_.begin()->first;
}

int RestrictedComplex::max_position() const {
  if (bases_.empty()) throw InvalidArgument("empty complex");
  return bases_.rbegin()->first;
}

RestrictedComplex complex_over(std::vector<Permutation> elements,
                               int anchor_length, const SignAssignment& signs) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw InvalidArgument("repeated element in complex support");
  }
  RestrictedComplex c;
  c.anchor_length_ = anchor_length;
  std::unordered_map<std::size_t, std::pair<int, std::size_t>> where;
  for (const auto& x : elements) {
    if (x.degree() != signs.degree()) throw DegreeMismatch(x.degree(), signs.degree());
    const int p = x.length() - anchor_length;
    auto& basis = c.bases_[p];
    where.emplace(lehmer_index(x), std::make_pair(p, basis.size()));
    basis.push_back(x);
  }
  for (const auto& [p, basis] : c.bases_) {
    auto target = c.bases_.find(p + 1);
    if (target == c.bases_.end()) continue;
    IntMatrix d(target->second.size(), basis.size());
    for (std::size_t row = 0; row < target->second.size(); ++row) {
      for (const auto& cov : signs.down(lehmer_index(target->second[row]))) {
        auto it = where.find(cov.lower);
        if (it != where.end()) d.at(row, it->second.second) = cov.sign;
      }
    }
    c.differentials_.emplace(p, std::move(d));
  }
  return c;
}

RestrictedComplex restricted_complex(const Permutation& w, const Permutation& u,
                                     const SignAssignment& signs) {
  if (w.degree() != u.degree()) throw DegreeMismatch(w.degree(), u.degree());
  return complex_over(intersect_ideals(w, u).elements(), w.length(), signs);
}

RestrictedComplex full_complex(const SignAssignment& signs) {
  return complex_over(signs.elements(),
                      Permutation::longest(signs.degree()).length(), signs);
}

std::map<int, std::size_t> homology_ranks(const RestrictedComplex& c) {
  std::map<int, std::size_t> out;
  std::map<int, std::size_t> rank;
  for (const auto& [p, basis] : c.bases()) rank[p] = exact_rank(c.differential(p));
  for (const auto& [p, basis] : c.bases()) {
    const std::size_t incoming = rank.count(p - 1) ? rank[p - 1] : 0;
    out[p] = basis.size() - rank[p] - incoming;
  }
  return out;
}

bool squares_to_zero(const RestrictedComplex& c) {
  for (const auto& [p, basis] : c.bases()) {
    const IntMatrix& first = c.differential(p);
    const IntMatrix& second = c.differential(p + 1);
    if (first.rows() == 0 || second.rows() == 0) continue;
    if (!multiply(second, first).is_zero()) return false;
  }
  return true;
}

// ------------------------------------------------------------ grade

namespace {

// B(w) with cover signs, reused for every u.
class IdealKernel {
 public:
  IdealKernel(const Permutation& w, const SignAssignment& signs)
      : signs_(signs), anchor_(w.length()), ideal_(principal_ideal(w)) {
    slot_.assign(signs.size(), -1);
    for (std::size_t i = 0; i < ideal_.size(); ++i) {
      slot_[lehmer_index(ideal_.element(i))] = static_cast<int>(i);
    }
  }

  std::size_t size() const { return ideal_.size(); }

  // Membership of B(w) ∩ B(u), found top-down: anything below a member is a
  // member, the rest is compared directly.
  std::vector<char> members(const Permutation& u) const {
    std::vector<char> in(ideal_.size(), 0);
    for (std::size_t k = ideal_.size(); k-- > 0;) {
      bool below_member = false;
      for (std::size_t j : ideal_.up(k)) {
        if (in[j]) {
          below_member = true;
          break;
        }
      }
      in[k] = below_member || bruhat_leq(ideal_.element(k), u);
    }
    return in;
  }

  // Rightmost nonzero homology position in (stop - 1, 0], or nullopt.
  std::optional<int> rightmost(const std::vector<char>& in, int stop) const {
    std::map<int, std::vector<std::size_t>> basis;
    for (std::size_t i = 0; i < ideal_.size(); ++i) {
      if (in[i]) basis[ideal_.rank(static_cast<std::size_t>(i)) - anchor_].push_back(i);
    }
    std::map<int, std::size_t> ranks;
    auto rank_from = [&](int p) -> std::size_t {
      if (auto it = ranks.find(p); it != ranks.end()) return it->second;
      std::size_t r = 0;
      auto src = basis.find(p);
      auto dst = basis.find(p + 1);
      if (src != basis.end() && dst != basis.end()) {
        std::vector<int> col(ideal_.size(), -1);
        for (std::size_t c = 0; c < src->second.size(); ++c) {
          col[src->second[c]] = static_cast<int>(c);
        }
        IntMatrix d(dst->second.size(), src->second.size());
        for (std::size_t row = 0; row < dst->second.size(); ++row) {
          const auto y = lehmer_index(ideal_.element(dst->second[row]));
          for (const auto& cov : signs_.down(y)) {
            const int s = slot_[cov.lower];
            if (s >= 0 && col[static_cast<std::size_t>(s)] >= 0) {
              d.at(row, static_cast<std::size_t>(col[static_cast<std::size_t>(s)])) =
                  cov.sign;
            }
          }
        }
        r = exact_rank(d);
      }
      ranks.emplace(p, r);
      return r;
    };
    for (int p = 0; p >= stop; --p) {
      auto it = basis.find(p);
      if (it == basis.end()) continue;
      const std::size_t h = it->second.size() - rank_from(p) - rank_from(p - 1);
      if (h != 0) return p;
    }
    return std::nullopt;
  }

 private:
  const SignAssignment& signs_;
  int anchor_;
  BruhatIdeal ideal_;
  std::vector<int> slot_;
};

void require_degree(const Permutation& w, const SignAssignment& signs) {
  if (w.degree() != signs.degree()) throw DegreeMismatch(w.degree(), signs.degree());
}

}  // namespace

GradeReport grade(const Permutation& w, const SignAssignment& signs,
                  const GradeOptions& options) {
  require_degree(w, signs);
  const IdealKernel kernel(w, signs);
  const int lw = w.length();
  const SupportSet wl = descents(w, Side::Left);
  const SupportSet wr = descents(w, Side::Right);

  GradeReport report{w, lw + 1, Permutation::identity(w.degree()), std::nullopt};
  if (options.keep_table) report.per_u.emplace();
  std::unordered_map<std::string, std::optional<int>> cache;

  for (const auto& u : signs.elements()) {
    const bool pruned =
        options.prune && !u.is_identity() &&
        (!(descents(u, Side::Left) & wl).empty() ||
         !(descents(u, Side::Right) & wr).empty() ||
         (!w.is_identity() && bruhat_leq(w, u)) || bruhat_leq(u, w));
    if (pruned) {
      if (report.per_u) report.per_u->push_back({u, std::nullopt, true});
      continue;
    }
    const auto in = kernel.members(u);
    std::string key(in.begin(), in.end());
    std::optional<int> found;
    if (auto it = cache.find(key); it != cache.end()) {
      found = it->second;
    } else {
      const int stop = options.keep_table ? -lw : -(report.grade - 1);
      found = kernel.rightmost(in, stop);
      cache.emplace(std::move(key), found);
    }
    if (report.per_u) report.per_u->push_back({u, found, false});
    if (found && -*found < report.grade) {
      report.grade = -*found;
      report.witness_u = u;
    }
  }
  if (report.grade > lw) {
    throw std::logic_error("no u produced homology for " + to_string(w));
  }
  return report;
}

GradeReport grade_of_parabolic_longest(const YoungShape& mu, int n,
                                       const SignAssignment& signs) {
  const Permutation w = longest_parabolic_element(mu, n);
  GradeReport r = grade(w, signs);
  if (r.grade != w.length()) {
    throw std::logic_error("grade " + std::to_string(r.grade) + " of " +
                           to_string(w) + " differs from its length");
  }
  return r;
}

bool is_perfect(const Permutation& w, const SignAssignment& signs) {
  return grade(w, signs).grade == w.length();
}

bool is_longest_parabolic(const Permutation& w) {
  return support(w) == descents(w, Side::Right);
}

}  // namespace boolgrade
