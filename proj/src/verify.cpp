#include "boolgrade/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <thread>

#include "boolgrade/bgg_homology.hpp"
#include "boolgrade/boolean_intersect.hpp"
#include "boolgrade/bruhat.hpp"
#include "boolgrade/errors.hpp"
#include "boolgrade/permutation.hpp"
#include "boolgrade/rs_afunction.hpp"
#include "boolgrade/runs_matching.hpp"

namespace boolgrade {

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids = {
      "thm2.4", "prop3.3", "prop3.5", "cor3.6",  "thm3.10",
      "lem4.3", "lem4.4",  "prop5.8", "lem5.6",  "thm5.10",
      "thm6.4", "cor6.7",  "thm6.8",  "thm7.2",  "thm7.3"};
  return ids;
}

namespace {

// Reduced-word oracles are only run up to this length.
constexpr int kOracleLength = 9;

using Check = std::function<std::optional<std::string>(std::size_t)>;

// Runs check(i) for i < count on up to `threads` threads; nullopt is a pass.
void run_cases(VerifyResult& result, const VerifyConfig& config,
               std::size_t count, const Check& check) {
  std::mutex lock;
  std::vector<std::pair<std::size_t, std::string>> failed;
  auto worker = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < count; i += stride) {
      std::optional<std::string> bad;
      try {
        bad = check(i);
      } catch (const std::exception& e) {
        bad = std::string("exception: ") + e.what();
      }
      if (bad) {
        std::lock_guard<std::mutex> g(lock);
        failed.emplace_back(i, std::move(*bad));
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, config.threads));
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
    for (auto& th : pool) th.join();
  }
  std::sort(failed.begin(), failed.end());
  result.cases += count;
  result.failures += failed.size();
  for (auto& [i, text] : failed) {
    if (result.counterexamples.size() < config.max_reported) {
      result.counterexamples.push_back(std::move(text));
    }
  }
}

bool sampling(const VerifyConfig& config, int n) {
  return !config.exhaustive && n >= 6;
}

// Either every index below total, or a seeded sample of distinct ones.
std::vector<std::size_t> pick(std::size_t total, bool sample, std::size_t k,
                              std::mt19937_64& rng) {
  std::vector<std::size_t> all(total);
  std::iota(all.begin(), all.end(), 0);
  if (!sample || k >= total) return all;
  std::vector<std::size_t> out;
  out.reserve(k);
  std::sample(all.begin(), all.end(), std::back_inserter(out), k, rng);
  return out;
}

std::string pair_text(const Permutation& v, const Permutation& w) {
  return "v=" + to_string(v) + " w=" + to_string(w);
}

std::string list_text(const std::vector<Permutation>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += (i ? " " : "") + to_compact_string(canonical_reduced_word(xs[i]));
  }
  return out + "}";
}

struct Degree {
  int n;
  bool sample;
};

std::vector<Degree> degrees(const VerifyConfig& config) {
  if (config.n_min < 1 || config.n_max < config.n_min) {
    throw InvalidArgument("bad degree range");
  }
  std::vector<Degree> out;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    out.push_back({n, sampling(config, n)});
  }
  return out;
}

class SignCache {
 public:
  const SignAssignment& get(int n) {
    std::lock_guard<std::mutex> g(lock_);
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, build_sign_assignment(n)).first;
    return it->second;
  }

 private:
  std::mutex lock_;
  std::map<int, SignAssignment> cache_;
};

// Sweeps over pairs (boolean v, arbitrary w) of each degree.
void pair_sweep(VerifyResult& r, const VerifyConfig& config, bool w_boolean,
                const std::function<std::optional<std::string>(
                    const Permutation&, const Permutation&)>& check) {
  std::mt19937_64 rng(config.seed);
  for (const auto& [n, sample] : degrees(config)) {
    const auto vs = boolean_permutations(n);
    const auto ws = w_boolean ? vs : all_permutations(n);
    const auto idx = pick(vs.size() * ws.size(), sample, config.samples, rng);
    r.sampled = r.sampled || (sample && idx.size() < vs.size() * ws.size());
    run_cases(r, config, idx.size(), [&](std::size_t i) {
      const std::size_t k = idx[i];
      return check(vs[k / ws.size()], ws[k % ws.size()]);
    });
  }
}

// Sweeps over single permutations of each degree.
void single_sweep(VerifyResult& r, const VerifyConfig& config, bool booleans,
                  const std::function<std::optional<std::string>(
                      const Permutation&)>& check) {
  std::mt19937_64 rng(config.seed);
  for (const auto& [n, sample] : degrees(config)) {
    const auto xs = booleans ? boolean_permutations(n) : all_permutations(n);
    const auto idx = pick(xs.size(), sample, config.samples, rng);
    r.sampled = r.sampled || idx.size() < xs.size();
    run_cases(r, config, idx.size(),
              [&](std::size_t i) { return check(xs[idx[i]]); });
  }
}

// Homology of the complex on B(v) ∩ B(w) against what the matching forces.
std::optional<std::string> matching_homology(const Permutation& v,
                                             const Permutation& w,
                                             SignCache& signs, bool perfect) {
  const auto c = build_matching(v, w);
  if (c.is_perfect() != perfect) return std::nullopt;
  const auto h = homology_ranks(restricted_complex(v, w, signs.get(v.degree())));
  std::map<int, std::size_t> expected;
  if (!perfect) expected[-(v.length() - c.singleton()->length())] = 1;
  for (const auto& [p, rank] : h) {
    const std::size_t want = expected.count(p) ? expected[p] : 0;
    if (rank != want) {
      return pair_text(v, w) + ": homology " + std::to_string(rank) +
             " at position " + std::to_string(p) + ", expected " +
             std::to_string(want);
    }
  }
  return std::nullopt;
}

}  // namespace

VerifyResult verify(const std::string& id, const VerifyConfig& config) {
  VerifyResult r;
  r.id = id;
  SignCache signs;

  if (id == "thm2.4") {
    single_sweep(r, config, false, [](const Permutation& w) -> std::optional<std::string> {
      const bool a = is_boolean(w);
      const bool words_ok = w.length() > kOracleLength || a == is_boolean_by_words(w);
      if (a != is_boolean_by_patterns(w) || !words_ok) {
        return to_string(w) + ": boolean characterizations disagree";
      }
      return std::nullopt;
    });
  } else if (id == "prop3.3") {
    run_cases(r, config, static_cast<std::size_t>(config.k_max),
              [](std::size_t i) -> std::optional<std::string> {
                const int k = static_cast<int>(i) + 1;
                const auto u = LetterSet::interval(1, k);
                const auto fast = maximal_selfish(u).members;
                const auto slow = maximal_selfish_brute_force(u).members;
                if (fast != slow || selfish_count(k) != fast.size()) {
                  return "k=" + std::to_string(k) + ": recursion " +
                         std::to_string(selfish_count(k)) + ", family " +
                         std::to_string(fast.size()) + ", brute force " +
                         std::to_string(slow.size());
                }
                return std::nullopt;
              });
  } else if (id == "prop3.5" || id == "cor3.6") {
    const bool both_boolean = id == "cor3.6";
    pair_sweep(r, config, both_boolean,
               [both_boolean](const Permutation& v,
                              const Permutation& w) -> std::optional<std::string> {
                 if (both_boolean && !obstructions(v, w).all_j_equal_1) {
                   return pair_text(v, w) + ": an obstruction run has 3+ letters";
                 }
                 const auto closed = intersection_maximal_closed_form(v, w);
                 const auto direct = maximal_elements(intersect_ideals(v, w));
                 if (closed != direct) {
                   return pair_text(v, w) + ": closed form " + list_text(closed) +
                          " vs enumeration " + list_text(direct);
                 }
                 return std::nullopt;
               });
  } else if (id == "thm3.10") {
    single_sweep(r, config, false, [](const Permutation& w) -> std::optional<std::string> {
      if (w.length() > kOracleLength) return std::nullopt;
      const SupportSet s = support(w);
      for (int k = 1; k + 1 < w.degree(); ++k) {
        if (!s.contains(k) || !s.contains(k + 1)) continue;
        if (orientation(w, k) != orientation_by_words(w, k)) {
          return to_string(w) + " k=" + std::to_string(k) + ": one-line " +
                 to_string(orientation(w, k)) + ", words " +
                 to_string(orientation_by_words(w, k));
        }
      }
      return std::nullopt;
    });
  } else if (id == "lem4.3" || id == "lem4.4") {
    const bool perfect = id == "lem4.3";
    pair_sweep(r, config, false, [&](const Permutation& v, const Permutation& w) {
      return matching_homology(v, w, signs, perfect);
    });
  } else if (id == "prop5.8") {
    pair_sweep(r, config, false,
               [](const Permutation& v, const Permutation& w) -> std::optional<std::string> {
                 const auto c = build_matching(v, w);
                 if (auto check = verify_matching(c); !check) {
                   return pair_text(v, w) + ": " + check.diagnostic;
                 }
                 if (auto z = c.singleton(); z && z->length() > optimal_rank(v)) {
                   return pair_text(v, w) + ": singleton " + to_string(*z) +
                          " above rank " + std::to_string(optimal_rank(v));
                 }
                 return std::nullopt;
               });
  } else if (id == "lem5.6") {
    std::mt19937_64 rng(config.seed);
    for (const auto& [n, sample] : degrees(config)) {
      std::vector<ReducedWord> words;
      for (const auto& w : all_permutations(n)) {
        if (w.length() > 8) continue;
        for (auto& s : enumerate_reduced_words(w)) words.push_back(std::move(s));
      }
      const auto idx = pick(words.size(), sample, config.samples, rng);
      r.sampled = r.sampled || idx.size() < words.size();
      run_cases(r, config, idx.size(), [&](std::size_t c) -> std::optional<std::string> {
        const ReducedWord& s = words[idx[c]];
        for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
          std::vector<int> hat(s.letters().begin(), s.letters().end());
          hat.erase(hat.begin() + (i - 1));
          const auto below = subword_elements(n, hat);
          const Permutation top = slim(s, i);
          std::vector<Permutation> bool_sub;
          for (const auto& x : below) {
            if (!bruhat_leq(x, top)) {
              return to_string(s) + " i=" + std::to_string(i) + ": " +
                     to_string(x) + " not below " + to_string(top);
            }
            if (is_boolean(x)) bool_sub.push_back(x);
          }
          if (std::find(below.begin(), below.end(), top) == below.end()) {
            return to_string(s) + " i=" + std::to_string(i) + ": " +
                   to_string(top) + " is not a subword element";
          }
          std::vector<Permutation> bool_ideal;
          const BruhatIdeal ideal = principal_ideal(top);
          for (const auto& x : ideal.elements()) {
            if (is_boolean(x)) bool_ideal.push_back(x);
          }
          std::sort(bool_ideal.begin(), bool_ideal.end());
          std::sort(bool_sub.begin(), bool_sub.end());
          if (bool_ideal != bool_sub) {
            return to_string(s) + " i=" + std::to_string(i) +
                   ": boolean elements differ";
          }
        }
        return std::nullopt;
      });
    }
  } else if (id == "thm5.10") {
    single_sweep(r, config, true, [&](const Permutation& v) -> std::optional<std::string> {
      const auto d = run_decompose(v);
      const Permutation w = optimal_partner(d, v.degree());
      const int rank = v.length() - d.count();
      const auto c = build_matching(v, w);
      if (auto check = verify_matching(c); !check) {
        return to_string(v) + ": " + check.diagnostic;
      }
      if (!c.singleton() || c.singleton()->length() != rank) {
        return to_string(v) + ": singleton rank differs from " + std::to_string(rank);
      }
      LetterSet tails;
      for (const auto& run : d.runs) {
        tails = tails | (run.letters() - LetterSet{run.start});
      }
      const Permutation hat = subword_element(d.word, tails);
      const auto pc = build_partner_matching(v, d);
      if (auto check = verify_matching(pc); !check) {
        return to_string(v) + ": run matching: " + check.diagnostic;
      }
      if (pc.singleton() != hat) {
        return to_string(v) + ": run matching leaves " +
               (pc.singleton() ? to_string(*pc.singleton()) : std::string("nothing")) +
               ", expected " + to_string(hat);
      }
      const auto h = homology_ranks(restricted_complex(v, w, signs.get(v.degree())));
      for (const auto& [p, dim] : h) {
        const std::size_t want = p == -d.count() ? 1 : 0;
        if (dim != want) {
          return to_string(v) + ": homology " + std::to_string(dim) +
                 " at position " + std::to_string(p);
        }
      }
      return std::nullopt;
    });
  } else if (id == "thm6.4" || id == "cor6.7") {
    const bool with_a = id == "cor6.7";
    single_sweep(r, config, true, [with_a](const Permutation& v) -> std::optional<std::string> {
      const int l2 = rs_shape(v).row(2);
      const int runs = v.is_identity() ? 0 : run_count(v);
      if (l2 != runs) {
        return to_string(v) + ": second row " + std::to_string(l2) + ", runs " +
               std::to_string(runs);
      }
      if (with_a && a_function(v) != l2) {
        return to_string(v) + ": a-function " + std::to_string(a_function(v)) +
               ", second row " + std::to_string(l2);
      }
      return std::nullopt;
    });
  } else if (id == "thm6.8") {
    single_sweep(r, config, true, [&](const Permutation& v) -> std::optional<std::string> {
      const int g = grade(v, signs.get(v.degree())).grade;
      if (g != a_function(v)) {
        return to_string(v) + ": grade " + std::to_string(g) + ", a-function " +
               std::to_string(a_function(v));
      }
      return std::nullopt;
    });
  } else if (id == "thm7.2") {
    for (const auto& [n, sample] : degrees(config)) {
      const auto blocks = compositions(n);
      run_cases(r, config, blocks.size(), [&, n = n](std::size_t i) -> std::optional<std::string> {
        const Permutation w = longest_parabolic_element(blocks[i], n);
        const int g = grade(w, signs.get(n)).grade;
        if (g != w.length() || a_function(w) != w.length()) {
          return to_string(w) + ": grade " + std::to_string(g) + ", a " +
                 std::to_string(a_function(w)) + ", length " +
                 std::to_string(w.length());
        }
        return std::nullopt;
      });
    }
  } else if (id == "thm7.3") {
    single_sweep(r, config, false, [&](const Permutation& w) -> std::optional<std::string> {
      const bool perfect = is_perfect(w, signs.get(w.degree()));
      if (perfect != is_longest_parabolic(w)) {
        return to_string(w) + ": perfect=" + (perfect ? "true" : "false");
      }
      return std::nullopt;
    });
  } else {
    throw InvalidArgument("unknown statement id '" + id + "'");
  }
  return r;
}

}  // namespace boolgrade
