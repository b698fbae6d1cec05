// Command-line front end. Exit codes: 0 ok, 1 counterexample or
// disagreement, 2 usage or cap error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "boolgrade/bgg_homology.hpp"
#include "boolgrade/boolean_intersect.hpp"
#include "boolgrade/bruhat.hpp"
#include "boolgrade/errors.hpp"
#include "boolgrade/export.hpp"
#include "boolgrade/permutation.hpp"
#include "boolgrade/rs_afunction.hpp"
#include "boolgrade/runs_matching.hpp"
#include "boolgrade/verify.hpp"
#include "json.hpp"

using namespace boolgrade;
using nlohmann::json;

namespace {

constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  int max_degree = 7;
  std::size_t max_ideal = 2'000'000;
  std::size_t max_words = 1'000'000;
  int threads = 1;
  std::string format = "text";
  std::uint64_t seed = 1;
  bool reduced_words = false;
  int degree = 0;  // for --rw input
};

template <typename T>
void env_default(const char* name, T& value) {
  if (const char* text = std::getenv(name)) {
    try {
      const auto parsed = std::stoull(text);
      if (parsed == 0) throw std::invalid_argument("zero");
      value = static_cast<T>(parsed);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string(name) + " must be a positive integer");
    }
  }
}

Permutation read_element(const RunConfig& cfg, const std::string& text) {
  if (!cfg.reduced_words) return parse_permutation(text);
  const auto letters = parse_letters(text);
  int n = cfg.degree;
  if (n == 0) {
    n = 1;
    for (int a : letters) n = std::max(n, a + 1);
  }
  return ReducedWord(n, letters).evaluate();
}

std::string word_of(const Permutation& w) {
  return to_compact_string(canonical_reduced_word(w));
}

json perms_json(const std::vector<Permutation>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

void print_list(const std::vector<Permutation>& xs) {
  for (const auto& x : xs) std::cout << to_string(x) << "  " << word_of(x) << "\n";
}

SignAssignment signs_for(const RunConfig& cfg, int n) {
  SignOptions opts;
  opts.max_degree = cfg.max_degree;
  return build_sign_assignment(n, opts);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  try {
    env_default("BOOLGRADE_MAX_DEGREE", cfg.max_degree);
    env_default("BOOLGRADE_MAX_IDEAL", cfg.max_ideal);
    env_default("BOOLGRADE_MAX_WORDS", cfg.max_words);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Boolean permutations, Bruhat ideals and BGG homology"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot", "csv"}));
  app.add_option("--seed", cfg.seed, "Seed for sampled sweeps");
  app.add_option("--threads", cfg.threads, "Worker threads for sweeps")
      ->check(CLI::PositiveNumber);
  app.add_flag("--rw", cfg.reduced_words,
               "Read permutations as reduced words (validated)");
  app.add_option("--degree", cfg.degree, "Degree n for --rw input")
      ->check(CLI::Range(1, kMaxDegree));
  app.add_option("--max-degree", cfg.max_degree, "Largest degree for sign tables")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-ideal", cfg.max_ideal, "Largest ideal to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-words", cfg.max_words, "Largest reduced word count")
      ->check(CLI::PositiveNumber);

  std::string arg_w, arg_v;
  int arg_int = 0;

  auto* boolean_cmd = app.add_subcommand("boolean", "Boolean test, support, descents");
  boolean_cmd->add_option("w", arg_w)->required();

  bool closed = false, enumerate = false, both = false;
  auto* intersect_cmd = app.add_subcommand("intersect", "Maximal elements of B(v) ∩ B(w)");
  intersect_cmd->add_option("v", arg_v)->required();
  intersect_cmd->add_option("w", arg_w)->required();
  auto* g_closed = intersect_cmd->add_flag("--closed-form", closed);
  auto* g_enum = intersect_cmd->add_flag("--enumerate", enumerate);
  auto* g_both = intersect_cmd->add_flag("--both", both);
  g_closed->excludes(g_enum)->excludes(g_both);
  g_enum->excludes(g_both);

  int all_n = 0;
  auto* grade_cmd = app.add_subcommand("grade", "Grade of L_w, or a whole table");
  auto* grade_w = grade_cmd->add_option("w", arg_w);
  auto* grade_all = grade_cmd->add_option("--all", all_n, "Table for all of S_n")
                        ->check(CLI::Range(1, kMaxDegree));
  grade_w->excludes(grade_all);
  grade_cmd->require_option(1);

  auto* ork_cmd = app.add_subcommand("ork", "Run decomposition and optimal rank");
  ork_cmd->add_option("v", arg_v)->required();
  auto* partner_cmd = app.add_subcommand("partner", "Optimal partner");
  partner_cmd->add_option("v", arg_v)->required();
  auto* rs_cmd = app.add_subcommand("rs", "Robinson–Schensted shape");
  rs_cmd->add_option("w", arg_w)->required();
  auto* afun_cmd = app.add_subcommand("afun", "Lusztig a-function");
  afun_cmd->add_option("w", arg_w)->required();

  std::string set_text;
  auto* selfish_cmd = app.add_subcommand("selfish", "Maximal selfish subsets");
  auto* selfish_k = selfish_cmd->add_option("k", arg_int, "Universe [1,k]")
                        ->check(CLI::Range(0, 31));
  auto* selfish_set = selfish_cmd->add_option("--set", set_text, "Universe, e.g. 1,2,4");
  selfish_k->excludes(selfish_set);
  selfish_cmd->require_option(1);

  std::string verify_id;
  int vn = 0, vn_min = 3, vn_max = 5, vk = 15;
  std::size_t samples = 1000;
  bool exhaustive = false;
  auto* verify_cmd = app.add_subcommand("verify", "Verification sweep");
  verify_cmd->add_option("id", verify_id)->required()->check(CLI::IsMember(verify_ids()));
  auto* opt_n = verify_cmd->add_option("--n", vn, "Single degree")->check(CLI::Range(1, 8));
  verify_cmd->add_option("--n-min", vn_min)->check(CLI::Range(1, 8))->excludes(opt_n);
  verify_cmd->add_option("--n-max", vn_max)->check(CLI::Range(1, 8))->excludes(opt_n);
  verify_cmd->add_option("--k", vk, "Largest k for prop3.3")->check(CLI::Range(1, 30));
  verify_cmd->add_option("--samples", samples, "Cases per sampled degree")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--exhaustive", exhaustive, "Never sample");

  bool matched = false;
  auto* export_cmd = app.add_subcommand("export", "DOT or JSON of B(v) ∩ B(w)");
  export_cmd->add_option("v", arg_v)->required();
  export_cmd->add_option("w", arg_w)->required();
  export_cmd->add_flag("--matched", matched, "Decorate with the constructed matching");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const bool as_json = cfg.format == "json";
  const IdealLimits ideal_limits{cfg.max_ideal};
  const WordLimits word_limits{16, cfg.max_words};

  try {
    if (*boolean_cmd) {
      const Permutation w = read_element(cfg, arg_w);
      const bool b = is_boolean(w);
      const bool by_patterns = is_boolean_by_patterns(w);
      std::optional<bool> by_words;
      try {
        by_words = is_boolean_by_words(w, word_limits);
      } catch (const CapExceeded&) {
      }
      if (as_json) {
        json j{{"w", to_string(w)},
               {"boolean", b},
               {"boolean_by_patterns", by_patterns},
               {"support", support(w).members()},
               {"left_descents", descents(w, Side::Left).members()},
               {"right_descents", descents(w, Side::Right).members()},
               {"reduced_word", canonical_reduced_word(w).letters()}};
        j["boolean_by_words"] = by_words ? json(*by_words) : json(nullptr);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "boolean: " << (b ? "true" : "false") << "\n"
                  << "patterns 321/3412 avoided: " << (by_patterns ? "true" : "false") << "\n"
                  << "no repeated letter: "
                  << (by_words ? (*by_words ? "true" : "false") : "skipped (cap)") << "\n"
                  << "supp " << to_string(support(w)) << "\n"
                  << "left descents " << to_string(descents(w, Side::Left)) << "\n"
                  << "right descents " << to_string(descents(w, Side::Right)) << "\n"
                  << "reduced word " << to_compact_string(canonical_reduced_word(w)) << "\n";
      }
      return b == by_patterns && (!by_words || *by_words == b) ? 0 : kExitCounterexample;
    }

    if (*intersect_cmd) {
      const Permutation v = read_element(cfg, arg_v);
      const Permutation w = read_element(cfg, arg_w);
      if (v.degree() != w.degree()) throw DegreeMismatch(v.degree(), w.degree());
      if (!closed && !enumerate && !both) {
        closed = is_boolean(v);
        enumerate = !closed;
      }
      std::optional<std::vector<Permutation>> cf, en;
      if (closed || both) cf = intersection_maximal_closed_form(v, w);
      if (enumerate || both) en = maximal_elements(intersect_ideals(v, w, ideal_limits));
      if (as_json) {
        json j{{"v", to_string(v)}, {"w", to_string(w)}};
        if (cf) {
          j["closed_form"] = perms_json(*cf);
          j["obstructions"] = to_json(obstructions(v, w));
        }
        if (en) j["enumerated"] = perms_json(*en);
        if (cf && en) j["agree"] = *cf == *en;
        std::cout << j.dump(2) << "\n";
      } else {
        if (cf) {
          std::cout << "closed form:\n";
          print_list(*cf);
        }
        if (en) {
          std::cout << "enumerated:\n";
          print_list(*en);
        }
      }
      if (cf && en && *cf != *en) {
        std::cerr << "error: closed form and enumeration disagree\n";
        return kExitCounterexample;
      }
      return 0;
    }

    if (*grade_cmd) {
      std::vector<Permutation> targets;
      int n = all_n;
      if (*grade_w) {
        targets.push_back(read_element(cfg, arg_w));
        n = targets.front().degree();
      } else {
        targets = all_permutations(n);
      }
      const SignAssignment signs = signs_for(cfg, n);
      std::vector<GradeReport> reports;
      for (const auto& w : targets) reports.push_back(grade(w, signs));
      if (cfg.format == "csv") {
        std::cout << grade_table_csv(reports);
      } else if (as_json) {
        json j = json::array();
        for (const auto& r : reports) j.push_back(to_json(r));
        std::cout << (reports.size() == 1 ? j[0] : j).dump(2) << "\n";
      } else {
        for (const auto& r : reports) {
          std::cout << to_string(r.w) << "  grade " << r.grade << "  a " << a_function(r.w)
                    << "  length " << r.w.length()
                    << (r.grade == r.w.length() ? "  perfect" : "") << "  witness "
                    << to_string(r.witness_u) << "\n";
        }
      }
      return 0;
    }

    if (*ork_cmd || *partner_cmd) {
      const Permutation v = read_element(cfg, arg_v);
      if (!is_boolean(v)) throw InvalidArgument(to_string(v) + " is not boolean");
      const RunDecomposition d =
          v.is_identity() ? RunDecomposition{{}, ReducedWord(v.degree(), {})} : run_decompose(v);
      std::vector<int> partner_word;
      for (const auto& r : d.runs) {
        const auto t = run_partner_word(r);
        partner_word.insert(partner_word.end(), t.begin(), t.end());
      }
      const Permutation w = Permutation::from_word(v.degree(), partner_word);
      std::vector<std::string> runs;
      for (const auto& r : d.runs) runs.push_back(to_string(r));
      if (as_json) {
        json j{{"v", to_string(v)},
               {"length", v.length()},
               {"run", d.count()},
               {"runs", runs},
               {"ork", v.length() - d.count()}};
        if (*partner_cmd) {
          j["partner"] = to_string(w);
          j["partner_word"] = compact_letters(partner_word);
        }
        std::cout << j.dump(2) << "\n";
      } else if (*ork_cmd) {
        std::cout << "runs";
        for (const auto& r : runs) std::cout << " " << r;
        std::cout << "\nrun " << d.count() << "\nork " << v.length() - d.count() << "\n";
      } else {
        std::cout << "partner " << to_string(w) << "\nword [" << compact_letters(partner_word)
                  << "]\n";
      }
      return 0;
    }

    if (*rs_cmd || *afun_cmd) {
      const Permutation w = read_element(cfg, arg_w);
      const YoungShape shape = rs_shape(w);
      if (as_json) {
        std::cout << json{{"w", to_string(w)},
                          {"shape", shape.parts()},
                          {"a_value", a_function(w)}}
                         .dump(2)
                  << "\n";
      } else if (*rs_cmd) {
        std::cout << "shape " << to_string(shape) << "\n";
      } else {
        std::cout << "a " << a_function(w) << "\n";
      }
      return 0;
    }

    if (*selfish_cmd) {
      LetterSet universe = *selfish_k ? LetterSet::interval(1, arg_int) : LetterSet{};
      if (*selfish_set) {
        for (int k : parse_letters(set_text)) {
          if (k < 1 || k > 31) throw InvalidArgument("letters must lie in [1,31]");
          universe.insert(k);
        }
      }
      const auto family = maximal_selfish(universe);
      if (as_json) {
        json members = json::array();
        for (auto m : family.members) members.push_back(m.members());
        std::cout << json{{"universe", universe.members()}, {"members", members}}.dump(2)
                  << "\n";
      } else {
        for (auto m : family.members) std::cout << to_string(m) << "\n";
        std::cout << family.members.size() << " sets\n";
      }
      return 0;
    }

    if (*verify_cmd) {
      VerifyConfig vc;
      vc.n_min = vn ? vn : vn_min;
      vc.n_max = vn ? vn : vn_max;
      vc.k_max = vk;
      vc.seed = cfg.seed;
      vc.exhaustive = exhaustive;
      vc.samples = samples;
      vc.threads = cfg.threads;
      const VerifyResult r = verify(verify_id, vc);
      if (as_json) {
        std::cout << json{{"id", r.id},
                          {"cases", r.cases},
                          {"failures", r.failures},
                          {"sampled", r.sampled},
                          {"counterexamples", r.counterexamples}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.id << ": " << r.cases << " cases"
                  << (r.sampled ? " (sampled)" : "") << ", " << r.failures << " failures\n";
        for (const auto& c : r.counterexamples) std::cout << "  " << c << "\n";
      }
      return r.passed() ? 0 : kExitCounterexample;
    }

    if (*export_cmd) {
      const Permutation v = read_element(cfg, arg_v);
      const Permutation w = read_element(cfg, arg_w);
      if (matched) {
        const auto c = build_matching(v, w, ideal_limits);
        if (auto check = verify_matching(c); !check) {
          std::cerr << "error: matching failed verification: " << check.diagnostic << "\n";
          return kExitCounterexample;
        }
        if (as_json) {
          json j = to_json(c);
          j["ideal"] = to_json(c.ideal());
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << to_dot(c);
        }
      } else {
        const auto ideal = intersect_ideals(v, w, ideal_limits);
        std::cout << (as_json ? to_json(ideal).dump(2) + "\n" : to_dot(ideal));
      }
      return 0;
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
