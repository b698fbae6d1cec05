#include "boolgrade/export.hpp"

#include <map>
#include <sstream>

#include "boolgrade/errors.hpp"
#include "boolgrade/rs_afunction.hpp"

namespace boolgrade {

namespace {

std::string label(const Permutation& x) {
  return to_string(x) + "\\n" + to_compact_string(canonical_reduced_word(x));
}

enum class Mark { None, Bold, Circle };

std::string render(const BruhatIdeal& ideal,
                   const std::map<std::pair<std::size_t, std::size_t>, Mark>& edges,
                   std::optional<std::size_t> circled) {
  std::ostringstream out;
  out << "digraph ideal {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  std::map<int, std::vector<std::size_t>> by_rank;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    by_rank[ideal.rank(i)].push_back(i);
    out << "  n" << i << " [label=\"" << label(ideal.element(i)) << "\"";
    if (circled && *circled == i) out << ", shape=circle";
    out << "];\n";
  }
  for (const auto& [rank, nodes] : by_rank) {
    out << "  { rank=same;";
    for (std::size_t i : nodes) out << " n" << i << ";";
    out << " }\n";
  }
  for (const auto& [lo, hi] : ideal.covers()) {
    out << "  n" << lo << " -> n" << hi << " [arrowhead=none";
    auto it = edges.find({lo, hi});
    if (it != edges.end() && it->second == Mark::Bold) out << ", penwidth=3";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const BruhatIdeal& ideal) { return render(ideal, {}, std::nullopt); }

std::string to_dot(const MatchingCertificate& c) {
  const BruhatIdeal& ideal = c.ideal();
  std::map<std::pair<std::size_t, std::size_t>, Mark> edges;
  std::optional<std::size_t> circled;
  for (const auto& step : c.steps()) {
    if (const auto* p = std::get_if<MatchedPair>(&step)) {
      edges[{*ideal.index_of(p->lower), *ideal.index_of(p->upper)}] = Mark::Bold;
    } else {
      circled = ideal.index_of(std::get<Unmatched>(step).element);
    }
  }
  return render(ideal, edges, circled);
}

nlohmann::json to_json(const BruhatIdeal& ideal) {
  nlohmann::json j;
  j["degree"] = ideal.degree();
  j["elements"] = nlohmann::json::array();
  j["ranks"] = nlohmann::json::array();
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    j["elements"].push_back(to_string(ideal.element(i)));
    j["ranks"].push_back(ideal.rank(i));
  }
  j["covers"] = nlohmann::json::array();
  for (const auto& [lo, hi] : ideal.covers()) {
    j["covers"].push_back({to_string(ideal.element(lo)), to_string(ideal.element(hi))});
  }
  return j;
}

nlohmann::json to_json(const MatchingCertificate& c) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : c.steps()) {
    if (const auto* p = std::get_if<MatchedPair>(&step)) {
      steps.push_back({{"pair", {to_string(p->lower), to_string(p->upper)}}});
    } else {
      steps.push_back({{"singleton", to_string(std::get<Unmatched>(step).element)}});
    }
  }
  return {{"steps", steps}};
}

nlohmann::json to_json(const ObstructionSet& o) {
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& r : o.minimal_runs) runs.push_back(to_string(r));
  return {{"minimal_runs", runs},
          {"mismatched_letters", o.mismatched_letters.members()},
          {"all_j_equal_1", o.all_j_equal_1}};
}

nlohmann::json to_json(const GradeReport& r) {
  return {{"w", to_string(r.w)},
          {"grade", r.grade},
          {"witness_u", to_string(r.witness_u)},
          {"a_value", a_function(r.w)},
          {"perfect", r.grade == r.w.length()}};
}

MatchingCertificate certificate_from_json(const nlohmann::json& j,
                                          BruhatIdeal ideal) {
  std::vector<MatchingStep> steps;
  for (const auto& s : j.at("steps")) {
    if (s.contains("pair")) {
      steps.emplace_back(MatchedPair{
          parse_permutation(s["pair"].at(0).get<std::string>()),
          parse_permutation(s["pair"].at(1).get<std::string>())});
    } else if (s.contains("singleton")) {
      steps.emplace_back(
          Unmatched{parse_permutation(s["singleton"].get<std::string>())});
    } else {
      throw InvalidArgument("step is neither a pair nor a singleton");
    }
  }
  return MatchingCertificate(std::move(ideal), std::move(steps));
}

BruhatIdeal ideal_from_json(const nlohmann::json& j) {
  std::vector<Permutation> elements;
  for (const auto& e : j.at("elements")) {
    elements.push_back(parse_permutation(e.get<std::string>()));
  }
  return BruhatIdeal::from_elements(j.at("degree").get<int>(), std::move(elements));
}

std::string grade_table_csv(const std::vector<GradeReport>& reports) {
  std::ostringstream out;
  out << "w,length,a,grade,perfect,witness_u\n";
  for (const auto& r : reports) {
    out << '"' << to_string(r.w) << "\"," << r.w.length() << ',' << a_function(r.w)
        << ',' << r.grade << ',' << (r.grade == r.w.length() ? "true" : "false")
        << ",\"" << to_string(r.witness_u) << "\"\n";
  }
  return out.str();
}

}  // namespace boolgrade
