#pragma once

// DOT, JSON and CSV renderings of ideals, matchings, obstructions and grade
// reports.

#include <string>
#include <vector>

#include "boolgrade/bgg_homology.hpp"
#include "boolgrade/boolean_intersect.hpp"
#include "boolgrade/bruhat.hpp"
#include "boolgrade/runs_matching.hpp"

#include "json.hpp"

namespace boolgrade {

/// Hasse diagram ranked by length; labels carry one-line notation and the
/// canonical reduced word.
std::string to_dot(const BruhatIdeal& ideal);
/// Same, with matched pairs drawn bold and the unmatched element circled.
std::string to_dot(const MatchingCertificate& c);

/// {degree, elements, covers, ranks}; covers are pairs of element strings.
nlohmann::json to_json(const BruhatIdeal& ideal);
/// {steps: [{pair: [x, y]} | {singleton: z}]}
nlohmann::json to_json(const MatchingCertificate& c);
/// {minimal_runs, mismatched_letters, all_j_equal_1}
nlohmann::json to_json(const ObstructionSet& o);
/// {w, grade, witness_u, a_value, perfect}
nlohmann::json to_json(const GradeReport& r);

/// Rebuilds a certificate from its JSON form against the given ideal.
MatchingCertificate certificate_from_json(const nlohmann::json& j,
                                          BruhatIdeal ideal);
/// Rebuilds an ideal from its JSON form (covers are recomputed).
BruhatIdeal ideal_from_json(const nlohmann::json& j);

/// Header w,length,a,grade,perfect,witness_u then one line per report.
std::string grade_table_csv(const std::vector<GradeReport>& reports);

}  // namespace boolgrade
