#pragma once

#include <string>

#include "json.hpp"

#include "goldie/goldie.hpp"
#include "goldie/onedim.hpp"
#include "goldie/rs.hpp"

namespace goldie {

using Json = nlohmann::json;

Json rational_to_json(const Rational& r);          // string "p/q"
Rational rational_from_json(const Json& j);        // string or integer

Json weight_to_json(const Weight& w);              // array of rational strings
Weight weight_from_json(const Json& j);
/// CSV of rationals ("1/2,2,3") or a JSON array literal.
Weight weight_from_string(const std::string& s);

Json permutation_to_json(const Permutation& w);    // 1-based images
Permutation permutation_from_json(const Json& j);

/// {"shape":{"row_lengths":[...],"shift_matrix":[[...]]},"rows_bottom_up":...}
/// with the left-justified shorthand {"partition":[...],"rows_bottom_up":...}.
Json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json rs_pair_to_json(const RSPair& pq);
Json report_to_json(const GoldieReport& report);

StupInput stup_input_from_json(const Json& j);     // values as [re, im] pairs
Json stup_solution_to_json(const StupSolution& sol);

}  // namespace goldie
