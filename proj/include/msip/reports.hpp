#pragma once

#include <cstdint>
#include <string>

#include "msip/bounds.hpp"
#include "msip/graver.hpp"
#include "msip/multiset.hpp"
#include "msip/solver.hpp"

namespace msip {

/// JSON payloads shared by the CLI and the python module. All exact
/// values are rendered as decimal strings.
std::string tree_summary_json(const Program& P, const MultistageTree& tree);
std::string graver_json(const GraverBasis& basis);
std::string solve_report_json(const SolveReport& rep);
std::string proximity_json(const ProximityReport& rep);
std::string graver_norm_json(const GraverNormReport& rep);
std::string lemma42_json(const std::optional<SubmultisetWitness>& witness, long max_card);
std::string bound_table_json(const BoundTable& tab);

}  // namespace msip
