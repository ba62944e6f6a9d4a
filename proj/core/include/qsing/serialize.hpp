#pragma once

#include "qsing/dual_graph.hpp"
#include "qsing/pencil.hpp"
#include "qsing/quotient.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace qsing {

// Integers and rationals serialize as JSON numbers when they fit in 64
// bits and as decimal ("p" or "p/q") strings otherwise; readers accept
// both forms. Floating point input is rejected everywhere.
nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j, const std::string& what);
nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j, const std::string& what);

// {"vertices": [{"name", "weight", "boundary"}...], "edges": [[a, b]...]},
// both lists sorted by name. Readers ignore unknown keys, so any richer
// object embedding these two fields loads as a graph.
nlohmann::json graph_to_json(const DualGraph& g);
DualGraph graph_from_json(const nlohmann::json& j);
std::string graph_to_dot(const DualGraph& g);

nlohmann::json divisor_to_json(const Divisor& d);
Divisor divisor_from_json(const nlohmann::json& j);

std::string completion_kind_name(CompletionKind k);
// graph fields plus "kind", "sections", "fibers" (component names from the
// S0 side to the S1 side) and "multiplicities".
nlohmann::json completion_to_json(const StandardCompletion& sc);

nlohmann::json fork_to_json(const ForkSpec& f);
ForkSpec fork_from_json(const nlohmann::json& j);

nlohmann::json pencil_to_json(const PencilResolution& pr);
// Left-to-right layout with the sprouted chain pinned in one rank so it
// renders as a column off the main spine.
std::string pencil_to_dot(const PencilResolution& pr);

// nlohmann parse wrapped so syntax errors surface with line and column.
nlohmann::json parse_json_text(const std::string& text);

} // namespace qsing
