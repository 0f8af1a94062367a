#pragma once

#include "logsplit/witness.hpp"

#include <string>

namespace logsplit {

/// "found", "exhausted" or "no_witness_any_degree".
std::string outcome_key(Outcome o);

/// Multi-line human-readable rendering, including notes.
std::string render_text(const SearchReport &r);

/// JSON with exactly the keys outcome, witness, bounds, darboux_pairs and
/// timing_ms, in that order. indent < 0 gives a single line.
std::string render_json(const SearchReport &r, int indent = 2);

} // namespace logsplit
