#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "phinil/invariants.hpp"
#include "phinil/lattice.hpp"
#include "phinil/schmidt.hpp"
#include "phinil/verifier.hpp"

namespace phinil {

using Json = nlohmann::json;

// Timing fields; everything else in a report is deterministic.
inline constexpr const char* kTimingKeys[] = {"elapsed_ms", "wall_time"};

Json to_json(const GroupProfile& p);
Json to_json(const TheoremReport& r);
Json to_json(const SchmidtCertificate& c);
Json to_json(const FamilyCheck& c);
Json to_json(const SuiteEntry& e);
// {"reports": [...], "summary": {groups, failures, disagreements, errors, wall_time}}
Json to_json(const SuiteReport& r);
// {count, counts_by_order, normal, maximal}
Json lattice_summary(const SubgroupLattice& lattice);

// Serializes with object keys sorted; keys made only of digits (element
// orders) sort numerically, all others lexicographically.
std::string dump_sorted(const Json& j, int indent = 2);

// Removes every timing field, recursively.
Json strip_timing(Json j);

}  // namespace phinil
