#pragma once

#include <json.hpp>

#include "zerodiv/cancellation.hpp"
#include "zerodiv/search.hpp"
#include "zerodiv/wordeq.hpp"

namespace zerodiv {

using Json = nlohmann::ordered_json;

Json to_json(const AlgebraElement& x);
/// Permutations rendered 1-based.
Json to_json(const CancellationStructure& cs);
Json to_json(const ChainTrace& trace);
Json to_json(const Verdict& v);

/// Recovered structure plus both relations. In the k_c = 0 case the relation
/// comes from the translation permutation and relation_M is null.
Json extraction_json(const RecoveredInstance& inst, const Group& group, bool trace);
Json recovery_json(const RecoveredInstance& inst, const Group& group);

/// One object per n. wall_time is left out so output is reproducible.
Json to_json(const ScanReport& report, bool verbose);

}  // namespace zerodiv
