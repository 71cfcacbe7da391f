#pragma once

#include <json.hpp>

#include "qpart/diagrams.hpp"
#include "qpart/identities.hpp"
#include "qpart/involutions.hpp"
#include "qpart/mocktheta.hpp"
#include "qpart/partitions.hpp"
#include "qpart/series.hpp"

namespace qpart {

// Documented wire schemas. Round-trippable where a from_* is provided.

nlohmann::json series_to_json(const TruncatedSeries& s);     // {"order": N, "coeffs": [...]}
TruncatedSeries series_from_json(const nlohmann::json& j);

nlohmann::json partition_to_json(const Partition& p);        // {"parts": [...]}
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json diagram_to_json(const Diagram& d);            // {"style": ..., "rows": [[...]]}
Diagram diagram_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r);
nlohmann::json sweep_to_json(const SweepReport& r);          // {involution, maxN, violations}
nlohmann::json catalog_to_json(const RankCatalog& c);

} // namespace qpart
