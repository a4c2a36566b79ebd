#pragma once

#include <string>
#include <string_view>

#include "egocount/estimation.hpp"
#include "egocount/graph.hpp"
#include "egocount/sampling.hpp"

namespace egocount {

/// Bumped whenever a field is renamed or removed.
inline constexpr int kReportSchemaVersion = 1;

/// Pretty-printed JSON object with a "schema" field.
std::string report_to_json(const EstimateReport& report);
/// Header line plus one data row.
std::string report_to_csv(const EstimateReport& report);

/// A realized sample in original ids, so it can be replayed against the graph.
std::string sample_to_json(const Graph& g, const EgoSample& sample);
EgoSample sample_from_json(const Graph& g, std::string_view text);

}  // namespace egocount
