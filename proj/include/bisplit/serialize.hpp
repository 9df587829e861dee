#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "bisplit/graph.hpp"
#include "bisplit/layout.hpp"

namespace bisplit {

using Json = nlohmann::ordered_json;

/// Parses UTF-8 JSON text; syntax errors become InputError.
Json parse_json(std::string_view text);
/// The one textual form every output uses (2-space indent, trailing newline).
std::string dump(const Json& j);

/// Canonical dataset {"top":[{"id","label"}], "bottom":[...], "edges":[[t,b]]}.
/// Copies carry "originalId". A document with "nodes" is read as a HuBMAP
/// node/link export instead: nodes {id, name|label, type}, links|edges
/// {source, target}; a type containing "cell" (any case) or equal to "CT"
/// puts the node on the top layer, anything else on the bottom layer.
BipartiteGraph dataset_from_json(const Json& j);
BipartiteGraph parse_dataset(std::string_view text);
Json dataset_to_json(const BipartiteGraph& g);

Json order_to_json(const LayerOrder& ord);
LayerOrder order_from_json(const Json& j);

Json splits_to_json(const SplitResult& s);
SplitResult splits_from_json(const Json& j);

Json steps_to_json(const std::vector<SplitStep>& steps);
std::vector<SplitStep> steps_from_json(const Json& j);

/// Missing keys take RunConfig defaults; unknown enum values are errors.
RunConfig config_from_json(const Json& j);
Json config_to_json(const RunConfig& c);

Json stats_to_json(const StatsRecord& s);

/// Also writes "metrics" {totalSplits, splitVertices, maxSplits}, which the
/// reader ignores. The reader checks that "crossings" matches the order.
Json document_to_json(const LayoutDocument& doc);
LayoutDocument document_from_json(const Json& j);

}  // namespace bisplit
