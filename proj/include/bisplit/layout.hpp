#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bisplit/graph.hpp"
#include "bisplit/heuristics.hpp"

namespace bisplit {

enum class OrderMethod { alphabetical, barycenter, as_input };
enum class Objective { min_splits, min_split_vertices, min_crossings };
/// Backend for min_crossings: the exhaustive search or one of the heuristics.
enum class Method { exact, max_span, cr_count };

struct RunConfig {
  Side fixed_side = Side::top;
  OrderMethod order_method = OrderMethod::alphabetical;
  /// 0: one barycenter pass on the free side. N > 0: up to N two-sided
  /// sweeps (free side first), stopping when a sweep changes nothing.
  std::size_t barycenter_sweeps = 0;
  Objective objective = Objective::min_splits;
  Method method = Method::exact;
  std::size_t split_budget = 0;
  std::optional<std::uint64_t> crossing_bound;
  bool allow_large_budget = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// The unit exchanged by the CLI and the service. `splits` is relative to
/// the graph the run started from; `graph` is the post-split graph.
struct LayoutDocument {
  BipartiteGraph graph;
  LayerOrder order;
  SplitResult splits;
  std::uint64_t crossings = 0;
  RunConfig config;
  std::optional<std::vector<SplitStep>> steps;  // heuristic runs only
  std::optional<bool> decision;                 // crossings <= crossing bound, when one is set

  friend bool operator==(const LayoutDocument&, const LayoutDocument&) = default;
};

/// Initial drawing per cfg.order_method (barycenter starts from alphabetical).
LayerOrder initial_order(const BipartiteGraph& g, const RunConfig& cfg);

LayoutDocument make_initial_layout(const BipartiteGraph& g, const RunConfig& cfg);

/// Runs cfg.objective on doc.graph with doc's order of the fixed side kept.
/// Fixing the bottom side runs on the transposed graph and transposes back.
LayoutDocument split_layout(const LayoutDocument& doc, const RunConfig& cfg);

inline LayoutDocument run_layout(const BipartiteGraph& g, const RunConfig& cfg) {
  return split_layout(make_initial_layout(g, cfg), cfg);
}

}  // namespace bisplit
