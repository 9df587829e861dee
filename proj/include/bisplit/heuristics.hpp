#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bisplit/graph.hpp"

namespace bisplit {

/// Mean position of each vertex of layer `s` over its neighbors in the other
/// layer of `ord`, indexed like g.layer(s). Degree-0 vertices get +infinity.
std::vector<double> barycenters(const BipartiteGraph& g, const LayerOrder& ord, Side s);

enum class BarycenterSide { top, bottom, both };

/// Re-sorts the selected layer by barycenter (ties: previous position, which
/// already encodes any earlier id tie-break). With `both`, alternates
/// `first` then the other side for up to `sweeps` rounds and stops early once
/// a round changes nothing. A single side ignores `sweeps`.
LayerOrder barycenter_order(const BipartiteGraph& g, const LayerOrder& ord, BarycenterSide side,
                            std::size_t sweeps = 1, Side first = Side::bottom);

struct SplitStep {
  std::string vertex;                // bottom vertex that was split
  std::string left_copy;             // keeps V^l
  std::string right_copy;            // takes V^r
  std::vector<std::string> left;     // V^l, in top order
  std::vector<std::string> right;    // V^r, in top order
  std::int64_t predicted_gain = 0;   // CR-count estimate
  std::int64_t objective_value = 0;  // max-span: span(V^l)^2 + span(V^r)^2
  std::uint64_t crossings_after = 0; // recounted after the step

  friend bool operator==(const SplitStep&, const SplitStep&) = default;
};

/// Heuristic output relative to the input graph. The first split of a vertex
/// v renames it to v#1 and creates v#2; splitting a copy again keeps the
/// left part under its id and numbers the new copy after the existing ones.
struct HeuristicResult {
  std::vector<SplitStep> steps;
  SplitResult splits;
  BipartiteGraph graph;  // apply_splits(input, splits)
  LayerOrder order;      // top order unchanged
  std::uint64_t initial_crossings = 0;
  std::uint64_t crossings = 0;
};

using StepObserver = std::function<void(const SplitStep&)>;

/// Up to k splits, each on the bottom vertex of largest span (ties by id) at
/// the cut minimizing span(V^l)^2 + span(V^r)^2 (first such cut). Stops when
/// every bottom vertex has span 0.
HeuristicResult maxspan_heuristic(const BipartiteGraph& g, const LayerOrder& ord, std::size_t k,
                                  const StepObserver& observe = {});

/// Up to k splits, each the (vertex, cut) with the largest positive estimated
/// gain count^l + count^r against a per-iteration barycenter snapshot.
/// Vertices are scanned in id order and cuts left to right; only a strictly
/// larger gain replaces the incumbent. Stops when no gain is positive.
HeuristicResult crcount_heuristic(const BipartiteGraph& g, const LayerOrder& ord, std::size_t k,
                                  const StepObserver& observe = {});

}  // namespace bisplit
