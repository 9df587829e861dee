#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bisplit/graph.hpp"

namespace bisplit {

/// Split decisions plus the crossing-free order of the split graph. The
/// order's bottom layer lists ids of apply_splits(g, splits).
struct RemovalOutput {
  SplitResult splits;
  LayerOrder order;
};

/// State of one step of the minimum-splits recursion for the current first
/// top vertex v1: its optional prescribed first neighbor u1*, and its
/// neighbors split by whether v1 is their last remaining top neighbor.
/// Bottom indices, sorted by id.
struct RemovalFrame {
  std::optional<std::size_t> prescribed_first;
  std::vector<std::size_t> degree_one_neighbors;
  std::vector<std::size_t> multi_neighbors;
};

/// Minimum total splits making the drawing planar with `top_order` fixed. O(|E|)
/// after sorting ties by id.
RemovalOutput crs_fixed_order(const BipartiteGraph& g, const std::vector<std::string>& top_order);

/// Minimum number of split vertices (each may be split many times) making the
/// drawing planar with `top_order` fixed.
RemovalOutput crsv_fixed_order(const BipartiteGraph& g, const std::vector<std::string>& top_order);

/// The frames visited by crs_fixed_order, one per non-isolated top vertex in
/// order. Exposed for inspection and tests.
std::vector<RemovalFrame> crs_frames(const BipartiteGraph& g, const std::vector<std::string>& top_order);

/// Mandatory-split test: u needs at least one split iff its neighbors are not
/// consecutive among the non-isolated tops, or some interior neighbor has
/// degree other than 1.
bool split_is_mandatory(const BipartiteGraph& g, const std::vector<std::string>& top_order,
                        std::size_t bottom);

/// True iff applying `splits` to `g` and drawing with `ord` has no crossings.
bool verify_planar_output(const BipartiteGraph& g, const SplitResult& splits, const LayerOrder& ord);

}  // namespace bisplit
