#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bisplit/graph.hpp"

namespace bisplit {

/// An edge reduced to the positions of its endpoints: (top position, bottom position).
using PositionedEdge = std::pair<std::size_t, std::size_t>;

/// Two edges (a1,b1), (a2,b2) cross iff a1 < a2 and b2 < b1 (or symmetrically).
/// Edges sharing an endpoint never cross.
std::uint64_t count_crossings(std::span<const PositionedEdge> edges);
std::uint64_t count_crossings(const BipartiteGraph& g, const LayerOrder& ord);

/// Quadratic pair enumeration of the same predicate; reference oracle.
std::uint64_t count_crossings_naive(const BipartiteGraph& g, const LayerOrder& ord);

/// True iff some pair of layer orders draws `g` without crossings, i.e. `g`
/// is a forest of caterpillars. Linear time.
bool is_two_layer_planar(const BipartiteGraph& g);

enum class ScanDirection { rightward, leftward };

/// One half of a candidate CR-count split: the part of the split vertex's
/// neighborhood that would move away to its own barycenter.
struct RangeQuery {
  std::size_t moved = 0;                      // bottom index of the vertex being split
  std::vector<std::size_t> part;              // sorted top positions owned by the moving copy
  double lo = 0.0;
  double hi = 0.0;
  ScanDirection direction = ScanDirection::rightward;
};

/// Estimated crossings removed by moving `q.part` from the split vertex to
/// the far end of [lo, hi].
///
/// Rightward (lo = p_i, hi = p^r): walk the bottom order from the vertex
/// towards the right while the barycenter of the visited vertex is <= hi.
/// For every edge (t, v_j) of a visited vertex, with R = q.part:
///   t <  min R           -> +|R|  (every moved edge stops crossing it)
///   min R <= t <= max R  -> #{r > t} - #{r < t}  (net change, may be negative)
///   t >  max R           -> 0     (nothing reducible)
/// Leftward (lo = p^l, hi = p_i) is the mirror image: walk left while the
/// barycenter is >= lo, with "+|L|" for t > max L and 0 for t < min L.
/// Neighbors equal to an extreme of the part fall in the middle case.
/// Degree-0 bottoms never end a walk in either direction.
/// Returns 0 when hi <= lo.
std::int64_t count_crossings_in_range(const BipartiteGraph& g, const LayerOrder& ord,
                                      std::span<const double> barycenters, const RangeQuery& q);
/// Same, with the order already resolved (hot loop of the CR-count heuristic).
std::int64_t count_crossings_in_range(const BipartiteGraph& g, const LayerPositions& pos,
                                      std::span<const double> barycenters, const RangeQuery& q);

}  // namespace bisplit
