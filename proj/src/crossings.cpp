#include "bisplit/crossings.hpp"

#include <algorithm>
#include <numeric>

namespace bisplit {

namespace {

std::uint64_t merge_count(std::vector<std::size_t>& v, std::vector<std::size_t>& scratch,
                          std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t inv = merge_count(v, scratch, lo, mid) + merge_count(v, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    // strict: equal bottom positions (shared bottom endpoint) are not inversions
    if (v[j] < v[i]) {
      inv += mid - i;
      scratch[k++] = v[j++];
    } else {
      scratch[k++] = v[i++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi), v.begin() + static_cast<std::ptrdiff_t>(lo));
  return inv;
}

std::vector<PositionedEdge> positioned(const BipartiteGraph& g, const LayerOrder& ord) {
  const auto pos = resolve_order(g, ord);
  std::vector<PositionedEdge> edges;
  edges.reserve(g.edge_count());
  for (auto [t, b] : g.edge_indices()) edges.emplace_back(pos.top[t], pos.bottom[b]);
  return edges;
}

}  // namespace

std::uint64_t count_crossings(std::span<const PositionedEdge> edges) {
  std::vector<PositionedEdge> sorted(edges.begin(), edges.end());
  // edges of one top vertex sorted by bottom position contribute no inversions
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> seq(sorted.size());
  std::transform(sorted.begin(), sorted.end(), seq.begin(), [](const auto& e) { return e.second; });
  std::vector<std::size_t> scratch(seq.size());
  return merge_count(seq, scratch, 0, seq.size());
}

std::uint64_t count_crossings(const BipartiteGraph& g, const LayerOrder& ord) {
  const auto edges = positioned(g, ord);
  return count_crossings(edges);
}

std::uint64_t count_crossings_naive(const BipartiteGraph& g, const LayerOrder& ord) {
  const auto edges = positioned(g, ord);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a1, b1] = edges[i];
      const auto [a2, b2] = edges[j];
      if ((a1 < a2 && b2 < b1) || (a2 < a1 && b1 < b2)) ++count;
    }
  }
  return count;
}

bool is_two_layer_planar(const BipartiteGraph& g) {
  // vertices 0..nt-1 are top, nt.. are bottom
  const std::size_t nt = g.top().size();
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [t, b] : g.edge_indices()) {
    const auto rt = find(t), rb = find(nt + b);
    if (rt == rb) return false;  // cycle
    parent[rt] = rb;
  }

  auto degree = [&](std::size_t v) {
    return v < nt ? g.degree(Side::top, v) : g.degree(Side::bottom, v - nt);
  };
  // A tree is a caterpillar iff every non-leaf has at most two non-leaf neighbors.
  for (std::size_t v = 0; v < n; ++v) {
    if (degree(v) < 2) continue;
    const Side s = v < nt ? Side::top : Side::bottom;
    const std::size_t idx = v < nt ? v : v - nt;
    const std::size_t offset = s == Side::top ? nt : 0;
    std::size_t inner = 0;
    for (auto w : g.neighbors(s, idx)) {
      if (degree(w + offset) >= 2 && ++inner > 2) return false;
    }
  }
  return true;
}

std::int64_t count_crossings_in_range(const BipartiteGraph& g, const LayerOrder& ord,
                                      std::span<const double> barycenters, const RangeQuery& q) {
  return count_crossings_in_range(g, resolve_order(g, ord), barycenters, q);
}

std::int64_t count_crossings_in_range(const BipartiteGraph& g, const LayerPositions& pos,
                                      std::span<const double> barycenters, const RangeQuery& q) {
  if (q.hi <= q.lo || q.part.empty()) return 0;
  std::vector<std::size_t> at(g.bottom().size());
  for (std::size_t b = 0; b < at.size(); ++b) at[pos.bottom[b]] = b;

  const auto& part = q.part;
  const auto m = static_cast<std::int64_t>(part.size());
  const std::size_t first = part.front();
  const std::size_t last = part.back();

  auto edge_gain = [&](std::size_t t) -> std::int64_t {
    const auto below = static_cast<std::int64_t>(std::lower_bound(part.begin(), part.end(), t) - part.begin());
    const auto above = static_cast<std::int64_t>(part.end() - std::upper_bound(part.begin(), part.end(), t));
    if (q.direction == ScanDirection::rightward) {
      if (t < first) return m;
      if (t > last) return 0;
      return above - below;
    }
    if (t > last) return m;
    if (t < first) return 0;
    return below - above;
  };

  std::int64_t gain = 0;
  auto visit = [&](std::size_t b) {
    for (auto t : g.neighbors(Side::bottom, b)) gain += edge_gain(pos.top[t]);
  };

  const std::size_t start = pos.bottom[q.moved];
  auto inside = [&](std::size_t b) {
    if (g.degree(Side::bottom, b) == 0) return true;
    return q.direction == ScanDirection::rightward ? barycenters[b] <= q.hi : barycenters[b] >= q.lo;
  };
  if (q.direction == ScanDirection::rightward) {
    for (std::size_t p = start + 1; p < at.size() && inside(at[p]); ++p) visit(at[p]);
  } else {
    for (std::size_t p = start; p-- > 0 && inside(at[p]);) visit(at[p]);
  }
  return gain;
}

}  // namespace bisplit
