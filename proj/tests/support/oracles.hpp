#pragma once
// Independent reference implementations used only by tests.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <regex>
#include <string>
#include <vector>

#include "bisplit/graph.hpp"

namespace oracle {

using bisplit::BipartiteGraph;
using bisplit::EdgeRecord;
using bisplit::LayerOrder;
using bisplit::VertexRecord;

inline BipartiteGraph make_graph(std::size_t nt, std::size_t nb, const std::vector<std::pair<int, int>>& edges) {
  std::vector<VertexRecord> top, bottom;
  for (std::size_t i = 1; i <= nt; ++i) top.push_back({"t" + std::to_string(i), "t" + std::to_string(i), {}});
  for (std::size_t i = 1; i <= nb; ++i) bottom.push_back({"b" + std::to_string(i), "b" + std::to_string(i), {}});
  std::vector<EdgeRecord> e;
  for (auto [t, b] : edges) e.push_back({"t" + std::to_string(t), "b" + std::to_string(b)});
  return BipartiteGraph(top, bottom, e);
}

inline BipartiteGraph random_graph(std::mt19937& rng, std::size_t max_t, std::size_t max_b, std::size_t max_e) {
  const std::size_t nt = std::uniform_int_distribution<std::size_t>(1, max_t)(rng);
  const std::size_t nb = std::uniform_int_distribution<std::size_t>(1, max_b)(rng);
  std::vector<std::pair<int, int>> all;
  for (std::size_t t = 1; t <= nt; ++t) {
    for (std::size_t b = 1; b <= nb; ++b) all.emplace_back(static_cast<int>(t), static_cast<int>(b));
  }
  std::shuffle(all.begin(), all.end(), rng);
  const std::size_t cap = std::min(all.size(), max_e);
  all.resize(std::uniform_int_distribution<std::size_t>(0, cap)(rng));
  return make_graph(nt, nb, all);
}

/// Every graph (all edge subsets of K_{a,b}) with 1 <= a <= max_t, 1 <= b <= max_b.
inline std::vector<BipartiteGraph> exhaustive_family(std::size_t max_t, std::size_t max_b) {
  std::vector<BipartiteGraph> out;
  for (std::size_t a = 1; a <= max_t; ++a) {
    for (std::size_t b = 1; b <= max_b; ++b) {
      const std::size_t cells = a * b;
      for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t c = 0; c < cells; ++c) {
          if (mask >> c & 1u) edges.emplace_back(static_cast<int>(c / b + 1), static_cast<int>(c % b + 1));
        }
        out.push_back(make_graph(a, b, edges));
      }
    }
  }
  return out;
}

inline std::vector<std::string> ids(const std::vector<VertexRecord>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.id);
  return out;
}

/// Direct pair test over actual id positions.
inline std::uint64_t pair_crossings(const BipartiteGraph& g, const LayerOrder& ord) {
  auto where = [](const std::vector<std::string>& order, const std::string& id) {
    return static_cast<long>(std::find(order.begin(), order.end(), id) - order.begin());
  };
  std::uint64_t n = 0;
  const auto& e = g.edges();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const long dt = where(ord.top, e[i].top) - where(ord.top, e[j].top);
      const long db = where(ord.bottom, e[i].bottom) - where(ord.bottom, e[j].bottom);
      if ((dt < 0 && db > 0) || (dt > 0 && db < 0)) ++n;
    }
  }
  return n;
}

/// Planar iff some pair of permutations draws the graph without crossings.
inline bool planar_by_orders(const BipartiteGraph& g) {
  auto top = ids(g.top());
  auto bottom = ids(g.bottom());
  std::sort(top.begin(), top.end());
  do {
    std::sort(bottom.begin(), bottom.end());
    do {
      if (pair_crossings(g, {top, bottom}) == 0) return true;
    } while (std::next_permutation(bottom.begin(), bottom.end()));
  } while (std::next_permutation(top.begin(), top.end()));
  return false;
}

/// Minimum crossings over the unsplit drawing and every single split of one
/// bottom vertex into two consecutive parts (one may be empty), with both
/// copies inserted anywhere among the other bottoms kept in order.
inline std::uint64_t best_single_split(const BipartiteGraph& g, const LayerOrder& ord) {
  std::uint64_t best = pair_crossings(g, ord);
  for (std::size_t b = 0; b < g.bottom().size(); ++b) {
    const auto& id = g.bottom()[b].id;
    std::vector<std::string> nbrs;
    for (const auto& t : ord.top) {
      for (const auto& e : g.edges()) {
        if (e.bottom == id && e.top == t) nbrs.push_back(t);
      }
    }
    if (nbrs.empty()) continue;
    std::vector<std::string> rest;
    for (const auto& x : ord.bottom) {
      if (x != id) rest.push_back(x);
    }
    for (std::size_t cut = 0; cut <= nbrs.size(); ++cut) {
      std::vector<EdgeRecord> edges;
      for (const auto& e : g.edges()) {
        if (e.bottom != id) edges.push_back(e);
      }
      for (std::size_t i = 0; i < nbrs.size(); ++i) edges.push_back({nbrs[i], i < cut ? "A" : "B"});
      std::vector<VertexRecord> bottom;
      for (const auto& x : rest) bottom.push_back({x, x, {}});
      bottom.push_back({"A", "A", {}});
      bottom.push_back({"B", "B", {}});
      const BipartiteGraph h(g.top(), bottom, edges);
      const std::size_t n = rest.size() + 2;
      for (std::size_t pa = 0; pa < n; ++pa) {
        for (std::size_t pb = 0; pb < n; ++pb) {
          if (pa == pb) continue;
          std::vector<std::string> order(n);
          order[pa] = "A";
          order[pb] = "B";
          std::size_t r = 0;
          for (auto& slot : order) {
            if (slot.empty()) slot = rest[r++];
          }
          best = std::min(best, pair_crossings(h, {ord.top, order}));
        }
      }
    }
  }
  return best;
}

struct Segment {
  double x1, y1, x2, y2;
};

inline std::vector<Segment> svg_lines(const std::string& svg) {
  static const std::regex line(
      R"re(<line x1="([-0-9.e+]+)" y1="([-0-9.e+]+)" x2="([-0-9.e+]+)" y2="([-0-9.e+]+)")re");
  std::vector<Segment> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line); it != std::sregex_iterator(); ++it) {
    out.push_back({std::stod((*it)[1]), std::stod((*it)[2]), std::stod((*it)[3]), std::stod((*it)[4])});
  }
  return out;
}

/// Proper intersections only: segments touching at an endpoint do not count.
inline std::uint64_t proper_intersections(const std::vector<Segment>& segs) {
  auto orient = [](double ax, double ay, double bx, double by, double cx, double cy) {
    const double v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return (v > 0) - (v < 0);
  };
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto& a = segs[i];
      const auto& b = segs[j];
      const int o1 = orient(a.x1, a.y1, a.x2, a.y2, b.x1, b.y1);
      const int o2 = orient(a.x1, a.y1, a.x2, a.y2, b.x2, b.y2);
      const int o3 = orient(b.x1, b.y1, b.x2, b.y2, a.x1, a.y1);
      const int o4 = orient(b.x1, b.y1, b.x2, b.y2, a.x2, a.y2);
      if (o1 * o2 < 0 && o3 * o4 < 0) ++n;
    }
  }
  return n;
}

}  // namespace oracle
