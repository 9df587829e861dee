#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bisplit/graph.hpp"

namespace bisplit {

/// Simple undirected graph used as generator input.
struct UndirectedGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Text form: one edge "a b" per line; a line with a single token declares an
/// isolated vertex; '#' starts a comment. Vertices appear in first-mention order.
UndirectedGraph parse_edge_list(std::string_view text);

/// Subdivides every edge once: tops are the original vertices, each edge
/// becomes a bottom vertex "e:a-b" (endpoints sorted) adjacent to a and b.
/// Rejects self-loops, repeated edges and undeclared endpoints.
BipartiteGraph gen_subdivision(const UndirectedGraph& g);

/// Tops t1..t{nt}, bottoms b1..b{nb}; each pair is an edge with probability p,
/// drawn in row-major order from a mt19937_64 seeded with `seed`.
BipartiteGraph gen_random_bipartite(std::size_t nt, std::size_t nb, double p, std::uint64_t seed);

/// Spine s1..s{n} alternating top, bottom, top, ...; spine vertex i gets
/// legs[i] leaves "s{i}.l{j}" on the other layer. Both layers are listed in
/// spine order with legs next to their spine vertex, so the as-input order
/// is a crossing-free drawing.
BipartiteGraph gen_caterpillar(std::size_t spine_length, const std::vector<std::size_t>& legs);

/// Path graph p1 - ... - p{n} and cycle c1 - ... - c{n}, plus the complete graph k1..k{n}.
UndirectedGraph path_graph(std::size_t n);
UndirectedGraph cycle_graph(std::size_t n);
UndirectedGraph complete_graph(std::size_t n);

}  // namespace bisplit
