#include "bisplit/generators.hpp"

#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

namespace bisplit {

UndirectedGraph parse_edge_list(std::string_view text) {
  UndirectedGraph g;
  std::unordered_set<std::string> seen;
  auto declare = [&](const std::string& v) {
    if (seen.insert(v).second) g.vertices.push_back(v);
  };
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() > 2) throw InputError("line " + std::to_string(lineno) + ": expected 'a b' or a single vertex");
    declare(tok[0]);
    if (tok.size() == 2) {
      declare(tok[1]);
      g.edges.emplace_back(tok[0], tok[1]);
    }
  }
  return g;
}

BipartiteGraph gen_subdivision(const UndirectedGraph& g) {
  std::vector<VertexRecord> top;
  std::unordered_set<std::string> known;
  for (const auto& v : g.vertices) {
    top.push_back({v, v, std::nullopt});
    known.insert(v);
  }
  std::vector<VertexRecord> bottom;
  std::vector<EdgeRecord> edges;
  std::set<std::pair<std::string, std::string>> used;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto [a, b] = g.edges[i];
    const auto where = "edge " + std::to_string(i) + " (" + a + ", " + b + ")";
    if (a == b) throw InputError(where + ": self-loop");
    if (!known.count(a) || !known.count(b)) throw InputError(where + ": undeclared endpoint");
    if (b < a) std::swap(a, b);
    if (!used.emplace(a, b).second) throw InputError(where + ": repeated edge");
    const auto id = "e:" + a + "-" + b;
    bottom.push_back({id, id, std::nullopt});
    edges.push_back({a, id});
    edges.push_back({b, id});
  }
  return BipartiteGraph(std::move(top), std::move(bottom), std::move(edges));
}

BipartiteGraph gen_random_bipartite(std::size_t nt, std::size_t nb, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<VertexRecord> top, bottom;
  for (std::size_t i = 1; i <= nt; ++i) top.push_back({"t" + std::to_string(i), "t" + std::to_string(i), std::nullopt});
  for (std::size_t i = 1; i <= nb; ++i) {
    bottom.push_back({"b" + std::to_string(i), "b" + std::to_string(i), std::nullopt});
  }
  std::vector<EdgeRecord> edges;
  for (const auto& t : top) {
    for (const auto& b : bottom) {
      if (coin(rng)) edges.push_back({t.id, b.id});
    }
  }
  return BipartiteGraph(std::move(top), std::move(bottom), std::move(edges));
}

BipartiteGraph gen_caterpillar(std::size_t spine_length, const std::vector<std::size_t>& legs) {
  if (legs.size() != spine_length) throw InputError("caterpillar needs one leg count per spine vertex");
  std::vector<VertexRecord> top, bottom;
  std::vector<EdgeRecord> edges;
  auto spine = [](std::size_t i) { return "s" + std::to_string(i + 1); };
  for (std::size_t i = 0; i < spine_length; ++i) {
    const bool is_top = i % 2 == 0;
    const auto s = spine(i);
    (is_top ? top : bottom).push_back({s, s, std::nullopt});
    for (std::size_t j = 1; j <= legs[i]; ++j) {
      const auto leaf = s + ".l" + std::to_string(j);
      (is_top ? bottom : top).push_back({leaf, leaf, std::nullopt});
      edges.push_back(is_top ? EdgeRecord{s, leaf} : EdgeRecord{leaf, s});
    }
    if (i > 0) {
      const auto prev = spine(i - 1);
      edges.push_back(is_top ? EdgeRecord{s, prev} : EdgeRecord{prev, s});
    }
  }
  return BipartiteGraph(std::move(top), std::move(bottom), std::move(edges));
}

UndirectedGraph path_graph(std::size_t n) {
  UndirectedGraph g;
  for (std::size_t i = 1; i <= n; ++i) g.vertices.push_back("p" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) g.edges.emplace_back(g.vertices[i - 1], g.vertices[i]);
  return g;
}

UndirectedGraph cycle_graph(std::size_t n) {
  UndirectedGraph g;
  for (std::size_t i = 1; i <= n; ++i) g.vertices.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i < n && n >= 3; ++i) g.edges.emplace_back(g.vertices[i], g.vertices[(i + 1) % n]);
  return g;
}

UndirectedGraph complete_graph(std::size_t n) {
  UndirectedGraph g;
  for (std::size_t i = 1; i <= n; ++i) g.vertices.push_back("k" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.edges.emplace_back(g.vertices[i], g.vertices[j]);
  }
  return g;
}

}  // namespace bisplit
