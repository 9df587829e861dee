#include "bisplit/graph.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_set>

namespace bisplit {

namespace {

const char* side_name(Side s) { return s == Side::top ? "top" : "bottom"; }

}  // namespace

BipartiteGraph::BipartiteGraph(std::vector<VertexRecord> top, std::vector<VertexRecord> bottom,
                               std::vector<EdgeRecord> edges)
    : top_(std::move(top)), bottom_(std::move(bottom)), edges_(std::move(edges)) {
  index_.reserve(top_.size() + bottom_.size());
  for (Side s : {Side::top, Side::bottom}) {
    const auto& records = layer(s);
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (records[i].id.empty()) {
        throw InputError(std::string(side_name(s)) + "[" + std::to_string(i) + "]: empty vertex id");
      }
      if (!index_.emplace(records[i].id, std::make_pair(s, i)).second) {
        throw InputError(std::string(side_name(s)) + "[" + std::to_string(i) +
                         "]: duplicate vertex id '" + records[i].id + "'");
      }
    }
  }

  top_adj_.resize(top_.size());
  bottom_adj_.resize(bottom_.size());
  edge_idx_.reserve(edges_.size());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto where = "edges[" + std::to_string(e) + "]";
    auto t = index_.find(edges_[e].top);
    if (t == index_.end() || t->second.first != Side::top) {
      throw InputError(where + ": dangling top endpoint '" + edges_[e].top + "'");
    }
    auto b = index_.find(edges_[e].bottom);
    if (b == index_.end() || b->second.first != Side::bottom) {
      throw InputError(where + ": dangling bottom endpoint '" + edges_[e].bottom + "'");
    }
    const std::pair key{t->second.second, b->second.second};
    if (!seen.insert(key).second) {
      throw InputError(where + ": duplicate edge (" + edges_[e].top + ", " + edges_[e].bottom + ")");
    }
    edge_idx_.push_back(key);
    top_adj_[key.first].push_back(key.second);
    bottom_adj_[key.second].push_back(key.first);
  }
}

std::optional<std::size_t> BipartiteGraph::find(Side s, std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end() || it->second.first != s) return std::nullopt;
  return it->second.second;
}

std::size_t BipartiteGraph::index_of(Side s, std::string_view id) const {
  if (auto i = find(s, id)) return *i;
  throw InputError("unknown " + std::string(side_name(s)) + " vertex '" + std::string(id) + "'");
}

BipartiteGraph BipartiteGraph::transposed() const {
  std::vector<EdgeRecord> flipped;
  flipped.reserve(edges_.size());
  for (const auto& e : edges_) flipped.push_back({e.bottom, e.top});
  return BipartiteGraph(bottom_, top_, std::move(flipped));
}

std::vector<std::size_t> resolve_layer(const BipartiteGraph& g, Side s,
                                       const std::vector<std::string>& order) {
  const auto n = g.layer(s).size();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(n, unset);
  for (std::size_t p = 0; p < order.size(); ++p) {
    auto i = g.find(s, order[p]);
    if (!i) {
      throw InputError(std::string(side_name(s)) + " order[" + std::to_string(p) +
                       "]: unknown vertex '" + order[p] + "'");
    }
    if (pos[*i] != unset) {
      throw InputError(std::string(side_name(s)) + " order[" + std::to_string(p) +
                       "]: vertex '" + order[p] + "' listed twice");
    }
    pos[*i] = p;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (pos[i] == unset) {
      throw InputError(std::string(side_name(s)) + " order is missing vertex '" +
                       g.layer(s)[i].id + "'");
    }
  }
  return pos;
}

LayerPositions resolve_order(const BipartiteGraph& g, const LayerOrder& order) {
  return {resolve_layer(g, Side::top, order.top), resolve_layer(g, Side::bottom, order.bottom)};
}

LayerOrder input_order(const BipartiteGraph& g) {
  LayerOrder ord;
  for (Side s : {Side::top, Side::bottom}) {
    for (const auto& v : g.layer(s)) ord.layer(s).push_back(v.id);
  }
  return ord;
}

LayerOrder alphabetical_order(const BipartiteGraph& g) {
  LayerOrder ord;
  for (Side s : {Side::top, Side::bottom}) {
    std::vector<const VertexRecord*> records;
    for (const auto& v : g.layer(s)) records.push_back(&v);
    std::sort(records.begin(), records.end(), [](const VertexRecord* a, const VertexRecord* b) {
      return std::tie(a->label, a->id) < std::tie(b->label, b->id);
    });
    for (const auto* v : records) ord.layer(s).push_back(v->id);
  }
  return ord;
}

StatsRecord graph_stats(const BipartiteGraph& g) {
  StatsRecord st;
  st.vertices = g.vertex_count();
  st.edges = g.edge_count();
  st.top = g.top().size();
  st.bottom = g.bottom().size();
  if (st.vertices >= 2) {
    const double n = static_cast<double>(st.vertices);
    st.density = 2.0 * static_cast<double>(st.edges) / (n * (n - 1.0));
  }
  for (Side s : {Side::top, Side::bottom}) {
    for (std::size_t i = 0; i < g.layer(s).size(); ++i) {
      st.max_degree = std::max(st.max_degree, g.degree(s, i));
    }
  }
  return st;
}

std::size_t SplitResult::total_splits() const {
  std::size_t total = 0;
  for (const auto& [_, copies] : per_original) total += copies.empty() ? 0 : copies.size() - 1;
  return total;
}

std::size_t SplitResult::split_vertices() const {
  return static_cast<std::size_t>(std::count_if(per_original.begin(), per_original.end(),
                                                [](const auto& kv) { return kv.second.size() >= 2; }));
}

std::size_t SplitResult::max_splits() const {
  std::size_t best = 0;
  for (const auto& [_, copies] : per_original) {
    if (!copies.empty()) best = std::max(best, copies.size() - 1);
  }
  return best;
}

std::string copy_id(std::string_view original, std::size_t index) {
  return std::string(original) + "#" + std::to_string(index);
}

BipartiteGraph apply_splits(const BipartiteGraph& g, const SplitResult& plan) {
  // owner[bottom][top] -> copy id, for every split bottom vertex
  std::unordered_map<std::size_t, std::unordered_map<std::size_t, const std::string*>> owner;
  for (const auto& [orig, copies] : plan.per_original) {
    const auto b = g.find(Side::bottom, orig);
    if (!b) throw InputError("split plan references unknown bottom vertex '" + orig + "'");
    if (copies.empty()) throw InputError("split plan for '" + orig + "' has no copies");
    std::unordered_set<std::size_t> nbrs(g.neighbors(Side::bottom, *b).begin(),
                                         g.neighbors(Side::bottom, *b).end());
    auto& own = owner[*b];
    for (const auto& c : copies) {
      if (c.neighbors.empty()) {
        throw InputError("split plan for '" + orig + "': copy '" + c.id + "' has no neighbors");
      }
      for (const auto& t : c.neighbors) {
        auto ti = g.find(Side::top, t);
        if (!ti || !nbrs.count(*ti)) {
          throw InputError("split plan for '" + orig + "': '" + t + "' is not a neighbor");
        }
        if (!own.emplace(*ti, &c.id).second) {
          throw InputError("split plan for '" + orig + "': neighbor '" + t +
                           "' assigned to more than one copy");
        }
      }
    }
    if (own.size() != nbrs.size()) {
      throw InputError("split plan for '" + orig + "': copies do not cover every incident edge");
    }
  }

  std::vector<VertexRecord> bottom;
  bottom.reserve(g.bottom().size() + plan.total_splits());
  for (std::size_t b = 0; b < g.bottom().size(); ++b) {
    const auto& v = g.bottom()[b];
    auto it = plan.per_original.find(v.id);
    if (it == plan.per_original.end()) {
      bottom.push_back(v);
      continue;
    }
    const std::string root = v.original_id.value_or(v.id);
    for (const auto& c : it->second) bottom.push_back({c.id, v.label, root});
  }

  std::vector<EdgeRecord> edges;
  edges.reserve(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [t, b] = g.edge_indices()[e];
    auto it = owner.find(b);
    if (it == owner.end()) {
      edges.push_back(g.edges()[e]);
    } else {
      edges.push_back({g.edges()[e].top, *it->second.at(t)});
    }
  }
  return BipartiteGraph(g.top(), std::move(bottom), std::move(edges));
}

}  // namespace bisplit
