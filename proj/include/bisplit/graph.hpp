#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bisplit {

/// Raised for any malformed or inconsistent input: documents, orders,
/// split plans, budgets. The CLI maps it to exit code 2 and the service
/// to HTTP 400.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side { top, bottom };

constexpr Side opposite(Side s) { return s == Side::top ? Side::bottom : Side::top; }

struct VertexRecord {
  std::string id;
  std::string label;
  std::optional<std::string> original_id;

  friend bool operator==(const VertexRecord&, const VertexRecord&) = default;
};

struct EdgeRecord {
  std::string top;
  std::string bottom;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Immutable 2-layer bipartite graph. Construction validates ids, endpoints
/// and edge uniqueness; afterwards every vertex is also addressable by its
/// index within its layer.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::vector<VertexRecord> top, std::vector<VertexRecord> bottom,
                 std::vector<EdgeRecord> edges);

  const std::vector<VertexRecord>& layer(Side s) const { return s == Side::top ? top_ : bottom_; }
  const std::vector<VertexRecord>& top() const { return top_; }
  const std::vector<VertexRecord>& bottom() const { return bottom_; }
  const std::vector<EdgeRecord>& edges() const { return edges_; }

  std::size_t vertex_count() const { return top_.size() + bottom_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> find(Side s, std::string_view id) const;
  /// Throws InputError when `id` is not a vertex of layer `s`.
  std::size_t index_of(Side s, std::string_view id) const;

  /// Indices into the opposite layer, in edge input order.
  const std::vector<std::size_t>& neighbors(Side s, std::size_t index) const {
    return s == Side::top ? top_adj_[index] : bottom_adj_[index];
  }
  std::size_t degree(Side s, std::size_t index) const { return neighbors(s, index).size(); }

  /// (top index, bottom index) per edge, parallel to edges().
  const std::vector<std::pair<std::size_t, std::size_t>>& edge_indices() const { return edge_idx_; }

  /// Same graph with the two layers exchanged.
  BipartiteGraph transposed() const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.top_ == b.top_ && a.bottom_ == b.bottom_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexRecord> top_;
  std::vector<VertexRecord> bottom_;
  std::vector<EdgeRecord> edges_;
  std::unordered_map<std::string, std::pair<Side, std::size_t>> index_;
  std::vector<std::vector<std::size_t>> top_adj_;
  std::vector<std::vector<std::size_t>> bottom_adj_;
  std::vector<std::pair<std::size_t, std::size_t>> edge_idx_;
};

/// Permutations of the two layers, by vertex id.
struct LayerOrder {
  std::vector<std::string> top;
  std::vector<std::string> bottom;

  const std::vector<std::string>& layer(Side s) const { return s == Side::top ? top : bottom; }
  std::vector<std::string>& layer(Side s) { return s == Side::top ? top : bottom; }
  LayerOrder transposed() const { return {bottom, top}; }

  friend bool operator==(const LayerOrder&, const LayerOrder&) = default;
};

/// Position of every vertex (by layer index) inside a validated LayerOrder.
struct LayerPositions {
  std::vector<std::size_t> top;
  std::vector<std::size_t> bottom;

  const std::vector<std::size_t>& layer(Side s) const { return s == Side::top ? top : bottom; }
};

/// Checks that `order` is a bijection onto `g`'s layer; throws InputError otherwise.
std::vector<std::size_t> resolve_layer(const BipartiteGraph& g, Side s,
                                       const std::vector<std::string>& order);
LayerPositions resolve_order(const BipartiteGraph& g, const LayerOrder& order);

/// Order in which the vertices appear in the graph's layer arrays.
LayerOrder input_order(const BipartiteGraph& g);

/// Each layer sorted by label, ties by id.
LayerOrder alphabetical_order(const BipartiteGraph& g);

struct StatsRecord {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t top = 0;
  std::size_t bottom = 0;
  double density = 0.0;
  std::size_t max_degree = 0;

  friend bool operator==(const StatsRecord&, const StatsRecord&) = default;
};

/// density = 2|E| / (|V|(|V|-1)); zero for graphs with fewer than two vertices.
StatsRecord graph_stats(const BipartiteGraph& g);

struct VertexCopy {
  std::string id;
  /// Ids of the opposite-layer neighbors owned by this copy.
  std::vector<std::string> neighbors;

  friend bool operator==(const VertexCopy&, const VertexCopy&) = default;
};

/// Copies per split original; originals that were not split are absent.
/// Metrics are derived from the copy lists so they cannot drift.
struct SplitResult {
  std::map<std::string, std::vector<VertexCopy>> per_original;

  std::size_t total_splits() const;
  std::size_t split_vertices() const;
  std::size_t max_splits() const;
  bool empty() const { return per_original.empty(); }

  friend bool operator==(const SplitResult&, const SplitResult&) = default;
};

/// Copy id convention shared by every algorithm: originalId#index, 1-based.
std::string copy_id(std::string_view original, std::size_t index);

/// Replaces every split bottom vertex by its copies. Copies take the position
/// of the original in the bottom array and inherit its label; their
/// original_id names the root original (so copies of copies stay attributed).
/// Edge order is preserved.
BipartiteGraph apply_splits(const BipartiteGraph& g, const SplitResult& plan);

}  // namespace bisplit
