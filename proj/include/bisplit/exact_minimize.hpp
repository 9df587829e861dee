#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bisplit/graph.hpp"

namespace bisplit {

/// Raised when an exhaustive search is asked for a budget or instance size
/// beyond its guard. The service maps it to HTTP 422.
class BudgetGuardError : public InputError {
 public:
  using InputError::InputError;
};

/// How one bottom vertex is split: `splits` splits give splits+1 parts, each a
/// consecutive run (possibly empty) of its neighborhood ordered by the top order.
struct VertexSplitChoice {
  std::string vertex;
  std::size_t splits = 0;
  std::vector<std::vector<std::string>> parts;

  friend bool operator==(const VertexSplitChoice&, const VertexSplitChoice&) = default;
};

struct SplitAssignment {
  std::vector<VertexSplitChoice> choices;  // sorted by vertex id
  /// Final bottom order: unsplit vertices in their original relative order
  /// with the non-empty copies merged in.
  std::vector<std::string> placement;

  std::size_t splits_used() const;
  /// Non-empty parts as copies named originalId#k; empty parts are dropped.
  SplitResult to_split_result() const;
};

struct EnumerationStats {
  std::uint64_t vertex_selections = 0;  // multisets of split vertices visited
  std::uint64_t candidates = 0;         // complete layouts evaluated
};

struct MinimizeResult {
  SplitAssignment assignment;
  std::uint64_t crossings = 0;
  EnumerationStats stats;
};

constexpr std::size_t kDefaultBudgetGuard = 4;

/// Minimum crossings over all ways to apply at most `k` splits to bottom
/// vertices, keeping unsplit bottoms in `ord` order. Enumerates split
/// vertices, consecutive neighborhood partitions and every merge of the
/// copies into the remaining order. Ties go to fewer splits, then to the
/// first candidate in enumeration order (vertex multiset, partition, slots,
/// each lexicographic). Isolated vertices are never split.
MinimizeResult cms_exact(const BipartiteGraph& g, const LayerOrder& ord, std::size_t k,
                         bool allow_large_budget = false);

bool cms_decision(const BipartiteGraph& g, const LayerOrder& ord, std::size_t k, std::uint64_t max_crossings,
                  bool allow_large_budget = false);

enum class SplitObjective { splits, vertices };

/// Exact optimum of crossing removal with a fixed top order by brute force:
/// every set partition of every bottom neighborhood, in increasing cost, and a
/// pruned search over all bottom permutations for a crossing-free one.
/// Guard: |V_t| <= 4, |V_b| <= 5, |E| <= 10.
std::size_t brute_force_min_splits(const BipartiteGraph& g, const std::vector<std::string>& top_order,
                                   SplitObjective objective);

}  // namespace bisplit
