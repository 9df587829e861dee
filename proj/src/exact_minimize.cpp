#include "bisplit/exact_minimize.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "bisplit/crossings.hpp"

namespace bisplit {

std::size_t SplitAssignment::splits_used() const {
  std::size_t s = 0;
  for (const auto& c : choices) s += c.splits;
  return s;
}

SplitResult SplitAssignment::to_split_result() const {
  SplitResult r;
  for (const auto& c : choices) {
    auto& copies = r.per_original[c.vertex];
    for (const auto& part : c.parts) {
      if (!part.empty()) copies.push_back({copy_id(c.vertex, copies.size() + 1), part});
    }
  }
  return r;
}

namespace {

// All weak compositions of `total` into `parts` parts, lexicographic.
void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t x = 0; x <= total; ++x) {
    cur.push_back(x);
    compositions(total - x, parts, cur, out);
    cur.pop_back();
  }
}

struct Search {
  const BipartiteGraph& g;
  LayerPositions pos;
  std::vector<std::size_t> candidates;                   // non-isolated bottoms, by id
  std::vector<std::vector<std::size_t>> sorted_tops;     // bottom -> neighbor top positions, ascending
  std::vector<std::size_t> bottom_order;                 // bottoms in ord.bottom order

  MinimizeResult best;
  bool have_best = false;
  std::vector<std::size_t> best_multiset;
  std::vector<std::vector<std::size_t>> best_parts;      // per distinct split vertex: part sizes
  std::vector<std::size_t> best_slots;

  // state for the current candidate
  std::vector<std::size_t> split_vertices;               // distinct, in id order
  std::vector<std::size_t> split_counts;
  std::vector<std::size_t> unsplit;                       // bottoms in order, excluding split ones
  std::vector<std::vector<std::size_t>> chosen_parts;
  std::vector<std::vector<std::size_t>> copies;           // top positions per copy
  std::vector<std::size_t> slots;
  std::vector<bool> slot_used;
  std::vector<std::size_t> current_multiset;
  std::vector<PositionedEdge> edges;

  Search(const BipartiteGraph& graph, const LayerOrder& ord) : g(graph), pos(resolve_order(graph, ord)) {
    sorted_tops.resize(g.bottom().size());
    for (std::size_t b = 0; b < g.bottom().size(); ++b) {
      for (auto t : g.neighbors(Side::bottom, b)) sorted_tops[b].push_back(pos.top[t]);
      std::sort(sorted_tops[b].begin(), sorted_tops[b].end());
      if (!sorted_tops[b].empty()) candidates.push_back(b);
    }
    std::sort(candidates.begin(), candidates.end(),
              [&](std::size_t a, std::size_t b) { return g.bottom()[a].id < g.bottom()[b].id; });
    bottom_order.resize(g.bottom().size());
    for (std::size_t b = 0; b < g.bottom().size(); ++b) bottom_order[pos.bottom[b]] = b;
  }

  void evaluate() {
    ++best.stats.candidates;
    const std::size_t total = unsplit.size() + copies.size();
    edges.clear();
    std::size_t u = 0;
    std::vector<std::size_t> owner_at(total, static_cast<std::size_t>(-1));
    for (std::size_t c = 0; c < copies.size(); ++c) owner_at[slots[c]] = c;
    for (std::size_t p = 0; p < total; ++p) {
      if (owner_at[p] != static_cast<std::size_t>(-1)) {
        for (auto t : copies[owner_at[p]]) edges.emplace_back(t, p);
      } else {
        for (auto t : sorted_tops[unsplit[u++]]) edges.emplace_back(t, p);
      }
    }
    const auto crossings = count_crossings(edges);
    if (!have_best || crossings < best.crossings) {
      have_best = true;
      best.crossings = crossings;
      best_multiset = current_multiset;
      best_parts = chosen_parts;
      best_slots = slots;
    }
  }

  void place(std::size_t c) {
    if (c == copies.size()) {
      evaluate();
      return;
    }
    for (std::size_t s = 0; s < slot_used.size(); ++s) {
      if (slot_used[s]) continue;
      slot_used[s] = true;
      slots[c] = s;
      place(c + 1);
      slot_used[s] = false;
    }
  }

  void partition(std::size_t v) {
    if (v == split_vertices.size()) {
      copies.clear();
      for (std::size_t i = 0; i < split_vertices.size(); ++i) {
        const auto& tops = sorted_tops[split_vertices[i]];
        std::size_t at = 0;
        for (auto size : chosen_parts[i]) {
          copies.emplace_back(tops.begin() + static_cast<std::ptrdiff_t>(at),
                              tops.begin() + static_cast<std::ptrdiff_t>(at + size));
          at += size;
        }
      }
      slots.assign(copies.size(), 0);
      slot_used.assign(unsplit.size() + copies.size(), false);
      place(0);
      return;
    }
    std::vector<std::vector<std::size_t>> options;
    std::vector<std::size_t> cur;
    compositions(sorted_tops[split_vertices[v]].size(), split_counts[v] + 1, cur, options);
    for (auto& opt : options) {
      chosen_parts[v] = std::move(opt);
      partition(v + 1);
    }
  }

  void run_multiset(const std::vector<std::size_t>& multiset) {
    ++best.stats.vertex_selections;
    current_multiset = multiset;
    split_vertices.clear();
    split_counts.clear();
    for (auto idx : multiset) {
      const auto b = candidates[idx];
      if (!split_vertices.empty() && split_vertices.back() == b) {
        ++split_counts.back();
      } else {
        split_vertices.push_back(b);
        split_counts.push_back(1);
      }
    }
    std::set<std::size_t> split_set(split_vertices.begin(), split_vertices.end());
    unsplit.clear();
    for (auto b : bottom_order) {
      if (!split_set.count(b)) unsplit.push_back(b);
    }
    chosen_parts.assign(split_vertices.size(), {});
    partition(0);
  }

  // nondecreasing index sequences of length s over the candidates
  void multisets(std::size_t s, std::size_t from, std::vector<std::size_t>& cur) {
    if (cur.size() == s) {
      run_multiset(cur);
      return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      cur.push_back(i);
      multisets(s, i, cur);
      cur.pop_back();
    }
  }

  MinimizeResult finish(const LayerOrder& ord) {
    std::set<std::size_t> split_set;
    std::vector<std::size_t> distinct;
    std::vector<std::size_t> counts;
    for (auto idx : best_multiset) {
      const auto b = candidates[idx];
      if (!distinct.empty() && distinct.back() == b) {
        ++counts.back();
      } else {
        distinct.push_back(b);
        counts.push_back(1);
      }
      split_set.insert(b);
    }
    auto& a = best.assignment;
    std::vector<std::string> copy_names;  // parallel to the flattened copies, "" for empty parts
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      const auto b = distinct[i];
      VertexSplitChoice choice{g.bottom()[b].id, counts[i], {}};
      const auto& nbrs = g.neighbors(Side::bottom, b);
      std::vector<std::size_t> by_pos(nbrs.begin(), nbrs.end());
      std::sort(by_pos.begin(), by_pos.end(), [&](std::size_t x, std::size_t y) { return pos.top[x] < pos.top[y]; });
      std::size_t at = 0, named = 0;
      for (auto size : best_parts[i]) {
        std::vector<std::string> part;
        for (std::size_t j = at; j < at + size; ++j) part.push_back(g.top()[by_pos[j]].id);
        at += size;
        copy_names.push_back(part.empty() ? std::string() : copy_id(choice.vertex, ++named));
        choice.parts.push_back(std::move(part));
      }
      a.choices.push_back(std::move(choice));
    }

    std::vector<std::string> rest;
    for (const auto& id : ord.bottom) {
      if (!split_set.count(g.index_of(Side::bottom, id))) rest.push_back(id);
    }
    const std::size_t total = rest.size() + best_slots.size();
    std::vector<const std::string*> at(total, nullptr);
    for (std::size_t c = 0; c < best_slots.size(); ++c) at[best_slots[c]] = &copy_names[c];
    std::size_t r = 0;
    for (std::size_t p = 0; p < total; ++p) {
      if (at[p] == nullptr) {
        a.placement.push_back(rest[r++]);
      } else if (!at[p]->empty()) {
        a.placement.push_back(*at[p]);
      }
    }
    return best;
  }
};

}  // namespace

MinimizeResult cms_exact(const BipartiteGraph& g, const LayerOrder& ord, std::size_t k, bool allow_large_budget) {
  if (k > kDefaultBudgetGuard && !allow_large_budget) {
    throw BudgetGuardError("split budget " + std::to_string(k) + " exceeds the exhaustive-search guard of " +
                           std::to_string(kDefaultBudgetGuard) + " (override to force)");
  }
  Search search(g, ord);
  std::vector<std::size_t> cur;
  for (std::size_t s = 0; s <= k; ++s) {
    if (s > 0 && search.candidates.empty()) break;
    search.multisets(s, 0, cur);
  }
  return search.finish(ord);
}

bool cms_decision(const BipartiteGraph& g, const LayerOrder& ord, std::size_t k, std::uint64_t max_crossings,
                  bool allow_large_budget) {
  return cms_exact(g, ord, k, allow_large_budget).crossings <= max_crossings;
}

namespace {

using Piece = std::vector<std::size_t>;  // sorted top positions of one copy

// Is there an order of the pieces with no crossing? Appending a piece after
// the placed ones is crossing-free iff its leftmost top is not left of any
// placed top, so only the running maximum matters.
bool arrangeable(std::vector<Piece>& pieces, std::vector<bool>& used, std::size_t placed, std::size_t reach) {
  if (placed == pieces.size()) return true;
  std::set<Piece> tried;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (used[i] || pieces[i].front() < reach || !tried.insert(pieces[i]).second) continue;
    used[i] = true;
    const bool ok = arrangeable(pieces, used, placed + 1, std::max(reach, pieces[i].back()));
    used[i] = false;
    if (ok) return true;
  }
  return false;
}

// Restricted-growth strings: every set partition of n labelled elements.
void set_partitions(std::size_t n, std::vector<std::size_t>& cur, std::size_t blocks,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t b = 0; b <= blocks; ++b) {
    cur.push_back(b);
    set_partitions(n, cur, std::max(blocks, b + 1), out);
    cur.pop_back();
  }
}

}  // namespace

std::size_t brute_force_min_splits(const BipartiteGraph& g, const std::vector<std::string>& top_order,
                                   SplitObjective objective) {
  if (g.top().size() > 4 || g.bottom().size() > 5 || g.edge_count() > 10) {
    throw BudgetGuardError("brute force is limited to |V_t| <= 4, |V_b| <= 5, |E| <= 10");
  }
  const auto tpos = resolve_layer(g, Side::top, top_order);
  const std::size_t nb = g.bottom().size();
  std::vector<std::vector<std::size_t>> tops(nb);
  std::vector<std::vector<std::vector<std::size_t>>> options(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    for (auto t : g.neighbors(Side::bottom, b)) tops[b].push_back(tpos[t]);
    std::vector<std::size_t> cur;
    set_partitions(tops[b].size(), cur, 0, options[b]);
  }

  struct Plan {
    std::size_t cost;
    std::vector<std::size_t> choice;
  };
  std::vector<Plan> plans;
  std::vector<std::size_t> choice(nb);
  std::function<void(std::size_t, std::size_t)> enumerate = [&](std::size_t b, std::size_t cost) {
    if (b == nb) {
      plans.push_back({cost, choice});
      return;
    }
    for (std::size_t o = 0; o < options[b].size(); ++o) {
      choice[b] = o;
      const auto& rgs = options[b][o];
      const std::size_t blocks = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
      const std::size_t extra = blocks <= 1 ? 0 : (objective == SplitObjective::splits ? blocks - 1 : 1);
      enumerate(b + 1, cost + extra);
    }
  };
  enumerate(0, 0);
  std::stable_sort(plans.begin(), plans.end(), [](const Plan& a, const Plan& b) { return a.cost < b.cost; });

  for (const auto& plan : plans) {
    std::vector<Piece> pieces;
    for (std::size_t b = 0; b < nb; ++b) {
      const auto& rgs = options[b][plan.choice[b]];
      const std::size_t first = pieces.size();
      for (std::size_t j = 0; j < rgs.size(); ++j) {
        if (first + rgs[j] >= pieces.size()) pieces.resize(first + rgs[j] + 1);
        pieces[first + rgs[j]].push_back(tops[b][j]);
      }
    }
    for (auto& p : pieces) std::sort(p.begin(), p.end());
    std::vector<bool> used(pieces.size(), false);
    if (arrangeable(pieces, used, 0, 0)) return plan.cost;
  }
  // unreachable: splitting everything to degree one is always planar
  throw std::logic_error("brute force found no planar plan");
}

}  // namespace bisplit
