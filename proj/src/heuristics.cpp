#include "bisplit/heuristics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "bisplit/crossings.hpp"

namespace bisplit {

std::vector<double> barycenters(const BipartiteGraph& g, const LayerOrder& ord, Side s) {
  const auto pos = resolve_order(g, ord);
  const auto& other = pos.layer(opposite(s));
  std::vector<double> out(g.layer(s).size(), std::numeric_limits<double>::infinity());
  for (std::size_t v = 0; v < out.size(); ++v) {
    const auto& nbrs = g.neighbors(s, v);
    if (nbrs.empty()) continue;
    double sum = 0.0;
    for (auto w : nbrs) sum += static_cast<double>(other[w]);
    out[v] = sum / static_cast<double>(nbrs.size());
  }
  return out;
}

namespace {

bool sort_layer(const BipartiteGraph& g, LayerOrder& ord, Side s) {
  const auto bary = barycenters(g, ord, s);
  const auto pos = resolve_layer(g, s, ord.layer(s));
  std::vector<std::size_t> idx(bary.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (bary[a] != bary[b]) return bary[a] < bary[b];
    return pos[a] < pos[b];
  });
  std::vector<std::string> next;
  next.reserve(idx.size());
  for (auto v : idx) next.push_back(g.layer(s)[v].id);
  const bool changed = next != ord.layer(s);
  ord.layer(s) = std::move(next);
  return changed;
}

}  // namespace

LayerOrder barycenter_order(const BipartiteGraph& g, const LayerOrder& ord, BarycenterSide side,
                            std::size_t sweeps, Side first) {
  resolve_order(g, ord);
  LayerOrder out = ord;
  if (side == BarycenterSide::top) {
    sort_layer(g, out, Side::top);
  } else if (side == BarycenterSide::bottom) {
    sort_layer(g, out, Side::bottom);
  } else {
    for (std::size_t i = 0; i < sweeps; ++i) {
      const bool a = sort_layer(g, out, first);
      const bool b = sort_layer(g, out, opposite(first));
      if (!a && !b) break;
    }
  }
  return out;
}

namespace {

// Mutable bottom layer of a graph under splitting. Top order is fixed.
class Workspace {
 public:
  Workspace(const BipartiteGraph& g, const LayerOrder& ord) : g_(g), tpos_(resolve_layer(g, Side::top, ord.top)) {
    const auto bpos = resolve_layer(g, Side::bottom, ord.bottom);
    top_order_ = ord.top;
    pieces_.resize(g.bottom().size());
    for (std::size_t b = 0; b < pieces_.size(); ++b) {
      auto& p = pieces_[b];
      p.id = g.bottom()[b].id;
      p.source = b;
      p.tops = g.neighbors(Side::bottom, b);
      std::sort(p.tops.begin(), p.tops.end(), [&](std::size_t x, std::size_t y) { return tpos_[x] < tpos_[y]; });
      p.bary = barycenter(p.tops);
    }
    next_index_.assign(pieces_.size(), 0);
    order_.resize(pieces_.size());
    for (std::size_t b = 0; b < pieces_.size(); ++b) order_[bpos[b]] = b;
  }

  struct Piece {
    std::string id;
    std::size_t source = 0;
    std::size_t copy_index = 0;     // 0 while unsplit
    std::vector<std::size_t> tops;  // top indices sorted by top position
    double bary = 0.0;
  };

  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::vector<std::size_t>& order() const { return order_; }
  std::size_t top_pos(std::size_t t) const { return tpos_[t]; }

  double barycenter(const std::vector<std::size_t>& tops) const {
    if (tops.empty()) return std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (auto t : tops) sum += static_cast<double>(tpos_[t]);
    return sum / static_cast<double>(tops.size());
  }

  std::vector<std::size_t> by_id() const {
    std::vector<std::size_t> idx(pieces_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pieces_[a].id < pieces_[b].id; });
    return idx;
  }

  // Splits piece p after its first `cut` neighbors and re-places both parts.
  SplitStep split(std::size_t p, std::size_t cut) {
    SplitStep step;
    step.vertex = pieces_[p].id;
    Piece right;
    right.source = pieces_[p].source;
    right.tops.assign(pieces_[p].tops.begin() + static_cast<std::ptrdiff_t>(cut), pieces_[p].tops.end());
    pieces_[p].tops.resize(cut);
    auto& next = next_index_[right.source];
    const auto& orig = g_.bottom()[right.source].id;
    if (next == 0) {
      pieces_[p].copy_index = 1;
      pieces_[p].id = copy_id(orig, 1);
      next = 2;
    }
    right.copy_index = next++;
    right.id = copy_id(orig, right.copy_index);
    pieces_[p].bary = barycenter(pieces_[p].tops);
    right.bary = barycenter(right.tops);
    pieces_.push_back(std::move(right));
    const std::size_t q = pieces_.size() - 1;

    order_.erase(std::find(order_.begin(), order_.end(), p));
    insert(p);
    insert(q);

    step.left_copy = pieces_[p].id;
    step.right_copy = pieces_[q].id;
    for (auto t : pieces_[p].tops) step.left.push_back(g_.top()[t].id);
    for (auto t : pieces_[q].tops) step.right.push_back(g_.top()[t].id);
    step.crossings_after = crossings();
    return step;
  }

  std::uint64_t crossings() const {
    std::vector<PositionedEdge> edges;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (auto t : pieces_[order_[i]].tops) edges.emplace_back(tpos_[t], i);
    }
    return count_crossings(edges);
  }

  // Pieces as a graph: bottom index = piece index.
  BipartiteGraph snapshot(LayerPositions& pos) const {
    std::vector<VertexRecord> bottom;
    std::vector<EdgeRecord> edges;
    for (const auto& p : pieces_) {
      bottom.push_back({p.id, g_.bottom()[p.source].label, std::nullopt});
      for (auto t : p.tops) edges.push_back({g_.top()[t].id, p.id});
    }
    pos.top = tpos_;
    pos.bottom.assign(pieces_.size(), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) pos.bottom[order_[i]] = i;
    return BipartiteGraph(g_.top(), std::move(bottom), std::move(edges));
  }

  HeuristicResult finish(std::vector<SplitStep> steps, std::uint64_t initial) const {
    HeuristicResult r;
    r.steps = std::move(steps);
    r.initial_crossings = initial;
    std::vector<std::vector<const Piece*>> groups(g_.bottom().size());
    for (const auto& p : pieces_) groups[p.source].push_back(&p);
    for (std::size_t b = 0; b < groups.size(); ++b) {
      if (groups[b].size() < 2) continue;
      auto& list = groups[b];
      std::sort(list.begin(), list.end(), [](const Piece* x, const Piece* y) { return x->copy_index < y->copy_index; });
      auto& copies = r.splits.per_original[g_.bottom()[b].id];
      for (const auto* p : list) {
        VertexCopy c{p->id, {}};
        for (auto t : p->tops) c.neighbors.push_back(g_.top()[t].id);
        copies.push_back(std::move(c));
      }
    }
    r.graph = apply_splits(g_, r.splits);
    r.order.top = top_order_;
    for (auto p : order_) r.order.bottom.push_back(pieces_[p].id);
    r.crossings = crossings();
    return r;
  }

 private:
  // Before the first vertex with a larger barycenter, or an equal one and a larger id.
  void insert(std::size_t p) {
    const auto& me = pieces_[p];
    auto it = std::find_if(order_.begin(), order_.end(), [&](std::size_t w) {
      const auto& other = pieces_[w];
      return other.bary > me.bary || (other.bary == me.bary && other.id > me.id);
    });
    order_.insert(it, p);
  }

  const BipartiteGraph& g_;
  std::vector<std::size_t> tpos_;
  std::vector<std::string> top_order_;
  std::vector<Piece> pieces_;
  std::vector<std::size_t> next_index_;
  std::vector<std::size_t> order_;
};

}  // namespace

HeuristicResult maxspan_heuristic(const BipartiteGraph& g, const LayerOrder& ord, std::size_t k,
                                  const StepObserver& observe) {
  Workspace ws(g, ord);
  const auto initial = ws.crossings();
  std::vector<SplitStep> steps;
  for (std::size_t iter = 0; iter < k; ++iter) {
    std::size_t best = 0;
    std::size_t best_span = 0;
    for (auto p : ws.by_id()) {
      const auto& tops = ws.pieces()[p].tops;
      if (tops.size() < 2) continue;
      const std::size_t span = ws.top_pos(tops.back()) - ws.top_pos(tops.front());
      if (span > best_span) {
        best_span = span;
        best = p;
      }
    }
    if (best_span == 0) break;

    const auto& tops = ws.pieces()[best].tops;
    std::size_t best_cut = 0;
    std::int64_t best_score = std::numeric_limits<std::int64_t>::max();
    for (std::size_t j = 1; j < tops.size(); ++j) {
      const auto l = static_cast<std::int64_t>(ws.top_pos(tops[j - 1]) - ws.top_pos(tops.front()));
      const auto r = static_cast<std::int64_t>(ws.top_pos(tops.back()) - ws.top_pos(tops[j]));
      const auto score = l * l + r * r;
      if (score < best_score) {
        best_score = score;
        best_cut = j;
      }
    }
    auto step = ws.split(best, best_cut);
    step.objective_value = best_score;
    if (observe) observe(step);
    steps.push_back(std::move(step));
  }
  return ws.finish(std::move(steps), initial);
}

HeuristicResult crcount_heuristic(const BipartiteGraph& g, const LayerOrder& ord, std::size_t k,
                                  const StepObserver& observe) {
  Workspace ws(g, ord);
  const auto initial = ws.crossings();
  std::vector<SplitStep> steps;
  for (std::size_t iter = 0; iter < k; ++iter) {
    LayerPositions pos;
    const auto snap = ws.snapshot(pos);
    std::vector<double> bary;
    for (const auto& p : ws.pieces()) bary.push_back(p.bary);

    std::int64_t best_gain = 0;
    std::size_t best = 0;
    std::size_t best_cut = 0;
    for (auto p : ws.by_id()) {
      const auto& tops = ws.pieces()[p].tops;
      if (tops.size() < 2) continue;
      std::vector<std::size_t> at;
      for (auto t : tops) at.push_back(ws.top_pos(t));
      for (std::size_t j = 1; j < at.size(); ++j) {
        RangeQuery left{p, {at.begin(), at.begin() + static_cast<std::ptrdiff_t>(j)}, 0.0, bary[p],
                        ScanDirection::leftward};
        RangeQuery right{p, {at.begin() + static_cast<std::ptrdiff_t>(j), at.end()}, bary[p], 0.0,
                         ScanDirection::rightward};
        left.lo = ws.barycenter({tops.begin(), tops.begin() + static_cast<std::ptrdiff_t>(j)});
        right.hi = ws.barycenter({tops.begin() + static_cast<std::ptrdiff_t>(j), tops.end()});
        const auto gain = count_crossings_in_range(snap, pos, bary, left) +
                          count_crossings_in_range(snap, pos, bary, right);
        if (gain > best_gain) {
          best_gain = gain;
          best = p;
          best_cut = j;
        }
      }
    }
    if (best_gain <= 0) break;
    auto step = ws.split(best, best_cut);
    step.predicted_gain = best_gain;
    if (observe) observe(step);
    steps.push_back(std::move(step));
  }
  return ws.finish(std::move(steps), initial);
}

}  // namespace bisplit
