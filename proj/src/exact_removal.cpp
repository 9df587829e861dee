#include "bisplit/exact_removal.hpp"

#include <algorithm>
#include <numeric>

#include "bisplit/crossings.hpp"

namespace bisplit {

namespace {

constexpr std::size_t none = static_cast<std::size_t>(-1);

// The fixed top order restricted to tops with at least one edge. Isolated tops
// cannot take part in a crossing, so the algorithms run on the compressed chain.
struct Chain {
  std::vector<std::size_t> seq;                       // rank -> top index
  std::vector<std::vector<std::size_t>> ranks;        // bottom -> sorted ranks of its neighbors
  std::vector<std::vector<std::size_t>> by_id;        // rank -> neighbor bottoms sorted by id
  std::vector<std::size_t> id_rank;                   // bottom -> position in id order
};

Chain make_chain(const BipartiteGraph& g, const std::vector<std::string>& top_order) {
  const auto pos = resolve_layer(g, Side::top, top_order);
  std::vector<std::size_t> order(g.top().size());
  for (std::size_t t = 0; t < order.size(); ++t) order[pos[t]] = t;

  Chain c;
  c.id_rank.resize(g.bottom().size());
  std::vector<std::size_t> ids(g.bottom().size());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(),
            [&](std::size_t a, std::size_t b) { return g.bottom()[a].id < g.bottom()[b].id; });
  for (std::size_t r = 0; r < ids.size(); ++r) c.id_rank[ids[r]] = r;

  c.ranks.resize(g.bottom().size());
  for (auto t : order) {
    if (g.degree(Side::top, t) == 0) continue;
    const std::size_t rank = c.seq.size();
    c.seq.push_back(t);
    auto nbrs = g.neighbors(Side::top, t);
    std::sort(nbrs.begin(), nbrs.end(), [&](std::size_t a, std::size_t b) { return c.id_rank[a] < c.id_rank[b]; });
    for (auto b : nbrs) c.ranks[b].push_back(rank);
    c.by_id.push_back(std::move(nbrs));
  }
  return c;
}

// Neighbors shared by ranks i and i+1, sorted by id.
class CommonNeighbors {
 public:
  explicit CommonNeighbors(const Chain& c) : chain_(c), stamp_(c.ranks.size(), none) {}

  std::vector<std::size_t> of(std::size_t i) {
    for (auto b : chain_.by_id[i + 1]) stamp_[b] = i;
    std::vector<std::size_t> out;
    for (auto b : chain_.by_id[i]) {
      if (stamp_[b] == i) out.push_back(b);
    }
    return out;
  }

 private:
  const Chain& chain_;
  std::vector<std::size_t> stamp_;
};

// shared[i] is the unsplit bottom vertex that is the last neighbor of rank i
// and the first of rank i+1, or `none`. A bottom copy is a maximal run of
// neighbor ranks joined through shared[]; every other gap is a split.
RemovalOutput assemble(const BipartiteGraph& g, const Chain& c, const std::vector<std::size_t>& shared) {
  struct Copy {
    std::string id;
    std::size_t first = 0;
    std::size_t last = 0;
  };
  std::vector<std::vector<Copy>> copies(g.bottom().size());
  RemovalOutput out;
  for (std::size_t b = 0; b < g.bottom().size(); ++b) {
    const auto& r = c.ranks[b];
    if (r.empty()) continue;
    std::vector<std::vector<std::size_t>> runs{{r[0]}};
    for (std::size_t j = 0; j + 1 < r.size(); ++j) {
      const bool joined = r[j + 1] == r[j] + 1 && shared[r[j]] == b;
      if (!joined) runs.emplace_back();
      runs.back().push_back(r[j + 1]);
    }
    const auto& orig = g.bottom()[b].id;
    if (runs.size() == 1) {
      copies[b].push_back({orig, r.front(), r.back()});
      continue;
    }
    auto& listed = out.splits.per_original[orig];
    for (std::size_t k = 0; k < runs.size(); ++k) {
      VertexCopy vc{copy_id(orig, k + 1), {}};
      for (auto rank : runs[k]) vc.neighbors.push_back(g.top()[c.seq[rank]].id);
      copies[b].push_back({vc.id, runs[k].front(), runs[k].back()});
      listed.push_back(std::move(vc));
    }
  }

  // Per rank: copies owned only by that top, sorted by id, then the shared copy.
  std::vector<std::vector<const Copy*>> middle(c.seq.size());
  std::vector<const Copy*> carried(c.seq.size(), nullptr);
  for (const auto& list : copies) {
    for (const auto& cp : list) {
      if (cp.first == cp.last) {
        middle[cp.first].push_back(&cp);
      } else {
        carried[cp.first] = &cp;
      }
    }
  }
  for (auto& m : middle) {
    std::sort(m.begin(), m.end(), [](const Copy* a, const Copy* b) { return a->id < b->id; });
  }
  for (std::size_t i = 0; i < c.seq.size(); ++i) {
    for (const auto* cp : middle[i]) out.order.bottom.push_back(cp->id);
    if (carried[i]) out.order.bottom.push_back(carried[i]->id);
  }
  std::vector<std::size_t> isolated;
  for (std::size_t b = 0; b < g.bottom().size(); ++b) {
    if (c.ranks[b].empty()) isolated.push_back(b);
  }
  std::sort(isolated.begin(), isolated.end(),
            [&](std::size_t a, std::size_t b) { return c.id_rank[a] < c.id_rank[b]; });
  for (auto b : isolated) out.order.bottom.push_back(g.bottom()[b].id);
  return out;
}

struct CrsPlan {
  std::vector<RemovalFrame> frames;
  std::vector<std::size_t> shared;
};

CrsPlan plan_crs(const Chain& c) {
  const std::size_t n = c.seq.size();
  CrsPlan plan;
  plan.shared.assign(n > 0 ? n - 1 : 0, none);
  constexpr std::size_t pending = none - 1;
  std::vector<std::vector<std::size_t>> eligible(plan.shared.size());
  CommonNeighbors common(c);

  std::optional<std::size_t> prescribed;
  for (std::size_t i = 0; i < n; ++i) {
    RemovalFrame f;
    f.prescribed_first = prescribed;
    for (auto b : c.by_id[i]) {
      (c.ranks[b].back() == i ? f.degree_one_neighbors : f.multi_neighbors).push_back(b);
    }
    plan.frames.push_back(f);
    if (i + 1 == n) break;

    const auto degree = c.by_id[i].size();
    const auto shared_with_next = common.of(i);
    prescribed.reset();
    if (shared_with_next.empty()) continue;  // case 1

    auto keep = [&](std::size_t u) {
      plan.shared[i] = u;
      prescribed = u;
    };
    if (shared_with_next.size() == 1) {
      const auto u = shared_with_next.front();
      // a prescribed first neighbor cannot also be last unless it is the only one
      if (!(f.prescribed_first == u && degree > 1)) keep(u);
      continue;
    }
    const bool p_shared = f.prescribed_first && std::find(shared_with_next.begin(), shared_with_next.end(),
                                                          *f.prescribed_first) != shared_with_next.end();
    if (shared_with_next.size() == 2 && p_shared) {
      keep(shared_with_next[0] == *f.prescribed_first ? shared_with_next[1] : shared_with_next[0]);
      continue;
    }
    // case 3: leave v2 free; pick the kept vertex once v2's own choice is known
    plan.shared[i] = pending;
    for (auto u : shared_with_next) {
      if (u != f.prescribed_first) eligible[i].push_back(u);
    }
  }

  for (std::size_t i = plan.shared.size(); i-- > 0;) {
    if (plan.shared[i] != pending) continue;
    const std::size_t next_last = i + 1 < plan.shared.size() ? plan.shared[i + 1] : none;
    for (auto u : eligible[i]) {
      if (u != next_last) {
        plan.shared[i] = u;
        break;
      }
    }
  }
  return plan;
}

bool mandatory(const BipartiteGraph& g, const Chain& c, std::size_t b) {
  const auto& r = c.ranks[b];
  if (r.size() <= 1) return false;
  if (r.back() - r.front() != r.size() - 1) return true;
  for (std::size_t j = 1; j + 1 < r.size(); ++j) {
    if (g.degree(Side::top, c.seq[r[j]]) != 1) return true;
  }
  return false;
}

}  // namespace

RemovalOutput crs_fixed_order(const BipartiteGraph& g, const std::vector<std::string>& top_order) {
  const auto chain = make_chain(g, top_order);
  const auto plan = plan_crs(chain);
  auto out = assemble(g, chain, plan.shared);
  out.order.top = top_order;
  return out;
}

std::vector<RemovalFrame> crs_frames(const BipartiteGraph& g, const std::vector<std::string>& top_order) {
  const auto chain = make_chain(g, top_order);
  return plan_crs(chain).frames;
}

bool split_is_mandatory(const BipartiteGraph& g, const std::vector<std::string>& top_order,
                        std::size_t bottom) {
  return mandatory(g, make_chain(g, top_order), bottom);
}

RemovalOutput crsv_fixed_order(const BipartiteGraph& g, const std::vector<std::string>& top_order) {
  const auto chain = make_chain(g, top_order);
  std::vector<bool> must_split(g.bottom().size());
  for (std::size_t b = 0; b < must_split.size(); ++b) must_split[b] = mandatory(g, chain, b);

  // After the mandatory vertices are cut down to degree-1 copies, each
  // consecutive pair keeps at most one common neighbor (smallest id) unsplit.
  std::vector<std::size_t> shared(chain.seq.empty() ? 0 : chain.seq.size() - 1, none);
  CommonNeighbors common(chain);
  for (std::size_t i = 0; i < shared.size(); ++i) {
    for (auto u : common.of(i)) {
      if (!must_split[u]) {
        shared[i] = u;
        break;
      }
    }
  }
  auto out = assemble(g, chain, shared);
  out.order.top = top_order;
  return out;
}

bool verify_planar_output(const BipartiteGraph& g, const SplitResult& splits, const LayerOrder& ord) {
  return count_crossings(apply_splits(g, splits), ord) == 0;
}

}  // namespace bisplit
