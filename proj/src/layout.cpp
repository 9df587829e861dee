#include "bisplit/layout.hpp"

#include "bisplit/crossings.hpp"
#include "bisplit/exact_minimize.hpp"
#include "bisplit/exact_removal.hpp"

namespace bisplit {

LayerOrder initial_order(const BipartiteGraph& g, const RunConfig& cfg) {
  switch (cfg.order_method) {
    case OrderMethod::as_input:
      return input_order(g);
    case OrderMethod::alphabetical:
      return alphabetical_order(g);
    case OrderMethod::barycenter:
      break;
  }
  const Side free = opposite(cfg.fixed_side);
  const auto start = alphabetical_order(g);
  if (cfg.barycenter_sweeps == 0) {
    return barycenter_order(g, start, free == Side::bottom ? BarycenterSide::bottom : BarycenterSide::top);
  }
  return barycenter_order(g, start, BarycenterSide::both, cfg.barycenter_sweeps, free);
}

LayoutDocument make_initial_layout(const BipartiteGraph& g, const RunConfig& cfg) {
  LayoutDocument doc;
  doc.graph = g;
  doc.order = initial_order(g, cfg);
  doc.crossings = count_crossings(g, doc.order);
  doc.config = cfg;
  return doc;
}

namespace {

// Works with the fixed layer on top.
LayoutDocument split_top_fixed(const BipartiteGraph& g, const LayerOrder& ord, const RunConfig& cfg) {
  LayoutDocument out;
  out.config = cfg;
  switch (cfg.objective) {
    case Objective::min_splits:
    case Objective::min_split_vertices: {
      auto r = cfg.objective == Objective::min_splits ? crs_fixed_order(g, ord.top) : crsv_fixed_order(g, ord.top);
      out.graph = apply_splits(g, r.splits);
      out.splits = std::move(r.splits);
      out.order = std::move(r.order);
      break;
    }
    case Objective::min_crossings: {
      if (cfg.method == Method::exact) {
        const auto r = cms_exact(g, ord, cfg.split_budget, cfg.allow_large_budget);
        out.splits = r.assignment.to_split_result();
        out.graph = apply_splits(g, out.splits);
        out.order = {ord.top, r.assignment.placement};
      } else {
        auto r = cfg.method == Method::max_span ? maxspan_heuristic(g, ord, cfg.split_budget)
                                                : crcount_heuristic(g, ord, cfg.split_budget);
        out.graph = std::move(r.graph);
        out.splits = std::move(r.splits);
        out.order = std::move(r.order);
        out.steps = std::move(r.steps);
      }
      break;
    }
  }
  out.crossings = count_crossings(out.graph, out.order);
  if (cfg.crossing_bound) out.decision = out.crossings <= *cfg.crossing_bound;
  return out;
}

}  // namespace

LayoutDocument split_layout(const LayoutDocument& doc, const RunConfig& cfg) {
  resolve_order(doc.graph, doc.order);
  if (cfg.fixed_side == Side::top) return split_top_fixed(doc.graph, doc.order, cfg);
  auto out = split_top_fixed(doc.graph.transposed(), doc.order.transposed(), cfg);
  out.graph = out.graph.transposed();
  out.order = out.order.transposed();
  return out;
}

}  // namespace bisplit
