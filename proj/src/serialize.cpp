#include "bisplit/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "bisplit/crossings.hpp"

namespace bisplit {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const Json& expect_object(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  return j;
}

const Json& expect_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  expect_object(obj, where);
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::string text(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  // HuBMAP exports sometimes use numeric ids
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(where, "expected a string");
}

std::uint64_t count(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<std::uint64_t>(j.get<long long>());
  fail(where, "expected a nonnegative integer");
}

std::vector<std::string> id_list(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  expect_array(j, where);
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(text(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<VertexRecord> vertices(const Json& j, const std::string& where) {
  std::vector<VertexRecord> out;
  expect_array(j, where);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto at = where + "[" + std::to_string(i) + "]";
    VertexRecord v;
    v.id = text(member(j[i], "id", at), at + ".id");
    v.label = j[i].contains("label") ? text(j[i]["label"], at + ".label") : v.id;
    if (j[i].contains("originalId")) v.original_id = text(j[i]["originalId"], at + ".originalId");
    out.push_back(std::move(v));
  }
  return out;
}

Json vertices_json(const std::vector<VertexRecord>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) {
    Json o{{"id", v.id}, {"label", v.label}};
    if (v.original_id) o["originalId"] = *v.original_id;
    out.push_back(std::move(o));
  }
  return out;
}

bool is_cell_type(std::string type) {
  std::transform(type.begin(), type.end(), type.begin(), [](unsigned char c) { return std::tolower(c); });
  return type == "ct" || type.find("cell") != std::string::npos;
}

BipartiteGraph from_hubmap(const Json& j) {
  const auto& nodes = expect_array(member(j, "nodes", "document"), "nodes");
  std::vector<VertexRecord> top, bottom;
  std::unordered_set<std::string> top_ids;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto at = "nodes[" + std::to_string(i) + "]";
    VertexRecord v;
    v.id = text(member(nodes[i], "id", at), at + ".id");
    if (nodes[i].contains("name")) {
      v.label = text(nodes[i]["name"], at + ".name");
    } else if (nodes[i].contains("label")) {
      v.label = text(nodes[i]["label"], at + ".label");
    } else {
      v.label = v.id;
    }
    const auto type = text(member(nodes[i], "type", at), at + ".type");
    if (is_cell_type(type)) {
      top_ids.insert(v.id);
      top.push_back(std::move(v));
    } else {
      bottom.push_back(std::move(v));
    }
  }
  const char* key = j.contains("links") ? "links" : "edges";
  const auto& links = expect_array(member(j, key, "document"), key);
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 0; i < links.size(); ++i) {
    const auto at = std::string(key) + "[" + std::to_string(i) + "]";
    auto s = text(member(links[i], "source", at), at + ".source");
    auto t = text(member(links[i], "target", at), at + ".target");
    if (!top_ids.count(s)) std::swap(s, t);
    edges.push_back({s, t});
  }
  return BipartiteGraph(std::move(top), std::move(bottom), std::move(edges));
}

template <typename E>
struct Names {
  E value;
  const char* name;
};

constexpr Names<Side> kSides[] = {{Side::top, "top"}, {Side::bottom, "bottom"}};
constexpr Names<OrderMethod> kOrders[] = {
    {OrderMethod::alphabetical, "alphabetical"}, {OrderMethod::barycenter, "barycenter"}, {OrderMethod::as_input, "asInput"}};
constexpr Names<Objective> kObjectives[] = {{Objective::min_splits, "minSplits"},
                                            {Objective::min_split_vertices, "minSplitVertices"},
                                            {Objective::min_crossings, "minCrossings"}};
constexpr Names<Method> kMethods[] = {{Method::exact, "exact"}, {Method::max_span, "maxSpan"}, {Method::cr_count, "crCount"}};

template <typename E, std::size_t N>
const char* name_of(const Names<E> (&table)[N], E v) {
  for (const auto& n : table) {
    if (n.value == v) return n.name;
  }
  return "";
}

template <typename E, std::size_t N>
E value_of(const Names<E> (&table)[N], const Json& j, const std::string& where) {
  const auto s = text(j, where);
  for (const auto& n : table) {
    if (s == n.name) return n.value;
  }
  std::string allowed;
  for (const auto& n : table) allowed += std::string(allowed.empty() ? "" : ", ") + n.name;
  fail(where, "unknown value \"" + s + "\" (expected one of " + allowed + ")");
}

}  // namespace

BipartiteGraph dataset_from_json(const Json& j) {
  expect_object(j, "document");
  if (j.contains("nodes")) return from_hubmap(j);
  auto top = vertices(member(j, "top", "document"), "top");
  auto bottom = vertices(member(j, "bottom", "document"), "bottom");
  const auto& e = expect_array(member(j, "edges", "document"), "edges");
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto at = "edges[" + std::to_string(i) + "]";
    if (!e[i].is_array() || e[i].size() != 2) fail(at, "expected [topId, bottomId]");
    edges.push_back({text(e[i][0], at + "[0]"), text(e[i][1], at + "[1]")});
  }
  return BipartiteGraph(std::move(top), std::move(bottom), std::move(edges));
}

BipartiteGraph parse_dataset(std::string_view text) { return dataset_from_json(parse_json(text)); }

Json dataset_to_json(const BipartiteGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.top, e.bottom}));
  return Json{{"top", vertices_json(g.top())}, {"bottom", vertices_json(g.bottom())}, {"edges", std::move(edges)}};
}

Json order_to_json(const LayerOrder& ord) { return Json{{"top", ord.top}, {"bottom", ord.bottom}}; }

LayerOrder order_from_json(const Json& j) {
  return {id_list(member(j, "top", "order"), "order.top"), id_list(member(j, "bottom", "order"), "order.bottom")};
}

Json splits_to_json(const SplitResult& s) {
  Json out = Json::object();
  for (const auto& [orig, copies] : s.per_original) {
    Json list = Json::array();
    for (const auto& c : copies) list.push_back(Json{{"copyId", c.id}, {"neighbors", c.neighbors}});
    out[orig] = std::move(list);
  }
  return out;
}

SplitResult splits_from_json(const Json& j) {
  SplitResult s;
  expect_object(j, "splits");
  for (const auto& [orig, list] : j.items()) {
    const auto where = "splits." + orig;
    expect_array(list, where);
    auto& copies = s.per_original[orig];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto at = where + "[" + std::to_string(i) + "]";
      copies.push_back({text(member(list[i], "copyId", at), at + ".copyId"),
                        id_list(member(list[i], "neighbors", at), at + ".neighbors")});
    }
  }
  return s;
}

Json steps_to_json(const std::vector<SplitStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) {
    out.push_back(Json{{"vertex", s.vertex},
                       {"leftCopy", s.left_copy},
                       {"rightCopy", s.right_copy},
                       {"left", s.left},
                       {"right", s.right},
                       {"predictedGain", s.predicted_gain},
                       {"objectiveValue", s.objective_value},
                       {"crossingsAfter", s.crossings_after}});
  }
  return out;
}

std::vector<SplitStep> steps_from_json(const Json& j) {
  std::vector<SplitStep> out;
  expect_array(j, "steps");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto at = "steps[" + std::to_string(i) + "]";
    const auto& o = j[i];
    SplitStep s;
    s.vertex = text(member(o, "vertex", at), at + ".vertex");
    s.left_copy = text(member(o, "leftCopy", at), at + ".leftCopy");
    s.right_copy = text(member(o, "rightCopy", at), at + ".rightCopy");
    s.left = id_list(member(o, "left", at), at + ".left");
    s.right = id_list(member(o, "right", at), at + ".right");
    const auto& g = member(o, "predictedGain", at);
    const auto& v = member(o, "objectiveValue", at);
    if (!g.is_number_integer() || !v.is_number_integer()) fail(at, "gain and objective must be integers");
    s.predicted_gain = g.get<std::int64_t>();
    s.objective_value = v.get<std::int64_t>();
    s.crossings_after = count(member(o, "crossingsAfter", at), at + ".crossingsAfter");
    out.push_back(std::move(s));
  }
  return out;
}

RunConfig config_from_json(const Json& j) {
  RunConfig c;
  if (j.is_null()) return c;
  expect_object(j, "config");
  if (j.contains("fixedSide")) c.fixed_side = value_of(kSides, j["fixedSide"], "config.fixedSide");
  if (j.contains("orderMethod")) c.order_method = value_of(kOrders, j["orderMethod"], "config.orderMethod");
  if (j.contains("barycenterSweeps")) c.barycenter_sweeps = count(j["barycenterSweeps"], "config.barycenterSweeps");
  if (j.contains("objective")) c.objective = value_of(kObjectives, j["objective"], "config.objective");
  if (j.contains("method")) c.method = value_of(kMethods, j["method"], "config.method");
  if (j.contains("splitBudget")) c.split_budget = count(j["splitBudget"], "config.splitBudget");
  if (j.contains("crossingBound") && !j["crossingBound"].is_null()) {
    c.crossing_bound = count(j["crossingBound"], "config.crossingBound");
  }
  if (j.contains("tieBreak") && text(j["tieBreak"], "config.tieBreak") != "byId") {
    fail("config.tieBreak", "only \"byId\" is supported");
  }
  if (j.contains("allowLargeBudget")) {
    if (!j["allowLargeBudget"].is_boolean()) fail("config.allowLargeBudget", "expected a boolean");
    c.allow_large_budget = j["allowLargeBudget"].get<bool>();
  }
  return c;
}

Json config_to_json(const RunConfig& c) {
  Json j{{"fixedSide", name_of(kSides, c.fixed_side)},
         {"orderMethod", name_of(kOrders, c.order_method)},
         {"barycenterSweeps", c.barycenter_sweeps},
         {"objective", name_of(kObjectives, c.objective)},
         {"method", name_of(kMethods, c.method)},
         {"splitBudget", c.split_budget},
         {"crossingBound", nullptr},
         {"tieBreak", "byId"},
         {"allowLargeBudget", c.allow_large_budget}};
  if (c.crossing_bound) j["crossingBound"] = *c.crossing_bound;
  return j;
}

Json stats_to_json(const StatsRecord& s) {
  return Json{{"vertices", s.vertices}, {"edges", s.edges},   {"top", s.top},
              {"bottom", s.bottom},     {"density", s.density}, {"maxDegree", s.max_degree}};
}

Json document_to_json(const LayoutDocument& doc) {
  Json j{{"graph", dataset_to_json(doc.graph)},
         {"order", order_to_json(doc.order)},
         {"splits", splits_to_json(doc.splits)},
         {"metrics",
          {{"totalSplits", doc.splits.total_splits()},
           {"splitVertices", doc.splits.split_vertices()},
           {"maxSplits", doc.splits.max_splits()}}},
         {"crossings", doc.crossings},
         {"config", config_to_json(doc.config)}};
  if (doc.steps) j["steps"] = steps_to_json(*doc.steps);
  if (doc.decision) j["decision"] = *doc.decision;
  return j;
}

LayoutDocument document_from_json(const Json& j) {
  LayoutDocument doc;
  doc.graph = dataset_from_json(member(j, "graph", "layout"));
  doc.order = order_from_json(member(j, "order", "layout"));
  doc.splits = j.contains("splits") ? splits_from_json(j["splits"]) : SplitResult{};
  doc.config = j.contains("config") ? config_from_json(j["config"]) : RunConfig{};
  if (j.contains("steps")) doc.steps = steps_from_json(j["steps"]);
  if (j.contains("decision")) {
    if (!j["decision"].is_boolean()) fail("layout.decision", "expected a boolean");
    doc.decision = j["decision"].get<bool>();
  }
  doc.crossings = count_crossings(doc.graph, doc.order);
  if (j.contains("crossings") && count(j["crossings"], "layout.crossings") != doc.crossings) {
    fail("layout.crossings", "does not match the order (expected " + std::to_string(doc.crossings) + ")");
  }
  return doc;
}

}  // namespace bisplit
