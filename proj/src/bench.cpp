#include "bisplit/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bisplit/serialize.hpp"

namespace bisplit {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  const auto us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - since).count();
  return static_cast<double>(us) / 1000.0;
}

std::string number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<std::string> fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T parse_number(const std::string& s, std::size_t line) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InputError("csv line " + std::to_string(line) + ": bad number '" + s + "'");
  }
  return v;
}

std::vector<std::vector<std::string>> records(std::string_view csv, std::string_view header) {
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || line != header) throw InputError("csv: expected header '" + std::string(header) + "'");
  std::vector<std::vector<std::string>> out;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(fields(line));
  }
  return out;
}

constexpr std::string_view kBenchHeader = "dataset,config,crossings,nt,nb,splits,split_vertices,max_splits,time_ms";
constexpr std::string_view kCurveHeader = "k,crossings,cum_time_ms";

}  // namespace

std::vector<BenchSetting> standard_settings(std::size_t sweeps) {
  std::vector<BenchSetting> out;
  for (auto side : {Side::top, Side::bottom}) {
    for (auto method : {OrderMethod::alphabetical, OrderMethod::barycenter}) {
      for (auto objective : {Objective::min_splits, Objective::min_split_vertices}) {
        RunConfig c;
        c.fixed_side = side;
        c.order_method = method;
        c.barycenter_sweeps = method == OrderMethod::barycenter ? sweeps : 0;
        c.objective = objective;
        std::string name = side == Side::top ? "top-" : "bottom-";
        name += method == OrderMethod::alphabetical ? "alphabetical" : "barycenter" + std::to_string(sweeps);
        name += objective == Objective::min_splits ? "-crs" : "-crsv";
        out.push_back({std::move(name), c});
      }
    }
  }
  return out;
}

BenchRow bench_one(const std::string& dataset, const BipartiteGraph& g, const BenchSetting& setting) {
  const auto initial = make_initial_layout(g, setting.config);
  const auto start = Clock::now();
  const auto done = split_layout(initial, setting.config);
  BenchRow r;
  r.time_ms = elapsed_ms(start);
  r.dataset = dataset;
  r.config = setting.name;
  r.crossings = initial.crossings;
  r.nt = g.layer(setting.config.fixed_side).size();
  r.nb = g.layer(opposite(setting.config.fixed_side)).size();
  r.splits = done.splits.total_splits();
  r.split_vertices = done.splits.split_vertices();
  r.max_splits = done.splits.max_splits();
  return r;
}

BenchTable run_benchmark(const std::filesystem::path& dir, const std::vector<BenchSetting>& settings) {
  if (!std::filesystem::is_directory(dir)) throw InputError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.stem().string() < b.stem().string(); });

  BenchTable table;
  for (const auto& f : files) {
    BipartiteGraph g;
    try {
      std::ifstream in(f, std::ios::binary);
      if (!in) throw InputError("cannot open");
      std::ostringstream buf;
      buf << in.rdbuf();
      g = parse_dataset(buf.str());
    } catch (const std::exception& e) {
      table.skipped.emplace_back(f.filename().string(), e.what());
      continue;
    }
    for (const auto& s : settings) table.rows.push_back(bench_one(f.stem().string(), g, s));
  }
  return table;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out(kBenchHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += r.dataset + ',' + r.config + ',' + std::to_string(r.crossings) + ',' + std::to_string(r.nt) + ',' +
           std::to_string(r.nb) + ',' + std::to_string(r.splits) + ',' + std::to_string(r.split_vertices) + ',' +
           std::to_string(r.max_splits) + ',' + number(r.time_ms) + '\n';
  }
  return out;
}

std::vector<BenchRow> parse_bench_csv(std::string_view csv) {
  std::vector<BenchRow> rows;
  std::size_t line = 1;
  for (const auto& f : records(csv, kBenchHeader)) {
    ++line;
    if (f.size() != 9) throw InputError("csv line " + std::to_string(line) + ": expected 9 fields");
    BenchRow r;
    r.dataset = f[0];
    r.config = f[1];
    r.crossings = parse_number<std::uint64_t>(f[2], line);
    r.nt = parse_number<std::size_t>(f[3], line);
    r.nb = parse_number<std::size_t>(f[4], line);
    r.splits = parse_number<std::size_t>(f[5], line);
    r.split_vertices = parse_number<std::size_t>(f[6], line);
    r.max_splits = parse_number<std::size_t>(f[7], line);
    r.time_ms = parse_number<double>(f[8], line);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<CurvePoint> run_heuristic_curve(const BipartiteGraph& g, const RunConfig& cfg, std::size_t k_max) {
  if (cfg.method == Method::exact) throw InputError("curves need a heuristic method (maxSpan or crCount)");
  auto initial = make_initial_layout(g, cfg);
  const bool flip = cfg.fixed_side == Side::bottom;
  const auto graph = flip ? initial.graph.transposed() : initial.graph;
  const auto order = flip ? initial.order.transposed() : initial.order;

  std::vector<CurvePoint> curve{{0, initial.crossings, 0.0}};
  const auto start = Clock::now();
  auto observe = [&](const SplitStep& s) { curve.push_back({curve.size(), s.crossings_after, elapsed_ms(start)}); };
  if (cfg.method == Method::max_span) {
    maxspan_heuristic(graph, order, k_max, observe);
  } else {
    crcount_heuristic(graph, order, k_max, observe);
  }
  return curve;
}

std::string curve_csv(const std::vector<CurvePoint>& curve) {
  std::string out(kCurveHeader);
  out += '\n';
  for (const auto& p : curve) {
    out += std::to_string(p.k) + ',' + std::to_string(p.crossings) + ',' + number(p.cum_time_ms) + '\n';
  }
  return out;
}

std::vector<CurvePoint> parse_curve_csv(std::string_view csv) {
  std::vector<CurvePoint> out;
  std::size_t line = 1;
  for (const auto& f : records(csv, kCurveHeader)) {
    ++line;
    if (f.size() != 3) throw InputError("csv line " + std::to_string(line) + ": expected 3 fields");
    out.push_back({parse_number<std::size_t>(f[0], line), parse_number<std::uint64_t>(f[1], line),
                   parse_number<double>(f[2], line)});
  }
  return out;
}

}  // namespace bisplit
