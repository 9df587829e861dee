#include "bisplit/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "bisplit/bench.hpp"
#include "bisplit/crossings.hpp"
#include "bisplit/exact_minimize.hpp"
#include "bisplit/generators.hpp"
#include "bisplit/layout.hpp"
#include "bisplit/render.hpp"
#include "bisplit/serialize.hpp"
#include "bisplit/service.hpp"

namespace bisplit {

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> read_order_file(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> ids;
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    for (std::string w; words >> w;) ids.push_back(w);
  }
  return ids;
}

enum class Format { json, svg, csv };

const std::map<std::string, Objective> kObjectiveNames{
    {"splits", Objective::min_splits}, {"vertices", Objective::min_split_vertices}, {"crossings", Objective::min_crossings}};
const std::map<std::string, Side> kSideNames{{"top", Side::top}, {"bottom", Side::bottom}};
const std::map<std::string, OrderMethod> kOrderNames{
    {"alphabetical", OrderMethod::alphabetical}, {"barycenter", OrderMethod::barycenter}, {"as-input", OrderMethod::as_input}};
const std::map<std::string, Method> kMethodNames{
    {"exact", Method::exact}, {"max-span", Method::max_span}, {"cr-count", Method::cr_count}};
const std::map<std::string, Format> kFormatNames{{"json", Format::json}, {"svg", Format::svg}, {"csv", Format::csv}};

struct Options {
  std::string input;
  std::string order_file;
  RunConfig config;
  std::optional<std::uint64_t> max_crossings;
  Format format = Format::json;
  std::uint64_t seed = 1;
};

void add_layout_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "dataset or layout document ('-' for stdin)")->required();
  cmd->add_option("--fixed", o.config.fixed_side, "layer whose order is kept")
      ->transform(CLI::CheckedTransformer(kSideNames, CLI::ignore_case));
  cmd->add_option("--order", o.config.order_method, "initial order")
      ->transform(CLI::CheckedTransformer(kOrderNames, CLI::ignore_case));
  cmd->add_option("--sweeps", o.config.barycenter_sweeps, "two-sided barycenter sweeps (0: one free-side pass)");
  cmd->add_option("--order-file", o.order_file, "explicit order of the fixed layer, ids separated by whitespace");
  cmd->add_option("--format", o.format, "output format")->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
}

void add_split_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--objective", o.config.objective)->transform(CLI::CheckedTransformer(kObjectiveNames, CLI::ignore_case));
  cmd->add_option("--k", o.config.split_budget, "split budget");
  cmd->add_option("--max-crossings", o.max_crossings, "crossing bound M for the decision answer");
  cmd->add_option("--method", o.config.method)->transform(CLI::CheckedTransformer(kMethodNames, CLI::ignore_case));
  cmd->add_flag("--allow-large-k", o.config.allow_large_budget, "lift the exhaustive-search budget guard");
}

LayoutDocument initial(const Options& o) {
  const auto g = parse_dataset(read_file(o.input));
  auto doc = make_initial_layout(g, o.config);
  if (!o.order_file.empty()) {
    doc.order.layer(o.config.fixed_side) = read_order_file(o.order_file);
    resolve_order(doc.graph, doc.order);
    if (o.config.order_method == OrderMethod::barycenter) {
      const auto free = opposite(o.config.fixed_side);
      doc.order = barycenter_order(doc.graph, doc.order, free == Side::top ? BarycenterSide::top : BarycenterSide::bottom);
    }
    doc.crossings = count_crossings(doc.graph, doc.order);
  }
  return doc;
}

void emit(const LayoutDocument& doc, Format f, std::ostream& out) {
  if (f == Format::csv) throw InputError("csv output is only available for stats, bench and heuristic curves");
  out << (f == Format::svg ? render_svg(doc) : dump(document_to_json(doc)));
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"2-layer bipartite layout by vertex splitting", "bisplit"};
  app.require_subcommand(1);
  Options o;

  auto* stats = app.add_subcommand("stats", "graph statistics");
  stats->add_option("input", o.input)->required();
  stats->add_option("--format", o.format)->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));

  auto* order = app.add_subcommand("order", "initial layout without splits");
  add_layout_flags(order, o);

  auto* remove = app.add_subcommand("remove", "remove all crossings with the fewest splits or split vertices");
  add_layout_flags(remove, o);
  remove->add_option("--objective", o.config.objective)
      ->transform(CLI::CheckedTransformer(kObjectiveNames, CLI::ignore_case));

  auto* minimize = app.add_subcommand("minimize", "fewest crossings with at most k splits");
  add_layout_flags(minimize, o);
  add_split_flags(minimize, o);

  auto* heuristic = app.add_subcommand("heuristic", "greedy splitting (csv format: crossings after each split)");
  add_layout_flags(heuristic, o);
  add_split_flags(heuristic, o);

  std::string subdivision;
  std::vector<std::size_t> caterpillar;
  std::vector<double> random;
  auto* gen = app.add_subcommand("gen", "generate a dataset document");
  auto* gen_group = gen->add_option_group("kind");
  gen_group->add_option("--subdivision", subdivision, "edge-list file of a graph to subdivide");
  gen_group->add_option("--random", random, "NT NB P: random bipartite graph")->expected(3);
  gen_group->add_option("--caterpillar", caterpillar, "leg counts along the spine")->delimiter(',');
  gen_group->require_option(1);
  gen->add_option("--seed", o.seed);

  std::string bench_dir;
  std::size_t bench_sweeps = 10;
  auto* bench = app.add_subcommand("bench", "exact algorithms on every dataset of a directory (csv)");
  bench->add_option("dir", bench_dir)->required();
  bench->add_option("--sweeps", bench_sweeps, "barycenter sweeps of the barycenter settings");

  auto* render = app.add_subcommand("render", "svg of a layout document (datasets get their initial layout)");
  add_layout_flags(render, o);

  int port = 8080;
  if (const char* env = std::getenv("BISPLIT_PORT")) port = std::atoi(env);
  std::string host = "127.0.0.1";
  std::string static_dir;
  auto* serve = app.add_subcommand("serve", "HTTP layout service");
  serve->add_option("--port", port);
  serve->add_option("--host", host);
  serve->add_option("--static", static_dir, "directory served at /");

  std::vector<std::string> argv_store{"bisplit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (o.max_crossings) o.config.crossing_bound = o.max_crossings;
    if (*stats) {
      const auto s = graph_stats(parse_dataset(read_file(o.input)));
      if (o.format == Format::csv) {
        out << "vertices,edges,top,bottom,density,max_degree\n"
            << s.vertices << ',' << s.edges << ',' << s.top << ',' << s.bottom << ',' << s.density << ','
            << s.max_degree << '\n';
      } else {
        out << dump(stats_to_json(s));
      }
    } else if (*order) {
      emit(initial(o), o.format, out);
    } else if (*remove) {
      if (o.config.objective == Objective::min_crossings) throw InputError("remove takes --objective splits|vertices");
      emit(split_layout(initial(o), o.config), o.format, out);
    } else if (*minimize || *heuristic) {
      o.config.objective = Objective::min_crossings;
      if (*heuristic && heuristic->count("--method") == 0) {
        o.config.method = Method::cr_count;
      }
      if (*heuristic && o.config.method == Method::exact) throw InputError("heuristic takes --method max-span|cr-count");
      if (*heuristic && o.format == Format::csv) {
        if (!o.order_file.empty()) throw InputError("--order-file is not supported with curve output");
        out << curve_csv(run_heuristic_curve(parse_dataset(read_file(o.input)), o.config, o.config.split_budget));
      } else {
        emit(split_layout(initial(o), o.config), o.format, out);
      }
    } else if (*gen) {
      BipartiteGraph g;
      if (!subdivision.empty()) {
        g = gen_subdivision(parse_edge_list(read_file(subdivision)));
      } else if (!random.empty()) {
        if (random[0] < 0 || random[1] < 0) throw InputError("--random needs nonnegative sizes");
        g = gen_random_bipartite(static_cast<std::size_t>(random[0]), static_cast<std::size_t>(random[1]), random[2],
                                 o.seed);
      } else {
        g = gen_caterpillar(caterpillar.size(), caterpillar);
      }
      out << dump(dataset_to_json(g));
    } else if (*bench) {
      const auto table = run_benchmark(bench_dir, standard_settings(bench_sweeps));
      for (const auto& [file, why] : table.skipped) err << "skipped " << file << ": " << why << '\n';
      out << bench_csv(table.rows);
    } else if (*render) {
      const auto j = parse_json(read_file(o.input));
      const auto doc = j.contains("graph") ? document_from_json(j) : initial(o);
      out << render_svg(doc);
    } else if (*serve) {
      LayoutServer server(static_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(static_dir));
      const int bound = server.bind(host, port);
      out << "listening on http://" << host << ':' << bound << std::endl;
      server.run();
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace bisplit
