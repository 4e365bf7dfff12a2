#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pgc/applications.hpp"
#include "pgc/bench.hpp"
#include "pgc/embedding.hpp"
#include "pgc/generators.hpp"
#include "pgc/io.hpp"
#include "pgc/trace.hpp"

using namespace pgc;

namespace {

constexpr int kPass = 0, kDiff = 1, kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string mode = "auto";
  std::uint64_t seed = 1;
  double slack = 8.0;
  std::string out;
};

ContractConfig make_config(const Common& c) {
  ContractConfig cfg;
  auto m = parse_mode(c.mode);
  if (!m) throw InputError("unknown mode '" + c.mode + "'");
  cfg.mode = *m;
  cfg.slack = c.slack;
  return cfg;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

PlanarMultigraph load_graph(const std::string& path) {
  auto in = open_in(path);
  auto g = build_graph(read_edge_list(in));
  if (!is_planar(g)) throw InputError(path + ": graph is not planar");
  return g;
}

Trace load_trace(const std::string& path) {
  auto in = open_in(path);
  return read_trace(in);
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw InputError("cannot write " + c.out);
  f << text;
}

PlanarMultigraph generate(const std::string& kind, std::size_t n, std::uint64_t seed) {
  if (kind == "grid") return grid_graph(n, n);
  if (kind == "random-triangulation") return random_triangulation(n, seed);
  if (kind == "random-planar") return random_planar(n, seed, 0.5);
  throw InputError("unknown kind '" + kind + "'");
}

std::vector<Mode> verify_modes(const std::string& s) {
  if (s == "auto" || s == "all") return {Mode::naive, Mode::two_level, Mode::three_level};
  auto m = parse_mode(s);
  if (!m) throw InputError("unknown mode '" + s + "'");
  return {*m};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar graphs under edge contraction"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--mode", c.mode, "auto | naive | two-level | three-level")->capture_default_str();
  app.add_option("--seed", c.seed, "random seed")->capture_default_str();
  app.add_option("--slack-c", c.slack, "size slack of the divisions")->capture_default_str();
  app.add_option("--out", c.out, "output file instead of stdout");

  std::string kind, graph_path, trace_path, workload = "full-contraction";
  std::size_t n = 0, repeats = 1;
  double max_weight = 0;
  bool as_trace = false;
  std::vector<std::size_t> sizes;

  auto* gen = app.add_subcommand("generate", "write a planar graph as an edge list");
  gen->add_option("kind", kind, "grid | random-triangulation | random-planar")->required();
  gen->add_option("n", n, "vertex count, or side length for grid")->required()->check(CLI::PositiveNumber);
  gen->add_option("--weights", max_weight, "add integer weights in [1, W]");
  gen->add_flag("--trace", as_trace, "append a random maximal contraction sequence");

  auto* rep = app.add_subcommand("replay", "print the report of every step of a trace");
  rep->add_option("trace", trace_path)->required();
  auto* ver = app.add_subcommand("verify", "check the modes against the oracle on a trace");
  ver->add_option("trace", trace_path)->required();

  auto* bench = app.add_subcommand("bench", "time a workload over growing sizes, CSV output");
  bench->add_option("--sizes", sizes, "ascending vertex counts")->required()->delimiter(',');
  bench->add_option("--workload", workload, "full-contraction | mst | 2ec")->capture_default_str();
  bench->add_option("--repeats", repeats, "seeds per size")->capture_default_str();

  auto* mst = app.add_subcommand("mst", "minimum spanning tree of a weighted graph");
  auto* color = app.add_subcommand("color5", "proper 5-coloring");
  auto* bridges = app.add_subcommand("bridges", "bridges of a graph");
  auto* kec = app.add_subcommand("max3ec", "maximal 3-edge-connected subgraphs");
  auto* upm = app.add_subcommand("upm", "unique perfect matching");
  for (auto* sub : {mst, color, bridges, kec, upm}) sub->add_option("graph", graph_path, "edge list file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    const auto cfg = make_config(c);
    std::ostringstream out;

    if (*gen) {
      auto g = generate(kind, n, c.seed);
      if (max_weight >= 1) assign_random_weights(g, c.seed, static_cast<std::int64_t>(max_weight));
      auto plain = g;
      plain.clear_rotation();
      if (!is_planar(plain)) throw std::logic_error("generator produced a non-planar graph");
      if (as_trace)
        write_trace(out, random_trace(g, c.seed));
      else
        write_edge_list(out, g);
      emit(c, out.str());
      return kPass;
    }
    if (*rep) {
      for (const auto& line : replay(load_trace(trace_path), cfg)) out << line << '\n';
      emit(c, out.str());
      return kPass;
    }
    if (*ver) {
      const auto res = verify(load_trace(trace_path), verify_modes(c.mode), cfg);
      if (!res.ok) {
        std::cout << "FAIL " << res.diff << '\n';
        return kDiff;
      }
      std::cout << "PASS\n";
      return kPass;
    }
    if (*bench) {
      BenchOptions opt;
      opt.sizes = sizes;
      auto w = parse_workload(workload);
      if (!w) throw InputError("unknown workload '" + workload + "'");
      if (!std::is_sorted(sizes.begin(), sizes.end())) throw InputError("sizes must be ascending");
      opt.workload = *w;
      opt.seed = c.seed;
      opt.repeats = repeats;
      opt.config = cfg;
      write_bench_csv(out, opt, run_bench(opt));
      emit(c, out.str());
      return kPass;
    }

    const auto g = load_graph(graph_path);
    if (*mst) {
      const auto r = minimum_spanning_tree(g, cfg);
      out << "weight " << format_weight(r.weight) << '\n';
      for (EdgeId e : r.edges) out << g.edge_label(e) << '\n';
    } else if (*color) {
      const auto colors = five_coloring(g, cfg);
      for (VertexId v = 0; v < g.num_vertices(); ++v) out << g.vertex_label(v) << ' ' << colors[v] << '\n';
    } else if (*bridges) {
      for (EdgeId e : Decremental2EC(g, cfg).bridges()) out << g.edge_label(e) << '\n';
    } else if (*kec) {
      for (const auto& part : max_kec_subgraphs(g, 3, cfg)) {
        for (std::size_t i = 0; i < part.size(); ++i) out << (i ? " " : "") << g.vertex_label(part[i]);
        out << '\n';
      }
    } else if (*upm) {
      const auto r = unique_perfect_matching(g, cfg);
      if (!r) {
        out << "not unique\n";
      } else {
        out << "unique\n";
        for (EdgeId e : *r) out << g.edge_label(e) << '\n';
      }
    }
    emit(c, out.str());
    return kPass;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const TraceError& e) {
    std::cerr << "trace error: " << e.what() << '\n';
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const ApplicationError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kInputError;
}
