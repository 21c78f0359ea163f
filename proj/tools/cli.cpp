#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mec2/branch_dp.hpp"
#include "mec2/cyclespace.hpp"
#include "mec2/decomposition.hpp"
#include "mec2/deletion.hpp"
#include "mec2/dense.hpp"
#include "mec2/error.hpp"
#include "mec2/formats.hpp"
#include "mec2/generators.hpp"
#include "mec2/oracle.hpp"

namespace mec2 {
namespace {

struct Loaded {
  Graph graph;
  bool t2atc = false;
};

Loaded load_instance(const std::string& path) {
  std::string text = read_text(path);
  if (looks_like_t2atc(text)) return {t2atc_to_graph(parse_t2atc(text)), true};
  return {parse_graph(text), false};
}

int threads_from(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("MEC2_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

struct EngineRun {
  Solution solution;
  std::string tag;
  double millis = 0;
  std::string feedback, width, ops;  // bench statistics, blank when not applicable
};

struct EngineChoice {
  std::string engine = "auto";
  std::string bd_path, td_path;
  int threads = 1;
};

BranchDecomposition pick_decomposition(const Graph& g, const EngineChoice& c) {
  if (!c.bd_path.empty()) {
    auto bd = parse_branch_decomposition(read_text(c.bd_path));
    validate_branch_decomposition(g, bd);
    return bd;
  }
  if (!c.td_path.empty()) return treedecomp_to_branchdecomp(parse_tree_decomposition(read_text(c.td_path)), g);
  return heuristic_branch_decomposition(g);
}

EngineRun run_engine(const Graph& g, const EngineChoice& c) {
  EngineRun r;
  auto start = std::chrono::steady_clock::now();
  if (c.engine == "auto") {
    DispatchOptions o;
    o.threads = c.threads;
    auto d = dispatch(g, o);
    r.solution = std::move(d.solution);
    r.tag = d.tag;
  } else if (c.engine == "brute") {
    r.solution = nu2_brute(g);
  } else if (c.engine == "cyclespace") {
    CyclespaceOptions o;
    o.threads = c.threads;
    CyclespaceStats st;
    r.solution = solve_cyclespace(g, o, &st);
    r.feedback = std::to_string(st.feedback_size);
    r.ops = std::to_string(st.guesses_visited);
  } else if (c.engine == "branchdp") {
    if (g.edge_count() == 0) {
      r.solution = {0, EdgeColoring(0)};
      r.width = "0";
      r.ops = "0";
    } else {
      BranchDpStats st;
      r.solution = solve_branchdp(g, pick_decomposition(g, c), {}, &st);
      r.width = std::to_string(st.width);
      r.ops = std::to_string(st.merge_pairs);
    }
  } else if (c.engine == "dense") {
    r.solution = solve_dense(g);
  } else if (c.engine == "logedge") {
    CyclespaceStats st;
    r.solution = solve_logedge(g, &st);
    r.feedback = std::to_string(st.feedback_size);
    r.ops = std::to_string(st.guesses_visited);
  } else {
    throw InputError("unknown engine '" + c.engine + "'");
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (r.tag.empty()) r.tag = c.engine;
  if (!validate_coloring(g, r.solution.coloring) || r.solution.coloring.value() != r.solution.value) {
    throw std::logic_error(r.tag + " returned an inconsistent witness");
  }
  return r;
}

// Explicit engines skip dispatch; say so when dispatch would have gone elsewhere.
void warn_if_rerouted(const Graph& g, const std::string& engine, std::ostream& err) {
  if (engine == "auto" || engine == "brute") return;
  for (const auto& comp : components(g)) {
    Subgraph sub = induced_subgraph(g, comp);
    if (sub.graph.edge_count() == 0) continue;
    std::string preferred = choose_engine(sub.graph);
    if (preferred != engine) {
      err << "warning: auto dispatch would use " << preferred << " on the component of vertex " << comp[0] << "\n";
    }
  }
}

int print_certificate(std::ostream& out, const std::optional<DeletionCertificate>& cert) {
  if (!cert) {
    out << "no\n";
    return 1;
  }
  out << "yes\n" << emit_certificate(cert->removed, cert->witness);
  return 0;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers for the maximum 2-edge-colorable subgraph problem", "mec2"};
  app.require_subcommand(1);

  EngineChoice choice;
  std::string graph_path, coloring_path, coloring_out, corpus, engines_list = "auto";
  int t = 0, k = -1, threads = 0, n = 10, copies = 1;
  double p = 0.5;
  std::uint64_t seed = 1;
  bool json = false, minimize = false, join = false, stats = false;
  std::string gen_name;

  auto* solve = app.add_subcommand("solve", "maximum 2-edge-colorable subgraph");
  solve->add_option("graph", graph_path, "graph or task file, - for stdin")->required();
  solve->add_option("--engine", choice.engine, "auto|brute|cyclespace|branchdp|dense|logedge")
      ->check(CLI::IsMember({"auto", "brute", "cyclespace", "branchdp", "dense", "logedge"}));
  solve->add_option("--bd", choice.bd_path, "branch decomposition for branchdp");
  solve->add_option("--td", choice.td_path, "tree decomposition for branchdp");
  solve->add_flag("--json", json, "JSON summary");
  solve->add_option("--threads", threads, "worker threads (default MEC2_THREADS or 1)");
  solve->add_option("--coloring-out", coloring_out, "write the witness coloring here");

  auto* decide = app.add_subcommand("decide", "is nu2 >= t");
  decide->add_option("graph", graph_path)->required();
  decide->add_option("--t", t)->required();

  auto* del_e = app.add_subcommand("delete-edges", "delete at most k edges to reach 2-edge-colorability");
  del_e->add_option("graph", graph_path)->required();
  del_e->add_option("--k", k);
  del_e->add_flag("--minimize", minimize, "search for the smallest k");

  auto* del_v = app.add_subcommand("delete-vertices", "delete at most k vertices to reach 2-edge-colorability");
  del_v->add_option("graph", graph_path)->required();
  del_v->add_option("--k", k);
  del_v->add_flag("--minimize", minimize, "search for the smallest k");

  auto* check = app.add_subcommand("check", "validate a coloring against a graph");
  check->add_option("graph", graph_path)->required();
  check->add_option("coloring", coloring_path)->required();

  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("name", gen_name, "petersen|k4|k5|k33|cycle|path|star|complete|random|cubic|forest, or e.g. cycle(7)")
      ->required();
  gen->add_option("--n", n, "size parameter");
  gen->add_option("--p", p, "edge probability (random, forest)");
  gen->add_option("--seed", seed);
  gen->add_option("--copies", copies, "disjoint copies");
  gen->add_flag("--join", join, "add a universal vertex");

  auto* bench = app.add_subcommand("bench", "run engines over a corpus directory, CSV to stdout");
  bench->add_option("corpus", corpus)->required();
  bench->add_option("--engines", engines_list, "comma-separated engine list");
  bench->add_flag("--stats", stats, "add feedback, width and ops columns");
  bench->add_option("--threads", threads);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    choice.threads = threads_from(threads);
    if (*solve) {
      Loaded in = load_instance(graph_path);
      warn_if_rerouted(in.graph, choice.engine, err);
      EngineRun r = run_engine(in.graph, choice);
      std::string col = emit_coloring(r.solution.coloring);
      if (!coloring_out.empty()) write_text(coloring_out, col);
      if (json) {
        nlohmann::json j{{"value", r.solution.value}, {"engine", r.tag}, {"millis", r.millis}};
        if (!coloring_out.empty()) j["coloring_path"] = coloring_out;
        if (in.t2atc) j["social_welfare"] = sw_report(r.solution.value).social_welfare;
        out << j.dump() << "\n";
      } else {
        out << "value " << r.solution.value << "\nengine " << r.tag << "\nmillis " << r.millis << "\n";
        if (in.t2atc) {
          auto sw = sw_report(r.solution.value);
          out << "tasks_executed " << sw.tasks_executed << "\nsocial_welfare " << sw.social_welfare << "\n";
        }
        if (coloring_out.empty()) out << col;
      }
      return 0;
    }
    if (*decide) {
      bool yes = decide_nu2_at_least(load_instance(graph_path).graph, t);
      out << (yes ? "yes" : "no") << "\n";
      return yes ? 0 : 1;
    }
    if (*del_e || *del_v) {
      bool edges = del_e->parsed();
      Graph g = load_instance(graph_path).graph;
      if (minimize) {
        DeletionCertificate c = edges ? minimize_edge_deletion(g) : minimize_vertex_deletion(g);
        if (k >= 0 && static_cast<int>(c.removed.size()) > k) return print_certificate(out, std::nullopt);
        return print_certificate(out, c);
      }
      if (k < 0) throw InputError("--k is required unless --minimize is given");
      return print_certificate(out, edges ? solve_edge_deletion(g, k) : solve_vertex_deletion(g, k));
    }
    if (*check) {
      Graph g = load_instance(graph_path).graph;
      EdgeColoring c = parse_coloring(read_text(coloring_path));
      if (auto v = find_violation(g, c)) {
        out << "invalid: " << v->describe() << "\n";
        return 1;
      }
      out << "valid value " << c.value() << "\n";
      return 0;
    }
    if (*gen) {
      Graph g;
      bool sized = gen->count("--n") > 0;
      if (gen_name == "random") g = random_graph(n, p, seed);
      else if (gen_name == "cubic") g = random_cubic(n, seed);
      else if (gen_name == "forest") g = random_forest(n, p, seed);
      else if (sized && (gen_name == "cycle" || gen_name == "path" || gen_name == "star" || gen_name == "complete"))
        g = gen_named(gen_name, n);
      else g = gen_named(gen_name);
      if (copies != 1) g = disjoint_copies(g, copies);
      if (join) g = universal_join(g);
      out << emit_graph(g);
      return 0;
    }
    if (*bench) {
      namespace fs = std::filesystem;
      if (!fs::is_directory(corpus)) throw InputError("'" + corpus + "' is not a directory");
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(corpus)) {
        auto ext = entry.path().extension().string();
        if (entry.is_regular_file() && (ext == ".gr" || ext == ".t2atc")) files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      auto engines = split_list(engines_list);
      out << "instance,n,m,engine,value,millis" << (stats ? ",feedback,width,ops" : "") << "\n";
      for (const auto& f : files) {
        Graph g = load_instance(f.string()).graph;
        for (const auto& e : engines) {
          EngineChoice c = choice;
          c.engine = e;
          out << f.filename().string() << "," << g.vertex_count() << "," << g.edge_count() << "," << e << ",";
          try {
            EngineRun r = run_engine(g, c);
            out << r.solution.value << "," << r.millis;
            if (stats) out << "," << r.feedback << "," << r.width << "," << r.ops;
          } catch (const Refusal&) {
            out << "refused,";
            if (stats) out << ",,,";
          }
          out << "\n";
        }
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
  } catch (const UnsupportedInstance& e) {
    err << "error: unsupported: " << e.what() << "\n";
  } catch (const InputError& e) {
    err << "error: input: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "error: precondition: " << e.what() << "\n";
  } catch (const Refusal& e) {
    err << "error: refused: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace mec2
