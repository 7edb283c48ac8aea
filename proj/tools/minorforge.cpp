// minorforge: generators, bounds, decompositions, minor certificates and
// their verifiers from the command line.
//
// Exit codes: 0 success / valid, 1 invalid certificate or failed property,
// 2 malformed input, 3 size limit exceeded.

#include "minorforge/bounds.hpp"
#include "minorforge/certificates.hpp"
#include "minorforge/constructions.hpp"
#include "minorforge/decompose.hpp"
#include "minorforge/families.hpp"
#include "minorforge/io.hpp"
#include "minorforge/limits.hpp"
#include "minorforge/sweep.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace minorforge;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kMalformed = 2;
constexpr int kTooLarge = 3;

std::string read_source(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in)
      throw InputError("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

// First JSON document in the source, so a certificate can be piped straight
// from `witness`, which appends its report line.
Json read_json(const std::string& path) {
  std::istringstream in(read_source(path));
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in '" + (path.empty() ? "-" : path) + "': " + e.what());
  }
  return j;
}

void emit(const Json& j) { std::cout << dump(j); }

void emit_graph(const Graph& g, const std::string& format) {
  if (format == "dot")
    std::cout << to_dot(g);
  else
    emit(to_json(g));
}

// Hypergraph files carry "m", graph files carry "n".
Graph graph_or_kneser(const Json& j) {
  if (j.is_object() && j.contains("m"))
    return kneser_graph(hypergraph_from_json(j));
  return graph_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minorforge: clique-minor and odd-minor certificates for Kneser-type graphs"};
  app.require_subcommand(1);
  std::string limits_json;
  app.add_option("--limits", limits_json,
                 "JSON map of size limits, e.g. {\"zig\":9}; overrides MINORFORGE_LIMITS");

  int exit_code = kOk;
  std::function<void()> action;

  // gen ---------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate a graph family member");
  gen->require_subcommand(1);
  std::string format = "json";
  int gen_n = 0, gen_k = 0;
  std::string gen_a, gen_b;
  for (const char* family : {"kneser", "schrijver"}) {
    auto* sub = gen->add_subcommand(family, std::string(family) + " graph on k-subsets of [n]");
    sub->add_option("n", gen_n)->required();
    sub->add_option("k", gen_k)->required();
    sub->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    std::string name = family;
    sub->callback([&, name] {
      action = [&, name] {
        emit_graph(name == "kneser" ? kneser(gen_n, gen_k) : schrijver(gen_n, gen_k), format);
      };
    });
  }
  auto* gen_crown = gen->add_subcommand("crown", "K_{n,n} minus a perfect matching");
  gen_crown->add_option("n", gen_n)->required();
  gen_crown->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  gen_crown->callback([&] { action = [&] { emit_graph(crown(gen_n), format); }; });
  auto* gen_join = gen->add_subcommand("join", "Join of two graphs given as JSON files");
  gen_join->add_option("first", gen_a)->required();
  gen_join->add_option("second", gen_b)->required();
  gen_join->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  gen_join->callback([&] {
    action = [&] {
      emit_graph(join(graph_from_json(read_json(gen_a)), graph_from_json(read_json(gen_b))),
                 format);
    };
  });
  auto* gen_from = gen->add_subcommand(
      "from-json", "Normalize a graph file, or build the Kneser graph of a hypergraph file");
  gen_from->add_option("file", gen_a, "Input file ('-' for stdin)")->required();
  gen_from->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  gen_from->callback([&] { action = [&] { emit_graph(graph_or_kneser(read_json(gen_a)), format); }; });

  // bounds ------------------------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "Exact chi, zig or cd with witnesses");
  bool want_chi = false, want_zig = false, want_cd = false;
  std::string bounds_file;
  bounds->add_flag("--chi", want_chi, "Chromatic number of a graph");
  bounds->add_flag("--zig", want_zig, "Zig-zag number of a graph");
  bounds->add_flag("--cd", want_cd, "2-colorability defect of a hypergraph");
  bounds->add_option("file", bounds_file, "Graph or hypergraph JSON ('-' for stdin)")->required();
  Limits limits;
  bounds->callback([&] {
    action = [&] {
      if (!want_chi && !want_zig && !want_cd)
        throw InputError("bounds: pass at least one of --chi, --zig, --cd");
      const Json input = read_json(bounds_file);
      if (want_cd) {
        auto res = cd(hypergraph_from_json(input), limits);
        std::cout << res.cd << "\n";
        Json w;
        w["cd"] = res.cd;
        w["witness"] = to_json(res.witness);
        emit(w);
      }
      if (want_chi || want_zig) {
        const Graph g = graph_or_kneser(input);
        if (want_chi) {
          auto res = chromatic_number(g, limits);
          std::cout << res.chi << "\n";
          Json w;
          w["chi"] = res.chi;
          w["coloring"] = to_json(res.coloring);
          emit(w);
        }
        if (want_zig) {
          auto res = zig(g, limits);
          std::cout << res.zig << "\n";
          Json w;
          w["zig"] = res.zig;
          w["coloring"] = to_json(res.coloring);
          w["zigzag"] = to_json(res.witness);
          emit(w);
        }
      }
    };
  });

  // decompose ---------------------------------------------------------------
  auto* decompose = app.add_subcommand("decompose", "Bipartite-connected ordered partition");
  std::string decompose_file;
  decompose->add_option("file", decompose_file, "Graph JSON ('-' for stdin)")->required();
  decompose->callback([&] {
    action = [&] { emit(to_json(bipartite_connected_partition(graph_from_json(read_json(decompose_file))))); };
  });

  // witness -----------------------------------------------------------------
  auto* witness = app.add_subcommand("witness", "Construct a minor certificate and verify it");
  witness->require_subcommand(1);
  std::string witness_file;
  int wn = 0, wk = 0;
  auto finish = [&](const ValidationReport& report, Json summary) {
    summary["valid"] = report.ok();
    summary["violations"] = report.violations;
    emit(summary);
    if (!report.ok())
      exit_code = kInvalid;
  };
  auto* w_odd = witness->add_subcommand("odd-hadwiger", "Odd clique expansion from a long zigzag");
  w_odd->add_option("file", witness_file, "Graph JSON ('-' for stdin)")->required();
  w_odd->callback([&] {
    action = [&] {
      const Graph g = graph_from_json(read_json(witness_file));
      auto res = odd_hadwiger_witness(g);
      emit(to_json(res.expansion));
      Json summary;
      summary["order"] = res.expansion.order();
      summary["zigzag_length"] = res.zigzag_length;
      finish(verify_odd_expansion(g, res.expansion), summary);
    };
  });
  auto* w_dol = witness->add_subcommand("dolnikov", "Clique minor in KG(H) of order cd(H)");
  w_dol->add_option("file", witness_file, "Hypergraph JSON ('-' for stdin)")->required();
  w_dol->callback([&] {
    action = [&] {
      auto res = extract_minor_from_kneser_rep(hypergraph_from_json(read_json(witness_file)), limits);
      emit(to_json(res.model));
      Json summary;
      summary["order"] = res.model.order();
      summary["cd"] = res.t;
      finish(verify_minor_model(res.kneser, res.model), summary);
    };
  });
  auto* w_sch = witness->add_subcommand("schrijver", "Odd K_{n-2k+2} expansion in S(n,k)");
  w_sch->add_option("n", wn)->required();
  w_sch->add_option("k", wk)->required();
  w_sch->callback([&] {
    action = [&] {
      auto x = schrijver_expansion(wn, wk);
      emit(to_json(x));
      Json summary;
      summary["order"] = x.order();
      finish(verify_odd_expansion(schrijver(wn, wk), x), summary);
    };
  });

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->require_subcommand(1);
  std::string verify_graph, verify_cert = "-";
  for (const char* kind : {"expansion", "minor", "partition"}) {
    auto* sub = verify->add_subcommand(kind, std::string("Verify a ") + kind + " certificate");
    sub->add_option("--graph", verify_graph, "Graph (or hypergraph) JSON")->required();
    sub->add_option("certificate", verify_cert, "Certificate JSON (default stdin)");
    std::string name = kind;
    sub->callback([&, name] {
      action = [&, name] {
        const Graph g = graph_or_kneser(read_json(verify_graph));
        const Json cert = read_json(verify_cert);
        ValidationReport report;
        if (name == "expansion")
          report = verify_odd_expansion(g, expansion_from_json(cert));
        else if (name == "minor")
          report = verify_minor_model(g, minor_model_from_json(cert));
        else
          report = verify_partition(g, partition_from_json(cert));
        emit(to_json(report));
        if (!report.ok())
          exit_code = kInvalid;
      };
    });
  }

  // export ------------------------------------------------------------------
  auto* exp = app.add_subcommand("export", "Render graphs and certificates");
  exp->require_subcommand(1);
  auto* dot = exp->add_subcommand("dot", "Graphviz DOT, certificate parts colored");
  std::string dot_graph, dot_expansion, dot_model;
  dot->add_option("--graph", dot_graph, "Graph (or hypergraph) JSON")->required();
  auto* dot_x = dot->add_option("--expansion", dot_expansion, "Odd expansion JSON");
  auto* dot_m = dot->add_option("--model", dot_model, "Minor model JSON");
  dot_x->excludes(dot_m);
  dot->callback([&] {
    action = [&] {
      const Graph g = graph_or_kneser(read_json(dot_graph));
      if (!dot_expansion.empty())
        std::cout << to_dot(g, expansion_from_json(read_json(dot_expansion)));
      else if (!dot_model.empty())
        std::cout << to_dot(g, minor_model_from_json(read_json(dot_model)));
      else
        std::cout << to_dot(g);
    };
  });

  // sweep -------------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "Run batch property checks from a JSON config");
  std::string sweep_file;
  std::int64_t sweep_seed = -1;
  sweep->add_option("config", sweep_file, "Sweep configuration JSON ('-' for stdin)")->required();
  sweep->add_option("--seed", sweep_seed, "Override the config seed (default 0)");
  sweep->callback([&] {
    action = [&] {
      Json config = read_json(sweep_file);
      if (sweep_seed >= 0 && config.is_object())
        config["seed"] = sweep_seed;
      auto report = run_sweep(config, limits);
      emit(report.to_json());
      if (!report.ok())
        exit_code = kInvalid;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    limits = limits_from_env();
    if (!limits_json.empty())
      limits = parse_limits(limits_json, limits);
    if (action)
      action();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kTooLarge;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
  std::cout.flush();
  return exit_code;
}
