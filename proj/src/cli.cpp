#include "tspan/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <sstream>

#include "tspan/basic.hpp"
#include "tspan/dismount.hpp"
#include "tspan/fireworks.hpp"
#include "tspan/gen.hpp"
#include "tspan/oracle.hpp"
#include "tspan/pipeline.hpp"
#include "tspan/reduce.hpp"

namespace tspan {

namespace {

nlohmann::ordered_json vertex_list(const std::vector<Vertex>& vs) {
  auto arr = nlohmann::ordered_json::array();
  for (Vertex v : vs) arr.push_back(v);
  return arr;
}

nlohmann::ordered_json edge_list(const std::vector<Edge>& es) {
  auto arr = nlohmann::ordered_json::array();
  for (Edge e : es) arr.push_back({e.u, e.v});
  return arr;
}

AlgorithmRun from_cover(const FireworksCover& fw) {
  AlgorithmRun run;
  run.spanner = fw.spanner;
  run.style = {fw.emitters, fw.collectors};
  if (fw.tminus) run.details["emitters"] = vertex_list(fw.emitters);
  if (fw.tplus) run.details["collectors"] = vertex_list(fw.collectors);
  return run;
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names = {"pipeline", "fw", "bw", "bi", "dismount", "pivot", "k4"};
  return names;
}

std::optional<AlgorithmRun> run_algorithm(std::string_view algo, const SimpleClique& c, std::size_t k) {
  if (algo == "fw") return from_cover(forward_cover(c));
  if (algo == "bw") return from_cover(backward_cover(c));
  if (algo == "bi") return from_cover(bidirectional_cover(c));
  if (algo == "pipeline") {
    const PipelineResult res = spanner_nlogn(c);
    AlgorithmRun run;
    run.spanner = res.spanner;
    const PipelineReport& r = res.report;
    run.details["n1"] = r.n1;
    run.details["n2"] = r.n2;
    run.details["base"] = r.base;
    run.details["case1_steps"] = r.case1;
    run.details["case2_dismount_steps"] = r.case2_dismount;
    run.details["edges_dismount"] = r.dismount_edges;
    run.details["edges_base"] = r.base_edges;
    run.details["edges_matchings"] = r.matching_edges;
    run.details["edges_layered"] = r.layered_edges;
    run.details["phase_bound"] = pipeline_bound(r);
    if (c.n() >= 2) {
      const FireworksCover fw = bidirectional_cover(c);
      run.style = {fw.emitters, fw.collectors};
    }
    return run;
  }
  if (algo == "dismount") {
    auto res = dismount_fully_detailed(c, k);
    if (!res) return std::nullopt;
    AlgorithmRun run;
    run.spanner = res->spanner;
    std::vector<Vertex> order;
    for (const auto& step : res->steps) order.push_back(step.v);
    run.details["k"] = k;
    run.details["order"] = vertex_list(order);
    return run;
  }
  if (algo == "pivot") {
    auto cert = find_pivot(c);
    if (!cert) return std::nullopt;
    AlgorithmRun run;
    run.spanner = pivot_spanner(c, *cert);
    run.details["pivot"] = cert->p;
    run.details["t"] = cert->t;
    run.details["in_tree"] = edge_list(cert->in_tree);
    run.details["out_tree"] = edge_list(cert->out_tree);
    return run;
  }
  if (algo == "k4") {
    const K4Result res = k4_sparsify_detailed(c);
    AlgorithmRun run;
    run.spanner = res.spanner;
    run.details["packed"] = res.packed.size();
    run.details["removed"] = edge_list(res.removed);
    return run;
  }
  throw Error(Errc::kInvalidArgument, "unknown algorithm '" + std::string(algo) + "'");
}

std::size_t algorithm_bound(std::string_view algo, std::size_t n, std::size_t k) {
  const std::size_t m = edge_count(n);
  if (algo == "pipeline") return pipeline_headline_bound(n);
  if (algo == "fw" || algo == "bw") return 3 * m / 4 + n;
  if (algo == "bi") return n * n / 4 + 2 * n;
  if (algo == "dismount") return n < 2 ? 0 : 2 * k * (n - 2) + 1;
  if (algo == "pivot") return 2 * (n - 1);
  if (algo == "k4") return m - n / 4;
  throw Error(Errc::kInvalidArgument, "unknown algorithm '" + std::string(algo) + "'");
}

namespace {

struct GenArgs {
  std::string kind;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string name;
  std::uint64_t seed = 0;
  std::size_t max_labels = 3;
  std::string out = "-";
};

struct SpanArgs {
  std::string algo;
  std::string in;
  std::string out;
  std::string report;
  std::string dot;
  std::size_t k = 1;
};

struct VerifyArgs {
  std::string graph;
  std::string spanner;
  std::string mode = "strict";
};

struct MinimizeArgs {
  std::string in;
  std::size_t max_n = 7;
  std::string out;
};

struct ReduceArgs {
  std::string in;
  std::string out;
  std::string map;
};

struct BenchArgs {
  std::string algo = "pipeline";
  std::vector<std::size_t> n_list;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::string csv;
  std::size_t k = 1;
  bool stats = false;
  bool no_timing = false;
};

void emit(const std::string& path, std::string_view content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file(path, content);
  }
}

int do_gen(const GenArgs& a, std::ostream& out) {
  Instance inst;
  if (a.kind == "random") {
    inst = random_clique(a.n, a.seed);
  } else if (a.kind == "multi-random") {
    inst = random_multi_clique(a.n, a.max_labels, static_cast<Label>(edge_count(a.n)), a.seed);
  } else if (a.kind == "non-pivotable") {
    inst = gen_non_pivotable(a.n);
  } else if (a.kind == "non-dismountable") {
    inst = gen_non_dismountable(a.m);
  } else if (a.kind == "fixture") {
    inst = fixture(a.name);
  } else {
    throw Error(Errc::kInvalidArgument, "unknown kind '" + a.kind + "'");
  }
  emit(a.out, format_instance(inst), out);
  return kExitOk;
}

int do_span(const SpanArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = read_instance(a.in);
  const auto* multi = std::get_if<MultiLabelClique>(&inst);
  std::optional<Reduction> red;
  if (multi) red = to_simple(*multi);
  const SimpleClique& simple = red ? red->simple : std::get<SimpleClique>(inst);

  auto run = run_algorithm(a.algo, simple, a.k);
  if (!run) {
    err << "algorithm '" << a.algo << "' does not apply to this instance\n";
    return kExitNoSpanner;
  }
  Spanner result = run->spanner;
  bool ok = false;
  if (multi) {
    result = lift_spanner(result, red->map);
    ok = verify_spanner(*multi, result, Mode::kNonStrict);
  } else {
    ok = verify_spanner(simple, result, Mode::kStrict);
  }
  if (!ok) {
    err << "self-check failed: the constructed spanner is not temporally connected\n";
    return kExitSelfCheck;
  }

  emit(a.out, spanner_to_json(result, a.algo).dump(2) + "\n", out);
  if (!a.report.empty()) {
    nlohmann::ordered_json rep;
    rep["algorithm"] = a.algo;
    rep["instance_hash"] = hash_hex(result.instance_hash);
    rep["n"] = simple.n();
    rep["size"] = result.size();
    rep["bound"] = algorithm_bound(a.algo, simple.n(), a.k);
    rep["reduced_from_multi"] = multi != nullptr;
    rep["details"] = run->details;
    write_file(a.report, rep.dump(2) + "\n");
  }
  if (!a.dot.empty()) write_file(a.dot, to_dot(simple, run->spanner, run->style));
  return kExitOk;
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
  const Instance inst = read_instance(a.graph);
  const Spanner s = spanner_from_json(nlohmann::json::parse(read_file(a.spanner)));
  if (a.mode != "strict" && a.mode != "nonstrict") {
    throw Error(Errc::kInvalidArgument, "mode must be strict or nonstrict");
  }
  const Mode mode = a.mode == "strict" ? Mode::kStrict : Mode::kNonStrict;
  const bool ok = std::visit([&](const auto& c) { return verify_spanner(c, s, mode); }, inst);
  out << (ok ? "valid" : "invalid") << " (" << s.size() << " edges, " << a.mode << ")\n";
  return ok ? kExitOk : kExitInvalid;
}

int do_minimize(const MinimizeArgs& a, std::ostream& out) {
  const Instance inst = read_instance(a.in);
  const auto* c = std::get_if<SimpleClique>(&inst);
  if (!c) throw Error(Errc::kInvalidArgument, "minimize needs a simple instance");
  const MinSpannerResult res = min_spanner(*c, a.max_n);
  out << "minimum " << res.size << " lower_bound " << gossip_lower_bound(c->n()) << " explored "
      << res.explored << "\n";
  if (!a.out.empty()) write_file(a.out, spanner_to_json(res.witness, "oracle").dump(2) + "\n");
  return kExitOk;
}

int do_reduce(const ReduceArgs& a, std::ostream& out) {
  const Instance inst = read_instance(a.in);
  const auto* m = std::get_if<MultiLabelClique>(&inst);
  if (!m) throw Error(Errc::kInvalidArgument, "reduce needs a multi-label instance");
  const Reduction red = to_simple(*m);
  emit(a.out, format_instance(red.simple), out);
  if (!a.map.empty()) write_file(a.map, label_map_to_json(red.map).dump(2) + "\n");
  return kExitOk;
}

struct BenchTally {
  std::size_t trials = 0;
  std::size_t applicable = 0;
  std::size_t valid = 0;
  std::size_t within_bound = 0;
  std::size_t edges = 0;
  std::size_t pivotable = 0;
  std::size_t dismountable = 0;
  std::map<std::size_t, std::size_t> minima;
};

int do_bench(const BenchArgs& a, std::ostream& out) {
  std::ostringstream csv;
  csv << "n,seed,algo,edges,bound,valid,millis\n";
  std::map<std::size_t, BenchTally> tally;
  for (std::size_t n : a.n_list) {
    for (std::size_t t = 0; t < a.trials; ++t) {
      const std::uint64_t seed = a.seed + t;
      const SimpleClique c = random_clique(n, seed);
      const auto start = std::chrono::steady_clock::now();
      auto run = run_algorithm(a.algo, c, a.k);
      const auto stop = std::chrono::steady_clock::now();
      const long long millis =
          a.no_timing ? 0 : std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
      const std::size_t bound = algorithm_bound(a.algo, n, a.k);
      BenchTally& b = tally[n];
      ++b.trials;
      csv << n << ',' << seed << ',' << a.algo << ',';
      if (run) {
        const bool ok = verify_spanner(c, run->spanner, Mode::kStrict);
        ++b.applicable;
        b.valid += ok;
        b.within_bound += run->spanner.size() <= bound;
        b.edges += run->spanner.size();
        csv << run->spanner.size() << ',' << bound << ',' << (ok ? "true" : "false");
      } else {
        csv << "na," << bound << ",na";
      }
      csv << ',' << millis << '\n';
      if (a.stats) {
        b.pivotable += find_pivot(c).has_value();
        b.dismountable += dismount_fully(c, 1).has_value();
        if (n <= 7) ++b.minima[min_spanner(c).size];
      }
    }
  }
  if (!a.csv.empty()) write_file(a.csv, csv.str());

  for (const auto& [n, b] : tally) {
    out << "n=" << n << " algo=" << a.algo << " trials=" << b.trials << " applicable=" << b.applicable
        << " valid=" << b.valid << " within_bound=" << b.within_bound;
    if (b.applicable) out << " mean_edges=" << static_cast<double>(b.edges) / static_cast<double>(b.applicable);
    out << "\n";
    if (a.stats) {
      out << "  pivotable=" << b.pivotable << "/" << b.trials << " dismountable_k1=" << b.dismountable
          << "/" << b.trials << "\n";
      if (!b.minima.empty()) {
        out << "  min_spanner sizes (2n-4=" << gossip_lower_bound(n) << ", 2n-3=" << 2 * n - 3 << "):";
        for (const auto& [size, count] : b.minima) out << " " << size << "x" << count;
        out << "\n";
      }
    }
  }
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse temporal spanners of simple temporal cliques", "tspan"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("--kind", gen.kind, "random|multi-random|non-pivotable|non-dismountable|fixture")->required();
  g->add_option("--n", gen.n, "vertex count");
  g->add_option("--m", gen.m, "gadget copies for non-dismountable");
  g->add_option("--name", gen.name, "fixture name");
  g->add_option("--seed", gen.seed, "PRNG seed");
  g->add_option("--max-labels", gen.max_labels, "labels per edge for multi-random");
  g->add_option("--out", gen.out, "output file, '-' for stdout");

  SpanArgs span;
  auto* s = app.add_subcommand("span", "Build a spanner");
  s->add_option("--algo", span.algo)->required()->check(CLI::IsMember(algorithm_names()));
  s->add_option("--in", span.in)->required();
  s->add_option("--out", span.out, "spanner JSON, '-' for stdout");
  s->add_option("--report", span.report);
  s->add_option("--dot", span.dot);
  s->add_option("--k", span.k, "hop budget for dismount")->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a spanner against its instance");
  v->add_option("--graph", verify.graph)->required();
  v->add_option("--spanner", verify.spanner)->required();
  v->add_option("--mode", verify.mode)->check(CLI::IsMember({"strict", "nonstrict"}));

  MinimizeArgs minimize;
  auto* mn = app.add_subcommand("minimize", "Exhaustive minimum spanner (n <= 7)");
  mn->add_option("--in", minimize.in)->required();
  mn->add_option("--max-n", minimize.max_n);
  mn->add_option("--out", minimize.out);

  ReduceArgs reduce;
  auto* r = app.add_subcommand("reduce", "Turn a multi-label instance into a simple one");
  r->add_option("--in", reduce.in)->required();
  r->add_option("--out", reduce.out);
  r->add_option("--map", reduce.map);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run an algorithm over random instances");
  b->add_option("--algo", bench.algo)->check(CLI::IsMember(algorithm_names()));
  b->add_option("--n-list", bench.n_list)->delimiter(',')->required();
  b->add_option("--trials", bench.trials);
  b->add_option("--seed", bench.seed);
  b->add_option("--csv", bench.csv);
  b->add_option("--k", bench.k)->check(CLI::PositiveNumber);
  b->add_flag("--stats", bench.stats, "also report pivotability, dismountability and minima");
  b->add_flag("--no-timing", bench.no_timing, "write 0 in the millis column");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (g->parsed()) return do_gen(gen, out);
    if (s->parsed()) return do_span(span, out, err);
    if (v->parsed()) return do_verify(verify, out);
    if (mn->parsed()) return do_minimize(minimize, out);
    if (r->parsed()) return do_reduce(reduce, out);
    if (b->parsed()) return do_bench(bench, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace tspan
