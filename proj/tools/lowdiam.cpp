// Command-line driver: graph generation, partitioning, validation, beta
// sweeps and SVG rendering of grid decompositions.
//
// Exit codes: 0 ok, 2 usage/input error, 3 partition thresholds unmet,
// 4 validation failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lowdiam/generators.hpp"
#include "lowdiam/graph.hpp"
#include "lowdiam/io.hpp"
#include "lowdiam/metrics.hpp"
#include "lowdiam/oracle.hpp"
#include "lowdiam/parallel.hpp"
#include "lowdiam/partition.hpp"
#include "lowdiam/render.hpp"
#include "lowdiam/shifts.hpp"
#include "lowdiam/validate.hpp"

namespace {

using namespace lowdiam;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitThresholds = 3;
constexpr int kExitInvalid = 4;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

TieBreak parse_tiebreak(const std::string& name) {
  if (name == "fractional") return TieBreak::fractional;
  if (name == "permutation") return TieBreak::permutation;
  throw std::runtime_error("unknown tie-break mode: " + name);
}

void write_report(std::ostream& out, const Graph& g, double beta, std::uint64_t seed,
                  const RunReport& rep) {
  char buf[64];
  auto num = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return std::string(buf);
  };
  out << "n " << g.n << '\n'
      << "m " << g.m << '\n'
      << "beta " << num(beta) << '\n'
      << "seed " << seed << '\n'
      << "retries " << rep.retries << '\n'
      << "cut_edges " << rep.cut_edges << '\n'
      << "cut_fraction " << num(g.m == 0 ? 0.0 : double(rep.cut_edges) / double(g.m)) << '\n'
      << "delta_max " << num(rep.delta_max) << '\n'
      << "max_piece_radius " << rep.max_piece_radius << '\n'
      << "levels " << rep.levels << '\n'
      << "edge_touches " << rep.edge_touches << '\n'
      << "pieces " << rep.pieces << '\n'
      << "thresholds_met " << (rep.thresholds_met ? 1 : 0) << '\n'
      << "diam_threshold " << num(rep.diam_threshold_used) << '\n'
      << "cut_threshold " << num(rep.cut_threshold_used) << '\n';
}

struct GenArgs {
  std::string kind, out;
  std::uint32_t rows = 0, cols = 0, n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

int run_gen(const GenArgs& a) {
  Graph g;
  if (a.kind == "grid")
    g = gen_grid(a.rows, a.cols);
  else if (a.kind == "path")
    g = gen_path(a.n);
  else if (a.kind == "complete")
    g = gen_complete(a.n);
  else if (a.kind == "gnp")
    g = gen_gnp(a.n, a.p, a.seed);
  else
    throw std::runtime_error("unknown graph kind: " + a.kind);
  auto out = open_output(a.out);
  save_edgelist(g, out);
  std::cerr << "wrote " << a.kind << " graph: n=" << g.n << " m=" << g.m << '\n';
  return kExitOk;
}

struct PartitionArgs {
  std::string input, labels, report, shifts_file, dump_shifts;
  std::string tiebreak = "fractional";
  double beta = 0.0, diam_threshold = -1, cut_threshold = -1;
  std::uint64_t seed = 0;
  int retries = 10, threads = 0;
};

int run_partition(const PartitionArgs& a) {
  if (!(a.beta > 0.0 && a.beta <= 0.5)) {
    std::cerr << "error: --beta must be in (0, 1/2]\n";
    return kExitUsage;
  }
  auto in = open_input(a.input);
  Graph g = load_edgelist(in);
  TieBreak mode = parse_tiebreak(a.tiebreak);
  int threads = a.threads > 0 ? a.threads : ThreadPool::hardware_threads();

  Decomposition d;
  RunReport rep;
  ShiftAssignment shifts;
  if (!a.shifts_file.empty()) {
    auto sf = open_input(a.shifts_file);
    shifts = shifts_from_values(load_shift_values(sf, g.n), mode, a.seed, a.beta);
    std::tie(d, rep) = partition_once(g, shifts, threads);
    rep.diam_threshold_used =
        a.diam_threshold >= 0 ? a.diam_threshold : default_diam_threshold(g.n, a.beta);
    rep.cut_threshold_used =
        a.cut_threshold >= 0 ? a.cut_threshold : default_cut_threshold(g.m, a.beta);
    rep.thresholds_met = rep.cut_edges <= rep.cut_threshold_used &&
                         2.0 * double(rep.max_piece_radius) <= rep.diam_threshold_used;
  } else {
    RunConfig cfg;
    cfg.beta = a.beta;
    cfg.seed = a.seed;
    cfg.tiebreak = mode;
    cfg.max_retries = a.retries;
    cfg.diam_threshold = a.diam_threshold;
    cfg.cut_threshold = a.cut_threshold;
    cfg.threads = threads;
    std::tie(d, rep) = partition(g, cfg);
    shifts = sample_shifts(g.n, a.beta, rep.shift_seed, mode);
  }

  auto lout = open_output(a.labels);
  save_labels(d.owner, lout);
  if (!a.report.empty()) {
    auto rout = open_output(a.report);
    write_report(rout, g, a.beta, a.seed, rep);
  }
  if (!a.dump_shifts.empty()) {
    auto sout = open_output(a.dump_shifts);
    save_shift_values(shifts.delta, sout);
  }
  write_report(std::cout, g, a.beta, a.seed, rep);
  return rep.thresholds_met ? kExitOk : kExitThresholds;
}

struct SweepArgs {
  std::string input, out;
  std::vector<double> betas;
  std::string tiebreak = "fractional";
  int trials = 50, threads = 0;
  std::uint64_t seed = 0;
};

int run_sweep(const SweepArgs& a) {
  auto in = open_input(a.input);
  Graph g = load_edgelist(in);
  int threads = a.threads > 0 ? a.threads : ThreadPool::hardware_threads();
  SweepStats stats = sweep(g, a.betas, a.trials, a.seed, threads, parse_tiebreak(a.tiebreak));
  auto out = open_output(a.out);
  write_sweep_csv(stats, out);
  write_sweep_csv(stats, std::cout);
  return kExitOk;
}

struct RenderArgs {
  std::string labels, out;
  std::uint32_t rows = 0, cols = 0;
  int cell = 4;
};

int run_render(const RenderArgs& a) {
  if (a.rows < 1 || a.cols < 1) {
    std::cerr << "error: --rows and --cols must be >= 1\n";
    return kExitUsage;
  }
  std::uint64_t cells = std::uint64_t(a.rows) * a.cols;
  if (cells > std::numeric_limits<std::uint32_t>::max())
    throw std::runtime_error("grid too large to render");
  auto lin = open_input(a.labels);
  std::vector<Vertex> owner = load_labels(lin, static_cast<std::uint32_t>(cells));
  for (std::size_t v = 0; v < owner.size(); ++v)
    if (owner[v] == kNoVertex)
      throw std::runtime_error("labels file does not cover vertex " + std::to_string(v) +
                               " of the " + std::to_string(a.rows) + "x" +
                               std::to_string(a.cols) + " grid");
  auto out = open_output(a.out);
  render_grid_svg(a.rows, a.cols, owner, out, a.cell);
  return kExitOk;
}

struct ValidateArgs {
  std::string input, labels;
  double beta = 0.0, diam_threshold = -1, cut_threshold = -1;
};

int run_validate(const ValidateArgs& a) {
  if (!(a.beta > 0.0 && a.beta <= 0.5)) {
    std::cerr << "error: --beta must be in (0, 1/2]\n";
    return kExitUsage;
  }
  auto in = open_input(a.input);
  Graph g = load_edgelist(in);
  auto lin = open_input(a.labels);
  Decomposition d{load_labels(lin, g.n)};
  ValidationReport r = validate(g, d, a.beta, a.diam_threshold, a.cut_threshold);
  std::cout << "is_partition " << r.is_partition << '\n'
            << "pieces_connected " << r.pieces_connected << '\n'
            << "cut_edges " << r.cut_edges << '\n'
            << "cut_fraction " << r.cut_fraction << '\n';
  if (r.max_strong_diameter == kInfiniteDiameter)
    std::cout << "max_strong_diameter inf\n";
  else
    std::cout << "max_strong_diameter " << r.max_strong_diameter << '\n';
  std::cout << "diameter_exact " << r.diameter_exact << '\n'
            << "pass_cut " << r.pass_cut << '\n'
            << "pass_diam " << r.pass_diam << '\n';
  for (const std::string& v : r.violations) std::cout << "violation " << v << '\n';
  return r.ok() ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"low-diameter graph decomposition via exponentially shifted BFS"};
  app.require_subcommand(1);

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "generate a graph and write it as an edge list");
  gen->add_option("--kind", ga.kind, "grid | path | complete | gnp")->required();
  gen->add_option("--rows", ga.rows, "grid rows");
  gen->add_option("--cols", ga.cols, "grid cols");
  gen->add_option("--n", ga.n, "vertex count (path/complete/gnp)");
  gen->add_option("--p", ga.p, "edge probability (gnp)");
  gen->add_option("--seed", ga.seed, "rng seed (gnp)");
  gen->add_option("-o,--output", ga.out, "edge list output path")->required();

  PartitionArgs pa;
  auto* part = app.add_subcommand("partition", "decompose a graph into low-diameter pieces");
  part->add_option("-i,--input", pa.input, "edge list input path")->required();
  part->add_option("--beta", pa.beta, "cut parameter in (0, 1/2]")->required();
  part->add_option("--seed", pa.seed, "rng seed");
  part->add_option("--tiebreak", pa.tiebreak, "fractional | permutation");
  part->add_option("--retries", pa.retries, "max attempts before giving up");
  part->add_option("--diam-threshold", pa.diam_threshold, "override 4*ln(n)/beta");
  part->add_option("--cut-threshold", pa.cut_threshold, "override 2*beta*m");
  part->add_option("--threads", pa.threads, "worker threads (default: hardware)");
  part->add_option("-o,--labels", pa.labels, "labels output path")->required();
  part->add_option("--report", pa.report, "report output path");
  part->add_option("--shifts-file", pa.shifts_file, "inject explicit shifts, skip retries");
  part->add_option("--dump-shifts", pa.dump_shifts, "write the shifts actually used");

  SweepArgs sa;
  auto* sw = app.add_subcommand("sweep", "run a beta grid of partition experiments");
  sw->add_option("-i,--input", sa.input, "edge list input path")->required();
  sw->add_option("--betas", sa.betas, "comma-separated beta values")
      ->required()
      ->delimiter(',');
  sw->add_option("--trials", sa.trials, "trials per beta");
  sw->add_option("--seed", sa.seed, "rng seed");
  sw->add_option("--tiebreak", sa.tiebreak, "fractional | permutation");
  sw->add_option("--threads", sa.threads, "worker threads (default: hardware)");
  sw->add_option("-o,--output", sa.out, "CSV output path")->required();

  RenderArgs ra;
  auto* ren = app.add_subcommand("render", "render grid labels as an SVG patchwork");
  ren->add_option("--rows", ra.rows, "grid rows")->required();
  ren->add_option("--cols", ra.cols, "grid cols")->required();
  ren->add_option("--labels", ra.labels, "labels input path")->required();
  ren->add_option("--cell", ra.cell, "cell size in px");
  ren->add_option("-o,--output", ra.out, "SVG output path")->required();

  ValidateArgs va;
  auto* val = app.add_subcommand("validate", "check labels against the decomposition contract");
  val->add_option("-i,--input", va.input, "edge list input path")->required();
  val->add_option("--labels", va.labels, "labels input path")->required();
  val->add_option("--beta", va.beta, "cut parameter in (0, 1/2]")->required();
  val->add_option("--diam-threshold", va.diam_threshold, "override 4*ln(n)/beta");
  val->add_option("--cut-threshold", va.cut_threshold, "override 2*beta*m");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return run_gen(ga);
    if (part->parsed()) return run_partition(pa);
    if (sw->parsed()) return run_sweep(sa);
    if (ren->parsed()) return run_render(ra);
    if (val->parsed()) return run_validate(va);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
