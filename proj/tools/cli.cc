#include "cli.h"

#include <fstream>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "icol/coloring.h"
#include "icol/construct.h"
#include "icol/error.h"
#include "icol/graph.h"
#include "icol/invariants.h"
#include "icol/io.h"
#include "icol/oracle.h"
#include "json.hpp"

namespace icol::cli {
namespace {

struct Options {
  std::string graph_path;
  std::string coloring_path;
  std::string output_path;
  std::string mode = "interval";
  int t = 0;
  bool exact = false;
  std::optional<int> t_max;
  int limit_edges = kDefaultOracleEdgeLimit;
  int max_edges = 6;
};

int ExitCodeFor(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kNotTree:
    case ErrorKind::kEdgeless:
      return kNotTree;
    case ErrorKind::kSizeLimit:
      return kSizeLimit;
    default:
      return kBadInput;
  }
}

Graph LoadGraph(const Options& opts) {
  return ParseGraph(ReadFile(opts.graph_path));
}

int Analyze(const Options& opts, std::ostream& out, std::ostream& err) {
  Graph g = LoadGraph(opts);
  if (opts.exact) {
    OracleResult result = ExactSpectrum(g, opts.t_max, {opts.limit_edges},
                                        opts.graph_path);
    out << DumpSpectrumReportJson(SpectrumFromOracle(g, result));
    return kOk;
  }
  if (!IsTree(g)) {
    err << "error: graph is not a tree; use --exact for an exhaustive report\n";
    return kNotTree;
  }
  out << DumpSpectrumReportJson(SpectrumTree(g));
  return kOk;
}

int Color(const Options& opts, std::ostream& out, std::ostream& err) {
  Graph g = LoadGraph(opts);
  if (!IsTree(g)) {
    err << "error: colorings are only constructed for trees\n";
    return kNotTree;
  }
  ConstructionResult result =
      Construct(g, {.t = opts.t, .mode = ParseColoringMode(opts.mode)});
  if (const auto* infeasible = std::get_if<Infeasibility>(&result)) {
    err << "infeasible: " << infeasible->Describe() << "\n";
    return kInfeasible;
  }
  out << DumpColoringJson(std::get<Coloring>(result));
  return kOk;
}

int Verify(const Options& opts, std::ostream& out, std::ostream&) {
  Graph g = LoadGraph(opts);
  Coloring c = ParseColoringJson(ReadFile(opts.coloring_path));
  ColoringMode mode = ParseColoringMode(opts.mode);
  ValidateColoring(g, c);
  Verdict verdict = Check(g, c, mode);

  nlohmann::ordered_json doc;
  doc["mode"] = ColoringModeName(mode);
  doc["ok"] = verdict.ok();
  if (const std::optional<Violation>& v = verdict.violation) {
    nlohmann::ordered_json witness;
    switch (v->kind) {
      case Violation::Kind::kAdjacentClash:
        witness["kind"] = "adjacent-clash";
        witness["vertex"] = v->vertex;
        witness["edges"] = {v->first_edge, v->second_edge};
        witness["color"] = v->color;
        break;
      case Violation::Kind::kUnusedColor:
        witness["kind"] = "unused-color";
        witness["color"] = v->color;
        break;
      case Violation::Kind::kNotInterval:
      case Violation::Kind::kNotCyclicInterval:
        witness["kind"] = v->kind == Violation::Kind::kNotInterval
                              ? "not-interval"
                              : "not-cyclic-interval";
        witness["vertex"] = v->vertex;
        witness["star"] = v->star->Members();
        break;
    }
    witness["message"] = v->Describe();
    doc["violation"] = witness;
  }
  out << doc.dump() << "\n";
  return verdict.ok() ? kOk : kCheckFailed;
}

int Spectrum(const Options& opts, std::ostream& out, std::ostream&) {
  Graph g = LoadGraph(opts);
  out << DumpOracleResultJson(
      ExactSpectrum(g, opts.t_max, {opts.limit_edges}, opts.graph_path));
  return kOk;
}

int ExportDot(const Options& opts, std::ostream& out, std::ostream&) {
  Graph g = LoadGraph(opts);
  std::optional<Coloring> coloring;
  if (!opts.coloring_path.empty()) {
    coloring = ParseColoringJson(ReadFile(opts.coloring_path));
  }
  out << DumpDot(g, coloring);
  return kOk;
}

int Catalog(const Options& opts, std::ostream& out, std::ostream& err) {
  OracleLimits limits{opts.limit_edges};
  std::vector<Graph> trees = TreeCatalog(opts.max_edges, limits);
  int disagreements = 0;
  for (const Graph& tree : trees) {
    SpectrumReport formula = SpectrumTree(tree);
    OracleResult oracle = ExactSpectrum(tree, {}, limits);
    bool agree = *formula.theta == oracle.theta &&
                 *formula.theta_cyc == oracle.theta_cyc;
    disagreements += agree ? 0 : 1;
    nlohmann::ordered_json record;
    record["graph"] = nlohmann::ordered_json::parse(DumpGraphJson(tree));
    record["num_edges"] = tree.num_edges();
    record["delta"] = formula.delta;
    record["m_of_h"] = *formula.m_of_h;
    record["theta_formula"] = *formula.theta;
    record["theta_oracle"] = oracle.theta;
    record["theta_cyc_oracle"] = oracle.theta_cyc;
    record["agree"] = agree;
    out << record.dump() << "\n";
  }
  if (disagreements > 0) {
    err << disagreements << " of " << trees.size()
        << " trees disagree with the formula\n";
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Interval and cyclically-interval edge colorings of trees",
               "icol"};
  app.require_subcommand(1);
  Options opts;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", opts.output_path,
                    "Write machine output to this file instead of stdout");
  };
  auto add_limit = [&](CLI::App* cmd) {
    cmd->add_option("--limit-edges", opts.limit_edges,
                    "Edge limit for exhaustive search")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Report Δ, χ', M and both spectra of a graph");
  analyze->add_option("graph", opts.graph_path, "Graph file")->required();
  analyze->add_flag("--exact", opts.exact,
                    "Compute the spectra by exhaustive search (any graph)");
  analyze->add_option("--t-max", opts.t_max, "Largest palette size searched");
  add_limit(analyze);
  add_output(analyze);

  CLI::App* color = app.add_subcommand(
      "color", "Construct an interval t-coloring of a tree");
  color->add_option("graph", opts.graph_path, "Tree file")->required();
  color->add_option("--t", opts.t, "Palette size")->required();
  color->add_option("--mode", opts.mode, "interval | cyclic")
      ->check(CLI::IsMember({"interval", "cyclic"}));
  add_output(color);

  CLI::App* verify = app.add_subcommand(
      "verify", "Check a coloring; exit 0 on pass, 1 on failure");
  verify->add_option("graph", opts.graph_path, "Graph file")->required();
  verify->add_option("coloring", opts.coloring_path, "Coloring JSON")
      ->required();
  verify->add_option("--mode", opts.mode, "proper | interval | cyclic")
      ->check(CLI::IsMember({"proper", "interval", "cyclic"}));
  add_output(verify);

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Per-t coloring counts and exact spectra by exhaustive search");
  spectrum->add_option("graph", opts.graph_path, "Graph file")->required();
  spectrum->add_option("--t-max", opts.t_max, "Largest palette size searched");
  add_limit(spectrum);
  add_output(spectrum);

  CLI::App* dot = app.add_subcommand(
      "export-dot", "Write the graph in DOT, labelling edges with colors");
  dot->add_option("graph", opts.graph_path, "Graph file")->required();
  dot->add_option("coloring", opts.coloring_path, "Optional coloring JSON");
  add_output(dot);

  CLI::App* catalog = app.add_subcommand(
      "catalog", "Compare formula and exhaustive spectra on all small trees");
  catalog->add_option("--max-edges", opts.max_edges,
                      "Largest tree size in the catalog")
      ->check(CLI::PositiveNumber);
  add_limit(catalog);
  add_output(catalog);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (*analyze) code = Analyze(opts, buffer, err);
    if (*color) code = Color(opts, buffer, err);
    if (*verify) code = Verify(opts, buffer, err);
    if (*spectrum) code = Spectrum(opts, buffer, err);
    if (*dot) code = ExportDot(opts, buffer, err);
    if (*catalog) code = Catalog(opts, buffer, err);
  } catch (const Error& e) {
    err << "error (" << ErrorKindName(e.kind()) << "): " << e.what() << "\n";
    return ExitCodeFor(e);
  }

  if (opts.output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(opts.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << opts.output_path << "\n";
      return kBadInput;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace icol::cli
