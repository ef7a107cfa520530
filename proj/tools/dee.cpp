// dee: distance Estrada index and bounds for simple connected graphs.
//
// Exit codes:
//   0  success
//   1  usage error, unknown family, bad parameter, I/O failure
//   2  graph file could not be parsed
//   3  graph is disconnected
//   4  eigensolver did not converge

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dee/bounds.hpp"
#include "dee/graph.hpp"
#include "dee/report.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kDisconnected = 3, kNoConvergence = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must look like <start>..<end>");
  std::size_t used_a = 0, used_b = 0;
  int a = std::stoi(text.substr(0, dots), &used_a);
  int b = std::stoi(text.substr(dots + 2), &used_b);
  if (used_a != dots || used_b != text.size() - dots - 2 || a > b)
    throw std::invalid_argument("bad range '" + text + "'");
  return {a, b};
}

int cmd_gen(const std::string& family_name, std::optional<int> order, const std::string& out) {
  auto tag = dee::family_from_name(family_name);
  if (dee::family_takes_order(tag) && !order)
    throw std::invalid_argument("family '" + family_name + "' needs a vertex count");
  if (!dee::family_takes_order(tag) && order)
    throw std::invalid_argument("family '" + family_name + "' takes no parameter");
  write_output(out, dee::serialize_graph(dee::generate({tag, order.value_or(0)})));
  return kOk;
}

int cmd_compute(const std::string& input, bool table, int precision, int max_sweeps) {
  const std::string text = read_input(input);
  const dee::Graph g = dee::parse_graph(text);
  dee::JacobiOptions jacobi;
  jacobi.max_sweeps = max_sweeps;
  const dee::BoundsReport rep = dee::bounds_report(g, jacobi);
  const dee::ReportInput in{g, rep, std::nullopt, text};
  const dee::ReportOptions opt{precision};
  if (table)
    std::cout << dee::report_table(in, opt);
  else
    std::cout << dee::report_json(in, opt).dump(2) << '\n';
  return kOk;
}

int cmd_sweep(const std::string& family_name, const std::string& range, bool json, int precision,
              const std::string& out) {
  auto tag = dee::family_from_name(family_name);
  if (!dee::family_takes_order(tag))
    throw std::invalid_argument("family '" + family_name + "' has no size parameter to sweep");
  auto [start, end] = parse_range(range);
  auto rows = dee::run_sweep(tag, start, end);
  const dee::ReportOptions opt{precision};
  write_output(out, json ? dee::sweep_json(tag, rows, opt).dump(2) + "\n" : dee::sweep_csv(tag, rows, opt));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance Estrada index, Wiener index and DEE bounds for graphs"};
  app.require_subcommand(1);

  std::string family, out_path, input, range;
  std::optional<int> order;
  bool as_table = false, as_json = false, as_csv = false;
  int precision = 6;
  int max_sweeps = 100;

  auto* gen = app.add_subcommand("gen", "Write a named graph as a graph file");
  gen->add_option("family", family, "complete | cycle | path | star | tree5 | c60")->required();
  gen->add_option("n", order, "Vertex count for sized families");
  gen->add_option("-o,--output", out_path, "Output file (default: stdout)");

  auto* compute = app.add_subcommand("compute", "Profile, spectrum, DEE and bounds of a graph file");
  compute->add_option("input", input, "Graph file, or - for stdin")->required();
  auto* json_flag = compute->add_flag("--json", as_json, "Structured output (default)");
  compute->add_flag("--table", as_table, "Human-readable table")->excludes(json_flag);
  compute->add_option("--precision", precision, "Significant digits")->check(CLI::Range(1, 17));
  compute->add_option("--max-sweeps", max_sweeps, "Jacobi sweep limit")->check(CLI::Range(0, 10000));

  auto* sweep = app.add_subcommand("sweep", "Bounds tightness over a family size range");
  sweep->add_option("family", family, "complete | cycle | path | star")->required();
  sweep->add_option("range", range, "<start>..<end>")->required();
  auto* sweep_json = sweep->add_flag("--json", as_json, "JSON document");
  sweep->add_flag("--csv", as_csv, "CSV table (default)")->excludes(sweep_json);
  sweep->add_option("--precision", precision, "Significant digits")->check(CLI::Range(1, 17));
  sweep->add_option("-o,--output", out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(family, order, out_path);
    if (*compute) return cmd_compute(input, as_table, precision, max_sweeps);
    if (*sweep) return cmd_sweep(family, range, as_json, precision, out_path);
  } catch (const dee::ParseError& e) {
    std::cerr << "dee: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const dee::DisconnectedGraph& e) {
    std::cerr << "dee: " << e.what() << '\n';
    return kDisconnected;
  } catch (const dee::NoConvergence& e) {
    std::cerr << "dee: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const IoError& e) {
    std::cerr << "dee: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "dee: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
