// lapbound: trace-based eigenvalue bounds for normalized and signless
// Laplacians.
//
//   lapbound report --graph FILE --matrix {normalized|signless|both} [--k K ...] --format F
//   lapbound verify --n-min A --n-max B --trials T --p P --seed S --format F
//   lapbound traces --graph FILE --format F
//
// Exit codes: 0 success, 1 input/usage error, 2 bound violation.

#include "lapbound/eigen.hpp"
#include "lapbound/report.hpp"
#include "lapbound/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

} // namespace

int main(int argc, char** argv) {
  using namespace lapbound;

  CLI::App app{"Trace-based eigenvalue bounds for normalized and signless Laplacians"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string matrix = "both";
  std::vector<std::size_t> ks;
  std::string format = "table";
  auto* report = app.add_subcommand("report", "Bounds and exact extreme eigenvalues for one graph");
  report->add_option("--graph", graph_path, "Edge-list file")->required();
  report->add_option("--matrix", matrix, "normalized | signless | both")->capture_default_str();
  report->add_option("--k", ks, "Eigenvalue indices for k-th bounds (1-based)");
  report->add_option("--format", format, "table | csv | json")->capture_default_str();

  VerifyConfig cfg;
  std::string verify_format = "table";
  auto* verify = app.add_subcommand("verify", "Property suite over seeded random connected graphs");
  verify->add_option("--n-min", cfg.n_min)->capture_default_str();
  verify->add_option("--n-max", cfg.n_max)->capture_default_str();
  verify->add_option("--trials", cfg.trials)->capture_default_str();
  verify->add_option("--p", cfg.p, "Edge probability")->capture_default_str();
  verify->add_option("--seed", cfg.seed)->capture_default_str();
  verify->add_option("--format", verify_format, "table | csv | json")->capture_default_str();

  std::string traces_path;
  std::string traces_format = "table";
  auto* traces = app.add_subcommand("traces", "Closed-form vs matrix-power traces");
  traces->add_option("--graph", traces_path, "Edge-list file")->required();
  traces->add_option("--format", traces_format, "table | csv | json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*report) {
      const Format f = parse_format(format);
      const MatrixSelection sel = parse_matrix_selection(matrix);
      const Graph g = read_edge_list_file(graph_path);
      const BoundReport r = build_report(g, sel, ks);
      std::cout << render_report(r, f);
      return r.consistent() ? kExitOk : kExitViolation;
    }
    if (*verify) {
      const Format f = parse_format(verify_format);
      const VerifySummary s = run_verify(cfg);
      std::cout << render_verify(s, f);
      return s.passed() ? kExitOk : kExitViolation;
    }
    if (*traces) {
      const Format f = parse_format(traces_format);
      const Graph g = read_edge_list_file(traces_path);
      std::cout << render_traces(build_traces(g), f);
      return kExitOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
