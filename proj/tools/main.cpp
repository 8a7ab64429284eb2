#include "CLI11.hpp"
#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace {

using lpath::cli::Format;
using lpath::cli::OutputRecord;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longest directed paths in acyclic orientations of complete bipartite graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  std::string out_path;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  std::size_t n = 1, k = 1;
  auto add_nk = [&](CLI::App* sub) {
    sub->add_option("n", n, "Size of the first part")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("k", k, "Size of the second part")->required()->check(CLI::NonNegativeNumber);
  };

  auto* dist = app.add_subcommand("dist", "Exact distribution of the longest path length");
  add_nk(dist);
  auto* pgf = app.add_subcommand("pgf", "Probability generating polynomial");
  add_nk(pgf);
  auto* stats = app.add_subcommand("stats", "Exact mean and variance");
  add_nk(stats);

  lpath::cli::SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Draw uniform acyclic orientations");
  sample->add_option("n", sample_args.n)->required();
  sample->add_option("k", sample_args.k)->required();
  sample->add_option("count", sample_args.count, "Number of samples (default 1000)");
  sample->add_option("--seed", sample_args.seed, "Random seed");
  sample->add_option("--dump", sample_args.dump_path, "Write every sampled matrix to this file");

  std::size_t max_nk = 16;
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "Cross-check exact formulas against brute force");
  verify->add_option("--max-nk", max_nk, "Largest n*k to enumerate")->check(CLI::Range(1, 20));
  verify->add_flag("--inject-fault", inject_fault)->group("");

  std::size_t order = 8;
  auto* series = app.add_subcommand("series-check", "Check generating function expansions");
  series->add_option("--order", order, "Truncation order in x and y")->check(CLI::Range(0, 14));

  lpath::cli::AsymptArgs asympt_args;
  auto* asympt = app.add_subcommand("asympt", "Compare exact values with asymptotic estimates");
  asympt->add_option("--n-list", asympt_args.n_list)->delimiter(',');
  asympt->add_option("--u-list", asympt_args.u_list)->delimiter(',');
  asympt->add_flag("--curvature", asympt_args.curvature, "Also certify strict minimality");
  asympt->add_option("--grid", asympt_args.grid, "Torus grid size for the certificate");

  std::vector<std::size_t> plot_n{2, 5, 10, 20, 30};
  auto* plot = app.add_subcommand("plot-data", "CSV of P(L = l) for several n");
  plot->add_option("--n-list", plot_n)->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format format = lpath::cli::parse_format(format_name);
  OutputRecord record;
  try {
    if (*dist) record = lpath::cli::cmd_dist(n, k);
    else if (*pgf) record = lpath::cli::cmd_pgf(n, k);
    else if (*stats) record = lpath::cli::cmd_stats(n, k);
    else if (*sample) record = lpath::cli::cmd_sample(sample_args);
    else if (*verify) record = lpath::cli::cmd_verify(max_nk, inject_fault);
    else if (*series) record = lpath::cli::cmd_series_check(order);
    else if (*asympt) record = lpath::cli::cmd_asympt(asympt_args);
    else if (*plot) record = lpath::cli::cmd_plotdata(plot_n, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }

  // plot-data writes its own file; its stdout carries only a summary line.
  if (!out_path.empty() && !*plot) {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return kExitRuntime;
    }
    lpath::cli::emit(file, record, format);
  } else if (*plot && !out_path.empty() && format == Format::csv) {
    std::cout << record.table;
  } else {
    lpath::cli::emit(std::cout, record, format);
  }
  return record.ok ? kExitOk : kExitCheckFailed;
}
