#include <exception>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dcpm/io.hpp"

namespace {

void add_common_options(CLI::App* cmd, dcpm::io::RunConfig& config, std::string& orders_csv) {
  cmd->add_option("--input", config.input, "temporal edge list: `src dst timestamp` lines")
      ->required();
  auto* periods =
      cmd->add_option("--periods", config.periods, "number of equal-width periods");
  auto* boundaries = cmd->add_option("--boundaries", config.boundaries_file,
                                     "file with explicit period end timestamps");
  periods->excludes(boundaries);
  cmd->add_option("--window", config.window, "moving-average window length")
      ->default_val(3)
      ->check(CLI::PositiveNumber);
  cmd->add_option("--orders", orders_csv, "comma-separated orders to export (default: all >= 2)");
  cmd->add_option("--out", config.out_dir, "output directory")->default_val(".");
  cmd->add_option("--format", config.format, "persistence diagram format")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));
}

std::set<int> parse_orders(const std::string& csv) {
  std::set<int> orders;
  std::istringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const int k = std::stoi(tok);
    if (k < 2) throw std::invalid_argument("orders must be >= 2");
    orders.insert(k);
  }
  return orders;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clique-community tracking over growing networks"};
  app.require_subcommand(1);

  dcpm::io::RunConfig config;
  std::string orders_csv;

  CLI::App* run = app.add_subcommand("run", "build and track community trees per period");
  add_common_options(run, config, orders_csv);

  CLI::App* bench = app.add_subcommand(
      "bench", "run, additionally timing a from-scratch rebuild per period");
  add_common_options(bench, config, orders_csv);

  CLI11_PARSE(app, argc, argv);

  try {
    config.orders = parse_orders(orders_csv);
    config.bench = bench->parsed();
    dcpm::io::run_pipeline(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
