#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "icnsim/experiment.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw icnsim::IoError("cannot read topology file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "--seeds 50" expands to seeds 0..49; "--seeds 3,7,9" is the explicit list.
std::vector<std::uint64_t> parse_seeds(const std::string& arg) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(arg);
  std::string token;
  bool list = arg.find(',') != std::string::npos;
  while (std::getline(ss, token, ',')) {
    size_t used = 0;
    std::uint64_t value = 0;
    try {
      value = std::stoull(token, &used);
    } catch (const std::exception&) {
      throw icnsim::ConfigError("cannot parse seed '" + token + "'");
    }
    if (used != token.size()) {
      throw icnsim::ConfigError("cannot parse seed '" + token + "'");
    }
    seeds.push_back(value);
  }
  if (seeds.empty()) {
    throw icnsim::ConfigError("empty seed specification");
  }
  if (!list) {
    const std::uint64_t count = seeds.front();
    if (count == 0) {
      throw icnsim::ConfigError("seed count must be >= 1");
    }
    seeds.assign(count, 0);
    for (std::uint64_t i = 0; i < count; ++i) {
      seeds[i] = i;
    }
  }
  return seeds;
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "icnsim - Q-learning interest forwarding on a content-router mesh.\n"
      "Trains a tabular agent to route interests over minimum-hop paths and\n"
      "writes per-episode convergence series plus summaries for plotting."};

  std::string topology_arg = "default";
  std::string seeds_arg = "50";
  std::string out_dir = "results";
  std::string format_arg = "csv";
  std::string dump_qtable_path;
  icnsim::ExperimentConfig config;

  app.add_option("--topology", topology_arg,
                 "Topology: 'default' (3x3 grid) or a topology file path")
      ->capture_default_str();
  app.add_option("--alpha", config.alphas, "Learning rate list, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--gamma", config.gammas, "Discount factor list, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--epsilon", config.epsilon, "Exploration probability")
      ->capture_default_str();
  app.add_option("--episodes", config.episodes, "Episodes per run")->capture_default_str();
  app.add_option("--seeds", seeds_arg, "Seed count (N -> seeds 0..N-1) or comma list")
      ->capture_default_str();
  app.add_option("--r-step", config.rewards.step, "Per-hop reward")->capture_default_str();
  app.add_option("--r-goal", config.rewards.goal, "Terminal content-hit reward")
      ->capture_default_str();
  app.add_option("--r-fail", config.rewards.fail, "Hop-budget-exhausted reward")
      ->capture_default_str();
  app.add_option("--hop-budget", config.hop_budget,
                 "Max hops per episode (0 = twice the router count)")
      ->capture_default_str();
  app.add_flag("--on-path-caching", config.on_path_caching,
               "Cache retrieved content along the data return path");
  app.add_option("--consumer", config.consumer, "Consumer-attached router id")
      ->capture_default_str();
  app.add_option("--producer", config.producer, "Router id holding the requested content")
      ->capture_default_str();
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_option("--format", format_arg, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--dump-qtable", dump_qtable_path,
                 "Write the last run's Q-table as JSON to this path");
  app.add_option("--jobs", config.jobs, "Worker threads for the sweep")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (topology_arg != "default") {
      config.topology = icnsim::load_topology(read_file(topology_arg));
    }
    config.seeds = parse_seeds(seeds_arg);

    const auto start = std::chrono::steady_clock::now();
    const icnsim::SweepResult results = icnsim::sweep(config);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    for (const auto& cell : results.cells) {
      std::cout << "alpha=" << fmt6(cell.alpha) << " gamma=" << fmt6(cell.gamma)
                << "  converged " << fmt6(cell.fraction_converged * 100.0) << "% of "
                << cell.runs << " seeds, median convergence iteration "
                << fmt6(cell.median_convergence) << " (IQR " << fmt6(cell.iqr_low) << ".."
                << fmt6(cell.iqr_high) << ")\n";
    }
    std::cout << results.runs.size() << " runs in " << fmt6(elapsed) << " s\n";

    const auto format =
        format_arg == "csv" ? icnsim::ReportFormat::csv : icnsim::ReportFormat::json;
    for (const auto& path : icnsim::emit_report(results, format, out_dir)) {
      std::cout << "wrote " << path.string() << "\n";
    }

    if (!dump_qtable_path.empty()) {
      std::ofstream out(dump_qtable_path, std::ios::binary);
      if (!out) {
        throw icnsim::IoError("cannot open '" + dump_qtable_path + "' for writing");
      }
      out << icnsim::qtable_to_json(results.runs.back().qtable);
      if (!out.good()) {
        throw icnsim::IoError("failed while writing '" + dump_qtable_path + "'");
      }
      std::cout << "wrote " << dump_qtable_path << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
