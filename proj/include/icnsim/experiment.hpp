#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "icnsim/qlearning.hpp"

namespace icnsim {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Full description of a sweep: topology, scenario, hyperparameter grid,
// seeds, and episode budget. The defaults reproduce the canonical study:
// consumer at H9 requesting c1 held by H1 on the 3x3 grid, alpha and gamma
// each swept over {0.1, 0.5, 0.9}, epsilon fixed at 0.5, 500 episodes,
// seeds 0..49.
struct ExperimentConfig {
  Topology topology = default_topology();
  RouterId consumer = 9;
  RouterId producer = 1;
  std::vector<ContentName> catalog = {"c1", "c2", "c3"};
  ContentName requested = "c1";
  std::vector<double> alphas = {0.1, 0.5, 0.9};
  std::vector<double> gammas = {0.1, 0.5, 0.9};
  double epsilon = 0.5;
  int episodes = 500;
  std::vector<std::uint64_t> seeds = default_seeds();
  RewardConfig rewards;
  int hop_budget = 0;  // 0 -> 2 * router count
  bool on_path_caching = false;
  int convergence_window = kDefaultConvergenceWindow;
  int jobs = 1;

  static std::vector<std::uint64_t> default_seeds();  // 0..49
};

// Throws ConfigError when any field is out of range.
void validate(const ExperimentConfig& config);

struct EpisodeRecord {
  int iteration = 0;            // 1-based episode index within the run
  double episode_reward = 0.0;  // cumulative behavior-policy reward
  int episode_stretch = 0;      // hops taken by the behavior policy
  double greedy_stretch = 0.0;  // post-episode greedy rollout, +inf on a loop
  bool converged = false;       // trailing window entirely at oracle stretch
};

struct RunSummary {
  double alpha = 0.0;
  double gamma = 0.0;
  std::uint64_t seed = 0;
  std::optional<int> convergence_iteration;  // first converged episode, if any
  double final_greedy_stretch = 0.0;
  int oracle_stretch = 0;
  double wall_ms = 0.0;  // measured; reported on the console, never in files
};

struct RunResult {
  RunSummary summary;
  std::vector<EpisodeRecord> episodes;
  QTable qtable;  // table state after the last episode
};

// Per-(alpha, gamma) aggregate over seeds. Runs that never converged enter
// the order statistics as +infinity. The median averages the two middle
// order statistics; the quartiles are nearest-rank.
struct CellAggregate {
  double alpha = 0.0;
  double gamma = 0.0;
  int runs = 0;
  double median_convergence = 0.0;
  double iqr_low = 0.0;
  double iqr_high = 0.0;
  double fraction_converged = 0.0;
};

struct SweepResult {
  std::vector<RunResult> runs;       // sorted by (alpha, gamma, seed)
  std::vector<CellAggregate> cells;  // sorted by (alpha, gamma)
};

// One training run: `episodes` episodes of reset / select / step / update,
// each followed by a greedy rollout. Deterministic given (config, alpha,
// gamma, seed).
RunResult run_training(const ExperimentConfig& config, double alpha, double gamma,
                       std::uint64_t seed);

// Runs the full (alpha, gamma, seed) grid, on config.jobs threads when asked.
// The grid is deduplicated and sorted, and every run owns its environment,
// table, and random stream, so the parallel and the serial schedule produce
// identical results.
SweepResult sweep(const ExperimentConfig& config);

enum class ReportFormat { csv, json };

// Writes the per-episode series, the per-run summary, and the per-cell
// aggregates under `out_dir` (created if needed) and returns the paths
// written. Output bytes depend only on `results`. CSV doubles carry six
// significant digits with `inf` for the loop sentinel; JSON encodes the
// sentinel and a missing convergence iteration as null.
std::vector<std::filesystem::path> emit_report(const SweepResult& results, ReportFormat format,
                                               const std::filesystem::path& out_dir);

// Q-table JSON image: router id -> array of action_space() values, null
// where the action is invalid.
std::string qtable_to_json(const QTable& q);

}  // namespace icnsim
