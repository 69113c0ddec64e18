#include "icnsim/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

namespace icnsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <typename T>
std::vector<T> sorted_unique(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// Six significant digits, matching the documented report precision.
std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double nearest_rank(const std::vector<double>& sorted, double p) {
  const auto n = static_cast<double>(sorted.size());
  const auto rank = static_cast<size_t>(std::ceil(p * n));
  return sorted[std::max<size_t>(rank, 1) - 1];
}

double median(const std::vector<double>& sorted) {
  const size_t n = sorted.size();
  if (n % 2 == 1) {
    return sorted[n / 2];
  }
  return (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
}

}  // namespace

std::vector<std::uint64_t> ExperimentConfig::default_seeds() {
  std::vector<std::uint64_t> seeds(50);
  for (size_t i = 0; i < seeds.size(); ++i) {
    seeds[i] = i;
  }
  return seeds;
}

void validate(const ExperimentConfig& config) {
  const int n = config.topology.size();
  if (config.consumer < 1 || config.consumer > n) {
    throw ConfigError("consumer router " + std::to_string(config.consumer) + " outside 1.." +
                      std::to_string(n));
  }
  if (config.producer < 1 || config.producer > n) {
    throw ConfigError("producer router " + std::to_string(config.producer) + " outside 1.." +
                      std::to_string(n));
  }
  if (config.consumer == config.producer) {
    throw ConfigError("consumer and producer must be distinct routers");
  }
  if (std::find(config.catalog.begin(), config.catalog.end(), config.requested) ==
      config.catalog.end()) {
    throw ConfigError("requested content '" + config.requested + "' is not in the catalog");
  }
  if (config.alphas.empty() || config.gammas.empty()) {
    throw ConfigError("alpha and gamma lists must not be empty");
  }
  for (const double alpha : config.alphas) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
      throw ConfigError("alpha " + fmt6(alpha) + " outside (0, 1]");
    }
  }
  for (const double gamma : config.gammas) {
    if (!(gamma >= 0.0 && gamma < 1.0)) {
      throw ConfigError("gamma " + fmt6(gamma) + " outside [0, 1)");
    }
  }
  if (!(config.epsilon >= 0.0 && config.epsilon <= 1.0)) {
    throw ConfigError("epsilon " + fmt6(config.epsilon) + " outside [0, 1]");
  }
  if (config.episodes < 1) {
    throw ConfigError("episodes must be >= 1");
  }
  if (config.seeds.empty()) {
    throw ConfigError("at least one seed is required");
  }
  const auto& rw = config.rewards;
  if (!(rw.goal > 0.0 && rw.step < 0.0 && rw.fail <= rw.step)) {
    throw ConfigError("reward config must satisfy goal > 0 > step >= fail");
  }
  if (config.hop_budget < 0) {
    throw ConfigError("hop budget must be positive (or 0 for the 2n default)");
  }
  if (config.convergence_window < 1) {
    throw ConfigError("convergence window must be >= 1");
  }
  if (config.jobs < 1) {
    throw ConfigError("jobs must be >= 1");
  }
}

RunResult run_training(const ExperimentConfig& config, double alpha, double gamma,
                       std::uint64_t seed) {
  validate(config);
  const Hyperparams hp{alpha, gamma, config.epsilon};
  try {
    validate(hp);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  const auto start = std::chrono::steady_clock::now();

  Environment env(config.topology,
                  EnvConfig{config.consumer, config.producer, config.requested, config.catalog,
                            config.rewards, config.hop_budget, config.on_path_caching});
  QTable q(env);
  Rng rng(seed);
  const int oracle = config.topology.shortest_hops(config.consumer, config.producer);

  RunResult result;
  result.summary.alpha = alpha;
  result.summary.gamma = gamma;
  result.summary.seed = seed;
  result.summary.oracle_stretch = oracle;
  result.episodes.reserve(static_cast<size_t>(config.episodes));

  std::vector<double> greedy_history;
  greedy_history.reserve(static_cast<size_t>(config.episodes));

  for (int iteration = 1; iteration <= config.episodes; ++iteration) {
    State s = env.reset();
    double episode_reward = 0.0;
    int steps = 0;
    while (!env.is_terminal()) {
      const Action a = select_action(q, s, hp, rng);
      const Transition t = env.step(a);
      update(q, t, hp);
      episode_reward += t.reward;
      ++steps;
      s = t.next_state;
    }

    const double greedy_stretch = rollout_stretch(greedy_path(greedy_policy(q), env));
    greedy_history.push_back(greedy_stretch);
    const bool converged = has_converged(greedy_history, config.convergence_window, oracle);
    if (converged && !result.summary.convergence_iteration) {
      result.summary.convergence_iteration = iteration;
    }
    result.episodes.push_back(
        EpisodeRecord{iteration, episode_reward, steps, greedy_stretch, converged});
  }

  result.summary.final_greedy_stretch = greedy_history.back();
  result.qtable = std::move(q);
  result.summary.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

SweepResult sweep(const ExperimentConfig& config) {
  validate(config);
  const auto alphas = sorted_unique(config.alphas);
  const auto gammas = sorted_unique(config.gammas);
  const auto seeds = sorted_unique(config.seeds);

  std::vector<std::tuple<double, double, std::uint64_t>> plan;
  plan.reserve(alphas.size() * gammas.size() * seeds.size());
  for (const double alpha : alphas) {
    for (const double gamma : gammas) {
      for (const std::uint64_t seed : seeds) {
        plan.emplace_back(alpha, gamma, seed);
      }
    }
  }

  SweepResult result;
  result.runs.resize(plan.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= plan.size()) {
        return;
      }
      const auto& [alpha, gamma, seed] = plan[i];
      result.runs[i] = run_training(config, alpha, gamma, seed);
    }
  };

  const size_t jobs = std::min<size_t>(static_cast<size_t>(config.jobs), plan.size());
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (size_t i = 0; i < jobs; ++i) {
      pool.emplace_back(worker);
    }
  }

  for (const double alpha : alphas) {
    for (const double gamma : gammas) {
      CellAggregate cell;
      cell.alpha = alpha;
      cell.gamma = gamma;
      std::vector<double> convergence;
      for (const auto& run : result.runs) {
        if (run.summary.alpha == alpha && run.summary.gamma == gamma) {
          ++cell.runs;
          convergence.push_back(run.summary.convergence_iteration
                                    ? static_cast<double>(*run.summary.convergence_iteration)
                                    : kInf);
        }
      }
      std::sort(convergence.begin(), convergence.end());
      cell.median_convergence = median(convergence);
      cell.iqr_low = nearest_rank(convergence, 0.25);
      cell.iqr_high = nearest_rank(convergence, 0.75);
      cell.fraction_converged =
          static_cast<double>(std::count_if(convergence.begin(), convergence.end(),
                                            [](double c) { return std::isfinite(c); })) /
          static_cast<double>(convergence.size());
      result.cells.push_back(cell);
    }
  }
  return result;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << contents;
  if (!out.good()) {
    throw IoError("failed while writing " + path.string());
  }
}

std::string episodes_csv(const SweepResult& results) {
  std::ostringstream out;
  out << "alpha,gamma,seed,iteration,episode_reward,episode_stretch,greedy_stretch,converged\n";
  for (const auto& run : results.runs) {
    const auto& s = run.summary;
    for (const auto& e : run.episodes) {
      out << fmt6(s.alpha) << ',' << fmt6(s.gamma) << ',' << s.seed << ',' << e.iteration << ','
          << fmt6(e.episode_reward) << ',' << e.episode_stretch << ',' << fmt6(e.greedy_stretch)
          << ',' << (e.converged ? 1 : 0) << '\n';
    }
  }
  return out.str();
}

std::string summary_csv(const SweepResult& results) {
  std::ostringstream out;
  out << "alpha,gamma,seed,convergence_iteration,final_greedy_stretch,oracle_stretch\n";
  for (const auto& run : results.runs) {
    const auto& s = run.summary;
    out << fmt6(s.alpha) << ',' << fmt6(s.gamma) << ',' << s.seed << ',';
    if (s.convergence_iteration) {
      out << *s.convergence_iteration;
    }
    out << ',' << fmt6(s.final_greedy_stretch) << ',' << s.oracle_stretch << '\n';
  }
  return out.str();
}

std::string cells_csv(const SweepResult& results) {
  std::ostringstream out;
  out << "alpha,gamma,runs,median_convergence,iqr_low,iqr_high,fraction_converged\n";
  for (const auto& c : results.cells) {
    out << fmt6(c.alpha) << ',' << fmt6(c.gamma) << ',' << c.runs << ','
        << fmt6(c.median_convergence) << ',' << fmt6(c.iqr_low) << ',' << fmt6(c.iqr_high) << ','
        << fmt6(c.fraction_converged) << '\n';
  }
  return out.str();
}

nlohmann::ordered_json json_number_or_null(double v) {
  if (!std::isfinite(v)) {
    return nullptr;
  }
  return v;
}

std::string episodes_json(const SweepResult& results) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& run : results.runs) {
    const auto& s = run.summary;
    for (const auto& e : run.episodes) {
      rows.push_back({{"alpha", s.alpha},
                      {"gamma", s.gamma},
                      {"seed", s.seed},
                      {"iteration", e.iteration},
                      {"episode_reward", e.episode_reward},
                      {"episode_stretch", e.episode_stretch},
                      {"greedy_stretch", json_number_or_null(e.greedy_stretch)},
                      {"converged", e.converged}});
    }
  }
  return rows.dump(2) + "\n";
}

std::string summary_json(const SweepResult& results) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& run : results.runs) {
    const auto& s = run.summary;
    nlohmann::ordered_json row{{"alpha", s.alpha},
                               {"gamma", s.gamma},
                               {"seed", s.seed},
                               {"convergence_iteration", nullptr},
                               {"final_greedy_stretch", json_number_or_null(s.final_greedy_stretch)},
                               {"oracle_stretch", s.oracle_stretch}};
    if (s.convergence_iteration) {
      row["convergence_iteration"] = *s.convergence_iteration;
    }
    rows.push_back(row);
  }
  return rows.dump(2) + "\n";
}

std::string cells_json(const SweepResult& results) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& c : results.cells) {
    rows.push_back({{"alpha", c.alpha},
                    {"gamma", c.gamma},
                    {"runs", c.runs},
                    {"median_convergence", json_number_or_null(c.median_convergence)},
                    {"iqr_low", json_number_or_null(c.iqr_low)},
                    {"iqr_high", json_number_or_null(c.iqr_high)},
                    {"fraction_converged", c.fraction_converged}});
  }
  return rows.dump(2) + "\n";
}

}  // namespace

std::vector<std::filesystem::path> emit_report(const SweepResult& results, ReportFormat format,
                                               const std::filesystem::path& out_dir) {
  if (results.runs.empty()) {
    throw IoError("no results to report");
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  }

  std::vector<std::filesystem::path> written;
  const bool csv = format == ReportFormat::csv;
  const char* ext = csv ? ".csv" : ".json";
  const auto emit = [&](const char* stem, const std::string& contents) {
    const auto path = out_dir / (std::string(stem) + ext);
    write_file(path, contents);
    written.push_back(path);
  };
  emit("episodes", csv ? episodes_csv(results) : episodes_json(results));
  emit("summary", csv ? summary_csv(results) : summary_json(results));
  emit("cells", csv ? cells_csv(results) : cells_json(results));
  return written;
}

std::string qtable_to_json(const QTable& q) {
  nlohmann::ordered_json table;
  for (RouterId s = 1; s <= q.states(); ++s) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int k = 0; k < q.actions(); ++k) {
      const Action a{k};
      if (q.valid(s, a)) {
        row.push_back(q.value(s, a));
      } else {
        row.push_back(nullptr);
      }
    }
    table[std::to_string(s)] = row;
  }
  return table.dump(2) + "\n";
}

}  // namespace icnsim
