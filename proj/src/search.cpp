#include "sphere/search.hpp"

#include "sphere/analysis.hpp"
#include "sphere/energy.hpp"
#include "sphere/error.hpp"
#include "sphere/random.hpp"

#include <boost/math/tools/minima.hpp>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

namespace sphere {

DescentSettings default_search_settings() {
  DescentSettings s;
  s.gradient_tolerance = 1e-6;
  s.polish = true;
  return s;
}

DescentSettings scaled_descent_settings(const PotentialSpec& potential, DescentSettings base) {
  if (potential.kind() == PotentialKind::TruncatedPower) {
    const int k = potential.truncated_exponent();
    base.gradient_tolerance *= std::max(1.0, k * std::pow(4.0, k - 1));
  }
  return base;
}

namespace {

int thread_count(const SearchOptions& options) {
  return options.threads > 0 ? options.threads : omp_get_max_threads();
}

}  // namespace

SearchReport run_search(int n, int N, const PotentialSpec& potential, int trials, std::uint64_t master_seed,
                        const DescentSettings& settings, const SearchOptions& options) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  if (n < 2 || N < 1) throw Error(ErrorKind::InvalidArgument, "need n >= 2 and N >= 1");
  DescentSettings s = settings;
  s.polish = true;
  s.record_trace = false;
  s.validate();

  std::vector<std::optional<DescentResult>> results(trials);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(options))
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t seed = mix_seed(master_seed, static_cast<std::uint64_t>(i));
    try {
      DescentResult r = gradient_descent(random_config(n, N, seed), potential, s, seed);
      if (r.status == DescentStatus::Converged) results[i] = std::move(r);
    } catch (const Error&) {
      // counted as unconverged below
    }
  }

  SearchReport report;
  report.n = n;
  report.N = N;
  report.potential = potential;
  report.trials = trials;
  report.master_seed = master_seed;
  report.gradient_tolerance = s.gradient_tolerance;

  std::vector<int> order;
  for (int i = 0; i < trials; ++i) {
    if (results[i]) order.push_back(i);
    else ++report.unconverged;
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return results[a]->energy < results[b]->energy; });
  double last = 0.0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const DescentResult& r = *results[order[k]];
    if (k == 0 || r.energy - last > kEnergyDedupTolerance) {
      LocalMinimumRecord record;
      record.energy = r.energy;
      record.config = r.config;
      report.records.push_back(std::move(record));
    }
    last = r.energy;
    LocalMinimumRecord& record = report.records.back();
    ++record.occurrences;
  }
  // Members of a level arrive sorted by energy; the representative is the
  // earliest trial, and seeds are listed in trial order.
  std::size_t k = 0;
  for (LocalMinimumRecord& record : report.records) {
    const std::size_t first = k;
    k += static_cast<std::size_t>(record.occurrences);
    const int earliest = *std::min_element(order.begin() + static_cast<std::ptrdiff_t>(first), order.begin() + static_cast<std::ptrdiff_t>(k));
    record.energy = results[earliest]->energy;
    record.config = results[earliest]->config;
    std::vector<int> members(order.begin() + static_cast<std::ptrdiff_t>(first), order.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(members.begin(), members.end());
    record.seeds.clear();
    for (int m : members) record.seeds.push_back(results[m]->seed);
  }

  const int count = static_cast<int>(report.records.size());
  for (LocalMinimumRecord& record : report.records) record.max_inner_product = record.config.max_inner_product();
  if (options.analyze) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(options))
    for (int r = 0; r < count; ++r) {
      LocalMinimumRecord& record = report.records[r];
      record.parameter_count = parameter_count(record.config);
      record.balanced = is_balanced(record.config).balanced;
      record.symmetry_order = automorphism_group(record.config).order;
    }
  }
  return report;
}

GapSummary gap_statistics(std::vector<double> levels, double threshold) {
  if (levels.size() < 3) throw Error(ErrorKind::TooFewLevels, "gap statistics need at least three levels");
  std::sort(levels.begin(), levels.end());
  GapSummary out;
  out.threshold = threshold;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) out.gaps.push_back(levels[i + 1] - levels[i]);
  std::vector<double> sorted = out.gaps;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  out.median_spacing = m % 2 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
  for (std::size_t i = 0; i < out.gaps.size(); ++i) {
    double ratio = 0.0;
    if (out.median_spacing > 0.0) ratio = out.gaps[i] / out.median_spacing;
    else if (out.gaps[i] > 0.0) ratio = std::numeric_limits<double>::infinity();
    out.ratios.push_back(ratio);
    if (ratio > threshold) out.flagged.push_back(static_cast<int>(i));
  }
  out.levels = std::move(levels);
  return out;
}

GapSummary gap_statistics(const SearchReport& report, double threshold) {
  std::vector<double> levels;
  for (const auto& r : report.records) levels.push_back(r.energy);
  return gap_statistics(std::move(levels), threshold);
}

const char* to_string(ScreenVerdict verdict) {
  switch (verdict) {
    case ScreenVerdict::CandidateBeaten: return "candidate_beaten";
    case ScreenVerdict::CandidateBest: return "candidate_best";
    default: return "tie";
  }
}

int ScreenReport::first_beaten() const {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].verdict == ScreenVerdict::CandidateBeaten) return static_cast<int>(i);
  }
  return -1;
}

ScreenReport universality_screen(const PointConfig& candidate, int k_max, int trials_per_k, std::uint64_t master_seed,
                                 const SearchOptions& options) {
  if (k_max < 1) throw Error(ErrorKind::InvalidArgument, "k_max must be at least 1");
  SearchOptions quiet = options;
  quiet.analyze = false;
  ScreenReport out;
  for (int k = 1; k <= k_max; ++k) {
    const PotentialSpec f = PotentialSpec::truncated_power(k);
    const SearchReport search =
        run_search(candidate.dimension(), candidate.size(), f, trials_per_k, mix_seed(master_seed, static_cast<std::uint64_t>(k)),
                   scaled_descent_settings(f, default_search_settings()), quiet);
    ScreenLevel level;
    level.k = k;
    level.candidate_energy = energy(candidate, f);
    level.unconverged = search.unconverged;
    level.found = !search.records.empty();
    level.verdict = ScreenVerdict::CandidateBest;
    if (level.found) {
      level.best_energy = search.records.front().energy;
      level.best = search.records.front().config;
      const double margin = 1e-9 * std::max(1.0, std::abs(level.candidate_energy));
      if (level.best_energy < level.candidate_energy - margin) level.verdict = ScreenVerdict::CandidateBeaten;
      else if (level.best_energy <= level.candidate_energy + margin) level.verdict = ScreenVerdict::Tie;
    }
    out.counterexample = out.counterexample || level.verdict == ScreenVerdict::CandidateBeaten;
    out.levels.push_back(std::move(level));
  }
  return out;
}

std::vector<RankedConfig> compare_candidates(const std::vector<PointConfig>& configs, const PotentialSpec& potential) {
  if (configs.empty()) throw Error(ErrorKind::InvalidArgument, "nothing to compare");
  std::vector<RankedConfig> ranking;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    if (configs[i].dimension() != configs[0].dimension() || configs[i].size() != configs[0].size()) {
      throw Error(ErrorKind::ShapeMismatch, "configuration " + std::to_string(i) + " has a different (n, N)");
    }
    ranking.push_back({static_cast<int>(i), energy(configs[i], potential)});
  }
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const RankedConfig& a, const RankedConfig& b) { return a.energy < b.energy; });
  return ranking;
}

FamilyOptimum optimize_family(const std::function<PointConfig(double)>& family, double lo, double hi,
                              const PotentialSpec& potential, int grid) {
  if (!(lo < hi) || grid < 1) throw Error(ErrorKind::InvalidArgument, "need lo < hi and a positive grid");
  auto value = [&](double a) {
    try {
      return energy(family(a), potential);
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  const double h = (hi - lo) / (grid + 1);
  int best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const double v = value(lo + h * (i + 1));
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  if (!std::isfinite(best_value)) throw Error(ErrorKind::InvalidArgument, "family has no valid member on the grid");
  const double a = lo + h * best;
  const double b = lo + h * (best + 2);
  const auto [x, fx] = boost::math::tools::brent_find_minima(value, a, b, 40);
  FamilyOptimum out;
  out.parameter = fx <= best_value ? x : lo + h * (best + 1);
  out.config = family(out.parameter);
  out.energy = energy(out.config, potential);
  return out;
}

}  // namespace sphere
