#pragma once

#include "sphere/optimize.hpp"
#include "sphere/point_config.hpp"
#include "sphere/potential.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sphere {

/// Polished energies closer than this are the same local minimum.
inline constexpr double kEnergyDedupTolerance = 1e-9;

struct LocalMinimumRecord {
  double energy = 0.0;
  PointConfig config;  // first trial (by index) that reached this level
  int occurrences = 0;
  int parameter_count = -1;  // -1 when the record was not analyzed
  bool balanced = false;
  std::uint64_t symmetry_order = 0;  // 0 when not analyzed
  double max_inner_product = 0.0;
  std::vector<std::uint64_t> seeds;  // trial seeds, in trial order
};

struct SearchReport {
  int n = 0;
  int N = 0;
  PotentialSpec potential = PotentialSpec::harmonic();
  int trials = 0;
  std::uint64_t master_seed = 0;
  double gradient_tolerance = 0.0;
  double dedup_tolerance = kEnergyDedupTolerance;
  std::vector<LocalMinimumRecord> records;  // ascending energy
  int unconverged = 0;
};

struct SearchOptions {
  bool analyze = true;  // parameter count, balance and symmetry of every record
  int threads = 0;      // 0 leaves the OpenMP default
};

/// Descent settings used when none are given: stop the descent at gradient
/// sup-norm 1e-6 and finish with Newton. The tolerance is absolute, so
/// scaled_descent_settings adjusts it to the size of the potential.
DescentSettings default_search_settings();

/// `base` with the gradient tolerance multiplied by |f'(0)| for truncated
/// powers (k 4^(k-1)), whose forces grow geometrically in k.
DescentSettings scaled_descent_settings(const PotentialSpec& potential, DescentSettings base);

/// Trial i starts from random_config(n, N, mix_seed(master_seed, i)) and runs
/// gradient descent followed by Newton polishing (polish is always on).
/// Trials that do not converge are counted in `unconverged`. The report does
/// not depend on the number of threads.
SearchReport run_search(int n, int N, const PotentialSpec& potential, int trials, std::uint64_t master_seed,
                        const DescentSettings& settings = default_search_settings(),
                        const SearchOptions& options = {});

struct GapSummary {
  std::vector<double> levels;   // ascending
  std::vector<double> gaps;     // levels[i+1] - levels[i]
  std::vector<double> ratios;   // gap / median gap
  double median_spacing = 0.0;
  double threshold = 0.0;
  std::vector<int> flagged;     // indices i with ratios[i] > threshold
};

inline constexpr double kDefaultGapThreshold = 20.0;

/// Throws TooFewLevels below three levels.
GapSummary gap_statistics(std::vector<double> levels, double threshold = kDefaultGapThreshold);
GapSummary gap_statistics(const SearchReport& report, double threshold = kDefaultGapThreshold);

enum class ScreenVerdict { CandidateBeaten, CandidateBest, Tie };
const char* to_string(ScreenVerdict verdict);

struct ScreenLevel {
  int k = 0;
  double candidate_energy = 0.0;
  double best_energy = 0.0;  // lowest record; only meaningful when found
  bool found = false;        // at least one trial converged
  int unconverged = 0;
  ScreenVerdict verdict = ScreenVerdict::Tie;
  PointConfig best;  // representative of the lowest record
};

struct ScreenReport {
  std::vector<ScreenLevel> levels;  // k = 1..k_max
  bool counterexample = false;

  /// Index into levels of the first beaten k, or -1.
  int first_beaten() const;
};

/// For k = 1..k_max, searches (n, N) under (4-r)^k with trials_per_k trials
/// from seed mix_seed(master_seed, k) and compares the best energy found with
/// the candidate's. A level counts as beaten only below the candidate by more
/// than 1e-9 max(1, |E|).
ScreenReport universality_screen(const PointConfig& candidate, int k_max, int trials_per_k, std::uint64_t master_seed,
                                 const SearchOptions& options = {});

struct RankedConfig {
  int index = 0;
  double energy = 0.0;
};

/// Energies in ascending order, ties kept in input order. Throws
/// ShapeMismatch unless all configurations share (n, N).
std::vector<RankedConfig> compare_candidates(const std::vector<PointConfig>& configs, const PotentialSpec& potential);

struct FamilyOptimum {
  double parameter = 0.0;
  double energy = 0.0;
  PointConfig config;
};

/// Minimizes the energy of a one-parameter family over the open interval
/// (lo, hi): a grid of `grid` interior samples, then Brent's method on the
/// bracket around the best sample.
FamilyOptimum optimize_family(const std::function<PointConfig(double)>& family, double lo, double hi,
                              const PotentialSpec& potential, int grid = 64);

}  // namespace sphere
