#include "helpers.hpp"

#include "sphere/catalog.hpp"
#include "sphere/energy.hpp"
#include "sphere/error.hpp"
#include "sphere/gram.hpp"
#include "sphere/io.hpp"
#include "sphere/random.hpp"
#include "sphere/search.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace sphere;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::InvalidArgument;
}

FamilyOptimum best_of_family(int which, int k) {
  const auto family = [which](double a) {
    return realize_from_gram(which == 1 ? build_gram_12_in_4_family1(a) : build_gram_12_in_4_family2(a), 4);
  };
  return optimize_family(family, 0.0, which == 1 ? 0.5 : 1.0 / 3.0, PotentialSpec::truncated_power(k));
}

}  // namespace

TEST(Search, Pentagon) {
  const SearchReport r = run_search(2, 5, PotentialSpec::harmonic(), 20, 3);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_NEAR(r.records[0].energy, -5.0 * std::log(5.0), 1e-10);
  EXPECT_EQ(r.records[0].occurrences, 20);
  EXPECT_EQ(r.unconverged, 0);
  EXPECT_EQ(r.records[0].symmetry_order, 10u);
  EXPECT_EQ(r.records[0].parameter_count, 0);
  EXPECT_TRUE(r.records[0].balanced);
}

TEST(Search, RecordsAreConsistent) {
  const int trials = 60;
  const std::uint64_t master = 17;
  const SearchReport r = run_search(4, 14, PotentialSpec::harmonic(), trials, master);
  int total = r.unconverged;
  std::set<std::uint64_t> seeds;
  for (int i = 0; i < trials; ++i) seeds.insert(mix_seed(master, i));
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const auto& rec = r.records[i];
    total += rec.occurrences;
    EXPECT_EQ(rec.seeds.size(), static_cast<std::size_t>(rec.occurrences));
    for (auto s : rec.seeds) EXPECT_EQ(seeds.erase(s), 1u);
    EXPECT_NEAR(energy(rec.config, PotentialSpec::harmonic()), rec.energy, 1e-9);
    EXPECT_NEAR(rec.config.max_inner_product(), rec.max_inner_product, 1e-12);
    if (i > 0) EXPECT_GT(rec.energy - r.records[i - 1].energy, kEnergyDedupTolerance);
  }
  EXPECT_EQ(total, trials);
}

TEST(Search, Icosahedron) {
  const SearchReport r = run_search(3, 12, PotentialSpec::harmonic(), 30, 5);
  ASSERT_FALSE(r.records.empty());
  const auto& best = r.records[0];
  EXPECT_EQ(best.symmetry_order, 120u);
  EXPECT_EQ(best.parameter_count, 0);
  EXPECT_NEAR(best.max_inner_product, 1 / std::sqrt(5.0), 1e-10);
  EXPECT_GT(best.occurrences, 25);
}

TEST(Search, IndependentOfThreadCount) {
  const DescentSettings s = default_search_settings();
  SearchOptions one, eight;
  one.threads = 1;
  eight.threads = 8;
  const SearchReport a = run_search(4, 17, PotentialSpec::harmonic(), 40, 99, s, one);
  const SearchReport b = run_search(4, 17, PotentialSpec::harmonic(), 40, 99, s, eight);
  EXPECT_EQ(format_report({a, true}), format_report({b, true}));
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) EXPECT_EQ(a.records[i].config.points(), b.records[i].config.points());
}

TEST(Search, Validation) {
  EXPECT_EQ(kind_of([] { run_search(1, 5, PotentialSpec::harmonic(), 3, 1); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { run_search(3, 5, PotentialSpec::harmonic(), 0, 1); }), ErrorKind::InvalidArgument);
}

TEST(Gaps, TableNineFlagsThree) {
  std::vector<double> levels;
  for (const LevelRow& row : parse_levels(read_text(sphere::testing::fixture("table9_120_4.levels")))) {
    levels.push_back(row.energy);
  }
  ASSERT_EQ(levels.size(), 30u);
  const GapSummary g = gap_statistics(levels);
  EXPECT_EQ(g.flagged.size(), 3u);
  EXPECT_EQ(g.gaps.size(), 29u);
  // The gap above the global minimum is one of them.
  EXPECT_EQ(g.flagged.front(), 0);
}

TEST(Gaps, Synthetic) {
  const GapSummary g = gap_statistics(std::vector<double>{3.0, 1.0, 2.0, 100.0}, 5.0);
  EXPECT_EQ(g.levels.front(), 1.0);
  EXPECT_DOUBLE_EQ(g.median_spacing, 1.0);
  ASSERT_EQ(g.flagged.size(), 1u);
  EXPECT_EQ(g.flagged[0], 2);
  EXPECT_EQ(kind_of([] { gap_statistics(std::vector<double>{1.0, 2.0}); }), ErrorKind::TooFewLevels);
}

TEST(Screen, SimplexIsNeverBeaten) {
  const ScreenReport r = universality_screen(build_simplex(3), 3, 10, 1);
  ASSERT_EQ(r.levels.size(), 3u);
  EXPECT_FALSE(r.counterexample);
  EXPECT_EQ(r.first_beaten(), -1);
  for (const auto& level : r.levels) {
    EXPECT_TRUE(level.found);
    EXPECT_EQ(level.verdict, ScreenVerdict::Tie);
  }
}

TEST(Screen, BadCandidateIsBeaten) {
  const ScreenReport r = universality_screen(random_config(3, 4, 8), 2, 10, 1);
  EXPECT_TRUE(r.counterexample);
  EXPECT_EQ(r.first_beaten(), 0);
  EXPECT_EQ(r.levels[0].verdict, ScreenVerdict::CandidateBeaten);
  EXPECT_STREQ(to_string(ScreenVerdict::CandidateBest), "candidate_best");
}

TEST(Compare, Ranking) {
  const PointConfig good = build_simplex(3);
  const PointConfig bad = random_config(3, 4, 2);
  const auto r = compare_candidates({bad, good, good}, PotentialSpec::harmonic());
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].index, 1);
  EXPECT_EQ(r[1].index, 2);
  EXPECT_EQ(r[2].index, 0);
  EXPECT_EQ(kind_of([&] { compare_candidates({good, build_cross_polytope(3)}, PotentialSpec::harmonic()); }),
            ErrorKind::ShapeMismatch);
  EXPECT_EQ(kind_of([] { compare_candidates({}, PotentialSpec::harmonic()); }), ErrorKind::InvalidArgument);
}

TEST(Family, TwelveInFourCrossover) {
  EXPECT_LT(best_of_family(1, 5).energy, best_of_family(2, 5).energy);
  EXPECT_GT(best_of_family(1, 12).energy, best_of_family(2, 12).energy);
}

TEST(Family, FindsInteriorMinimum) {
  // Energy of the pair (1, 0), (cos t, sin t) under -log is minimal at t = pi.
  const auto family = [](double t) {
    Matrix p(2, 2);
    p << 1, std::cos(t), 0, std::sin(t);
    return PointConfig(p);
  };
  const FamilyOptimum r = optimize_family(family, 0.5, 5.0, PotentialSpec::logarithmic());
  EXPECT_NEAR(r.parameter, std::acos(-1.0), 1e-7);
  EXPECT_NEAR(r.energy, -std::log(4.0), 1e-12);
}
