// Copyright 2026 The oraclescan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "oraclescan/analytics.hpp"
#include "support/oracles.hpp"

namespace oraclescan {
namespace {

using namespace testing;  // oracles

TEST(FitThresholds, WorkedExample) {
  const Freqs data = {1, 2, 3, 100, 110, 5000};
  for (FitScale scale : {FitScale::kLog1p, FitScale::kLinear}) {
    const LevelThresholds th = FitThresholds(data, scale);
    EXPECT_DOUBLE_EQ(th.t1, 51.5) << ToString(scale);
    EXPECT_DOUBLE_EQ(th.t2, 2555) << ToString(scale);
  }
}

TEST(FitThresholds, ThreeDistinctValuesAreSingletons) {
  const Freqs data = {7, 7, 40, 900, 40};
  const LevelThresholds th = FitThresholds(data);
  EXPECT_DOUBLE_EQ(th.t1, 23.5);
  EXPECT_DOUBLE_EQ(th.t2, 470);
}

TEST(FitThresholds, Degenerate) {
  EXPECT_THROW(FitThresholds(Freqs{0, 0, 0, 1}), DegenerateDistribution);
  EXPECT_THROW(FitThresholds(Freqs{}), DegenerateDistribution);
  EXPECT_THROW(FitThresholds(Freqs{5, 5}), DegenerateDistribution);
}

TEST(FitThresholds, InputOrderIrrelevant) {
  std::mt19937_64 rng(8);
  Freqs data = {3, 9, 27, 81, 243, 729, 5, 5, 5, 12};
  const LevelThresholds th = FitThresholds(data);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(data.begin(), data.end(), rng);
    const LevelThresholds again = FitThresholds(data);
    EXPECT_EQ(again.t1, th.t1);
    EXPECT_EQ(again.t2, th.t2);
  }
}

TEST(FitThresholds, MatchesBruteForceOnSmallInputs) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Freqs data = SmallDistinctInput(rng, trial);
    for (FitScale scale : {FitScale::kLog1p, FitScale::kLinear}) {
      EXPECT_TRUE(FitMatchesBruteForce(data, scale)) << ToString(scale);
    }
  }
}

TEST(FitThresholds, RecoversPlantedClusters) {
  int recovered = 0;
  for (int seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    std::vector<int> truth;
    const Freqs data = Planted(rng, truth);
    const LevelThresholds th = FitThresholds(data);
    bool ok = true;
    for (std::size_t i = 0; i < data.size(); ++i) {
      ok = ok && static_cast<int>(AssignLevel(data[i], th)) == truth[i];
    }
    recovered += ok;
  }
  EXPECT_GE(recovered, 95);
}

TEST(AssignLevel, Boundaries) {
  const LevelThresholds th{10, 20};
  EXPECT_EQ(AssignLevel(0, th), DependencyLevel::kLow);
  EXPECT_EQ(AssignLevel(10, th), DependencyLevel::kLow);
  EXPECT_EQ(AssignLevel(11, th), DependencyLevel::kMedium);
  EXPECT_EQ(AssignLevel(20, th), DependencyLevel::kMedium);
  EXPECT_EQ(AssignLevel(21, th), DependencyLevel::kHigh);
  EXPECT_EQ(AssignLevel(0, LevelThresholds{0, 5}), DependencyLevel::kLow);
}

TEST(AssignLevel, PeakFrequencyIsHighForRealisticFits) {
  std::mt19937_64 rng(42);
  std::lognormal_distribution<double> spread(3.0, 1.5);
  for (int trial = 0; trial < 200; ++trial) {
    Freqs data = {11724};
    const int n = 10 + static_cast<int>(rng() % 200);
    for (int i = 0; i < n; ++i) {
      data.push_back(std::min<std::uint64_t>(
          5000, static_cast<std::uint64_t>(spread(rng))));
    }
    for (FitScale scale : {FitScale::kLog1p, FitScale::kLinear}) {
      EXPECT_EQ(AssignLevel(11724, FitThresholds(data, scale)),
                DependencyLevel::kHigh);
    }
  }
}

TEST(Pearson, HandExample) {
  const std::vector<double> xs = {1, 2, 3, 4}, ys = {1, 3, 2, 4};
  EXPECT_NEAR(Pearson(xs, ys).r, 0.8, 1e-15);
}

TEST(Pearson, PerfectLinearity) {
  const std::vector<double> xs = {1, 2, 3, 4, 5}, ys = {2, 4, 6, 8, 10};
  const CorrelationResult c = Pearson(xs, ys);
  EXPECT_DOUBLE_EQ(c.r, 1.0);
  EXPECT_TRUE(std::isinf(c.t_stat));
  EXPECT_EQ(c.p_two_sided, 0.0);
  const std::vector<double> neg = {-2, -4, -6, -8, -10};
  EXPECT_DOUBLE_EQ(Pearson(xs, neg).r, -1.0);
}

TEST(Pearson, Errors) {
  EXPECT_THROW(Pearson(std::vector<double>{1, 2, 3},
                       std::vector<double>{1, 2}),
               LengthMismatch);
  EXPECT_THROW(Pearson(std::vector<double>{1, 2}, std::vector<double>{1, 2}),
               TooFewPoints);
  EXPECT_THROW(Pearson(std::vector<double>{3, 3, 3},
                       std::vector<double>{1, 2, 3}),
               ConstantSeries);
}

TEST(Pearson, MatchesDirectFormulaAndInvariances) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 998;
    const double slope = gauss(rng);
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = 50 * gauss(rng) + 10;
      ys[i] = slope * xs[i] + 40 * gauss(rng);
    }
    const CorrelationResult c = Pearson(xs, ys);
    EXPECT_NEAR(c.r, static_cast<double>(DirectR(xs, ys)), 1e-12);
    EXPECT_EQ(c.n, n);
    EXPECT_NEAR(Pearson(ys, xs).r, c.r, 1e-12);

    const double a = 0.5 + std::abs(gauss(rng)) * 100;
    const double b = gauss(rng) * 1000;
    std::vector<double> xs2(n), ys2(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs2[i] = a * xs[i] + b;
      ys2[i] = ys[i] / a - b;
    }
    EXPECT_NEAR(Pearson(xs2, ys2).r, c.r, 1e-12);
    std::vector<double> flipped(n);
    for (std::size_t i = 0; i < n; ++i) flipped[i] = -xs[i];
    EXPECT_NEAR(Pearson(flipped, ys).r, -c.r, 1e-12);
  }
}

TEST(Pearson, PValueTable) {
  for (const PRow& row : kPTable) {
    std::vector<double> xs, ys;
    WithCorrelation(row.n, row.r, xs, ys);
    const CorrelationResult c = Pearson(xs, ys);
    ASSERT_NEAR(c.r, row.r, 1e-12);
    EXPECT_NEAR(c.p_two_sided, row.p, 1e-9) << "n=" << row.n << " r=" << row.r;
  }
  std::vector<double> xs, ys;
  WithCorrelation(10, 0.632, xs, ys);
  EXPECT_NEAR(Pearson(xs, ys).p_two_sided, 0.050, 1e-3);
  WithCorrelation(12, 0.999, xs, ys);
  EXPECT_LT(Pearson(xs, ys).p_two_sided, 1e-9);
}

TEST(StudentT, MatchesSimpsonOracle) {
  const double dfs[] = {1, 2, 3, 5, 8, 18, 28, 98, 500};
  const double ts[] = {0.05, 0.5, 1.0, 1.7, 2.306630791771446, 3.5, 6.0};
  for (double df : dfs) {
    for (double t : ts) {
      EXPECT_NEAR(StudentTTwoSided(t, df), SimpsonTwoSided(t, df), 1e-9)
          << "t=" << t << " df=" << df;
      EXPECT_DOUBLE_EQ(StudentTTwoSided(-t, df), StudentTTwoSided(t, df));
    }
  }
  EXPECT_NEAR(StudentTTwoSided(2.306630791771446, 8), 0.049951112185, 1e-9);
  EXPECT_DOUBLE_EQ(StudentTTwoSided(0, 7), 1.0);
}

TEST(StudentT, MonotoneInT) {
  for (double df : {2.0, 10.0, 60.0}) {
    double prev = 1.0;
    for (double t = 0.1; t < 12; t += 0.1) {
      const double p = StudentTTwoSided(t, df);
      EXPECT_LT(p, prev);
      EXPECT_GE(p, 0.0);
      prev = p;
    }
  }
}

TEST(IncompleteBeta, KnownValues) {
  EXPECT_DOUBLE_EQ(RegularizedIncompleteBeta(2, 3, 0), 0);
  EXPECT_DOUBLE_EQ(RegularizedIncompleteBeta(2, 3, 1), 1);
  // I_x(1, b) = 1 - (1-x)^b and I_x(a, 1) = x^a.
  EXPECT_NEAR(RegularizedIncompleteBeta(1, 4, 0.3), 1 - std::pow(0.7, 4),
              1e-14);
  EXPECT_NEAR(RegularizedIncompleteBeta(2.5, 1, 0.6), std::pow(0.6, 2.5),
              1e-14);
  EXPECT_NEAR(RegularizedIncompleteBeta(0.5, 0.5, 0.5), 0.5, 1e-14);
}

TEST(Summarize, ProportionOfInteracting) {
  const CorpusCounts counts{.scanned = 10500, .parsed_ok = 10000,
                            .interacting = 286,
                            .denominator = Denominator::kParsed};
  const CorpusSummary s = Summarize(counts, {}, std::nullopt, std::nullopt);
  EXPECT_NEAR(s.proportion_percent, 2.86, 0.005);
  CorpusCounts scanned = counts;
  scanned.denominator = Denominator::kScanned;
  EXPECT_NEAR(Summarize(scanned, {}, std::nullopt, std::nullopt)
                  .proportion_percent,
              100.0 * 286 / 10500, 1e-12);
}

TEST(Summarize, MeanIsExact) {
  const std::uint64_t freqs[] = {100, 134, 117, 50, 184, 117};
  std::vector<ProjectRecord> records;
  for (std::uint64_t f : freqs) {
    records.push_back({"p" + std::to_string(f) + std::to_string(records.size()),
                       f, 1, std::nullopt, {}});
  }
  const CorpusSummary s = Summarize({}, records, std::nullopt, std::nullopt);
  EXPECT_EQ(s.mean_access_frequency, 117.0);
  EXPECT_EQ(s.max_access_frequency, 184u);
  EXPECT_EQ(s.projects, 6u);
}

TEST(Summarize, EmptyCorpus) {
  const CorpusSummary s = Summarize({}, {}, std::nullopt, std::nullopt);
  EXPECT_EQ(s.scanned, 0u);
  EXPECT_EQ(s.interacting, 0u);
  EXPECT_EQ(s.proportion_percent, 0.0);
  EXPECT_EQ(s.mean_access_frequency, 0.0);
  EXPECT_FALSE(s.correlation.has_value());
  EXPECT_TRUE(s.level_counts.empty());
  EXPECT_TRUE(s.domain_strategy.empty());
}

TEST(Summarize, LevelsAndDomainTable) {
  std::vector<ProjectRecord> records = {
      {"a", 1, 3, "DeFi", {StrategyLabel::kCentralizedOracle}},
      {"b", 120, 9, "DeFi",
       {StrategyLabel::kCentralizedOracle, StrategyLabel::kZkp}},
      {"c", 11724, 40, std::nullopt, {}},
  };
  const LevelThresholds th{50, 500};
  const CorpusSummary s = Summarize({}, records, th, std::nullopt);
  EXPECT_EQ(s.level_counts.at(DependencyLevel::kLow), 1u);
  EXPECT_EQ(s.level_counts.at(DependencyLevel::kMedium), 1u);
  EXPECT_EQ(s.level_counts.at(DependencyLevel::kHigh), 1u);
  const std::map<std::pair<std::string, std::string>, std::size_t> expected = {
      {{"DeFi", "CentralizedOracle"}, 2},
      {{"DeFi", "ZKP"}, 1},
      {{"unlabeled", "None"}, 1}};
  EXPECT_EQ(s.domain_strategy, expected);
}

}  // namespace
}  // namespace oraclescan
