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

#ifndef ORACLESCAN_ANALYTICS_HPP_
#define ORACLESCAN_ANALYTICS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oraclescan/keywords.hpp"
#include "oraclescan/strategy.hpp"

namespace oraclescan {

struct ProjectRecord {
  std::string project_id;
  std::uint64_t access_frequency = 0;
  std::uint64_t complexity = 0;
  std::optional<std::string> domain;
  StrategySet strategies;
};

// Low iff f <= t1, Medium iff t1 < f <= t2, High iff f > t2.
struct LevelThresholds {
  double t1 = 0;
  double t2 = 0;
};

enum class DependencyLevel { kLow, kMedium, kHigh };

std::string_view ToString(DependencyLevel level);

// Scale on which within-group squared deviations are measured. Thresholds
// are always reported in raw frequency units.
enum class FitScale { kLog1p, kLinear };

std::string_view ToString(FitScale scale);
std::optional<FitScale> FitScaleFromString(std::string_view text);

class DegenerateDistribution : public std::runtime_error {
 public:
  explicit DegenerateDistribution(std::size_t distinct)
      : std::runtime_error("need at least 3 distinct frequencies, got " +
                           std::to_string(distinct)) {}
};

// Optimal three-group partition of the sorted distinct values, minimising
// the total within-group sum of squared deviations (all occurrences
// weighted). Thresholds sit midway between the values adjacent to each cut;
// among equal-cost partitions the lexicographically smallest (t1, t2) wins.
LevelThresholds FitThresholds(std::span<const std::uint64_t> frequencies,
                              FitScale scale = FitScale::kLog1p);

DependencyLevel AssignLevel(std::uint64_t frequency, const LevelThresholds& th);

struct CorrelationResult {
  double r = 0;
  double t_stat = 0;  // +/-infinity when |r| == 1
  double p_two_sided = 1;
  std::size_t n = 0;
};

class ConstantSeries : public std::invalid_argument {
 public:
  ConstantSeries() : std::invalid_argument("series is constant") {}
};

class LengthMismatch : public std::invalid_argument {
 public:
  LengthMismatch() : std::invalid_argument("series lengths differ") {}
};

class TooFewPoints : public std::invalid_argument {
 public:
  TooFewPoints() : std::invalid_argument("need at least 3 points") {}
};

// Regularized incomplete beta I_x(a, b).
double RegularizedIncompleteBeta(double a, double b, double x);

// Two-sided tail probability P(|T| >= |t|) of Student's t with `df` degrees
// of freedom.
double StudentTTwoSided(double t, double df);

// Product-moment correlation with the two-sided t-test p-value (n - 2 df).
CorrelationResult Pearson(std::span<const double> xs,
                          std::span<const double> ys);

enum class Denominator { kParsed, kScanned };

std::string_view ToString(Denominator d);

struct CorpusCounts {
  std::size_t scanned = 0;
  std::size_t parsed_ok = 0;
  std::size_t interacting = 0;
  Denominator denominator = Denominator::kParsed;
};

struct CorpusSummary {
  std::size_t scanned = 0;
  std::size_t parsed_ok = 0;
  std::size_t interacting = 0;
  Denominator denominator = Denominator::kParsed;
  double proportion_percent = 0;  // interacting / denominator * 100
  std::size_t projects = 0;
  double mean_access_frequency = 0;
  std::uint64_t max_access_frequency = 0;
  std::optional<LevelThresholds> thresholds;
  std::map<DependencyLevel, std::size_t> level_counts;
  // (domain, strategy) -> project count; "unlabeled" / "None" fill gaps.
  std::map<std::pair<std::string, std::string>, std::size_t> domain_strategy;
  std::vector<KeywordUsage> keyword_usage;
  std::optional<CorrelationResult> correlation;
};

CorpusSummary Summarize(const CorpusCounts& counts,
                        std::span<const ProjectRecord> records,
                        const std::optional<LevelThresholds>& thresholds,
                        const std::optional<CorrelationResult>& correlation,
                        std::vector<KeywordUsage> keyword_usage = {});

}  // namespace oraclescan

#endif  // ORACLESCAN_ANALYTICS_HPP_
