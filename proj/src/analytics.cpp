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

#include "oraclescan/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace oraclescan {

std::string_view ToString(DependencyLevel level) {
  switch (level) {
    case DependencyLevel::kLow: return "Low";
    case DependencyLevel::kMedium: return "Medium";
    case DependencyLevel::kHigh: return "High";
  }
  return "?";
}

std::string_view ToString(FitScale scale) {
  return scale == FitScale::kLog1p ? "log1p" : "linear";
}

std::optional<FitScale> FitScaleFromString(std::string_view text) {
  if (text == "log1p" || text == "log") return FitScale::kLog1p;
  if (text == "linear") return FitScale::kLinear;
  return std::nullopt;
}

std::string_view ToString(Denominator d) {
  return d == Denominator::kParsed ? "parsed" : "scanned";
}

LevelThresholds FitThresholds(std::span<const std::uint64_t> frequencies,
                              FitScale scale) {
  std::map<std::uint64_t, std::size_t> histogram;
  for (std::uint64_t f : frequencies) ++histogram[f];
  const std::size_t d = histogram.size();
  if (d < 3) throw DegenerateDistribution(d);

  std::vector<std::uint64_t> values;
  for (const auto& [value, n] : histogram) values.push_back(value);
  // Prefix sums over distinct values: weight, sum and sum of squares.
  std::vector<double> pc(d + 1, 0), ps(d + 1, 0), pq(d + 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    const double n = static_cast<double>(histogram[values[i]]);
    const double x = scale == FitScale::kLog1p
                         ? std::log1p(static_cast<double>(values[i]))
                         : static_cast<double>(values[i]);
    pc[i + 1] = pc[i] + n;
    ps[i + 1] = ps[i] + n * x;
    pq[i + 1] = pq[i] + n * x * x;
  }
  auto sse = [&](std::size_t lo, std::size_t hi) {  // values[lo, hi)
    const double n = pc[hi] - pc[lo];
    const double s = ps[hi] - ps[lo];
    return std::max(0.0, (pq[hi] - pq[lo]) - s * s / n);
  };

  double best = std::numeric_limits<double>::infinity();
  std::size_t best_i = 1, best_j = 2;
  // Groups: [0, i), [i, j), [j, d).
  for (std::size_t i = 1; i + 1 < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const double cost = sse(0, i) + sse(i, j) + sse(j, d);
      const double tolerance =
          std::isinf(best) ? 0.0 : 1e-9 * std::max(1.0, best);
      if (cost < best - tolerance) {
        best = cost;
        best_i = i;
        best_j = j;
      }
    }
  }
  auto midpoint = [&](std::size_t k) {
    return (static_cast<double>(values[k - 1]) +
            static_cast<double>(values[k])) / 2.0;
  };
  return {midpoint(best_i), midpoint(best_j)};
}

DependencyLevel AssignLevel(std::uint64_t frequency,
                            const LevelThresholds& th) {
  const double f = static_cast<double>(frequency);
  if (f <= th.t1) return DependencyLevel::kLow;
  if (f <= th.t2) return DependencyLevel::kMedium;
  return DependencyLevel::kHigh;
}

namespace {

// Continued fraction for I_x(a, b), modified Lentz evaluation.
double BetaContinuedFraction(double a, double b, double x) {
  constexpr int kMaxIterations = 10000;
  constexpr double kEpsilon = 1e-15;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEpsilon) break;
  }
  return h;
}

}  // namespace

double RegularizedIncompleteBeta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * BetaContinuedFraction(a, b, x) / a;
  }
  return 1.0 - front * BetaContinuedFraction(b, a, 1.0 - x) / b;
}

double StudentTTwoSided(double t, double df) {
  if (std::isinf(t)) return 0.0;
  if (t == 0.0) return 1.0;
  const double x = df / (df + t * t);
  return std::clamp(RegularizedIncompleteBeta(df / 2.0, 0.5, x), 0.0, 1.0);
}

CorrelationResult Pearson(std::span<const double> xs,
                          std::span<const double> ys) {
  if (xs.size() != ys.size()) throw LengthMismatch();
  const std::size_t n = xs.size();
  if (n < 3) throw TooFewPoints();
  const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  const bool constant_x = std::all_of(xs.begin(), xs.end(),
                                      [&](double v) { return v == xs[0]; });
  const bool constant_y = std::all_of(ys.begin(), ys.end(),
                                      [&](double v) { return v == ys[0]; });
  if (constant_x || constant_y || sxx == 0 || syy == 0) throw ConstantSeries();

  CorrelationResult result;
  result.n = n;
  result.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  const double df = static_cast<double>(n - 2);
  const double one_minus_r2 = 1.0 - result.r * result.r;
  if (one_minus_r2 <= 0.0) {
    result.t_stat = std::copysign(std::numeric_limits<double>::infinity(),
                                  result.r);
    result.p_two_sided = 0.0;
  } else {
    result.t_stat = result.r * std::sqrt(df / one_minus_r2);
    result.p_two_sided = StudentTTwoSided(result.t_stat, df);
  }
  return result;
}

CorpusSummary Summarize(const CorpusCounts& counts,
                        std::span<const ProjectRecord> records,
                        const std::optional<LevelThresholds>& thresholds,
                        const std::optional<CorrelationResult>& correlation,
                        std::vector<KeywordUsage> keyword_usage) {
  CorpusSummary s;
  s.scanned = counts.scanned;
  s.parsed_ok = counts.parsed_ok;
  s.interacting = counts.interacting;
  s.denominator = counts.denominator;
  const std::size_t denominator = counts.denominator == Denominator::kParsed
                                      ? counts.parsed_ok
                                      : counts.scanned;
  s.proportion_percent =
      denominator == 0 ? 0.0
                       : 100.0 * static_cast<double>(counts.interacting) /
                             static_cast<double>(denominator);
  s.projects = records.size();
  std::uint64_t total = 0;
  for (const ProjectRecord& r : records) {
    total += r.access_frequency;
    s.max_access_frequency = std::max(s.max_access_frequency,
                                      r.access_frequency);
  }
  s.mean_access_frequency =
      records.empty() ? 0.0
                      : static_cast<double>(total) /
                            static_cast<double>(records.size());
  s.thresholds = thresholds;
  if (thresholds) {
    for (DependencyLevel level : {DependencyLevel::kLow,
                                  DependencyLevel::kMedium,
                                  DependencyLevel::kHigh}) {
      s.level_counts[level] = 0;
    }
    for (const ProjectRecord& r : records) {
      ++s.level_counts[AssignLevel(r.access_frequency, *thresholds)];
    }
  }
  for (const ProjectRecord& r : records) {
    const std::string domain = r.domain.value_or("unlabeled");
    if (r.strategies.empty()) {
      ++s.domain_strategy[{domain, "None"}];
    }
    for (StrategyLabel label : r.strategies) {
      ++s.domain_strategy[{domain, std::string(ToString(label))}];
    }
  }
  s.keyword_usage = std::move(keyword_usage);
  s.correlation = correlation;
  return s;
}

}  // namespace oraclescan
