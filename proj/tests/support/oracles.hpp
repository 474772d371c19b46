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

// Independent oracles shared by the analytics tests and the acceptance suite.

#ifndef ORACLESCAN_TESTS_ORACLES_HPP_
#define ORACLESCAN_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "oraclescan/analytics.hpp"

namespace oraclescan::testing {

using Freqs = std::vector<std::uint64_t>;

inline double Scaled(std::uint64_t f, FitScale scale) {
  const double x = static_cast<double>(f);
  return scale == FitScale::kLog1p ? std::log1p(x) : x;
}

struct BruteFit {
  double sse = std::numeric_limits<double>::infinity();
  std::vector<int> label;  // per distinct value, 0..2
  bool unique = true;
};

// Exhaustive oracle: every assignment of the distinct values to three
// non-empty ordered groups, contiguous or not.
inline BruteFit BruteForce(const Freqs& data, FitScale scale) {
  std::map<std::uint64_t, int> mult;
  for (std::uint64_t f : data) ++mult[f];
  std::vector<std::uint64_t> values;
  std::vector<int> weight;
  for (const auto& [v, w] : mult) {
    values.push_back(v);
    weight.push_back(w);
  }
  const std::size_t k = values.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;
  BruteFit best;
  std::vector<int> label(k);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    double sum[3] = {0, 0, 0}, sq[3] = {0, 0, 0}, n[3] = {0, 0, 0};
    for (std::size_t i = 0; i < k; ++i) {
      label[i] = static_cast<int>(c % 3);
      c /= 3;
      const double x = Scaled(values[i], scale);
      sum[label[i]] += weight[i] * x;
      sq[label[i]] += weight[i] * x * x;
      n[label[i]] += weight[i];
    }
    if (n[0] == 0 || n[1] == 0 || n[2] == 0) continue;
    // Groups must be ordered by mean so labels mean Low/Medium/High.
    if (!(sum[0] / n[0] < sum[1] / n[1] && sum[1] / n[1] < sum[2] / n[2])) {
      continue;
    }
    double sse = 0;
    for (int g = 0; g < 3; ++g) {
      const double mean = sum[g] / n[g];
      for (std::size_t i = 0; i < k; ++i) {
        if (label[i] != g) continue;
        const double d = Scaled(values[i], scale) - mean;
        sse += weight[i] * d * d;
      }
    }
    if (std::isinf(best.sse)) {
      best.sse = sse;
      best.label = label;
      continue;
    }
    const double tol = 1e-9 * std::max(1.0, best.sse);
    if (sse < best.sse - tol) {
      best.sse = sse;
      best.label = label;
      best.unique = true;
    } else if (std::abs(sse - best.sse) <= tol) {
      best.unique = false;
    }
  }
  return best;
}

// True when FitThresholds reaches the exhaustive optimum: equal SSE, and the
// same grouping whenever the optimum is unique.
inline bool FitMatchesBruteForce(const Freqs& data, FitScale scale) {
  const BruteFit oracle = BruteForce(data, scale);
  if (!std::isfinite(oracle.sse)) return false;
  const LevelThresholds th = FitThresholds(data, scale);
  std::map<std::uint64_t, int> fitted;
  for (std::uint64_t f : data) fitted[f] = static_cast<int>(AssignLevel(f, th));
  double sum[3] = {0, 0, 0}, n[3] = {0, 0, 0};
  for (std::uint64_t f : data) {
    sum[fitted[f]] += Scaled(f, scale);
    n[fitted[f]] += 1;
  }
  double sse = 0;
  for (std::uint64_t f : data) {
    if (n[fitted[f]] == 0) return false;
    const double d = Scaled(f, scale) - sum[fitted[f]] / n[fitted[f]];
    sse += d * d;
  }
  if (std::abs(sse - oracle.sse) > 1e-9 * std::max(1.0, oracle.sse)) {
    return false;
  }
  if (!oracle.unique) return true;
  std::size_t i = 0;
  for (const auto& [value, level] : fitted) {
    if (level != oracle.label[i++]) return false;
  }
  return true;
}

// Random input with 3..12 distinct values (cycling with `trial`) and a few
// repeats, drawn from a narrow or a wide range.
inline Freqs SmallDistinctInput(std::mt19937_64& rng, int trial) {
  const std::size_t distinct = 3 + static_cast<std::size_t>(trial % 10);
  const std::uint64_t span = trial % 2 ? 30 : 20000;
  std::set<std::uint64_t> values;
  while (values.size() < distinct) values.insert(rng() % span);
  Freqs data(values.begin(), values.end());
  const int extra = static_cast<int>(rng() % 6);
  for (int e = 0; e < extra; ++e) data.push_back(data[rng() % distinct]);
  return data;
}

// Three integer clusters near 5, 100 and 5000 with +/-10% noise, 10 points
// each; `truth` receives the planted group per point.
inline Freqs Planted(std::mt19937_64& rng, std::vector<int>& truth) {
  const double centers[3] = {5, 100, 5000};
  std::uniform_real_distribution<double> noise(-0.1, 0.1);
  Freqs data;
  truth.clear();
  for (int i = 0; i < 30; ++i) {
    const int g = i % 3;
    data.push_back(static_cast<std::uint64_t>(
        std::llround(centers[g] * (1.0 + noise(rng)))));
    truth.push_back(g);
  }
  return data;
}

inline long double DirectR(const std::vector<double>& xs,
                    const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// Two-sided tail of Student's t by composite Simpson integration of the
// density over [0, |t|].
inline double SimpsonTwoSided(double t, double df) {
  const double log_c = std::lgamma((df + 1) / 2) - std::lgamma(df / 2) -
                       0.5 * std::log(df * M_PI);
  auto density = [&](double x) {
    return std::exp(log_c - (df + 1) / 2 * std::log1p(x * x / df));
  };
  const int steps = 200000;
  const double h = std::abs(t) / steps;
  double sum = density(0) + density(std::abs(t));
  for (int i = 1; i < steps; ++i) {
    sum += (i % 2 ? 4 : 2) * density(i * h);
  }
  return 1.0 - 2.0 * sum * h / 3.0;
}

struct PRow {
  std::size_t n;
  double r;
  double p;
};

// Pre-tabulated two-sided p-values for the Pearson t statistic.
constexpr PRow kPTable[] = {
    {10, 0.632, 0.049951112185}, {3, 0.5, 0.666666666667},
    {5, 0.9, 0.037386073468},    {20, 0.3, 0.198757717345},
    {30, -0.45, 0.012591071275}, {50, 0.1, 0.489592551761},
    {100, 0.2, 0.046036286460},  {8, 0.0, 1.0},
};

// Vectors of length n with correlation exactly r: y = r*x + sqrt(1-r^2)*z
// for centred orthonormal x and z.
inline void WithCorrelation(std::size_t n, double r, std::vector<double>& xs,
                     std::vector<double>& ys) {
  std::vector<double> x(n), z(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<double>(i) - (n - 1) / 2.0;
    z[i] = std::cos(1.7 * i + 0.3);
  }
  double mz = 0;
  for (double v : z) mz += v;
  mz /= n;
  for (double& v : z) v -= mz;
  auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
  };
  const double proj = dot(z, x) / dot(x, x);
  for (std::size_t i = 0; i < n; ++i) z[i] -= proj * x[i];
  const double nx = std::sqrt(dot(x, x)), nz = std::sqrt(dot(z, z));
  xs.resize(n);
  ys.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = x[i] / nx;
    ys[i] = r * xs[i] + std::sqrt(1 - r * r) * z[i] / nz;
  }
}

}  // namespace oraclescan::testing

#endif  // ORACLESCAN_TESTS_ORACLES_HPP_
