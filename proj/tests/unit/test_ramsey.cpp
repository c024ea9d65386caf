// Copyright 2026 The corrnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "corrnoise/ramsey.hpp"

using namespace corrnoise;
using std::numbers::pi;

namespace {

std::vector<double> grid(double stop, int count) {
  std::vector<double> t;
  for (int i = 0; i < count; ++i) t.push_back(stop * i / (count - 1));
  return t;
}

std::vector<double> closed_form(const std::vector<double>& t, double s, double w) {
  std::vector<double> p;
  for (double x : t) p.push_back(0.5 + 0.5 * std::exp(-2 * s * x * x) * std::cos(w * x));
  return p;
}

EnsembleConfig fixed_count(std::size_t n) {
  EnsembleConfig cfg;
  cfg.n_realizations_initial = n;
  cfg.max_realizations = n;
  return cfg;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST(FitEnvelope, RecoversNoiselessParameters) {
  const auto t = grid(2.0, 41);
  const auto fit = fit_envelope(t, closed_form(t, 0.25, 2 * pi));
  EXPECT_NEAR(fit.sigma2, 0.25, 1e-6);
  EXPECT_NEAR(fit.omega, 2 * pi, 1e-6);
  EXPECT_FALSE(fit.infinite_t2);
  EXPECT_LT(fit.residual, 1e-8);
}

TEST(FitEnvelope, RecoversAcrossParameterRange) {
  const auto t = grid(2.0, 41);
  for (double s : {0.05, 0.5, 2.0}) {
    for (double w : {0.0, 2.0, 6.0, 10.0}) {
      const auto fit = fit_envelope(t, closed_form(t, s, w));
      EXPECT_NEAR(fit.sigma2, s, 1e-6 * (1 + s)) << s << " " << w;
      if (s < 2.0 || w > 0) EXPECT_NEAR(fit.omega, w, w > 0 ? 1e-4 : 1e-3) << s << " " << w;
    }
  }
}

TEST(FitEnvelope, FlatSignalIsInfiniteT2) {
  const auto t = grid(3.0, 30);
  const auto fit = fit_envelope(t, closed_form(t, 0.0, 3.0));
  EXPECT_TRUE(fit.infinite_t2);
  EXPECT_EQ(fit.sigma2, 0.0);
  EXPECT_NEAR(fit.omega, 3.0, 1e-6);
  EXPECT_EQ(t2_effective(0.0), kInf);
}

TEST(FitEnvelope, RejectsBadInput) {
  EXPECT_THROW(fit_envelope(grid(1, 7), closed_form(grid(1, 7), 0.1, 1)), std::invalid_argument);
  auto t = grid(1, 10);
  EXPECT_THROW(fit_envelope(t, closed_form(grid(1, 9), 0.1, 1)), std::invalid_argument);
  std::swap(t[2], t[3]);
  EXPECT_THROW(fit_envelope(t, closed_form(t, 0.1, 1)), std::invalid_argument);
}

TEST(T2Effective, IsOneOverE) {
  const double s = 0.7;
  const double t2 = t2_effective(s);
  EXPECT_NEAR(std::exp(-2 * s * t2 * t2), std::exp(-1.0), 1e-15);
  EXPECT_THROW(t2_effective(-1), std::invalid_argument);
}

TEST(RunRamsey, NoiselessPlusPeriodIsOne) {
  const std::vector<double> fields{pi / 2, pi / 2};
  const auto t = grid(2.0, 17);
  const auto res = run_ramsey(RamseyVariant::kPlus, t, fields, NoiseModel::zero(2), fixed_count(10));
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_NEAR(res.probabilities[i], 0.5 + 0.5 * std::cos(2 * pi * t[i]), 1e-12);
  }
  EXPECT_TRUE(res.fit.infinite_t2);
  EXPECT_NEAR(res.fit.omega, 2 * pi, 1e-6);
  EXPECT_EQ(res.n_oscillations, kInf);
}

TEST(RunRamsey, DivergentCases) {
  const auto t = grid(2.0, 21);
  const std::vector<double> fields{1.0, 0.5};
  const auto minus = run_ramsey(RamseyVariant::kMinus, t, fields, NoiseModel::two_qubit(1, 1, 1), fixed_count(200));
  EXPECT_TRUE(minus.fit.infinite_t2);
  const auto plus = run_ramsey(RamseyVariant::kPlus, t, fields, NoiseModel::two_qubit(1, 1, -1), fixed_count(200));
  EXPECT_TRUE(plus.fit.infinite_t2);
  const auto decaying = run_ramsey(RamseyVariant::kPlus, t, fields, NoiseModel::two_qubit(1, 1, 1), fixed_count(200));
  EXPECT_FALSE(decaying.fit.infinite_t2);
  EXPECT_EQ(classify_dfs(decaying.t2_effective, minus.t2_effective), "-");
}

TEST(RunRamsey, MatchesClosedForm) {
  const auto t = grid(1.5, 16);
  const std::vector<double> fields{1.5, 0.5};
  const auto noise = NoiseModel::two_qubit(1, 0.6, 0.3);
  const std::size_t n = 4000;
  for (auto v : {RamseyVariant::kPlus, RamseyVariant::kMinus, RamseyVariant::kQubit1, RamseyVariant::kQubit2}) {
    const auto res = run_ramsey(v, t, fields, noise, fixed_count(n));
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_NEAR(res.probabilities[i], ramsey_prediction(v, t[i], fields, noise), 3 / std::sqrt(double(n)));
    }
  }
}

TEST(RunRamsey, FittedRateWithinTenPercent) {
  const auto t = grid(2.0, 41);
  const auto noise = NoiseModel::two_qubit(1, 1, 0.5);
  const auto res = run_ramsey(RamseyVariant::kPlus, t, {3.0, 1.0}, noise, fixed_count(2000));
  const std::array<int, 2> plus{1, 1};
  EXPECT_NEAR(res.fit.sigma2, variance_of_sum(noise, plus), 0.3);
  EXPECT_NEAR(variance_of_sum(noise, plus), 3.0, 1e-12);
}

TEST(RunRamsey, ShotNoiseIsReproducible) {
  const auto t = grid(1.0, 10);
  const auto a = run_ramsey(RamseyVariant::kPlus, t, {1, 0}, NoiseModel::two_qubit(0.5, 0.5, 0), fixed_count(50),
                            RamseyOptions{100});
  const auto b = run_ramsey(RamseyVariant::kPlus, t, {1, 0}, NoiseModel::two_qubit(0.5, 0.5, 0), fixed_count(50),
                            RamseyOptions{100});
  EXPECT_EQ(a.probabilities, b.probabilities);
  for (double p : a.probabilities) EXPECT_NEAR(std::round(p * 100), p * 100, 1e-9);
}

TEST(RunRamsey, RejectsBadGrid) {
  EXPECT_THROW(run_ramsey(RamseyVariant::kPlus, grid(1, 7), {0, 0}, NoiseModel::zero(2), fixed_count(10)),
               std::invalid_argument);
  auto t = grid(1, 9);
  t[0] = -0.1;
  EXPECT_THROW(run_ramsey(RamseyVariant::kPlus, t, {0, 0}, NoiseModel::zero(2), fixed_count(10)),
               std::invalid_argument);
  EXPECT_THROW(run_ramsey(RamseyVariant::kPlus, grid(1, 9), {0, 0, 0}, NoiseModel::zero(3), fixed_count(10)),
               std::invalid_argument);
}

TEST(ExtractS12, Examples) {
  const auto perfect = extract_s12(4, 0, 1, 1);
  EXPECT_DOUBLE_EQ(perfect.s12_hat, 1.0);
  EXPECT_DOUBLE_EQ(perfect.c_hat, 1.0);
  EXPECT_FALSE(perfect.sum_rule_warning);
  const auto none = extract_s12(2, 2, 1, 1);
  EXPECT_DOUBLE_EQ(none.s12_hat, 0.0);
  EXPECT_DOUBLE_EQ(none.c_hat, 0.0);
  EXPECT_TRUE(extract_s12(5, 2, 1, 1).sum_rule_warning);
  EXPECT_FALSE(extract_s12(5, 2, 1, 1, 1.5).sum_rule_warning);
  EXPECT_TRUE(std::isnan(extract_s12(1, 1, 0, 1).c_hat));
  EXPECT_THROW(extract_s12(-1, 0, 1, 1), std::invalid_argument);
}

TEST(ExtractS12, RoundTripsCovariance) {
  for (double c : {-1.0, -0.7, -0.2, 0.0, 0.35, 0.9, 1.0}) {
    for (double s1 : {0.3, 1.0, 2.0}) {
      const auto m = NoiseModel::two_qubit(s1, 0.8, c);
      const std::array<double, 2> p{1, 1}, mi{1, -1}, q1{1, 0}, q2{0, 1};
      const auto e = extract_s12(m.quadratic_form(p), m.quadratic_form(mi), m.quadratic_form(q1), m.quadratic_form(q2));
      EXPECT_NEAR(e.c_hat, c, 1e-12);
      EXPECT_NEAR(e.s12_hat, m.covariance()(0, 1), 1e-12);
      EXPECT_FALSE(e.sum_rule_warning);
    }
  }
}

TEST(ClassifyDfs, Examples) {
  EXPECT_EQ(classify_dfs(kInf, 1.0), "+");
  EXPECT_EQ(classify_dfs(1.0, kInf), "-");
  EXPECT_EQ(classify_dfs(1.0, 1.05, 2.0), "none");
  EXPECT_EQ(classify_dfs(5.0, 1.0, 2.0), "+");
  EXPECT_EQ(classify_dfs(1.0, 5.0, 2.0), "-");
  EXPECT_EQ(classify_dfs(kInf, kInf), "none");
  EXPECT_THROW(classify_dfs(0.0, 1.0), std::invalid_argument);
}
