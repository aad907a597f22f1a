// Copyright 2026 The PFA-TQFT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "pfa/calibration.hpp"
#include "pfa/error.hpp"
#include "pfa/qft.hpp"

namespace pfa {
namespace {

// Largest d with 2 pi / 2^d >= eps by linear scan from d = 0.
int scan_d_star(double eps) {
  int d = 0;
  while (2.0 * M_PI / std::pow(2.0, d + 1) >= eps) {
    ++d;
  }
  return d;
}

TEST(DStar, PlatformValues) {
  EXPECT_EQ(d_star(3e-3), 11);
  EXPECT_EQ(d_star(5e-4), 13);
  EXPECT_EQ(d_star(3e-4), 14);
  EXPECT_EQ(d_star(2e-3), 11);
}

TEST(DStar, RetainedAngleProperty) {
  for (const auto &p : PlatformRegistry::builtin().platforms()) {
    const int d = d_star(p.eps_2q);
    EXPECT_GE(rotation_angle(d), p.eps_2q) << p.name;
    EXPECT_LT(rotation_angle(d + 1), p.eps_2q) << p.name;
  }
}

TEST(DStar, MatchesScanOverManyRates) {
  for (double e = 1e-9; e < 6.0; e *= 1.07) {
    EXPECT_EQ(d_star(e), scan_d_star(e)) << "eps=" << e;
  }
}

TEST(DStar, ExactPowerOfTwoBoundary) {
  // eps equal to a representable rotation angle keeps that angle.
  for (int k = 1; k <= 40; ++k) {
    EXPECT_EQ(d_star(rotation_angle(k)), k);
    EXPECT_EQ(d_star(std::nextafter(rotation_angle(k), HUGE_VAL)), k - 1);
  }
}

TEST(DStar, RejectsOutOfRange) {
  EXPECT_THROW(d_star(0.0), ParameterError);
  EXPECT_THROW(d_star(-1e-3), ParameterError);
  EXPECT_THROW(d_star(7.0), ParameterError);
  EXPECT_THROW(d_star(std::nan("")), ParameterError);
}

TEST(TvdBound, Forms) {
  EXPECT_NEAR(tvd_bound(4, 2, BoundForm::kTight), 2.0 * std::sin(M_PI / 4.0), 1e-15);
  EXPECT_NEAR(tvd_bound(4, 2, BoundForm::kLoose), M_PI / 2.0, 1e-15);
  EXPECT_EQ(tvd_bound(7, 7, BoundForm::kTight), 0.0);
  for (int m = 2; m <= 30; ++m) {
    for (int d = 1; d <= m; ++d) {
      EXPECT_LE(tvd_bound(m, d, BoundForm::kTight), tvd_bound(m, d, BoundForm::kLoose));
    }
  }
  EXPECT_THROW(tvd_bound(4, 5, BoundForm::kTight), ParameterError);
}

TEST(EqualBudgetDepth, ThirtyQubitsFivePercent) {
  const double d = equal_budget_depth(0.05, 30);
  EXPECT_GE(d, 10.85);
  EXPECT_LE(d, 10.95);
  EXPECT_EQ(static_cast<int>(std::ceil(d)), d_star(3e-3));
  // At that depth the loose bound equals alpha.
  EXPECT_NEAR(M_PI * 30 / std::pow(2.0, d), 0.05, 1e-12);
  EXPECT_THROW(equal_budget_depth(0.0, 30), ParameterError);
}

TEST(CliffDepth, CeilLog2PlusTwo) {
  for (int m = 2; m <= 200; ++m) {
    EXPECT_EQ(cliff_depth(m), static_cast<int>(std::ceil(std::log2(static_cast<double>(m)))) + 2) << "m=" << m;
  }
  EXPECT_EQ(cliff_depth(8), 5);
  EXPECT_EQ(cliff_depth(20), 7);
  EXPECT_THROW(cliff_depth(1), ParameterError);
}

TEST(RmseModel, ThreeTerms) {
  const auto b = rmse_model(16, 11, 1e-3, 0.033);
  const double tv = M_PI * 5 / std::pow(2.0, 11);
  const double expected = std::sqrt(1.0 / (3.0 * std::pow(4.0, 16)) + tv * tv / 3.0 + std::pow(105 * 1e-3 * 0.033, 2));
  EXPECT_EQ(b.gates, 105u);
  EXPECT_NEAR(b.tv, tv, 1e-15);
  EXPECT_NEAR(b.rmse, expected, 1e-15);
  EXPECT_NEAR(b.energy_rmse(2.0), 4.0 * expected, 1e-15);

  const auto full = rmse_model(16, 16, 1e-3, 0.033);
  EXPECT_EQ(full.truncation_term, 0.0);
  EXPECT_NEAR(full.rmse, 3.96e-3, 1e-5);
  EXPECT_NEAR(rmse_model(16, 16, 0.0).rmse, std::sqrt(1.0 / (3.0 * std::pow(4.0, 16))), 1e-18);
}

TEST(RmseModel, RejectsBadInput) {
  EXPECT_THROW(rmse_model(16, 17, 1e-3), ParameterError);
  EXPECT_THROW(rmse_model(16, 11, -1e-3), ParameterError);
  EXPECT_THROW(rmse_model(16, 11, 1.0), ParameterError);
  EXPECT_THROW(rmse_model(16, 11, 1e-3, -0.1), ParameterError);
}

TEST(Crossover, EqualizesModelAtThreshold) {
  for (int d = 6; d <= 15; ++d) {
    const auto x = crossover(16, d, 0.033);
    EXPECT_EQ(x.gates_full, 120u);
    const double full = rmse_model(16, 16, x.eps_cross, 0.033).rmse;
    const double trunc = rmse_model(16, d, x.eps_cross, 0.033).rmse;
    EXPECT_NEAR(full, trunc, 1e-12 * full) << "d=" << d;
  }
  EXPECT_NEAR(crossover_eps(16, 11, 0.033), 2.31e-3, 5e-6);
  EXPECT_THROW(crossover(16, 16), ParameterError);
  EXPECT_THROW(crossover(16, 11, 0.0), ParameterError);
}

TEST(PlatformRegistry, BuiltinAndLookup) {
  const auto reg = PlatformRegistry::builtin();
  ASSERT_EQ(reg.platforms().size(), 4u);
  EXPECT_EQ(reg.find("IonQ Aria").eps_2q, 3e-4);
  EXPECT_THROW(reg.find("nope"), ParameterError);
}

TEST(PlatformRegistry, ParseFile) {
  const auto reg = PlatformRegistry::parse("# name,eps\nA, 1e-3\n\n  B,with,comma , 2.5e-4 \n");
  ASSERT_EQ(reg.platforms().size(), 2u);
  EXPECT_EQ(reg.platforms()[0].name, "A");
  EXPECT_EQ(reg.platforms()[1].name, "B,with,comma");
  EXPECT_EQ(reg.platforms()[1].eps_2q, 2.5e-4);
  EXPECT_THROW(PlatformRegistry::parse("A 1e-3\n"), ParameterError);
  EXPECT_THROW(PlatformRegistry::parse("A,abc\n"), ParameterError);
  EXPECT_THROW(PlatformRegistry::parse("A,0\n"), ParameterError);
  EXPECT_THROW(PlatformRegistry::parse("# only comments\n"), ParameterError);
  EXPECT_THROW(PlatformRegistry::load("/nonexistent/platforms.csv"), ParameterError);

  const auto path = std::filesystem::temp_directory_path() / "pfa_tqft_platforms_test.csv";
  {
    std::ofstream out(path);
    out << "X,4e-3\n";
  }
  EXPECT_EQ(PlatformRegistry::load(path.string()).find("X").eps_2q, 4e-3);
  std::filesystem::remove(path);
}

TEST(PlatformReport, ThirtyQubits) {
  const auto rows = platform_report(30, PlatformRegistry::builtin());
  ASSERT_EQ(rows.size(), 4u);
  const int depths[] = {11, 13, 14, 11};
  const std::uint64_t gates[] = {245, 282, 299, 245};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].depth, depths[i]);
    EXPECT_EQ(rows[i].gates, gates[i]);
    EXPECT_EQ(rows[i].gates_full, 435u);
    EXPECT_FALSE(rows[i].full_qft);
    EXPECT_NEAR(rows[i].reduction, 1.0 - gates[i] / 435.0, 1e-15);
  }
  // Small register: d* beyond m means the full circuit.
  const auto small = platform_report(8, PlatformRegistry::builtin());
  for (const auto &r : small) {
    EXPECT_TRUE(r.full_qft);
    EXPECT_EQ(r.depth, 8);
    EXPECT_EQ(r.reduction, 0.0);
  }
}

}  // namespace
}  // namespace pfa
