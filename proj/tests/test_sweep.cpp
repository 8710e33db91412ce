#include <gtest/gtest.h>

#include "reqc/sweep.hpp"

using namespace reqc;

TEST(SweepVariant, RoundTrip) {
  for (SweepVariant v : {SweepVariant::simple, SweepVariant::symmetrized,
                         SweepVariant::symmetrized_bb1}) {
    EXPECT_EQ(parse_sweep_variant(to_string(v)), v);
  }
  EXPECT_FALSE(parse_sweep_variant("bogus"));
}

TEST(SteppedRange, IncludesEndpoints) {
  const auto r = stepped_range(-0.05, 0.05, 0.0025);
  ASSERT_EQ(r.size(), 41u);
  EXPECT_DOUBLE_EQ(r.front(), -0.05);
  EXPECT_NEAR(r.back(), 0.05, 1e-15);
  EXPECT_NEAR(r[20], 0.0, 1e-15);
  EXPECT_THROW(stepped_range(1.0, 0.0, 0.1), std::domain_error);
  EXPECT_THROW(stepped_range(0.0, 1.0, 0.0), std::domain_error);
}

TEST(DefaultGrid, Shape) {
  const SweepGrid g = default_sweep_grid(SweepVariant::symmetrized_bb1);
  EXPECT_EQ(g.deltas.size(), 41u);
  EXPECT_EQ(g.omegas.size(), 61u);
  EXPECT_DOUBLE_EQ(g.coupling, 100.0);
  EXPECT_NO_THROW(g.validate());
}

TEST(SpotValues, HeadlineNumbers) {
  EXPECT_GE(cps_fidelity(SweepVariant::symmetrized_bb1, 0.0, 1.0, 100.0), 0.999);
  EXPECT_GE(cps_fidelity(SweepVariant::symmetrized_bb1, 0.0, 1.10, 100.0), 0.999);
  EXPECT_LT(cps_fidelity(SweepVariant::simple, 0.0, 1.10, 100.0), 0.999);
}

TEST(SpotValues, FidelityFallsWithAmplitudeErrorForSimpleGate) {
  double previous = 1.0;
  for (double omega : {1.0, 1.02, 1.05, 1.10}) {
    const double f = cps_fidelity(SweepVariant::simple, 0.0, omega, 100.0);
    EXPECT_LE(f, previous + 1e-12);
    previous = f;
  }
}

TEST(Sweep, RowMajorAndParallelIdentical) {
  SweepGrid grid;
  grid.deltas = {-0.01, 0.0, 0.01};
  grid.omegas = {0.95, 1.0};
  grid.variant = SweepVariant::symmetrized;
  const auto serial = sweep_cps_fidelity(grid, 1);
  const auto parallel = sweep_cps_fidelity(grid, 4);
  ASSERT_EQ(serial.size(), 6u);
  EXPECT_DOUBLE_EQ(serial[1].delta, -0.01);
  EXPECT_DOUBLE_EQ(serial[1].omega, 1.0);
  EXPECT_DOUBLE_EQ(serial[2].delta, 0.0);
  for (std::size_t k = 0; k < serial.size(); ++k) {
    EXPECT_EQ(serial[k].fidelity, parallel[k].fidelity);
    EXPECT_GE(serial[k].fidelity, 0.0);
    EXPECT_LE(serial[k].fidelity, 1.0);
    EXPECT_EQ(serial[k].fidelity,
              cps_fidelity(grid.variant, serial[k].delta, serial[k].omega, 100.0));
  }
}

TEST(Sweep, RejectsBadGrid) {
  SweepGrid grid;
  EXPECT_THROW(sweep_cps_fidelity(grid), std::domain_error);
  grid.deltas = {0.0};
  grid.omegas = {-1.0};
  EXPECT_THROW(sweep_cps_fidelity(grid), std::domain_error);
}
