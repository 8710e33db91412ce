#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "reqc/fidelity.hpp"
#include "reqc/random.hpp"
#include "simplex_oracle.hpp"

using namespace reqc;

namespace {

Operator phase_diag(std::initializer_list<double> phases) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(phases.size()));
  Eigen::Index k = 0;
  for (double p : phases) v(k++) = std::polar(1.0, p);
  return v.asDiagonal();
}

}  // namespace

TEST(MaxGap, Examples) {
  EXPECT_NEAR(eigenphase_max_gap(identity(4)), kTwoPi, 1e-12);
  EXPECT_NEAR(eigenphase_max_gap(phase_diag({0, kPi / 2})), 1.5 * kPi, 1e-12);
  EXPECT_NEAR(eigenphase_max_gap(phase_diag({0, kTwoPi / 3, 2 * kTwoPi / 3})),
              kTwoPi / 3, 1e-12);
}

TEST(FullSpace, SpotValues) {
  Rng rng = stream_rng(21, 0);
  const Operator u = random_unitary(4, rng);
  EXPECT_NEAR(full_space_worst_fidelity(u, u).value, 1.0, 1e-12);
  EXPECT_NEAR(full_space_worst_fidelity(identity(2), phase_diag({0, kPi})).value,
              0.0, 1e-9);
  EXPECT_NEAR(
      full_space_worst_fidelity(identity(2), phase_diag({0, kPi / 2})).value, 0.5,
      1e-9);
}

TEST(FullSpace, RejectsNonUnitary) {
  EXPECT_THROW(full_space_worst_fidelity(identity(2), 2.0 * identity(2)),
               std::invalid_argument);
  EXPECT_THROW(full_space_worst_fidelity(identity(2), identity(3)),
               std::invalid_argument);
}

TEST(FullSpace, MatchesSimplexOracle) {
  Rng rng = stream_rng(22, 0);
  for (int k = 0; k < 60; ++k) {
    const std::size_t dim = 2 + static_cast<std::size_t>(k % 5);
    const Operator u0 = random_unitary(dim, rng);
    // Small perturbations keep many cases away from F = 0.
    const Operator u =
        u0 * propagator(random_hermitian(dim, rng), 0.05 * (1 + k % 10));
    const double oracle = test_oracle::simplex_min_fidelity(
        eigenphases(u0.adjoint() * u));
    EXPECT_NEAR(full_space_worst_fidelity(u0, u).value, oracle, 1e-8);
  }
}

TEST(FullSpace, InvariantUnderGlobalPhaseAndConjugation) {
  Rng rng = stream_rng(23, 0);
  for (int k = 0; k < 10; ++k) {
    const Operator u0 = random_unitary(3, rng);
    const Operator u = u0 * propagator(random_hermitian(3, rng), 0.2);
    const Operator v = random_unitary(3, rng);
    const double f = full_space_worst_fidelity(u0, u).value;
    EXPECT_NEAR(full_space_worst_fidelity(u0, std::polar(1.0, 0.8) * u).value, f,
                1e-10);
    EXPECT_NEAR(full_space_worst_fidelity(v * u0, v * u).value, f, 1e-10);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
  }
}

TEST(Subspace, AgreesWithFullSpace) {
  Rng rng = stream_rng(24, 0);
  for (int k = 0; k < 20; ++k) {
    const std::size_t dim = 2 + static_cast<std::size_t>(k % 5);
    const Operator u0 = random_unitary(dim, rng);
    const Operator u = u0 * propagator(random_hermitian(dim, rng), 0.1 * (k % 7));
    EXPECT_NEAR(subspace_worst_fidelity(u0, u, identity(dim)).value,
                full_space_worst_fidelity(u0, u).value, 1e-8);
  }
}

TEST(Subspace, WitnessAttainsMinimum) {
  Rng rng = stream_rng(25, 0);
  const Operator u0 = identity(5);
  Operator p = Operator::Zero(5, 5);
  p(0, 0) = p(1, 1) = p(3, 3) = 1.0;
  for (int k = 0; k < 10; ++k) {
    // Block-diagonal unitary that leaves the subspace {0,1,3} invariant.
    const Operator small = propagator(random_hermitian(3, rng), 0.3);
    Operator u = identity(5);
    const int idx[] = {0, 1, 3};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) u(idx[r], idx[c]) = small(r, c);
    const FidelityResult f = subspace_worst_fidelity(u0, u, p);
    ASSERT_TRUE(f.witness);
    const StateVector& w = *f.witness;
    EXPECT_NEAR(w.norm(), 1.0, 1e-12);
    EXPECT_LT((p * w - w).norm(), 1e-12);
    EXPECT_NEAR(std::norm(w.dot(u0.adjoint() * u * w)), f.value, 1e-9);
  }
}

TEST(Subspace, IgnoresLeakageOutsideSubspace) {
  Rng rng = stream_rng(26, 0);
  Operator p = Operator::Zero(4, 4);
  p(0, 0) = p(1, 1) = 1.0;
  Operator u = identity(4);
  u.bottomRightCorner(2, 2) = random_unitary(2, rng);
  EXPECT_NEAR(subspace_worst_fidelity(identity(4), u, p).value, 1.0, 1e-12);
}

TEST(Subspace, CountsLeakageOutOfSubspace) {
  // Rotation mixing |0> with the excluded |2> loses fidelity on the subspace.
  Operator p = Operator::Zero(3, 3);
  p(0, 0) = p(1, 1) = 1.0;
  Operator u = identity(3);
  const double a = 0.3;
  u(0, 0) = std::cos(a);
  u(0, 2) = -std::sin(a);
  u(2, 0) = std::sin(a);
  u(2, 2) = std::cos(a);
  const double c = std::cos(a);
  EXPECT_NEAR(subspace_worst_fidelity(identity(3), u, p).value, c * c, 1e-9);
}

TEST(Subspace, RejectsBadProjectorOrTarget) {
  Operator not_projector = identity(3);
  not_projector(0, 0) = 0.5;
  EXPECT_THROW(subspace_worst_fidelity(identity(3), identity(3), not_projector),
               std::invalid_argument);
  Operator p = Operator::Zero(3, 3);
  p(0, 0) = 1.0;
  Operator swap = Operator::Zero(3, 3);
  swap(0, 1) = swap(1, 0) = swap(2, 2) = 1.0;
  EXPECT_THROW(subspace_worst_fidelity(swap, identity(3), p), std::invalid_argument);
  EXPECT_THROW(subspace_worst_fidelity(identity(3), identity(3),
                                       Operator::Zero(3, 3)),
               std::invalid_argument);
}

TEST(BruteForce, UpperBoundsExactValue) {
  Rng rng = stream_rng(27, 0);
  for (int k = 0; k < 10; ++k) {
    const Operator u0 = random_unitary(4, rng);
    const Operator u = u0 * propagator(random_hermitian(4, rng), 0.1 + 0.05 * k);
    const double exact = subspace_worst_fidelity(u0, u, identity(4)).value;
    const double brute =
        brute_force_worst_fidelity(u0, u, identity(4), 200, static_cast<std::uint64_t>(k));
    EXPECT_GE(brute, exact - 1e-7);
    EXPECT_NEAR(brute, full_space_worst_fidelity(u0, u).value, 1e-4);
  }
}

TEST(BruteForce, IdentityOverlapIsOne) {
  Rng rng = stream_rng(28, 0);
  const Operator u = random_unitary(3, rng);
  EXPECT_NEAR(brute_force_worst_fidelity(u, u, identity(3), 5, 1), 1.0, 1e-12);
  EXPECT_THROW(brute_force_worst_fidelity(u, u, identity(3), 0, 1),
               std::invalid_argument);
}
