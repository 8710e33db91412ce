#pragma once

// Worst-case fidelity F(U0, U) = min_psi |<psi| U0^dagger U |psi>|^2.
//
// Over the full space F follows from the eigenphases of U0^dagger U: their
// convex hull is a polygon inscribed in the unit circle and F is the squared
// distance from the origin to it. On a subspace the restricted operator is
// no longer unitary, but its numerical range is still convex, and the
// distance from the origin is max_alpha lambda_min(Herm(e^{-i alpha} M)).

#include <cstdint>
#include <optional>

#include "reqc/hilbert.hpp"

namespace reqc {

struct FidelityResult {
  double value = 0.0;
  std::optional<double> max_gap;        // full-space route only
  std::optional<StateVector> witness;   // subspace route, when value > 0
};

/// Largest circular gap between sorted eigenphases, wrap-around included.
double eigenphase_max_gap(const Operator& u);

FidelityResult full_space_worst_fidelity(const Operator& u0, const Operator& u);

struct SubspaceSearchOptions {
  int coarse_angles = 256;
  double angle_tolerance = 1e-10;
};

/// `subspace` must be an orthogonal projector left invariant by u0.
FidelityResult subspace_worst_fidelity(const Operator& u0, const Operator& u,
                                       const Operator& subspace,
                                       SubspaceSearchOptions options = {});

/// Independent upper bound: minimum over Haar-random starts in the subspace,
/// each refined by Riemannian gradient descent on the unit sphere.
double brute_force_worst_fidelity(const Operator& u0, const Operator& u,
                                  const Operator& subspace, int n_samples,
                                  std::uint64_t seed);

}  // namespace reqc
