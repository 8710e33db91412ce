#include "reqc/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "reqc/random.hpp"

namespace reqc {

namespace {

constexpr double kZeroDistance = 1e-12;
constexpr double kProjectorTol = 1e-10;
constexpr double kInvarianceTol = 1e-9;
constexpr double kPropagatorTol = 1e-9;

void require_same_square(const Operator& u0, const Operator& u,
                         const char* who) {
  if (u0.rows() != u0.cols() || u.rows() != u.cols() || u0.rows() != u.rows()) {
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
  }
}

struct Support {
  double value;
  Eigen::VectorXcd vector;
};

// lambda_min of the Hermitian part of e^{-i alpha} M and its eigenvector.
Support support(const Operator& m, double alpha) {
  const Operator rotated = std::polar(1.0, -alpha) * m;
  const Operator herm = 0.5 * (rotated + rotated.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(herm);
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

// State whose expectation of M is the point of the numerical range nearest
// the origin. On a flat edge the lambda_min eigenspace is degenerate; mix
// its extreme vectors along the edge so the tangential component vanishes.
StateVector closest_point_state(const Operator& m, double alpha,
                                const Support& s) {
  const Operator rotated = std::polar(1.0, -alpha) * m;
  Eigen::SelfAdjointEigenSolver<Operator> solver(
      0.5 * (rotated + rotated.adjoint()));
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  Eigen::Index k = 1;
  while (k < lambda.size() && lambda(k) - lambda(0) < 1e-6) ++k;
  if (k == 1) return s.vector;

  const Operator edge = solver.eigenvectors().leftCols(k);
  const Operator compressed = edge.adjoint() * rotated * edge;
  const Operator tangent =
      Complex(0.0, -0.5) * (compressed - compressed.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> along(tangent);
  const double lo = along.eigenvalues()(0);
  const double hi = along.eigenvalues()(k - 1);
  StateVector c;
  if (lo >= 0.0) {
    c = along.eigenvectors().col(0);
  } else if (hi <= 0.0) {
    c = along.eigenvectors().col(k - 1);
  } else {
    const double w = -lo / (hi - lo);
    c = std::sqrt(1.0 - w) * along.eigenvectors().col(0) +
        std::sqrt(w) * along.eigenvectors().col(k - 1);
  }
  return edge * c;
}

// Orthonormal basis (columns) of the range of an orthogonal projector.
Operator range_basis(const Operator& projector) {
  const HermitianSpectrum spec = hermitian_spectrum(projector);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
    if (spec.eigenvalues(k) > 0.5) keep.push_back(k);
  }
  Operator basis(projector.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    basis.col(static_cast<Eigen::Index>(k)) = spec.eigenvectors.col(keep[k]);
  }
  return basis;
}

Operator restricted_overlap(const Operator& u0, const Operator& u,
                            const Operator& subspace, Operator& basis) {
  require_same_square(u0, u, "subspace_worst_fidelity");
  if (subspace.rows() != u0.rows() || subspace.cols() != u0.cols()) {
    throw std::invalid_argument("subspace_worst_fidelity: projector dimension");
  }
  if (!is_hermitian(subspace, kProjectorTol) ||
      max_abs(subspace * subspace - subspace) > kProjectorTol) {
    throw std::invalid_argument(
        "subspace_worst_fidelity: subspace is not an orthogonal projector");
  }
  if (!is_unitary(u0, kPropagatorTol) || !is_unitary(u, kPropagatorTol)) {
    throw std::invalid_argument("subspace_worst_fidelity: non-unitary input");
  }
  const Operator complement = identity(static_cast<std::size_t>(u0.rows())) -
                              subspace;
  if (max_abs(complement * u0 * subspace) > kInvarianceTol) {
    throw std::invalid_argument(
        "subspace_worst_fidelity: target does not preserve the subspace");
  }
  basis = range_basis(subspace);
  if (basis.cols() == 0) {
    throw std::invalid_argument("subspace_worst_fidelity: empty subspace");
  }
  return basis.adjoint() * u0.adjoint() * u * basis;
}

}  // namespace

double eigenphase_max_gap(const Operator& u) {
  const std::vector<double> phases = eigenphases(u);
  double gap = kTwoPi + phases.front() - phases.back();
  for (std::size_t j = 1; j < phases.size(); ++j) {
    gap = std::max(gap, phases[j] - phases[j - 1]);
  }
  return gap;
}

FidelityResult full_space_worst_fidelity(const Operator& u0,
                                         const Operator& u) {
  require_same_square(u0, u, "full_space_worst_fidelity");
  if (!is_unitary(u0, kPropagatorTol) || !is_unitary(u, kPropagatorTol)) {
    throw std::invalid_argument("full_space_worst_fidelity: non-unitary input");
  }
  const Operator w = u0.adjoint() * u;
  // Re-orthonormalize accumulated rounding before the Schur step.
  Eigen::HouseholderQR<Operator> qr(w);
  Operator q = qr.householderQ();
  const Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  const double gap = eigenphase_max_gap(q);
  FidelityResult result;
  result.max_gap = gap;
  if (gap >= kPi) {
    const double c = std::cos(gap / 2.0);
    result.value = std::clamp(c * c, 0.0, 1.0);
  }
  return result;
}

FidelityResult subspace_worst_fidelity(const Operator& u0, const Operator& u,
                                       const Operator& subspace,
                                       SubspaceSearchOptions options) {
  if (options.coarse_angles < 3 || !(options.angle_tolerance > 0.0)) {
    throw std::invalid_argument("subspace_worst_fidelity: bad search options");
  }
  Operator basis;
  const Operator m = restricted_overlap(u0, u, subspace, basis);

  const int n = options.coarse_angles;
  const double step = kTwoPi / n;
  int best = 0;
  double best_value = -2.0;
  for (int k = 0; k < n; ++k) {
    const double v = support(m, step * k).value;
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }

  // Golden-section refinement inside the bracket around the best sample.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = step * best - step, hi = step * best + step;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = support(m, x1).value, f2 = support(m, x2).value;
  while (hi - lo > options.angle_tolerance) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = support(m, x2).value;
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = support(m, x1).value;
    }
  }
  double alpha = 0.5 * (lo + hi);
  Support s = support(m, alpha);
  if (s.value < best_value) {
    alpha = step * best;
    s = support(m, alpha);
  }

  FidelityResult result;
  result.value = s.value > kZeroDistance ? std::min(1.0, s.value * s.value)
                                         : 0.0;
  if (result.value > 0.0) {
    StateVector witness = basis * closest_point_state(m, alpha, s);
    result.witness = witness / witness.norm();
  }
  return result;
}

double brute_force_worst_fidelity(const Operator& u0, const Operator& u,
                                  const Operator& subspace, int n_samples,
                                  std::uint64_t seed) {
  if (n_samples < 1) {
    throw std::invalid_argument("brute_force_worst_fidelity: n_samples < 1");
  }
  Operator basis;
  const Operator m = restricted_overlap(u0, u, subspace, basis);
  const auto r = static_cast<std::size_t>(m.rows());

  auto objective = [&](const StateVector& c) {
    return std::norm(c.dot(m * c));
  };

  Rng rng = stream_rng(seed, 0);
  double best = 1.0;
  for (int sample = 0; sample < n_samples; ++sample) {
    StateVector c = random_state(r, rng);
    double f = objective(c);
    double step = 1.0;
    for (int iter = 0; iter < 500; ++iter) {
      const Complex w = c.dot(m * c);
      // d f / d conj(c), projected onto the tangent space of the sphere.
      StateVector g = std::conj(w) * (m * c) + w * (m.adjoint() * c);
      g -= c * c.dot(g);
      const double gnorm2 = g.squaredNorm();
      if (gnorm2 < 1e-28) break;
      step = std::min(1.0, 4.0 * step);
      bool moved = false;
      while (step > 1e-14) {
        StateVector trial = c - step * g;
        trial /= trial.norm();
        const double ft = objective(trial);
        if (ft <= f - 1e-4 * step * gnorm2) {
          c = trial;
          f = ft;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
    best = std::min(best, f);
  }
  return best;
}

}  // namespace reqc
