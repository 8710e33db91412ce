#include "reqc/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace reqc {

Operator identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return Operator::Identity(n, n);
}

double max_abs(const Operator& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Operator& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs(a - a.adjoint()) <= tol;
}

bool is_unitary(const Operator& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs(a.adjoint() * a - Operator::Identity(a.rows(), a.cols())) <=
         tol;
}

Operator kron(const Operator& a, const Operator& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols();
  const Eigen::Index rb = b.rows(), cb = b.cols();
  Operator out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i) {
    for (Eigen::Index j = 0; j < ca; ++j) {
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  }
  return out;
}

Operator embed(const Operator& op, std::size_t slot,
               std::span<const int> local_dims) {
  if (slot >= local_dims.size()) {
    throw std::invalid_argument("embed: slot " + std::to_string(slot) +
                                " out of range for " +
                                std::to_string(local_dims.size()) + " ions");
  }
  if (op.rows() != op.cols() || op.rows() != local_dims[slot]) {
    throw std::invalid_argument("embed: operator dimension " +
                                std::to_string(op.rows()) +
                                " does not match local dimension " +
                                std::to_string(local_dims[slot]));
  }
  Eigen::Index before = 1, after = 1;
  for (std::size_t k = 0; k < slot; ++k) before *= local_dims[k];
  for (std::size_t k = slot + 1; k < local_dims.size(); ++k)
    after *= local_dims[k];

  // I_before (x) op (x) I_after, filled directly.
  const Eigen::Index d = op.rows();
  const Eigen::Index dim = before * d * after;
  Operator out = Operator::Zero(dim, dim);
  for (Eigen::Index b = 0; b < before; ++b) {
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        const Complex v = op(i, j);
        if (v == Complex{}) continue;
        const Eigen::Index row0 = (b * d + i) * after;
        const Eigen::Index col0 = (b * d + j) * after;
        for (Eigen::Index a = 0; a < after; ++a) out(row0 + a, col0 + a) = v;
      }
    }
  }
  return out;
}

HermitianSpectrum hermitian_spectrum(const Operator& h) {
  if (!is_hermitian(h)) {
    throw std::invalid_argument("hermitian_spectrum: input is not Hermitian");
  }
  // Symmetrize away rounding noise before handing to the solver.
  const Operator hs = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(hs);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_spectrum: eigensolver failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

UnitarySpectrum unitary_spectrum(const Operator& u) {
  if (!is_unitary(u)) {
    throw std::invalid_argument("unitary_spectrum: input is not unitary");
  }
  Eigen::ComplexSchur<Operator> schur(u);
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("unitary_spectrum: Schur decomposition failed");
  }
  // For a normal matrix the triangular factor is diagonal up to rounding.
  return {schur.matrixT().diagonal(), schur.matrixU()};
}

Operator propagator(const Operator& h, double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("propagator: non-finite duration");
  }
  const HermitianSpectrum spec = hermitian_spectrum(h);
  Eigen::VectorXcd phases(spec.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(1.0, -spec.eigenvalues(k) * t);
  }
  return spec.eigenvectors * phases.asDiagonal() *
         spec.eigenvectors.adjoint();
}

std::vector<double> eigenphases(const Operator& u) {
  const UnitarySpectrum spec = unitary_spectrum(u);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(spec.eigenvalues.size()));
  for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
    double phi = std::arg(spec.eigenvalues(k));
    if (phi < 0.0) phi += kTwoPi;
    // arg() of 1 - 0i lands just below 2*pi; fold it onto 0.
    if (phi >= kTwoPi - 1e-12) phi = 0.0;
    out.push_back(phi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double global_phase_distance(const Operator& u, const Operator& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw std::invalid_argument("global_phase_distance: dimension mismatch");
  }
  if (u.rows() == 0) return 0.0;
  const Complex overlap = (u.adjoint() * v).trace();
  return std::max(0.0, 1.0 - std::abs(overlap) / static_cast<double>(u.rows()));
}

Operator restrict_to(const Operator& a, std::span<const std::size_t> indices) {
  const auto n = static_cast<Eigen::Index>(indices.size());
  Operator out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = a(static_cast<Eigen::Index>(indices[i]),
                    static_cast<Eigen::Index>(indices[j]));
    }
  }
  return out;
}

}  // namespace reqc
