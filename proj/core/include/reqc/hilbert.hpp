#pragma once

// Dense complex linear algebra for small multi-level ion registers.
//
// Units: hbar = 1 and the mean Rabi frequency Omega0 = 1, so energies are
// multiples of Omega0 and durations are multiples of 1/Omega0.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace reqc {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Admission tolerances (max-abs entry norm).
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;

struct HermitianSpectrum {
  Eigen::VectorXd eigenvalues;  // ascending
  Operator eigenvectors;        // columns, orthonormal
};

struct UnitarySpectrum {
  Eigen::VectorXcd eigenvalues;
  Operator eigenvectors;
};

Operator identity(std::size_t dim);

double max_abs(const Operator& a);

bool is_hermitian(const Operator& a, double tol = kHermitianTol);
bool is_unitary(const Operator& a, double tol = kUnitaryTol);

/// Kronecker product with the index of `a` running slowest.
Operator kron(const Operator& a, const Operator& b);

/// I (x) ... (x) op (x) ... (x) I with `op` at position `slot`.
/// Throws std::invalid_argument on a bad slot or a dimension mismatch.
Operator embed(const Operator& op, std::size_t slot,
               std::span<const int> local_dims);

HermitianSpectrum hermitian_spectrum(const Operator& h);

/// Spectral decomposition of a unitary (normal) matrix through its complex
/// Schur form, which keeps the eigenvector matrix unitary even for
/// degenerate spectra.
UnitarySpectrum unitary_spectrum(const Operator& u);

/// exp(-i h t) by Hermitian spectral decomposition.
Operator propagator(const Operator& h, double t);

/// Sorted eigenphases in [0, 2*pi).
std::vector<double> eigenphases(const Operator& u);

/// 1 - |tr(u^dagger v)| / dim. Zero iff u and v agree up to a global phase.
double global_phase_distance(const Operator& u, const Operator& v);

/// Submatrix on the listed basis indices (rows and columns).
Operator restrict_to(const Operator& a, std::span<const std::size_t> indices);

}  // namespace reqc
