#pragma once

// Cat-state preparation on a star register and unitary parity readout
// through the bus qubit, averaged over an inhomogeneous ensemble of
// instances.
//
// Channel 0 is the bus; channels 1..n-1 are the outer qubits.

#include <cstdint>
#include <vector>

#include "reqc/gates.hpp"
#include "reqc/ionmodel.hpp"

namespace reqc {

/// Per-instance parameter spread. Detuning is uniform on [-w, w], the Rabi
/// ratio uniform on [1-r, 1+r] and each bus coupling log-uniform on
/// [g_min, g_max].
struct EnsembleSpec {
  double delta_halfwidth = 0.0;
  double omega_relative_halfwidth = 0.0;
  double g_min = 100.0;
  double g_max = 100.0;
  int n_instances = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Hadamard on the bus, then CNOT(bus -> outer_k) for k = 1..n-1.
std::vector<GateSpec> cat_circuit(int n, GateOptions options = {});

/// CNOT(outer_k -> bus) for k = 1..n-1.
std::vector<GateSpec> parity_gather_circuit(int n, GateOptions options = {});

/// Rotation by pi/2 about -y. With this sense Z maps to +X, so the
/// parity of the rotated cat state is cos(n phi) for every n.
GateSpec analysis_rotation(ChannelId c);

/// Instance `index` of the ensemble, drawn from its own RNG stream.
Instance sample_star_instance(int n, const EnsembleSpec& ensemble,
                              std::size_t index);

struct ParityRow {
  double phi = 0.0;
  double mean_excited = 0.0;  // ensemble mean bus |1> population
  double parity = 0.0;        // 1 - 2 * mean_excited
  std::vector<double> sigma_z;  // ensemble <sigma_z> per qubit before gather
};

struct CatOptions {
  GateOptions gates{};
  unsigned jobs = 1;
};

std::vector<ParityRow> run_cat_experiment(int n, const std::vector<double>& phis,
                                          const EnsembleSpec& ensemble,
                                          CatOptions options = {});

/// Least-squares frequency k of values ~ cos(k phi), searched over
/// [k_lo, k_hi].
double fit_parity_frequency(const std::vector<double>& phis,
                            const std::vector<double>& values, double k_lo,
                            double k_hi);

/// (max - min) / 2 of the parity column.
double parity_visibility(const std::vector<ParityRow>& rows);

}  // namespace reqc
