#pragma once

// Worst-case CPS fidelity over a grid of common detuning and Rabi-frequency
// ratio for two coupled ions.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqc/gates.hpp"
#include "reqc/hilbert.hpp"

namespace reqc {

enum class SweepVariant { simple, symmetrized, symmetrized_bb1 };

std::string to_string(SweepVariant v);
std::optional<SweepVariant> parse_sweep_variant(std::string_view text);

struct SweepGrid {
  std::vector<double> deltas;  // delta / Omega0
  std::vector<double> omegas;  // Omega^(mu) / Omega0
  double coupling = 100.0;     // g12 / Omega0
  SweepVariant variant = SweepVariant::symmetrized_bb1;

  void validate() const;
};

/// lo, lo + step, ... up to hi inclusive (count rounded to the nearest
/// integer number of steps).
std::vector<double> stepped_range(double lo, double hi, double step);

/// delta in [-0.05, 0.05] step 0.0025; Omega in [0.85, 1.15] step 0.005 for
/// the composite variants, [0.97, 1.03] step 0.001 for the simple gate.
SweepGrid default_sweep_grid(SweepVariant variant);

struct SweepPoint {
  double delta = 0.0;
  double omega = 0.0;
  double fidelity = 0.0;
};

/// CPS on channels 0 (control) and 1 (target).
GateSpec sweep_gate(SweepVariant variant);

/// Subspace worst-case fidelity against U_CPS for one grid point.
double cps_fidelity(SweepVariant variant, double delta, double omega,
                    double coupling);

/// Row-major over (delta, omega). Bit-identical for any `jobs`.
std::vector<SweepPoint> sweep_cps_fidelity(const SweepGrid& grid,
                                           unsigned jobs = 1);

}  // namespace reqc
