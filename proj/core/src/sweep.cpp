#include "reqc/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "reqc/fidelity.hpp"
#include "reqc/parallel.hpp"

namespace reqc {

std::string to_string(SweepVariant v) {
  switch (v) {
    case SweepVariant::simple: return "simple";
    case SweepVariant::symmetrized: return "symmetrized";
    case SweepVariant::symmetrized_bb1: return "symmetrized_bb1";
  }
  return "?";
}

std::optional<SweepVariant> parse_sweep_variant(std::string_view text) {
  if (text == "simple") return SweepVariant::simple;
  if (text == "symmetrized") return SweepVariant::symmetrized;
  if (text == "symmetrized_bb1") return SweepVariant::symmetrized_bb1;
  return std::nullopt;
}

void SweepGrid::validate() const {
  if (deltas.empty() || omegas.empty()) {
    throw std::domain_error("SweepGrid: empty axis");
  }
  for (double d : deltas)
    if (!std::isfinite(d)) throw std::domain_error("SweepGrid: non-finite delta");
  for (double w : omegas)
    if (!std::isfinite(w) || w <= 0.0)
      throw std::domain_error("SweepGrid: omega values must be positive");
  if (!std::isfinite(coupling) || coupling < 0.0) {
    throw std::domain_error("SweepGrid: coupling must be >= 0");
  }
}

std::vector<double> stepped_range(double lo, double hi, double step) {
  if (!(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi) || hi < lo) {
    throw std::domain_error("stepped_range: need lo <= hi and step > 0");
  }
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 0.5)) + 1;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k) out.push_back(lo + static_cast<double>(k) * step);
  return out;
}

SweepGrid default_sweep_grid(SweepVariant variant) {
  SweepGrid grid;
  grid.variant = variant;
  grid.deltas = stepped_range(-0.05, 0.05, 0.0025);
  grid.omegas = variant == SweepVariant::simple
                    ? stepped_range(0.97, 1.03, 0.001)
                    : stepped_range(0.85, 1.15, 0.005);
  return grid;
}

GateSpec sweep_gate(SweepVariant variant) {
  switch (variant) {
    case SweepVariant::simple: return simple_cps(channel(0), channel(1));
    case SweepVariant::symmetrized:
      return symmetrized_cps(channel(0), channel(1));
    case SweepVariant::symmetrized_bb1:
      return expand(symmetrized_cps(channel(0), channel(1)), PulsePolicy::bb1);
  }
  throw std::invalid_argument("sweep_gate: unknown variant");
}

double cps_fidelity(SweepVariant variant, double delta, double omega,
                    double coupling) {
  const IonParams params{delta, omega};
  const Instance instance = pair_instance(params, params, coupling);
  const GateSpec gate = sweep_gate(variant);
  const Operator u = gate_propagator(instance, gate);
  const Operator target = ideal_cps_target(instance, channel(0), channel(1));
  const Operator subspace = qubit_projector(instance, {channel(0), channel(1)});
  return subspace_worst_fidelity(target, u, subspace).value;
}

std::vector<SweepPoint> sweep_cps_fidelity(const SweepGrid& grid,
                                           unsigned jobs) {
  grid.validate();
  const std::size_t cols = grid.omegas.size();
  std::vector<SweepPoint> out(grid.deltas.size() * cols);
  parallel_for(out.size(), jobs, [&](std::size_t k) {
    const double delta = grid.deltas[k / cols];
    const double omega = grid.omegas[k % cols];
    out[k] = {delta, omega,
              cps_fidelity(grid.variant, delta, omega, grid.coupling)};
  });
  return out;
}

}  // namespace reqc
