#include "checks.hpp"

#include <algorithm>
#include <cmath>

#include "reqc/reqc.hpp"

namespace reqc::cli {

namespace {

CheckResult below(std::string name, double value, double limit) {
  return {std::move(name), value, limit, value < limit};
}

CheckResult at_least(std::string name, double value, double limit) {
  return {std::move(name), value, limit, value >= limit};
}

// Ideal CNOT on the 4-dim qubit space, control most significant.
Operator ideal_cnot() {
  Operator u = Operator::Zero(4, 4);
  u(0, 0) = u(1, 1) = 1.0;
  u(2, 3) = u(3, 2) = 1.0;
  return u;
}

}  // namespace

std::vector<CheckResult> gate_checks(double coupling) {
  std::vector<CheckResult> out;
  const IonParams ref = IonParams::reference();

  const Instance single({Ion{channel(0), ref, {}}}, Eigen::MatrixXd::Zero(1, 1));
  for (double theta : {kPi / 2, kPi, kTwoPi}) {
    const Pulse p{channel(0), Transition::g0_e, 0.0, theta};
    const double d =
        global_phase_distance(pulse_propagator(single, p),
                              sequence_propagator(single, bb1_expand(p)));
    out.push_back(below("bb1_reference_theta=" + std::to_string(theta), d, 1e-9));
  }

  const Instance pair = pair_instance(ref, ref, coupling);
  const Operator u_simple =
      gate_propagator(pair, simple_cps(channel(0), channel(1)));
  const Operator u_sym =
      gate_propagator(pair, symmetrized_cps(channel(0), channel(1)));
  out.push_back(below("symmetrized_equals_simple",
                      global_phase_distance(u_simple, u_sym), 1e-6));

  const Operator cps_target = ideal_cps_target(pair, channel(0), channel(1));
  const Operator projector = qubit_projector(pair, {channel(0), channel(1)});
  out.push_back(at_least(
      "simple_cps_fidelity",
      subspace_worst_fidelity(cps_target, u_simple, projector).value, 0.999));
  out.push_back(at_least(
      "symmetrized_cps_fidelity",
      subspace_worst_fidelity(cps_target, u_sym, projector).value, 0.999));

  const auto qubits = qubit_indices(pair, {channel(0), channel(1)});
  const Operator u_cnot =
      restrict_to(gate_propagator(pair, cnot(channel(0), channel(1))), qubits);
  out.push_back(
      below("cnot_distance", global_phase_distance(ideal_cnot(), u_cnot), 1e-6));

  const StateVector in10 = basis_state(pair, {Level::g1, Level::g0});
  const StateVector out10 = apply_gate(pair, cnot(channel(0), channel(1)), in10);
  out.push_back(below("cnot_10_to_11",
                      1.0 - population(pair, out10, 1, Level::g1), 1e-6));

  const Instance star = star_instance({ref, ref, ref}, {coupling, coupling});
  const GateSpec bus = bus_mediated_cnot(channel(1), channel(2), channel(0));
  const StateVector psi = apply_gate(
      star, bus, basis_state(star, {Level::g0, Level::g1, Level::g0}));
  out.push_back(below("bus_cnot_flips_target",
                      1.0 - population(star, psi, 2, Level::g1), 1e-5));
  out.push_back(below("bus_cnot_returns_bus",
                      1.0 - population(star, psi, 0, Level::g0), 1e-6));

  const StateVector h0 =
      apply_gate(single, hadamard(channel(0)), basis_state(single, {Level::g0}));
  out.push_back(below("hadamard_populations",
                      std::abs(population(single, h0, 0, Level::g1) - 0.5),
                      1e-9));
  return out;
}

std::vector<CheckResult> selftest_checks(std::uint64_t seed) {
  std::vector<CheckResult> out;
  Rng rng = stream_rng(seed, 0);

  double composition = 0.0, adjoint = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Operator h = random_hermitian(2 + k % 7, rng);
    const double t = 0.1 * (k + 1), s = 0.05 * (k + 3);
    composition = std::max(
        composition,
        max_abs(propagator(h, t) * propagator(h, s) - propagator(h, t + s)));
    adjoint = std::max(adjoint, max_abs(propagator(h, t).adjoint() -
                                        propagator(h, -t)));
  }
  out.push_back(below("propagator_composition", composition, 1e-9));
  out.push_back(below("propagator_adjoint", adjoint, 1e-10));

  double reconstruction = 0.0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t dim = 2 + static_cast<std::size_t>(k % 15);
    const Operator h = random_hermitian(dim, rng);
    const HermitianSpectrum hs = hermitian_spectrum(h);
    reconstruction = std::max(
        reconstruction,
        max_abs(hs.eigenvectors * hs.eigenvalues.cast<Complex>().asDiagonal() *
                    hs.eigenvectors.adjoint() - h));
    const Operator u = random_unitary(dim, rng);
    const UnitarySpectrum us = unitary_spectrum(u);
    reconstruction = std::max(
        reconstruction, max_abs(us.eigenvectors * us.eigenvalues.asDiagonal() *
                                    us.eigenvectors.adjoint() - u));
  }
  out.push_back(below("spectrum_reconstruction", reconstruction, 1e-9));

  double consistency = 0.0;
  for (int k = 0; k < 20; ++k) {
    const std::size_t dim = 2 + static_cast<std::size_t>(k % 5);
    const Operator u0 = random_unitary(dim, rng);
    const Operator u = random_unitary(dim, rng);
    consistency = std::max(
        consistency,
        std::abs(full_space_worst_fidelity(u0, u).value -
                 subspace_worst_fidelity(u0, u, identity(dim)).value));
  }
  out.push_back(below("full_vs_subspace_fidelity", consistency, 1e-8));

  double routes = 0.0;
  for (int k = 0; k < 10; ++k) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const IonParams a{0.1 * (unit(rng) - 0.5), 0.8 + 0.4 * unit(rng)};
    const IonParams b{0.1 * (unit(rng) - 0.5), 0.8 + 0.4 * unit(rng)};
    const Instance inst = pair_instance(a, b, 50.0 * unit(rng));
    const GateSpec gate = symmetrized_cps(channel(0), channel(1));
    const Operator dense = gate_propagator(inst, gate);
    const StateVector psi = random_state(inst.dim(), rng);
    routes = std::max(routes, (dense * psi - apply_gate(inst, gate, psi))
                                  .cwiseAbs()
                                  .maxCoeff());
  }
  out.push_back(below("dense_vs_block_route", routes, 1e-10));
  return out;
}

}  // namespace reqc::cli
