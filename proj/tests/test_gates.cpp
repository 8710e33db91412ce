#include <gtest/gtest.h>

#include <cmath>

#include "reqc/fidelity.hpp"
#include "reqc/gates.hpp"

using namespace reqc;

namespace {

const IonParams kRef = IonParams::reference();

Instance single_ion() {
  return Instance({Ion{channel(0), kRef, {}}}, Eigen::MatrixXd::Zero(1, 1));
}

Operator qubit_block(const Instance& inst, const GateSpec& gate,
                     const std::vector<ChannelId>& channels) {
  return restrict_to(gate_propagator(inst, gate), qubit_indices(inst, channels));
}

Operator pauli_x() {
  Operator s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

Operator pauli_z() {
  Operator s(2, 2);
  s << 1, 0, 0, -1;
  return s;
}

std::size_t pulse_count(const GateSpec& gate) { return gate.sequence().size(); }

}  // namespace

TEST(SimpleCps, Layout) {
  const PulseSequence seq = simple_cps(channel(0), channel(1)).sequence();
  ASSERT_EQ(seq.size(), 3u);
  EXPECT_NEAR(seq[0].area, kPi, 1e-15);
  EXPECT_NEAR(seq[1].area, kTwoPi, 1e-15);
  EXPECT_NEAR(seq[2].area, kPi, 1e-15);
  EXPECT_EQ(seq[0].channel, channel(0));
  EXPECT_EQ(seq[1].channel, channel(1));
  EXPECT_THROW(simple_cps(channel(0), channel(0)), std::invalid_argument);
}

TEST(SimpleCps, BlockadeGivesControlledPhase) {
  const Instance pair = pair_instance(kRef, kRef, 100.0);
  const GateSpec gate = simple_cps(channel(0), channel(1));
  const Operator p = qubit_projector(pair, {channel(0), channel(1)});
  const FidelityResult f =
      subspace_worst_fidelity(ideal_cps_target(pair, channel(0), channel(1)),
                              gate_propagator(pair, gate), p);
  EXPECT_GE(f.value, 0.999);
}

TEST(SimpleCps, NoBlockadeFails) {
  const Instance pair = pair_instance(kRef, kRef, 0.0);
  const Operator p = qubit_projector(pair, {channel(0), channel(1)});
  const FidelityResult f = subspace_worst_fidelity(
      ideal_cps_target(pair, channel(0), channel(1)),
      gate_propagator(pair, simple_cps(channel(0), channel(1))), p);
  EXPECT_NEAR(f.value, 0.0, 1e-9);
}

TEST(SymmetrizedCps, PulseCounts) {
  const GateSpec gate = symmetrized_cps(channel(0), channel(1));
  const PulseSequence seq = gate.sequence();
  EXPECT_EQ(seq.size(), 12u);
  EXPECT_EQ(seq.count_on(channel(0)), 4u);
  EXPECT_EQ(seq.count_on(channel(1)), 8u);
  for (const Pulse& p : seq) EXPECT_NEAR(p.area, kPi, 1e-15);
}

TEST(SymmetrizedCps, ApproachesSimpleInStrongBlockade) {
  // The two sequences differ only through finite-blockade light shifts.
  double previous = 1.0;
  for (double g : {1e2, 1e3, 1e4}) {
    const Instance pair = pair_instance(kRef, kRef, g);
    const double d = global_phase_distance(
        qubit_block(pair, simple_cps(channel(0), channel(1)), {channel(0), channel(1)}),
        qubit_block(pair, symmetrized_cps(channel(0), channel(1)),
                    {channel(0), channel(1)}));
    EXPECT_LT(d, previous);
    previous = d;
  }
  EXPECT_LT(previous, 1e-6);
}

TEST(SymmetrizedCps, EqualsSimpleWithoutCoupling) {
  const Instance pair = pair_instance(kRef, kRef, 0.0);
  EXPECT_LT(global_phase_distance(
                gate_propagator(pair, simple_cps(channel(0), channel(1))),
                gate_propagator(pair, symmetrized_cps(channel(0), channel(1)))),
            1e-9);
}

TEST(SymmetrizedCps, ReferenceMatchesTarget) {
  const Instance pair = pair_instance(kRef, kRef, 100.0);
  const Operator u = qubit_block(pair, symmetrized_cps(channel(0), channel(1)),
                                 {channel(0), channel(1)});
  Operator target = Operator::Identity(4, 4);
  target(3, 3) = -1.0;
  EXPECT_LT(global_phase_distance(target, u), 1e-7);
}

TEST(SymmetrizedCps, Bb1RobustToAmplitudeError) {
  const Instance pair = pair_instance({0.0, 1.1}, {0.0, 1.1}, 100.0);
  const GateSpec gate =
      expand(symmetrized_cps(channel(0), channel(1)), PulsePolicy::bb1);
  EXPECT_EQ(pulse_count(gate), 60u);
  const FidelityResult f = subspace_worst_fidelity(
      ideal_cps_target(pair, channel(0), channel(1)), gate_propagator(pair, gate),
      qubit_projector(pair, {channel(0), channel(1)}));
  EXPECT_GE(f.value, 0.999);
}

TEST(QubitRotation, Examples) {
  const Instance ion = single_ion();
  const Operator zero = qubit_block(ion, qubit_rotation(channel(0), 0.3, 0.0), {channel(0)});
  EXPECT_LT(global_phase_distance(Operator::Identity(2, 2), zero), 1e-12);

  const StateVector out = apply_gate(ion, qubit_rotation(channel(0), 0.0, kPi),
                                     basis_state(ion, {Level::g0}));
  EXPECT_NEAR(population(ion, out, 0, Level::g1), 1.0, 1e-9);
  EXPECT_NEAR(population(ion, out, 0, Level::e), 0.0, 1e-9);
}

TEST(QubitRotation, MatchesSpinRotation) {
  const Instance ion = single_ion();
  for (double phi : {0.0, 0.4, kPi / 2, 2.5}) {
    for (double theta : {0.7, kPi / 2, kPi, 5.0, -1.2}) {
      // exp(-i theta/2 (cos phi X + sin phi Y))
      Operator n(2, 2);
      n << 0, std::polar(1.0, -phi), std::polar(1.0, phi), 0;
      const Operator expected =
          std::cos(theta / 2) * Operator::Identity(2, 2) -
          Complex(0, 1) * std::sin(theta / 2) * n;
      const Operator u =
          qubit_block(ion, qubit_rotation(channel(0), phi, theta), {channel(0)});
      EXPECT_LT(global_phase_distance(expected, u), 1e-12)
          << "phi " << phi << " theta " << theta;
    }
  }
}

TEST(Hadamard, Identities) {
  const Instance ion = single_ion();
  const GateSpec h = hadamard(channel(0));
  const Operator u = qubit_block(ion, h, {channel(0)});
  EXPECT_LT(global_phase_distance(Operator::Identity(2, 2), u * u), 1e-8);
  EXPECT_LT(max_abs(u * pauli_z() * u.adjoint() - pauli_x()), 1e-8);

  const StateVector out = apply_gate(ion, h, basis_state(ion, {Level::g0}));
  EXPECT_NEAR(population(ion, out, 0, Level::g0), 0.5, 1e-9);
  EXPECT_NEAR(population(ion, out, 0, Level::g1), 0.5, 1e-9);
}

TEST(ZRotation, Examples) {
  const Instance ion = single_ion();
  EXPECT_LT(global_phase_distance(
                Operator::Identity(2, 2),
                qubit_block(ion, z_rotation(channel(0), 0.0), {channel(0)})),
            1e-14);
  EXPECT_LT(global_phase_distance(
                Operator::Identity(2, 2),
                qubit_block(ion, z_rotation(channel(0), kTwoPi), {channel(0)})),
            1e-12);
}

TEST(ZRotation, RamseyFringe) {
  const Instance ion = single_ion();
  StateVector plus = StateVector::Zero(3);
  plus(0) = plus(1) = 1.0 / std::sqrt(2.0);
  for (double phi = 0.0; phi < kTwoPi; phi += 0.35) {
    StateVector psi = apply_gate(ion, z_rotation(channel(0), phi), plus);
    psi = apply_gate(ion, qubit_rotation(channel(0), kPi / 2, kPi / 2), psi);
    const double c = std::cos(phi / 2);
    EXPECT_NEAR(population(ion, psi, 0, Level::g1), c * c, 1e-9) << phi;
  }
}

TEST(Cnot, TruthTable) {
  const Instance pair = pair_instance(kRef, kRef, 100.0);
  const GateSpec gate = cnot(channel(0), channel(1));
  const struct {
    Level c, t, out_t;
  } rows[] = {{Level::g0, Level::g0, Level::g0},
              {Level::g0, Level::g1, Level::g1},
              {Level::g1, Level::g0, Level::g1},
              {Level::g1, Level::g1, Level::g0}};
  for (const auto& row : rows) {
    const StateVector out = apply_gate(pair, gate, basis_state(pair, {row.c, row.t}));
    EXPECT_NEAR(population(pair, out, 0, row.c), 1.0, 1e-6);
    EXPECT_NEAR(population(pair, out, 1, row.out_t), 1.0, 1e-6);
  }
}

TEST(Cnot, Involution) {
  const Instance pair = pair_instance(kRef, kRef, 100.0);
  const GateSpec gate = cnot(channel(0), channel(1));
  const Operator u = qubit_block(pair, gate, {channel(0), channel(1)});
  EXPECT_LT(global_phase_distance(Operator::Identity(4, 4), u * u), 1e-5);
  EXPECT_THROW(cnot(channel(1), channel(1)), std::invalid_argument);
}

TEST(BusCnot, TruthTable) {
  const Instance star = star_instance({kRef, kRef, kRef}, {100.0, 100.0});
  const GateSpec gate = bus_mediated_cnot(channel(1), channel(2), channel(0));
  for (Level a : {Level::g0, Level::g1}) {
    for (Level b : {Level::g0, Level::g1}) {
      const StateVector out =
          apply_gate(star, gate, basis_state(star, {Level::g0, a, b}));
      const Level expected_b =
          a == Level::g1 ? (b == Level::g0 ? Level::g1 : Level::g0) : b;
      EXPECT_NEAR(population(star, out, 0, Level::g0), 1.0, 1e-5);
      EXPECT_NEAR(population(star, out, 1, a), 1.0, 1e-5);
      EXPECT_NEAR(population(star, out, 2, expected_b), 1.0, 1e-5);
    }
  }
}

TEST(BusCnot, MakesBellPair) {
  const Instance star = star_instance({kRef, kRef, kRef}, {100.0, 100.0});
  StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(star.dim()));
  psi(star.basis_index({Level::g0, Level::g0, Level::g0})) = 1.0 / std::sqrt(2.0);
  psi(star.basis_index({Level::g0, Level::g1, Level::g0})) = 1.0 / std::sqrt(2.0);
  const StateVector out =
      apply_gate(star, bus_mediated_cnot(channel(1), channel(2), channel(0)), psi);

  // Pure two-qubit state with the bus in |0>: C = 2 |a00 a11 - a01 a10|.
  auto amp = [&](Level a, Level b) {
    return out(star.basis_index({Level::g0, a, b}));
  };
  const Complex det = amp(Level::g0, Level::g0) * amp(Level::g1, Level::g1) -
                      amp(Level::g0, Level::g1) * amp(Level::g1, Level::g0);
  EXPECT_NEAR(2.0 * std::abs(det), 1.0, 1e-5);
}

TEST(BusCnot, RequiresCouplings) {
  const Instance missing = star_instance({kRef, kRef, kRef}, {100.0, 0.0});
  EXPECT_THROW(check_applicable(missing, bus_mediated_cnot(channel(1), channel(2),
                                                           channel(0))),
               std::invalid_argument);
  const Instance pair = pair_instance(kRef, kRef, 100.0);
  EXPECT_THROW(gate_propagator(pair, cnot(channel(0), channel(4))),
               std::invalid_argument);
}

TEST(Concat, RejectsMixedPolicies) {
  const GateSpec a = simple_cps(channel(0), channel(1));
  const GateSpec b = expand(a, PulsePolicy::bb1);
  EXPECT_THROW(concat("mixed", {a, b}), std::logic_error);
  EXPECT_THROW(expand(b, PulsePolicy::bb1), std::logic_error);
  EXPECT_EQ(concat("double", {a, a}).sequence().size(), 6u);
}

TEST(GateRoutes, DenseMatchesBlock) {
  const Instance star = star_instance({{0.01, 1.02}, {-0.02, 0.97}, {0.0, 1.05}},
                                      {80.0, 120.0});
  const GateSpec gate = bus_mediated_cnot(channel(1), channel(2), channel(0),
                                          {CpsVariant::symmetrized, PulsePolicy::bb1});
  StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(star.dim()));
  psi(star.basis_index({Level::g1, Level::g1, Level::g0})) = 0.6;
  psi(star.basis_index({Level::g0, Level::g1, Level::g1})) = 0.8;
  EXPECT_LT((gate_propagator(star, gate) * psi - apply_gate(star, gate, psi))
                .cwiseAbs()
                .maxCoeff(),
            1e-10);
}
