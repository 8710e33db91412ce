#include <gtest/gtest.h>

#include <cmath>

#include "reqc/gates.hpp"
#include "reqc/pulses.hpp"
#include "reqc/random.hpp"

using namespace reqc;

namespace {

const Complex kI(0.0, 1.0);

Instance single_ion(IonParams params) {
  return Instance({Ion{channel(0), params, {}}}, Eigen::MatrixXd::Zero(1, 1));
}

Pulse pulse(double phase, double area) {
  return Pulse{channel(0), Transition::g0_e, phase, area};
}

}  // namespace

TEST(Pulse, Validation) {
  EXPECT_NO_THROW(pulse(0.0, kPi).validate());
  EXPECT_THROW(pulse(0.0, 0.0).validate(), std::domain_error);
  EXPECT_THROW(pulse(0.0, -1.0).validate(), std::domain_error);
  EXPECT_THROW(pulse(NAN, 1.0).validate(), std::domain_error);
  EXPECT_DOUBLE_EQ(pulse(0.0, 2.5).duration(), 2.5);
}

TEST(PhiC, ClosedForm) {
  EXPECT_NEAR(phi_c(kTwoPi), 2.0 * kPi / 3.0, 1e-14);
  EXPECT_NEAR(phi_c(kPi), std::acos(-0.25), 1e-14);
  EXPECT_NEAR(phi_c(kPi), 1.823476582, 1e-9);
  EXPECT_NEAR(phi_c(1e-12), kPi / 2, 1e-12);
  EXPECT_NEAR(phi_c(4 * kPi), kPi, 1e-14);
  EXPECT_THROW(phi_c(0.0), std::domain_error);
  EXPECT_THROW(phi_c(4 * kPi + 0.1), std::domain_error);
}

TEST(Bb1, Layout) {
  const PulseSequence seq = bb1_expand(pulse(0.0, kPi));
  ASSERT_EQ(seq.size(), 5u);
  const double c = phi_c(kPi);
  const double phases[] = {0.0, c, 3 * c, c, 0.0};
  const double areas[] = {kPi / 2, kPi, 2 * kPi, kPi, kPi / 2};
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_NEAR(seq[k].phase, phases[k], 1e-15);
    EXPECT_NEAR(seq[k].area, areas[k], 1e-15);
    EXPECT_EQ(seq[k].channel, channel(0));
    EXPECT_EQ(seq[k].transition, Transition::g0_e);
  }
  EXPECT_NEAR(seq.total_duration(), kPi + 4 * kPi, 1e-12);
  EXPECT_EQ(seq.policy(), PulsePolicy::bb1);
}

TEST(Bb1, PhaseCovariance) {
  const double phi = 0.77;
  const PulseSequence base = bb1_expand(pulse(0.0, kPi / 2));
  const PulseSequence shifted = bb1_expand(pulse(phi, kPi / 2));
  for (std::size_t k = 0; k < 5; ++k)
    EXPECT_NEAR(shifted[k].phase - base[k].phase, phi, 1e-14);
}

TEST(Bb1, ReferenceExactness) {
  const Instance ion = single_ion({});
  for (double theta : {kPi / 2, kPi, kTwoPi, 0.3, 3.9}) {
    for (double phi : {0.0, 1.1}) {
      const Pulse p = pulse(phi, theta);
      EXPECT_LT(global_phase_distance(pulse_propagator(ion, p),
                                      sequence_propagator(ion, bb1_expand(p))),
                1e-9);
    }
  }
}

TEST(Bb1, SuppressesAmplitudeError) {
  const Instance ideal = single_ion({});
  for (double ratio : {0.9, 1.05, 1.1}) {
    const Instance off = single_ion({0.0, ratio});
    const Pulse p = pulse(0.0, kPi);
    const Operator target = pulse_propagator(ideal, p);
    const double plain = global_phase_distance(target, pulse_propagator(off, p));
    const double robust =
        global_phase_distance(target, sequence_propagator(off, bb1_expand(p)));
    EXPECT_LT(robust, 0.01 * plain) << "omega ratio " << ratio;
  }
}

TEST(ExpandSequence, Policies) {
  const PulseSequence three{pulse(0, kPi), pulse(1, kTwoPi), pulse(2, kPi)};
  const PulseSequence same = expand_sequence(three, PulsePolicy::plain);
  ASSERT_EQ(same.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(same[k].phase, three[k].phase);

  const PulseSequence sym = symmetrized_cps(channel(0), channel(1)).sequence();
  ASSERT_EQ(sym.size(), 12u);
  const PulseSequence expanded = expand_sequence(sym, PulsePolicy::bb1);
  EXPECT_EQ(expanded.size(), 60u);
  EXPECT_THROW(expand_sequence(expanded, PulsePolicy::bb1), std::logic_error);
}

TEST(SequencePropagator, EmptyAndSinglePulse) {
  const Instance ion = single_ion({});
  EXPECT_LT(max_abs(sequence_propagator(ion, PulseSequence{}) - identity(3)),
            1e-15);
  const Operator u = sequence_propagator(ion, PulseSequence{pulse(0.0, kPi)});
  EXPECT_LT(std::abs(u(2, 0) + kI), 1e-12);
  EXPECT_LT(std::abs(u(1, 1) - 1.0), 1e-15);
}

TEST(SequencePropagator, TimeOrdering) {
  const Instance ion = single_ion({0.05, 0.9});
  const Pulse first = pulse(0.3, 1.0), second = pulse(1.7, 2.0);
  const Operator u = sequence_propagator(ion, PulseSequence{first, second});
  EXPECT_LT(max_abs(u - pulse_propagator(ion, second) * pulse_propagator(ion, first)),
            1e-12);
}

TEST(SequencePropagator, RejectsUnknownChannel) {
  const Instance ion = single_ion({});
  const PulseSequence seq{Pulse{channel(5), Transition::g0_e, 0.0, kPi}};
  EXPECT_THROW(sequence_propagator(ion, seq), std::invalid_argument);
}

TEST(BlockRoute, MatchesDensePropagator) {
  Rng rng = stream_rng(11, 0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = star_instance(
        {{0.05 * unit(rng), 0.9 + 0.2 * unit(rng)},
         {-0.05 * unit(rng), 0.9 + 0.2 * unit(rng)},
         {0.02 * unit(rng), 0.9 + 0.2 * unit(rng)}},
        {30.0 * unit(rng), 30.0 * unit(rng)});
    std::vector<Pulse> pulses;
    for (int k = 0; k < 6; ++k) {
      pulses.push_back(Pulse{channel(k % 3),
                             k % 2 ? Transition::g1_e : Transition::g0_e,
                             kTwoPi * unit(rng), 0.1 + 4.0 * unit(rng)});
    }
    const PulseSequence seq(pulses);
    const StateVector psi = random_state(inst.dim(), rng);
    const StateVector dense = sequence_propagator(inst, seq) * psi;
    EXPECT_LT((dense - evolve(inst, seq, psi)).cwiseAbs().maxCoeff(), 1e-11);
  }
}

TEST(BlockRoute, AuxLevelOnlyAccruesNothing) {
  std::vector<Ion> ions{Ion{channel(0), {0.1, 1.0}, LevelScheme::with_aux()}};
  const Instance inst(ions, Eigen::MatrixXd::Zero(1, 1));
  StateVector psi = StateVector::Zero(4);
  psi(inst.basis_index({Level::aux})) = 1.0;
  const StateVector out =
      evolve(inst, PulseSequence{pulse(0.0, kPi), pulse(0.5, 2.0)}, psi);
  EXPECT_LT((out - psi).norm(), 1e-14);
}
