#include "reqc/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace reqc {

void Pulse::validate() const {
  if (!std::isfinite(phase) || !std::isfinite(area)) {
    throw std::domain_error("Pulse: non-finite phase or area");
  }
  if (area <= 0.0) {
    throw std::domain_error("Pulse: area must be positive");
  }
}

PulseSequence::PulseSequence(std::initializer_list<Pulse> pulses)
    : PulseSequence(std::vector<Pulse>(pulses)) {}

PulseSequence::PulseSequence(std::vector<Pulse> pulses, PulsePolicy policy)
    : pulses_(std::move(pulses)), policy_(policy) {
  for (const Pulse& p : pulses_) p.validate();
}

double PulseSequence::total_duration() const {
  return std::accumulate(
      pulses_.begin(), pulses_.end(), 0.0,
      [](double acc, const Pulse& p) { return acc + p.duration(); });
}

std::size_t PulseSequence::count_on(ChannelId c) const {
  return static_cast<std::size_t>(std::count_if(
      pulses_.begin(), pulses_.end(),
      [c](const Pulse& p) { return p.channel == c; }));
}

PulseSequence PulseSequence::then(const PulseSequence& later) const {
  std::vector<Pulse> joined = pulses_;
  joined.insert(joined.end(), later.pulses_.begin(), later.pulses_.end());
  const PulsePolicy policy =
      (policy_ == PulsePolicy::bb1 || later.policy_ == PulsePolicy::bb1)
          ? PulsePolicy::bb1
          : PulsePolicy::plain;
  return PulseSequence(std::move(joined), policy);
}

double phi_c(double theta) {
  if (!std::isfinite(theta) || theta <= 0.0 || theta > 2.0 * kTwoPi) {
    throw std::domain_error("phi_c: theta must lie in (0, 4 pi], got " +
                            std::to_string(theta));
  }
  return std::acos(-theta / (2.0 * kTwoPi));
}

PulseSequence bb1_expand(const Pulse& pulse) {
  pulse.validate();
  const double c = phi_c(pulse.area);
  const double phi = pulse.phase;
  auto make = [&](double phase, double area) {
    return Pulse{pulse.channel, pulse.transition, phase, area};
  };
  return PulseSequence({make(phi, pulse.area / 2), make(phi + c, kPi),
                        make(phi + 3 * c, kTwoPi), make(phi + c, kPi),
                        make(phi, pulse.area / 2)},
                       PulsePolicy::bb1);
}

PulseSequence expand_sequence(const PulseSequence& seq, PulsePolicy policy) {
  if (policy == PulsePolicy::plain) return seq;
  if (seq.policy() == PulsePolicy::bb1) {
    throw std::logic_error("expand_sequence: sequence is already bb1-expanded");
  }
  std::vector<Pulse> out;
  out.reserve(seq.size() * 5);
  for (const Pulse& p : seq) {
    const PulseSequence composite = bb1_expand(p);
    out.insert(out.end(), composite.begin(), composite.end());
  }
  return PulseSequence(std::move(out), PulsePolicy::bb1);
}

Operator pulse_propagator(const Instance& instance, const Pulse& pulse) {
  pulse.validate();
  return propagator(pulse_hamiltonian(instance, pulse), pulse.duration());
}

Operator sequence_propagator(const Instance& instance,
                             const PulseSequence& seq) {
  Operator u = identity(instance.dim());
  for (const Pulse& p : seq) u = pulse_propagator(instance, p) * u;
  return u;
}

void apply_pulse(const Instance& instance, const Eigen::VectorXd& energies,
                 const Pulse& pulse, StateVector& state) {
  pulse.validate();
  const std::size_t target = instance.index_of(pulse.channel);
  const Ion& ion = instance.ion(target);
  const auto dim = static_cast<Eigen::Index>(instance.dim());
  if (state.size() != dim || energies.size() != dim) {
    throw std::invalid_argument("apply_pulse: state dimension mismatch");
  }
  const Eigen::Index d = ion.levels.dim();
  const Eigen::Index a = ion.levels.index(ground_level(pulse.transition));
  const Eigen::Index e = ion.levels.index(Level::e);

  Eigen::Index after = 1;
  for (std::size_t m = target + 1; m < instance.size(); ++m)
    after *= instance.ion(m).levels.dim();
  const Eigen::Index before = dim / (d * after);

  const double t = pulse.duration();
  const Complex coupling =
      0.5 * ion.params.omega_ratio * std::polar(1.0, -pulse.phase);
  const double c2 = std::norm(coupling);

  for (Eigen::Index b = 0; b < before; ++b) {
    for (Eigen::Index r = 0; r < after; ++r) {
      const Eigen::Index base = b * d * after + r;
      // Levels other than a and e only pick up their static phase.
      for (Eigen::Index l = 0; l < d; ++l) {
        if (l == a || l == e) continue;
        const Eigen::Index s = base + l * after;
        state(s) *= std::polar(1.0, -energies(s) * t);
      }
      const Eigen::Index sa = base + a * after;
      const Eigen::Index se = base + e * after;
      // H = m I + [[h, c], [c*, -h]] on (|a>, |e>).
      const double mean = 0.5 * (energies(sa) + energies(se));
      const double half = 0.5 * (energies(sa) - energies(se));
      const double w = std::sqrt(half * half + c2);
      const double cw = std::cos(w * t);
      const double sinc = w > 0.0 ? std::sin(w * t) / w : t;
      const Complex global = std::polar(1.0, -mean * t);
      const Complex u_aa = global * Complex(cw, -sinc * half);
      const Complex u_ee = global * Complex(cw, sinc * half);
      const Complex u_ae = global * Complex(0.0, -sinc) * coupling;
      const Complex u_ea = global * Complex(0.0, -sinc) * std::conj(coupling);
      const Complex xa = state(sa);
      const Complex xe = state(se);
      state(sa) = u_aa * xa + u_ae * xe;
      state(se) = u_ea * xa + u_ee * xe;
    }
  }
}

StateVector evolve(const Instance& instance, const PulseSequence& seq,
                   StateVector state) {
  const Eigen::VectorXd energies = static_energies(instance);
  for (const Pulse& p : seq) apply_pulse(instance, energies, p, state);
  return state;
}

}  // namespace reqc
