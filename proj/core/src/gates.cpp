#include "reqc/gates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace reqc {

namespace {

Pulse pulse(ChannelId c, Transition t, double phase, double area) {
  return Pulse{c, t, phase, area};
}

GateSpec from_pulses(std::string name, std::vector<ChannelId> channels,
                     const std::vector<Pulse>& pulses) {
  GateSpec gate;
  gate.name = std::move(name);
  gate.channels = std::move(channels);
  gate.steps.assign(pulses.begin(), pulses.end());
  return gate;
}

void add_channel(std::vector<ChannelId>& channels, ChannelId c) {
  if (std::find(channels.begin(), channels.end(), c) == channels.end())
    channels.push_back(c);
}

}  // namespace

PulseSequence GateSpec::sequence() const {
  std::vector<Pulse> pulses;
  for (const GateStep& step : steps) {
    if (const auto* p = std::get_if<Pulse>(&step)) pulses.push_back(*p);
  }
  return PulseSequence(std::move(pulses), policy);
}

std::vector<FramePhase> GateSpec::software_phases() const {
  std::vector<FramePhase> out;
  for (const GateStep& step : steps) {
    if (const auto* f = std::get_if<FramePhase>(&step)) out.push_back(*f);
  }
  return out;
}

GateSpec simple_cps(ChannelId i, ChannelId j) {
  if (i == j) throw std::invalid_argument("simple_cps: i == j");
  using enum Transition;
  return from_pulses("simple_cps", {i, j},
                     {pulse(i, g0_e, 0.0, kPi), pulse(j, g1_e, 0.0, kTwoPi),
                      pulse(i, g0_e, kPi, kPi)});
}

GateSpec symmetrized_cps(ChannelId i, ChannelId j) {
  if (i == j) throw std::invalid_argument("symmetrized_cps: i == j");
  using enum Transition;
  return from_pulses("symmetrized_cps", {i, j},
                     {
                         pulse(i, g0_e, 0.0, kPi),
                         pulse(j, g1_e, 0.0, kPi),
                         pulse(j, g1_e, 0.0, kPi),
                         pulse(j, g0_e, 0.0, kPi),
                         pulse(j, g0_e, kPi, kPi),
                         pulse(i, g0_e, kPi, kPi),
                         pulse(i, g1_e, 0.0, kPi),
                         pulse(j, g1_e, 0.0, kPi),
                         pulse(j, g1_e, kPi, kPi),
                         pulse(j, g0_e, 0.0, kPi),
                         pulse(j, g0_e, kPi, kPi),
                         pulse(i, g1_e, kPi, kPi),
                     });
}

GateSpec cps(ChannelId i, ChannelId j, CpsVariant variant) {
  return variant == CpsVariant::simple ? simple_cps(i, j)
                                       : symmetrized_cps(i, j);
}

GateSpec qubit_rotation(ChannelId c, double phi, double theta) {
  if (!std::isfinite(phi) || !std::isfinite(theta)) {
    throw std::domain_error("qubit_rotation: non-finite angle");
  }
  // Rotations are 4pi-periodic in SU(2); a negative angle is a positive one
  // about the opposite axis.
  theta = std::fmod(theta, 2.0 * kTwoPi);
  if (theta < 0.0) {
    theta = -theta;
    phi += kPi;
  }
  constexpr double kPark = kPi / 2;
  std::vector<Pulse> pulses{pulse(c, Transition::g1_e, kPark, kPi)};
  if (theta > 0.0) pulses.push_back(pulse(c, Transition::g0_e, phi, theta));
  pulses.push_back(pulse(c, Transition::g1_e, kPark + kPi, kPi));
  return from_pulses("rotation", {c}, pulses);
}

GateSpec hadamard(ChannelId c) {
  GateSpec gate = qubit_rotation(c, kPi / 2, kPi / 2);
  gate.name = "hadamard";
  gate.steps.insert(gate.steps.begin(), FramePhase{c, kPi});
  return gate;
}

GateSpec z_rotation(ChannelId c, double phi) {
  GateSpec gate;
  gate.name = "z_rotation";
  gate.channels = {c};
  gate.steps.push_back(FramePhase{c, phi});
  return gate;
}

GateSpec cnot(ChannelId control, ChannelId target, GateOptions options) {
  if (control == target) throw std::invalid_argument("cnot: control == target");
  GateSpec gate = concat("cnot", {hadamard(target),
                                  cps(control, target, options.cps),
                                  hadamard(target)});
  gate.channels = {control, target};
  return expand(gate, options.policy);
}

GateSpec bus_mediated_cnot(ChannelId a, ChannelId b, ChannelId bus,
                           GateOptions options) {
  if (a == b || a == bus || b == bus) {
    throw std::invalid_argument("bus_mediated_cnot: channels must differ");
  }
  const GateOptions plain{options.cps, PulsePolicy::plain};
  const GateSpec swap_in = concat(
      "swap", {cnot(a, bus, plain), cnot(bus, a, plain), cnot(a, bus, plain)});
  GateSpec gate =
      concat("bus_cnot", {swap_in, cnot(bus, b, plain), swap_in});
  gate.channels = {a, b, bus};
  gate.required_couplings = {{a, bus}, {b, bus}};
  return expand(gate, options.policy);
}

GateSpec expand(const GateSpec& gate, PulsePolicy policy) {
  if (policy == PulsePolicy::plain) return gate;
  if (gate.policy == PulsePolicy::bb1) {
    throw std::logic_error("expand: gate is already bb1-expanded");
  }
  GateSpec out = gate;
  out.steps.clear();
  out.policy = PulsePolicy::bb1;
  for (const GateStep& step : gate.steps) {
    if (const auto* p = std::get_if<Pulse>(&step)) {
      const PulseSequence composite = bb1_expand(*p);
      out.steps.insert(out.steps.end(), composite.begin(), composite.end());
    } else {
      out.steps.push_back(step);
    }
  }
  return out;
}

GateSpec concat(std::string name, const std::vector<GateSpec>& gates) {
  GateSpec out;
  out.name = std::move(name);
  bool any_bb1 = false, any_plain_pulses = false;
  for (const GateSpec& g : gates) {
    for (ChannelId c : g.channels) add_channel(out.channels, c);
    out.steps.insert(out.steps.end(), g.steps.begin(), g.steps.end());
    out.required_couplings.insert(out.required_couplings.end(),
                                  g.required_couplings.begin(),
                                  g.required_couplings.end());
    const bool has_pulses = !g.sequence().empty();
    if (g.policy == PulsePolicy::bb1) any_bb1 = true;
    else if (has_pulses) any_plain_pulses = true;
  }
  if (any_bb1 && any_plain_pulses) {
    throw std::logic_error("concat: cannot mix plain and bb1-expanded gates");
  }
  out.policy = any_bb1 ? PulsePolicy::bb1 : PulsePolicy::plain;
  return out;
}

void check_applicable(const Instance& instance, const GateSpec& gate) {
  for (ChannelId c : gate.channels) {
    if (!instance.has_channel(c)) {
      throw std::invalid_argument(gate.name + ": instance has no channel " +
                                  std::to_string(to_int(c)));
    }
  }
  for (const auto& [a, b] : gate.required_couplings) {
    if (instance.coupling(instance.index_of(a), instance.index_of(b)) <= 0.0) {
      throw std::invalid_argument(gate.name + ": channels " +
                                  std::to_string(to_int(a)) + " and " +
                                  std::to_string(to_int(b)) +
                                  " are not coupled");
    }
  }
}

Operator frame_phase_operator(const Instance& instance, const FramePhase& f) {
  const std::size_t k = instance.index_of(f.channel);
  const Ion& ion = instance.ion(k);
  Operator local = Operator::Identity(ion.levels.dim(), ion.levels.dim());
  const int one = ion.levels.index(Level::g1);
  local(one, one) = std::polar(1.0, -f.phi);
  const std::vector<int> dims = instance.local_dims();
  return embed(local, k, dims);
}

Operator gate_propagator(const Instance& instance, const GateSpec& gate) {
  check_applicable(instance, gate);
  Operator u = identity(instance.dim());
  for (const GateStep& step : gate.steps) {
    if (const auto* p = std::get_if<Pulse>(&step)) {
      u = pulse_propagator(instance, *p) * u;
    } else {
      u = frame_phase_operator(instance, std::get<FramePhase>(step)) * u;
    }
  }
  return u;
}

StateVector apply_gate(const Instance& instance, const GateSpec& gate,
                       StateVector state) {
  check_applicable(instance, gate);
  const Eigen::VectorXd energies = static_energies(instance);
  for (const GateStep& step : gate.steps) {
    if (const auto* p = std::get_if<Pulse>(&step)) {
      apply_pulse(instance, energies, *p, state);
      continue;
    }
    const auto& f = std::get<FramePhase>(step);
    const std::size_t k = instance.index_of(f.channel);
    const Complex phase = std::polar(1.0, -f.phi);
    for (Eigen::Index s = 0; s < state.size(); ++s) {
      if (instance.level_of(static_cast<std::size_t>(s), k) == Level::g1)
        state(s) *= phase;
    }
  }
  return state;
}

std::vector<std::size_t> qubit_indices(const Instance& instance,
                                       const std::vector<ChannelId>& channels,
                                       Level spectator) {
  std::vector<std::size_t> ions;
  for (ChannelId c : channels) ions.push_back(instance.index_of(c));
  const std::size_t count = std::size_t{1} << ions.size();
  std::vector<std::size_t> out;
  out.reserve(count);
  std::vector<Level> levels(instance.size(), spectator);
  for (std::size_t bits = 0; bits < count; ++bits) {
    for (std::size_t q = 0; q < ions.size(); ++q) {
      const bool one = (bits >> (ions.size() - 1 - q)) & 1u;
      levels[ions[q]] = one ? Level::g1 : Level::g0;
    }
    out.push_back(instance.basis_index(levels));
  }
  return out;
}

Operator qubit_projector(const Instance& instance,
                         const std::vector<ChannelId>& channels,
                         Level spectator) {
  const auto dim = static_cast<Eigen::Index>(instance.dim());
  Operator p = Operator::Zero(dim, dim);
  for (std::size_t s : qubit_indices(instance, channels, spectator)) {
    p(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) = 1.0;
  }
  return p;
}

StateVector basis_state(const Instance& instance,
                        const std::vector<Level>& levels) {
  StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(instance.dim()));
  psi(static_cast<Eigen::Index>(instance.basis_index(levels))) = 1.0;
  return psi;
}

double population(const Instance& instance, const StateVector& state,
                  std::size_t k, Level level) {
  double p = 0.0;
  for (Eigen::Index s = 0; s < state.size(); ++s) {
    if (instance.level_of(static_cast<std::size_t>(s), k) == level)
      p += std::norm(state(s));
  }
  return p;
}

}  // namespace reqc
