#pragma once

// Gate library: controlled phase shifts built from optical pulses,
// single-qubit rotations through the excited state, and CNOT circuits for
// the bus (star) architecture.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "reqc/hilbert.hpp"
#include "reqc/ionmodel.hpp"
#include "reqc/pulses.hpp"

namespace reqc {

/// Exact frame update diag(1, e^{-i phi}) on {|g0>, |g1>} of every ion in
/// `channel`; |e> and |aux> are untouched. Realized physically by
/// redefining the laser phases of subsequent pulses.
struct FramePhase {
  ChannelId channel{};
  double phi = 0.0;
};

using GateStep = std::variant<Pulse, FramePhase>;

struct GateSpec {
  std::string name;
  std::vector<ChannelId> channels;
  std::vector<GateStep> steps;  // application order
  /// Channel pairs that must be coupled (g > 0) in any instance this gate is
  /// applied to.
  std::vector<std::pair<ChannelId, ChannelId>> required_couplings;
  PulsePolicy policy = PulsePolicy::plain;

  /// The physical pulses only, in order.
  PulseSequence sequence() const;
  std::vector<FramePhase> software_phases() const;
};

enum class CpsVariant { simple, symmetrized };

struct GateOptions {
  CpsVariant cps = CpsVariant::symmetrized;
  PulsePolicy policy = PulsePolicy::plain;
};

/// P_0e^(i)(0,pi), P_1e^(j)(0,2pi), P_0e^(i)(pi,pi).
GateSpec simple_cps(ChannelId i, ChannelId j);

/// Twelve-pulse phase-compensated controlled phase shift (four pulses on i,
/// eight on j). Each ion spends equal time in |e> starting from |0> and from
/// |1>, so detuning phases picked up there cancel.
GateSpec symmetrized_cps(ChannelId i, ChannelId j);

GateSpec cps(ChannelId i, ChannelId j, CpsVariant variant);

/// exp(-i theta/2 (cos phi sigma_x + sin phi sigma_y)) on {|0>,|1>} of the
/// reference ion, realized as P_1e(pi/2, pi) P_0e(phi, theta)
/// P_1e(3pi/2, pi): the first pulse parks |1> in |e>, the middle pulse
/// rotates {|0>,|e>}, the last pulse returns |e> to |1>.
GateSpec qubit_rotation(ChannelId c, double phi, double theta);

/// Hadamard = R_y(pi/2) Z, the Z part as a frame update.
GateSpec hadamard(ChannelId c);

GateSpec z_rotation(ChannelId c, double phi);

/// H_target, CPS(control, target), H_target.
GateSpec cnot(ChannelId control, ChannelId target, GateOptions options = {});

/// CNOT(a -> b) through a bus that starts in |0>: swap a with the bus,
/// CNOT(bus -> b), swap back. Uses only bus-adjacent pairs.
GateSpec bus_mediated_cnot(ChannelId a, ChannelId b, ChannelId bus,
                           GateOptions options = {});

/// Replaces every pulse by its BB1 expansion; frame updates are kept.
GateSpec expand(const GateSpec& gate, PulsePolicy policy);

/// Steps of all gates in order; the result carries every coupling
/// requirement.
GateSpec concat(std::string name, const std::vector<GateSpec>& gates);

/// Throws std::invalid_argument if a channel is missing or a required
/// coupling is zero.
void check_applicable(const Instance& instance, const GateSpec& gate);

Operator frame_phase_operator(const Instance& instance, const FramePhase& f);

/// Dense propagator of the whole gate on the instance's full space.
Operator gate_propagator(const Instance& instance, const GateSpec& gate);

/// Applies the gate to a state vector through the block route.
StateVector apply_gate(const Instance& instance, const GateSpec& gate,
                       StateVector state);

/// Product-basis indices of the computational states of `channels` (first
/// channel most significant), every other ion held in `spectator`.
std::vector<std::size_t> qubit_indices(const Instance& instance,
                                       const std::vector<ChannelId>& channels,
                                       Level spectator = Level::g0);

/// Orthogonal projector onto span(qubit_indices(...)).
Operator qubit_projector(const Instance& instance,
                         const std::vector<ChannelId>& channels,
                         Level spectator = Level::g0);

/// Product state with ion k in levels[k].
StateVector basis_state(const Instance& instance,
                        const std::vector<Level>& levels);

/// Probability that ion k is found in `level`.
double population(const Instance& instance, const StateVector& state,
                  std::size_t k, Level level);

}  // namespace reqc
