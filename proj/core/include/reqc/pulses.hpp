#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "reqc/hilbert.hpp"
#include "reqc/ionmodel.hpp"

namespace reqc {

/// Square resonant pulse of area `area` and phase `phase` (radians) on one
/// transition of every ion in `channel`. Lasts area / Omega0.
struct Pulse {
  ChannelId channel{};
  Transition transition = Transition::g0_e;
  double phase = 0.0;
  double area = 0.0;

  double duration() const { return area; }
  /// Throws std::domain_error for non-finite values or area <= 0.
  void validate() const;
};

enum class PulsePolicy { plain, bb1 };

/// Pulses in application order: the first element acts first.
class PulseSequence {
 public:
  PulseSequence() = default;
  PulseSequence(std::initializer_list<Pulse> pulses);
  explicit PulseSequence(std::vector<Pulse> pulses,
                         PulsePolicy policy = PulsePolicy::plain);

  const std::vector<Pulse>& pulses() const { return pulses_; }
  std::size_t size() const { return pulses_.size(); }
  bool empty() const { return pulses_.empty(); }
  const Pulse& operator[](std::size_t k) const { return pulses_[k]; }
  auto begin() const { return pulses_.begin(); }
  auto end() const { return pulses_.end(); }

  /// Policy the sequence was produced with; bb1 sequences are not expanded
  /// again.
  PulsePolicy policy() const { return policy_; }
  double total_duration() const;
  std::size_t count_on(ChannelId c) const;

  /// Concatenation in time: *this first, then `later`.
  PulseSequence then(const PulseSequence& later) const;

 private:
  std::vector<Pulse> pulses_;
  PulsePolicy policy_ = PulsePolicy::plain;
};

/// BB1 correction phase arccos(-theta / 4 pi), principal branch.
/// Requires 0 < theta <= 4 pi.
double phi_c(double theta);

/// P(phi, theta/2) P(phi+phi_c, pi) P(phi+3phi_c, 2pi) P(phi+phi_c, pi)
/// P(phi, theta/2), listed in application order.
PulseSequence bb1_expand(const Pulse& pulse);

/// Throws std::logic_error when asked to bb1-expand an already expanded
/// sequence.
PulseSequence expand_sequence(const PulseSequence& seq, PulsePolicy policy);

/// Dense route: exp(-i H t) of the full pulse Hamiltonian.
Operator pulse_propagator(const Instance& instance, const Pulse& pulse);

/// U_k ... U_2 U_1 for the sequence, using the dense route per pulse.
Operator sequence_propagator(const Instance& instance, const PulseSequence& seq);

/// Block route: during a pulse the Hamiltonian couples only pairs of basis
/// states that differ in the addressed ion being in |a> or |e>, so the
/// propagator factors into closed-form 2x2 rotations and diagonal phases.
/// Applies the pulse to `state` in place in O(dim).
void apply_pulse(const Instance& instance, const Eigen::VectorXd& energies,
                 const Pulse& pulse, StateVector& state);

StateVector evolve(const Instance& instance, const PulseSequence& seq,
                   StateVector state);

}  // namespace reqc
