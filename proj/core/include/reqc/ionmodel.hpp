#pragma once

// Ions, channels and instances, and the Hamiltonian in force during a pulse.
//
// Each ion is described in the rotating frame of its own channel's laser.
// The static term -delta |e><e| therefore acts on every ion during every
// pulse, and ground levels carry zero static energy.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "reqc/hilbert.hpp"

namespace reqc {

enum class Level { g0, g1, aux, e };

std::string to_string(Level level);

/// Channel identifier; strong type so ion indices and channels never mix.
enum class ChannelId : int {};

constexpr ChannelId channel(int id) { return static_cast<ChannelId>(id); }
constexpr int to_int(ChannelId c) { return static_cast<int>(c); }

/// Optical transition driven by a pulse: one qubit ground level <-> e.
enum class Transition { g0_e, g1_e };

constexpr Level ground_level(Transition t) {
  return t == Transition::g0_e ? Level::g0 : Level::g1;
}

/// Ordered set of levels present on one ion; basis index = position.
class LevelScheme {
 public:
  /// {g0, g1, e}: the scheme used for all gate dynamics.
  LevelScheme();
  LevelScheme(std::initializer_list<Level> levels);
  explicit LevelScheme(std::vector<Level> levels);

  static LevelScheme qubit() { return LevelScheme(); }
  static LevelScheme with_aux() {
    return LevelScheme{Level::g0, Level::g1, Level::aux, Level::e};
  }

  int dim() const { return static_cast<int>(levels_.size()); }
  bool contains(Level level) const;
  /// Basis index of `level`; throws std::invalid_argument if absent.
  int index(Level level) const;
  const std::vector<Level>& levels() const { return levels_; }

  friend bool operator==(const LevelScheme&, const LevelScheme&) = default;

 private:
  std::vector<Level> levels_;
};

/// Per-ion error parameters relative to the reference ion.
struct IonParams {
  double delta = 0.0;        // detuning, units of Omega0
  double omega_ratio = 1.0;  // experienced Rabi frequency / Omega0

  static constexpr IonParams reference() { return {0.0, 1.0}; }
  void validate() const;
};

struct Ion {
  ChannelId channel{};
  IonParams params{};
  LevelScheme levels{};
};

/// One copy of the quantum computer: one ion per channel plus the
/// symmetric excited-state coupling matrix g (units of Omega0).
class Instance {
 public:
  Instance(std::vector<Ion> ions, Eigen::MatrixXd couplings);

  std::size_t size() const { return ions_.size(); }
  const Ion& ion(std::size_t k) const { return ions_.at(k); }
  const std::vector<Ion>& ions() const { return ions_; }
  const Eigen::MatrixXd& couplings() const { return couplings_; }
  double coupling(std::size_t a, std::size_t b) const {
    return couplings_(static_cast<Eigen::Index>(a),
                      static_cast<Eigen::Index>(b));
  }

  bool has_channel(ChannelId c) const;
  /// Ion index of the representative of channel `c`; throws if absent.
  std::size_t index_of(ChannelId c) const;

  std::vector<int> local_dims() const;
  std::size_t dim() const;

  /// Basis index of the product state with ion k in levels[k].
  std::size_t basis_index(const std::vector<Level>& levels) const;
  /// Level of ion `k` in product-basis state `index`.
  Level level_of(std::size_t index, std::size_t k) const;

 private:
  std::vector<Ion> ions_;
  Eigen::MatrixXd couplings_;
};

/// Two ions on channels 0 and 1 with coupling g.
Instance pair_instance(IonParams first, IonParams second, double g);

/// Star topology: ion 0 (channel 0) is the bus, ion k (channel k) couples
/// only to the bus with strength bus_couplings[k-1].
Instance star_instance(const std::vector<IonParams>& params,
                       const std::vector<double>& bus_couplings);

struct Pulse;

/// sum_{mu<nu} g_{mu nu} |e><e|_mu (x) |e><e|_nu on the product space.
Operator dipole_hamiltonian(const Instance& instance);

/// Diagonal of the pulse-independent part: detunings plus dipole coupling.
Eigen::VectorXd static_energies(const Instance& instance);

/// Detuning and dipole terms plus the drive
/// (Omega0^(nu)/2)(cos phi sigma_x^(ae) + sin phi sigma_y^(ae)) on the ion
/// addressed by the pulse, with sigma_y^(ae) = -i|a><e| + i|e><a|.
Operator pulse_hamiltonian(const Instance& instance, const Pulse& pulse);

/// Projector onto ion k being in `level`.
Operator level_projector(const Instance& instance, std::size_t k, Level level);

/// 1 - 2 P(both channels in g1), identity on everything else.
Operator ideal_cps_target(const Instance& instance, ChannelId control,
                          ChannelId target);

}  // namespace reqc
