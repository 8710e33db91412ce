#include "reqc/ionmodel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "reqc/pulses.hpp"

namespace reqc {

std::string to_string(Level level) {
  switch (level) {
    case Level::g0: return "g0";
    case Level::g1: return "g1";
    case Level::aux: return "aux";
    case Level::e: return "e";
  }
  return "?";
}

LevelScheme::LevelScheme() : levels_{Level::g0, Level::g1, Level::e} {}

LevelScheme::LevelScheme(std::initializer_list<Level> levels)
    : LevelScheme(std::vector<Level>(levels)) {}

LevelScheme::LevelScheme(std::vector<Level> levels) : levels_(std::move(levels)) {
  const std::set<Level> unique(levels_.begin(), levels_.end());
  if (unique.size() != levels_.size()) {
    throw std::invalid_argument("LevelScheme: repeated level");
  }
  for (Level required : {Level::g0, Level::g1, Level::e}) {
    if (!unique.contains(required)) {
      throw std::invalid_argument("LevelScheme: missing level " +
                                  to_string(required));
    }
  }
}

bool LevelScheme::contains(Level level) const {
  return std::find(levels_.begin(), levels_.end(), level) != levels_.end();
}

int LevelScheme::index(Level level) const {
  const auto it = std::find(levels_.begin(), levels_.end(), level);
  if (it == levels_.end()) {
    throw std::invalid_argument("LevelScheme: no level " + to_string(level));
  }
  return static_cast<int>(it - levels_.begin());
}

void IonParams::validate() const {
  if (!std::isfinite(delta)) {
    throw std::domain_error("IonParams: non-finite detuning");
  }
  if (!std::isfinite(omega_ratio) || omega_ratio <= 0.0) {
    throw std::domain_error("IonParams: omega_ratio must be positive");
  }
}

Instance::Instance(std::vector<Ion> ions, Eigen::MatrixXd couplings)
    : ions_(std::move(ions)), couplings_(std::move(couplings)) {
  const auto n = static_cast<Eigen::Index>(ions_.size());
  if (couplings_.rows() != n || couplings_.cols() != n) {
    throw std::invalid_argument("Instance: coupling matrix must be " +
                                std::to_string(n) + "x" + std::to_string(n));
  }
  std::set<int> channels;
  for (const Ion& ion : ions_) {
    ion.params.validate();
    if (!channels.insert(to_int(ion.channel)).second) {
      throw std::invalid_argument("Instance: duplicate channel " +
                                  std::to_string(to_int(ion.channel)));
    }
  }
  for (Eigen::Index a = 0; a < n; ++a) {
    if (couplings_(a, a) != 0.0) {
      throw std::invalid_argument("Instance: coupling diagonal must be zero");
    }
    for (Eigen::Index b = 0; b < n; ++b) {
      const double g = couplings_(a, b);
      if (!std::isfinite(g) || g < 0.0) {
        throw std::domain_error("Instance: couplings must be finite and >= 0");
      }
      if (g != couplings_(b, a)) {
        throw std::invalid_argument("Instance: couplings must be symmetric");
      }
    }
  }
}

bool Instance::has_channel(ChannelId c) const {
  return std::any_of(ions_.begin(), ions_.end(),
                     [c](const Ion& ion) { return ion.channel == c; });
}

std::size_t Instance::index_of(ChannelId c) const {
  for (std::size_t k = 0; k < ions_.size(); ++k) {
    if (ions_[k].channel == c) return k;
  }
  throw std::invalid_argument("Instance: unknown channel " +
                              std::to_string(to_int(c)));
}

std::vector<int> Instance::local_dims() const {
  std::vector<int> dims;
  dims.reserve(ions_.size());
  for (const Ion& ion : ions_) dims.push_back(ion.levels.dim());
  return dims;
}

std::size_t Instance::dim() const {
  std::size_t d = 1;
  for (const Ion& ion : ions_) d *= static_cast<std::size_t>(ion.levels.dim());
  return d;
}

std::size_t Instance::basis_index(const std::vector<Level>& levels) const {
  if (levels.size() != ions_.size()) {
    throw std::invalid_argument("basis_index: need one level per ion");
  }
  std::size_t index = 0;
  for (std::size_t k = 0; k < ions_.size(); ++k) {
    index = index * static_cast<std::size_t>(ions_[k].levels.dim()) +
            static_cast<std::size_t>(ions_[k].levels.index(levels[k]));
  }
  return index;
}

Level Instance::level_of(std::size_t index, std::size_t k) const {
  std::size_t after = 1;
  for (std::size_t m = k + 1; m < ions_.size(); ++m)
    after *= static_cast<std::size_t>(ions_[m].levels.dim());
  const auto d = static_cast<std::size_t>(ions_.at(k).levels.dim());
  return ions_[k].levels.levels()[(index / after) % d];
}

Instance pair_instance(IonParams first, IonParams second, double g) {
  Eigen::MatrixXd couplings = Eigen::MatrixXd::Zero(2, 2);
  couplings(0, 1) = couplings(1, 0) = g;
  return Instance({Ion{channel(0), first, {}}, Ion{channel(1), second, {}}},
                  couplings);
}

Instance star_instance(const std::vector<IonParams>& params,
                       const std::vector<double>& bus_couplings) {
  if (params.empty() || bus_couplings.size() + 1 != params.size()) {
    throw std::invalid_argument(
        "star_instance: need one bus coupling per outer ion");
  }
  const auto n = static_cast<Eigen::Index>(params.size());
  Eigen::MatrixXd couplings = Eigen::MatrixXd::Zero(n, n);
  std::vector<Ion> ions;
  ions.reserve(params.size());
  for (Eigen::Index k = 0; k < n; ++k) {
    ions.push_back(Ion{channel(static_cast<int>(k)),
                       params[static_cast<std::size_t>(k)], {}});
    if (k > 0) {
      couplings(0, k) = couplings(k, 0) =
          bus_couplings[static_cast<std::size_t>(k - 1)];
    }
  }
  return Instance(std::move(ions), couplings);
}

Eigen::VectorXd static_energies(const Instance& instance) {
  const std::size_t dim = instance.dim();
  const std::size_t n = instance.size();
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  std::vector<bool> excited(n);
  for (std::size_t s = 0; s < dim; ++s) {
    double energy = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      excited[k] = instance.level_of(s, k) == Level::e;
      if (excited[k]) energy -= instance.ion(k).params.delta;
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (!excited[a]) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (excited[b]) energy += instance.coupling(a, b);
      }
    }
    diag(static_cast<Eigen::Index>(s)) = energy;
  }
  return diag;
}

Operator dipole_hamiltonian(const Instance& instance) {
  const std::size_t dim = instance.dim();
  const std::size_t n = instance.size();
  Operator h = Operator::Zero(static_cast<Eigen::Index>(dim),
                              static_cast<Eigen::Index>(dim));
  for (std::size_t s = 0; s < dim; ++s) {
    double energy = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      if (instance.level_of(s, a) != Level::e) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (instance.level_of(s, b) == Level::e)
          energy += instance.coupling(a, b);
      }
    }
    h(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) = energy;
  }
  return h;
}

Operator pulse_hamiltonian(const Instance& instance, const Pulse& pulse) {
  const std::size_t target = instance.index_of(pulse.channel);
  const Ion& ion = instance.ion(target);
  const Eigen::VectorXd energies = static_energies(instance);
  Operator h = energies.cast<Complex>().asDiagonal();

  const int a = ion.levels.index(ground_level(pulse.transition));
  const int e = ion.levels.index(Level::e);
  const double half_rabi = 0.5 * ion.params.omega_ratio;
  Operator drive = Operator::Zero(ion.levels.dim(), ion.levels.dim());
  // cos(phi) sigma_x + sin(phi) sigma_y = e^{-i phi}|a><e| + e^{i phi}|e><a|
  drive(a, e) = half_rabi * std::polar(1.0, -pulse.phase);
  drive(e, a) = half_rabi * std::polar(1.0, pulse.phase);
  const std::vector<int> dims = instance.local_dims();
  h += embed(drive, target, dims);
  return h;
}

Operator level_projector(const Instance& instance, std::size_t k, Level level) {
  const Ion& ion = instance.ion(k);
  Operator local = Operator::Zero(ion.levels.dim(), ion.levels.dim());
  const int idx = ion.levels.index(level);
  local(idx, idx) = 1.0;
  const std::vector<int> dims = instance.local_dims();
  return embed(local, k, dims);
}

Operator ideal_cps_target(const Instance& instance, ChannelId control,
                          ChannelId target) {
  const std::size_t c = instance.index_of(control);
  const std::size_t t = instance.index_of(target);
  if (c == t) {
    throw std::invalid_argument("ideal_cps_target: control equals target");
  }
  const std::size_t dim = instance.dim();
  Operator u = Operator::Identity(static_cast<Eigen::Index>(dim),
                                  static_cast<Eigen::Index>(dim));
  for (std::size_t s = 0; s < dim; ++s) {
    if (instance.level_of(s, c) == Level::g1 &&
        instance.level_of(s, t) == Level::g1) {
      u(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) = -1.0;
    }
  }
  return u;
}

}  // namespace reqc
