#include "reqc/cat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "reqc/parallel.hpp"
#include "reqc/random.hpp"

namespace reqc {

namespace {

void check_size(int n) {
  if (n < 2) throw std::invalid_argument("cat experiment: need n >= 2");
}

double sigma_z(const Instance& instance, const StateVector& psi,
               std::size_t k) {
  return population(instance, psi, k, Level::g0) -
         population(instance, psi, k, Level::g1);
}

}  // namespace

void EnsembleSpec::validate() const {
  if (!(delta_halfwidth >= 0.0) || !std::isfinite(delta_halfwidth)) {
    throw std::domain_error("EnsembleSpec: delta_halfwidth must be >= 0");
  }
  if (!(omega_relative_halfwidth >= 0.0) || omega_relative_halfwidth >= 1.0) {
    throw std::domain_error(
        "EnsembleSpec: omega_relative_halfwidth must lie in [0, 1)");
  }
  if (!(g_min > 0.0) || !(g_max >= g_min) || !std::isfinite(g_max)) {
    throw std::domain_error("EnsembleSpec: need 0 < g_min <= g_max");
  }
  if (n_instances < 1) {
    throw std::domain_error("EnsembleSpec: n_instances must be >= 1");
  }
}

std::vector<GateSpec> cat_circuit(int n, GateOptions options) {
  check_size(n);
  const ChannelId bus = channel(0);
  std::vector<GateSpec> gates{expand(hadamard(bus), options.policy)};
  for (int k = 1; k < n; ++k) {
    GateSpec g = cnot(bus, channel(k), options);
    g.required_couplings.emplace_back(bus, channel(k));
    gates.push_back(std::move(g));
  }
  return gates;
}

std::vector<GateSpec> parity_gather_circuit(int n, GateOptions options) {
  check_size(n);
  const ChannelId bus = channel(0);
  std::vector<GateSpec> gates;
  for (int k = 1; k < n; ++k) {
    GateSpec g = cnot(channel(k), bus, options);
    g.required_couplings.emplace_back(channel(k), bus);
    gates.push_back(std::move(g));
  }
  return gates;
}

GateSpec analysis_rotation(ChannelId c) {
  return qubit_rotation(c, 3.0 * kPi / 2.0, kPi / 2.0);
}

Instance sample_star_instance(int n, const EnsembleSpec& ensemble,
                              std::size_t index) {
  check_size(n);
  ensemble.validate();
  Rng rng = stream_rng(ensemble.seed, index);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto spread = [&](double center, double half) {
    const double u = unit(rng);
    return half > 0.0 ? center + half * (2.0 * u - 1.0) : center;
  };
  std::vector<IonParams> params;
  for (int k = 0; k < n; ++k) {
    const double delta = spread(0.0, ensemble.delta_halfwidth);
    const double omega = spread(1.0, ensemble.omega_relative_halfwidth);
    params.push_back({delta, omega});
  }
  std::vector<double> couplings;
  const double log_lo = std::log(ensemble.g_min);
  const double log_hi = std::log(ensemble.g_max);
  for (int k = 1; k < n; ++k) {
    const double u = unit(rng);
    couplings.push_back(ensemble.g_max > ensemble.g_min
                            ? std::exp(log_lo + u * (log_hi - log_lo))
                            : ensemble.g_min);
  }
  return star_instance(params, couplings);
}

std::vector<ParityRow> run_cat_experiment(int n, const std::vector<double>& phis,
                                          const EnsembleSpec& ensemble,
                                          CatOptions options) {
  check_size(n);
  ensemble.validate();
  if (phis.empty()) throw std::invalid_argument("run_cat_experiment: no phis");

  const GateSpec prepare = concat("cat", cat_circuit(n, options.gates));
  const GateSpec gather =
      concat("gather", parity_gather_circuit(n, options.gates));
  std::vector<GateSpec> analysis_gates;
  for (int k = 0; k < n; ++k)
    analysis_gates.push_back(
        expand(analysis_rotation(channel(k)), options.gates.policy));
  const GateSpec analysis = concat("analysis", analysis_gates);

  const auto instances = static_cast<std::size_t>(ensemble.n_instances);
  // Per instance, per phi: bus |1> population and <sigma_z> per qubit.
  std::vector<std::vector<double>> excited(instances);
  std::vector<std::vector<std::vector<double>>> local_z(instances);

  parallel_for(instances, options.jobs, [&](std::size_t m) {
    const Instance instance = sample_star_instance(n, ensemble, m);
    const std::vector<Level> zeros(static_cast<std::size_t>(n), Level::g0);
    const StateVector cat =
        apply_gate(instance, prepare, basis_state(instance, zeros));
    excited[m].resize(phis.size());
    local_z[m].resize(phis.size());
    for (std::size_t p = 0; p < phis.size(); ++p) {
      std::vector<GateSpec> zs;
      for (int k = 0; k < n; ++k) zs.push_back(z_rotation(channel(k), phis[p]));
      StateVector psi = apply_gate(instance, concat("z", zs), cat);
      psi = apply_gate(instance, analysis, psi);
      for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k)
        local_z[m][p].push_back(sigma_z(instance, psi, k));
      psi = apply_gate(instance, gather, psi);
      excited[m][p] = population(instance, psi, 0, Level::g1);
    }
  });

  std::vector<ParityRow> rows(phis.size());
  for (std::size_t p = 0; p < phis.size(); ++p) {
    ParityRow& row = rows[p];
    row.phi = phis[p];
    row.sigma_z.assign(static_cast<std::size_t>(n), 0.0);
    for (std::size_t m = 0; m < instances; ++m) {
      row.mean_excited += excited[m][p];
      for (std::size_t k = 0; k < row.sigma_z.size(); ++k)
        row.sigma_z[k] += local_z[m][p][k];
    }
    row.mean_excited /= static_cast<double>(instances);
    for (double& z : row.sigma_z) z /= static_cast<double>(instances);
    row.parity = 1.0 - 2.0 * row.mean_excited;
  }
  return rows;
}

double fit_parity_frequency(const std::vector<double>& phis,
                            const std::vector<double>& values, double k_lo,
                            double k_hi) {
  if (phis.size() != values.size() || phis.empty() || !(k_hi > k_lo)) {
    throw std::invalid_argument("fit_parity_frequency: bad input");
  }
  auto residual = [&](double k) {
    double r = 0.0;
    for (std::size_t i = 0; i < phis.size(); ++i) {
      const double d = values[i] - std::cos(k * phis[i]);
      r += d * d;
    }
    return r;
  };
  const double step = 1e-3;
  double best_k = k_lo, best_r = residual(k_lo);
  for (double k = k_lo; k <= k_hi; k += step) {
    const double r = residual(k);
    if (r < best_r) {
      best_r = r;
      best_k = k;
    }
  }
  double lo = best_k - step, hi = best_k + step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  while (hi - lo > 1e-12) {
    const double x1 = hi - inv_phi * (hi - lo);
    const double x2 = lo + inv_phi * (hi - lo);
    if (residual(x1) < residual(x2)) hi = x2;
    else lo = x1;
  }
  return 0.5 * (lo + hi);
}

double parity_visibility(const std::vector<ParityRow>& rows) {
  if (rows.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(
      rows.begin(), rows.end(),
      [](const ParityRow& a, const ParityRow& b) { return a.parity < b.parity; });
  return 0.5 * (hi->parity - lo->parity);
}

}  // namespace reqc
