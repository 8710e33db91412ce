#include "reqc/crystal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "reqc/hilbert.hpp"
#include "reqc/parallel.hpp"
#include "reqc/random.hpp"

namespace reqc {

void CrystalModel::validate() const {
  if (!(box_side > 0.0) || ion_count < 1 || !(dipole_constant > 0.0) ||
      channel_count < 1 || !(channel_probability >= 0.0) ||
      !(threshold > 0.0) || !std::isfinite(threshold)) {
    throw std::domain_error("CrystalModel: parameters must be positive");
  }
  if (channel_probability * channel_count > 1.0 + 1e-12) {
    throw std::domain_error(
        "CrystalModel: channel_probability * channel_count exceeds 1");
  }
  if (star_size < 2 || star_size > channel_count) {
    throw std::domain_error(
        "CrystalModel: star_size must lie in [2, channel_count]");
  }
}

std::size_t Crystal::active_count() const {
  return static_cast<std::size_t>(
      std::count_if(channels.begin(), channels.end(),
                    [](int c) { return c >= 0; }));
}

std::size_t Crystal::count_in(int channel) const {
  return static_cast<std::size_t>(
      std::count(channels.begin(), channels.end(), channel));
}

Crystal sample_crystal(const CrystalModel& model, std::uint64_t seed) {
  model.validate();
  Rng rng = stream_rng(seed, 0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Crystal crystal;
  crystal.positions.reserve(static_cast<std::size_t>(model.ion_count));
  crystal.channels.reserve(static_cast<std::size_t>(model.ion_count));
  for (int i = 0; i < model.ion_count; ++i) {
    Position p;
    for (double& x : p) x = model.box_side * unit(rng);
    const double u = unit(rng);
    const int c = static_cast<int>(std::floor(u / model.channel_probability));
    crystal.positions.push_back(p);
    crystal.channels.push_back(model.channel_probability > 0.0 &&
                                       c < model.channel_count
                                   ? c
                                   : -1);
  }
  return crystal;
}

double coupling_strength(const CrystalModel& model, const Position& a,
                         const Position& b) {
  double d[3];
  double r2 = 0.0;
  for (int k = 0; k < 3; ++k) {
    double x = b[static_cast<std::size_t>(k)] - a[static_cast<std::size_t>(k)];
    x -= model.box_side * std::round(x / model.box_side);
    d[k] = x;
    r2 += x * x;
  }
  if (r2 == 0.0) return std::numeric_limits<double>::infinity();
  const double r3 = r2 * std::sqrt(r2);
  double g = model.dipole_constant / r3;
  if (model.angular) {
    const double cos2 = d[2] * d[2] / r2;
    g *= std::abs(1.0 - 3.0 * cos2);
  }
  return g;
}

double threshold_for_p(const CrystalModel& model, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("threshold_for_p: p must lie in (0, 1)");
  }
  // Poisson number of channel members within the coupling radius r_t:
  // P(at least one) = 1 - exp(-rho (4 pi / 3) r_t^3), rho = N q / L^3,
  // with r_t^3 = C / g_t.
  const double volume = std::pow(model.box_side, 3);
  const double rho =
      model.ion_count * model.channel_probability / volume;
  const double mean = -std::log1p(-p);
  return model.dipole_constant * rho * (4.0 * kPi / 3.0) / mean;
}

CouplingGraph build_coupling_graph(const Crystal& crystal,
                                   const CrystalModel& model) {
  model.validate();
  const std::size_t n = crystal.positions.size();
  CouplingGraph graph;
  graph.neighbors.resize(n);

  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i)
    if (crystal.channels[i] >= 0) active.push_back(i);

  const double max_factor = model.angular ? 2.0 : 1.0;
  const double cutoff =
      std::cbrt(model.dipole_constant * max_factor / model.threshold);
  const double side = model.box_side;
  // Wider cells stay correct; cap the bin count near the number of ions.
  const double by_cutoff = std::floor(side / cutoff);
  const double by_count = std::floor(std::cbrt(static_cast<double>(active.size())));
  const int cells = static_cast<int>(std::max(1.0, std::min(by_cutoff, by_count)));

  auto link = [&](std::size_t a, std::size_t b) {
    if (coupling_strength(model, crystal.positions[a], crystal.positions[b]) >
        model.threshold) {
      graph.neighbors[a].push_back(b);
      graph.neighbors[b].push_back(a);
    }
  };

  if (cells < 3) {
    for (std::size_t x = 0; x < active.size(); ++x)
      for (std::size_t y = x + 1; y < active.size(); ++y)
        link(active[x], active[y]);
  } else {
    const double width = side / cells;
    auto cell_of = [&](const Position& p) {
      std::array<int, 3> c;
      for (std::size_t k = 0; k < 3; ++k)
        c[k] = std::min(cells - 1, static_cast<int>(p[k] / width));
      return c;
    };
    auto flat = [&](int x, int y, int z) {
      auto wrap = [&](int v) { return ((v % cells) + cells) % cells; };
      return (static_cast<std::size_t>(wrap(x)) * cells + wrap(y)) * cells +
             wrap(z);
    };
    std::vector<std::vector<std::size_t>> bins(
        static_cast<std::size_t>(cells) * cells * cells);
    for (std::size_t i : active) {
      const auto c = cell_of(crystal.positions[i]);
      bins[flat(c[0], c[1], c[2])].push_back(i);
    }
    for (std::size_t i : active) {
      const auto c = cell_of(crystal.positions[i]);
      for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy)
          for (int dz = -1; dz <= 1; ++dz)
            for (std::size_t j : bins[flat(c[0] + dx, c[1] + dy, c[2] + dz)])
              if (j > i &&
                  coupling_strength(model, crystal.positions[i],
                                    crystal.positions[j]) > model.threshold)
                graph.neighbors[i].push_back(j), graph.neighbors[j].push_back(i);
    }
  }
  for (auto& list : graph.neighbors) std::sort(list.begin(), list.end());
  return graph;
}

std::size_t count_star_instances(const Crystal& crystal,
                                 const CouplingGraph& graph, int n) {
  if (n < 2) throw std::invalid_argument("count_star_instances: n < 2");
  std::vector<bool> claimed(crystal.positions.size(), false);
  std::vector<std::size_t> picks;
  std::size_t count = 0;
  for (std::size_t bus = 0; bus < crystal.positions.size(); ++bus) {
    if (crystal.channels[bus] != 0) continue;
    picks.clear();
    for (int outer = 1; outer < n; ++outer) {
      for (std::size_t j : graph.neighbors[bus]) {
        if (crystal.channels[j] == outer && !claimed[j]) {
          picks.push_back(j);
          break;
        }
      }
      if (picks.size() != static_cast<std::size_t>(outer)) break;
    }
    if (picks.size() == static_cast<std::size_t>(n - 1)) {
      for (std::size_t j : picks) claimed[j] = true;
      ++count;
    }
  }
  return count;
}

std::size_t count_star_instances(const Crystal& crystal,
                                 const CrystalModel& model) {
  return count_star_instances(crystal, build_coupling_graph(crystal, model),
                              model.star_size);
}

double estimate_p(const Crystal& crystal, const CouplingGraph& graph,
                  int channel_count) {
  std::size_t hits = 0, trials = 0;
  std::vector<bool> seen(static_cast<std::size_t>(channel_count));
  for (std::size_t i = 0; i < crystal.positions.size(); ++i) {
    const int own = crystal.channels[i];
    if (own < 0) continue;
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t j : graph.neighbors[i]) {
      const int c = crystal.channels[j];
      if (c >= 0 && c < channel_count) seen[static_cast<std::size_t>(c)] = true;
    }
    for (int c = 0; c < channel_count; ++c) {
      if (c == own) continue;
      ++trials;
      if (seen[static_cast<std::size_t>(c)]) ++hits;
    }
  }
  return trials > 0 ? static_cast<double>(hits) / static_cast<double>(trials)
                    : 0.0;
}

double YieldResult::relative_error() const {
  if (!slope) throw std::logic_error("YieldResult: no fit available");
  const double log_p = std::log(estimated_p);
  return std::abs(*slope - log_p) / std::abs(log_p);
}

YieldResult yield_scaling(const CrystalModel& model,
                          const std::vector<int>& n_values,
                          const std::vector<std::uint64_t>& seeds,
                          unsigned jobs) {
  model.validate();
  if (n_values.size() < 2 || seeds.empty()) {
    throw std::invalid_argument("yield_scaling: need >= 2 n values and a seed");
  }
  for (int n : n_values) {
    if (n < 2 || n > model.channel_count) {
      throw std::domain_error("yield_scaling: n must lie in [2, channel_count]");
    }
  }

  YieldResult result;
  result.n_values = n_values;
  result.counts.assign(n_values.size(), std::vector<std::size_t>(seeds.size()));
  std::vector<double> p_per_seed(seeds.size());

  parallel_for(seeds.size(), jobs, [&](std::size_t s) {
    const Crystal crystal = sample_crystal(model, seeds[s]);
    const CouplingGraph graph = build_coupling_graph(crystal, model);
    for (std::size_t k = 0; k < n_values.size(); ++k)
      result.counts[k][s] = count_star_instances(crystal, graph, n_values[k]);
    p_per_seed[s] = estimate_p(crystal, graph, model.channel_count);
  });

  result.estimated_p =
      std::accumulate(p_per_seed.begin(), p_per_seed.end(), 0.0) /
      static_cast<double>(seeds.size());

  std::vector<double> xs, ys;
  for (std::size_t k = 0; k < n_values.size(); ++k) {
    const double mean =
        static_cast<double>(std::accumulate(result.counts[k].begin(),
                                            result.counts[k].end(),
                                            std::size_t{0})) /
        static_cast<double>(seeds.size());
    result.mean_counts.push_back(mean);
    if (mean > 0.0) {
      xs.push_back(n_values[k]);
      ys.push_back(std::log(mean));
    }
  }
  if (xs.size() < 2) {
    result.degenerate = true;
    return result;
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxy += (xs[k] - mx) * (ys[k] - my);
    sxx += (xs[k] - mx) * (xs[k] - mx);
  }
  result.slope = sxy / sxx;
  return result;
}

}  // namespace reqc
