#pragma once

// Monte Carlo model of a doped crystal: ions scattered uniformly in a
// periodic box, assigned at random to frequency channels, coupled with
// g = C / r^3. Counts how many disjoint star-topology instances a greedy
// instance identification recovers.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace reqc {

struct CrystalModel {
  double box_side = 1.0;
  int ion_count = 20000;
  double dipole_constant = 1.0;     // C in g = C / r^3
  int channel_count = 4;
  double channel_probability = 0.25;  // per channel, per ion
  double threshold = 1.0;           // g_t
  int star_size = 3;                // n: bus (channel 0) + n-1 outer channels
  bool angular = false;             // multiply by |1 - 3 cos^2 theta|

  void validate() const;
};

using Position = std::array<double, 3>;

struct Crystal {
  std::vector<Position> positions;
  std::vector<int> channels;  // -1 for inactive ions

  std::size_t active_count() const;
  std::size_t count_in(int channel) const;
};

Crystal sample_crystal(const CrystalModel& model, std::uint64_t seed);

/// Dipole coupling between two positions (minimum-image periodic distance).
double coupling_strength(const CrystalModel& model, const Position& a,
                         const Position& b);

/// Threshold g_t at which a given ion has, on average, probability p of at
/// least one coupled partner in a given channel (isotropic 1/r^3 law).
double threshold_for_p(const CrystalModel& model, double p);

/// For every active ion, the active ions it couples to above threshold,
/// ascending.
struct CouplingGraph {
  std::vector<std::vector<std::size_t>> neighbors;
};

CouplingGraph build_coupling_graph(const Crystal& crystal,
                                   const CrystalModel& model);

/// Bus ions (channel 0) in index order each claim the lowest-index unclaimed
/// coupled ion of every outer channel 1..n-1; an ion is claimed at most once
/// and a bus ion counts only if all n-1 claims succeed.
std::size_t count_star_instances(const Crystal& crystal,
                                 const CouplingGraph& graph, int n);
std::size_t count_star_instances(const Crystal& crystal,
                                 const CrystalModel& model);

/// Fraction of (active ion, other channel) pairs in which the ion couples to
/// at least one member of that channel.
double estimate_p(const Crystal& crystal, const CouplingGraph& graph,
                  int channel_count);

struct YieldResult {
  std::vector<int> n_values;
  std::vector<double> mean_counts;               // per n, over seeds
  std::vector<std::vector<std::size_t>> counts;  // [n index][seed index]
  double estimated_p = 0.0;
  std::optional<double> slope;  // d log(mean count) / d n
  bool degenerate = false;      // fewer than two n with nonzero counts

  /// |slope - log p| / |log p|; requires a fit.
  double relative_error() const;
};

YieldResult yield_scaling(const CrystalModel& model,
                          const std::vector<int>& n_values,
                          const std::vector<std::uint64_t>& seeds,
                          unsigned jobs = 1);

}  // namespace reqc
