#pragma once

#include <cstdint>
#include <random>

#include "reqc/hilbert.hpp"

namespace reqc {

using Rng = std::mt19937_64;

/// Independent stream for work item `index` of a run seeded with `master`.
/// Streams depend only on (master, index), never on scheduling.
Rng stream_rng(std::uint64_t master, std::uint64_t index);

/// Hermitian matrix with i.i.d. standard complex Gaussian entries (GUE-like).
Operator random_hermitian(std::size_t dim, Rng& rng);

/// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
Operator random_unitary(std::size_t dim, Rng& rng);

/// Haar-random unit vector.
StateVector random_state(std::size_t dim, Rng& rng);

}  // namespace reqc
