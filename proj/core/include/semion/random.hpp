#pragma once

#include <cstdint>
#include <random>

namespace semion {

using Rng = std::mt19937_64;

// Independent purposes draw from disjoint substreams of the same master seed.
enum class StreamPurpose : std::uint64_t {
  Visons = 1,
  Disorder = 2,
  Events = 3,
  Walker = 4,
  Landscape = 5,
};

/// SplitMix64 finaliser; a bijective 64-bit mixer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Counter-based substream: the generator for (master, index, purpose) depends
/// on nothing else, so realization `index` can be regenerated in isolation.
Rng substream(std::uint64_t master_seed, std::uint64_t index, StreamPurpose purpose);

}  // namespace semion
