#ifndef TPX_RNG_HPP
#define TPX_RNG_HPP

#include <cstdint>

namespace tpx {

/// splitmix64 step: maps any 64-bit value to a well-mixed 64-bit value.
/// Stable across platforms; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Derive the seed for sub-stream `index` from a master seed. Distinct
/// indices yield statistically independent mt19937_64 streams, and the
/// mapping is deterministic so any run can be reproduced from
/// (master_seed, index) alone.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

} // namespace tpx

#endif // TPX_RNG_HPP
