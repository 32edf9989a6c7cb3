#pragma once

/// @file patterns.hpp
/// @brief Random feasible travel sequences, the complement ("swap") operator
/// and construction of complete individuals from n/2 seed sequences.

#include <span>
#include <stdexcept>
#include <vector>

#include "mttp/core.hpp"
#include "mttp/rng.hpp"

namespace mttp {

/// A random draw could not satisfy its constraints within the retry budget.
class GenerationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDrawRetries = 1000;

/// Swaps home and away in every week.
[[nodiscard]] TravelSequence swap_complement(std::span<const std::uint8_t> seq);

/// A sequence of size.weeks() flags whose first half is drawn left to right
/// without ever completing a run longer than kMaxRun, and whose second half is
/// the complement of the first. Redrawn when the mirrored half creates a long
/// run across the boundary.
[[nodiscard]] TravelSequence random_sequence(InstanceSize size, Rng& rng);

/// Rows n/2+k are the complements of seed rows k, so row k and row n/2+k are
/// partners. Throws ShapeError if seeds is not n/2 sequences of the right length.
[[nodiscard]] TravelMatrix complete_with_complements(InstanceSize size,
                                                      std::span<const TravelSequence> seeds);

/// n/2 random sequences, pairwise distinct and pairwise non-complementary,
/// completed with their complements.
[[nodiscard]] TravelMatrix build_individual(InstanceSize size, Rng& rng);

/// Partner map of a matrix built by complete_with_complements: k <-> k + n/2.
[[nodiscard]] std::vector<int> canonical_partners(InstanceSize size);

} // namespace mttp
