#pragma once

#include <optional>
#include <span>

#include "mttp/core.hpp"

namespace mttp {

/// Published mTTP trip counts for one team count.
struct ReferenceRow {
    int n;
    int obtained;    ///< result of the genetic algorithm with swapping
    int lower_bound; ///< published lower bound
    int known;       ///< best previously published result
    int gap1;        ///< obtained - lower_bound
    int gap2;        ///< obtained - known
};

/// Every team plays n-1 away games, and with at most kMaxRun of them in a
/// row it needs at least ceil((n-1)/kMaxRun) away trips from home.
[[nodiscard]] int naive_lower_bound(InstanceSize size);

[[nodiscard]] std::span<const ReferenceRow> reference_table();

[[nodiscard]] std::optional<ReferenceRow> reference_row(int n);

} // namespace mttp
