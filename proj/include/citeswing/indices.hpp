#pragma once

#include <optional>
#include <span>

#include "citeswing/types.hpp"

namespace citeswing::indices {

/// Largest r such that the r-th largest count is at least r (0 for no documents).
[[nodiscard]] Count h_index(std::span<const Count> counts);

/// The three h-zones of a ranked citation list: the h x h core square, the
/// citations of core documents above that square, and everything ranked below h.
struct ClassicSplit {
    Count core_square = 0;
    Count excess_above_core = 0;
    Count tail = 0;

    friend bool operator==(const ClassicSplit&, const ClassicSplit&) = default;
};

/// Total citations T split into the core H = h^2 and the net excess E = T - h^2.
/// The classic split needs per-document counts and is absent when the
/// decomposition was built from yearly totals.
struct ZoneDecomposition {
    Count total = 0;   // T = R^2
    Count h = 0;
    Count core = 0;    // H = h^2
    Count excess = 0;  // E = e^2, tail-inclusive
    double r = 0.0;    // sqrt(T)
    double e = 0.0;    // sqrt(E)
    std::optional<ClassicSplit> classic;
};

[[nodiscard]] ZoneDecomposition zone_decompose(std::span<const Count> counts);

/// Decomposition from pooled totals. Throws InvariantViolation if h^2 > T or
/// either value is negative.
[[nodiscard]] ZoneDecomposition zone_from_totals(Count total, Count h);

}  // namespace citeswing::indices
