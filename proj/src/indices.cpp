#include "citeswing/indices.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "citeswing/error.hpp"

namespace citeswing::indices {

Count h_index(std::span<const Count> counts) {
    // Bucket counts, capping at n: h never exceeds the number of documents.
    const auto n = static_cast<Count>(counts.size());
    std::vector<Count> at_least(static_cast<std::size_t>(n) + 1, 0);
    for (Count c : counts) {
        if (c > 0) ++at_least[static_cast<std::size_t>(std::min(c, n))];
    }
    Count running = 0;
    for (Count r = n; r > 0; --r) {
        running += at_least[static_cast<std::size_t>(r)];
        if (running >= r) return r;
    }
    return 0;
}

ZoneDecomposition zone_from_totals(Count total, Count h) {
    if (total < 0 || h < 0 || h * h > total) {
        throw Error(ErrorCode::InvariantViolation,
                    "need 0 <= h^2 <= T (T=" + std::to_string(total) + ", h=" +
                        std::to_string(h) + ")");
    }
    ZoneDecomposition z;
    z.total = total;
    z.h = h;
    z.core = h * h;
    z.excess = total - z.core;
    z.r = std::sqrt(static_cast<double>(z.total));
    z.e = std::sqrt(static_cast<double>(z.excess));
    return z;
}

ZoneDecomposition zone_decompose(std::span<const Count> counts) {
    Count total = 0;
    for (Count c : counts) total += c;
    const Count h = h_index(counts);
    ZoneDecomposition z = zone_from_totals(total, h);

    std::vector<Count> ranked(counts.begin(), counts.end());
    std::ranges::sort(ranked, std::greater<>{});
    Count core_docs = 0;
    for (Count i = 0; i < h; ++i) core_docs += ranked[static_cast<std::size_t>(i)];
    z.classic = ClassicSplit{z.core, core_docs - z.core, total - core_docs};
    return z;
}

}  // namespace citeswing::indices
