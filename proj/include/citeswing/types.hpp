#pragma once

#include <cstdint>

namespace citeswing {

using Count = std::int64_t;
using Year = int;

/// Observation year used for publication age when none is given.
inline constexpr Year kDefaultRefYear = 2021;

}  // namespace citeswing
