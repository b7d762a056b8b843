#pragma once

#include <span>
#include <vector>

#include "citeswing/corpus.hpp"
#include "citeswing/types.hpp"

namespace citeswing::ratios {

/// Age-normalized cited/uncited ratios for one publication year, observed at
/// `ref_year`. All three are in units of 1/years.
struct RatioRow {
    Year pub_year = 0;
    Year ref_year = 0;
    int age = 0;
    Count n = 0;
    Count k = 0;
    Count uncited = 0;
    double tc = 0.0;  // n / (k age)
    double cu = 0.0;  // k / ((n-k) age)
    double tu = 0.0;  // n / ((n-k) age)
};

/// Requires ref_year > pub_year and 0 < k < n. Throws NonPositiveAge, NoCited
/// or NoUncited; k > n is an InvariantViolation.
[[nodiscard]] RatioRow ratio_row(Count n, Count k, Year pub_year, Year ref_year = kDefaultRefYear);

/// One row per aggregate, ascending by year. Errors carry the failing year.
[[nodiscard]] std::vector<RatioRow> ratio_table(std::span<const corpus::AggregateRow> rows,
                                                Year ref_year = kDefaultRefYear);

}  // namespace citeswing::ratios
