#pragma once

#include <span>
#include <vector>

#include "citeswing/corpus.hpp"
#include "citeswing/indices.hpp"
#include "citeswing/types.hpp"

namespace citeswing::diffusion {

/// FET (epsilon = sqrt(E/T)) and FHE (theta = sqrt(H/E)) for one year.
struct DiffusionPoint {
    Year year = 0;
    double epsilon = 0.0;
    double theta = 0.0;
};

/// Citation swing between two consecutive years. `csf_expected` is the closed
/// form evaluated at `year_from`.
struct CsfInterval {
    Year year_from = 0;
    Year year_to = 0;
    double d_eps = 0.0;
    double d_theta = 0.0;
    double csf_observed = 0.0;
    double csf_expected = 0.0;
    double pct_error = 0.0;
};

/// Throws ZeroTotal when T = 0 and ZeroExcess when E = 0.
[[nodiscard]] DiffusionPoint diffusion_point(const indices::ZoneDecomposition& z, Year year = 0);

/// Real-valued forms, used for continuous families where h is not an integer.
[[nodiscard]] double fet(double total, double excess);
[[nodiscard]] double fhe(double core, double excess);

/// Closed-form swing -R^3 / (h e^2) = -T^(3/2) / (sqrt(H) E).
[[nodiscard]] double csf_expected(double total, double core, double excess);
[[nodiscard]] double csf_expected(const indices::ZoneDecomposition& z);

/// Finite-difference swing d(theta)/d(epsilon) between two points.
[[nodiscard]] double csf_observed(const DiffusionPoint& from, const DiffusionPoint& to);

/// 100 |observed - expected| / |expected|
[[nodiscard]] double pct_error(double observed, double expected);

/// One interval per adjacent pair of years. Rows are ordered by year first and
/// must then be consecutive (GapInYears otherwise). Errors carry the year.
[[nodiscard]] std::vector<CsfInterval> csf_table(std::span<const corpus::AggregateRow> rows);

enum class Sign { Magnitude, Signed };

[[nodiscard]] std::vector<double> observed_series(std::span<const CsfInterval> table,
                                                  Sign sign = Sign::Magnitude);
[[nodiscard]] std::vector<double> expected_series(std::span<const CsfInterval> table,
                                                  Sign sign = Sign::Magnitude);

[[nodiscard]] double mean_pct_error(std::span<const CsfInterval> table);

}  // namespace citeswing::diffusion
