#pragma once

#include <json.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citeswing/chart.hpp"
#include "citeswing/corpus.hpp"
#include "citeswing/diffusion.hpp"
#include "citeswing/fitting.hpp"
#include "citeswing/ratios.hpp"
#include "citeswing/stats.hpp"

namespace citeswing::report {

using Json = nlohmann::ordered_json;

/// Round half away from zero to `decimals` places.
[[nodiscard]] double round_half_away(double value, int decimals);
/// round_half_away, printed with exactly `decimals` places.
[[nodiscard]] std::string fixed(double value, int decimals);
/// Nearest double to `value` printed with 6 significant digits.
[[nodiscard]] double significant6(double value);

// CSV tables, rounded to table precision.
[[nodiscard]] std::string csf_csv(std::span<const diffusion::CsfInterval> table);
[[nodiscard]] std::string ratios_csv(std::span<const ratios::RatioRow> rows);
[[nodiscard]] std::string stats_csv(std::string_view series, const stats::DescriptiveStats<double>& d);
/// Columns age,observed,predicted,residual.
[[nodiscard]] std::string fit_csv(const fitting::ModelSpec& model, const Eigen::VectorXd& params,
                                  std::span<const double> ages, std::span<const double> observed);

// JSON values with 6 significant digits.
[[nodiscard]] Json to_json(const corpus::AggregateRow& row);
[[nodiscard]] Json to_json(const diffusion::CsfInterval& iv);
[[nodiscard]] Json to_json(const ratios::RatioRow& row);
[[nodiscard]] Json to_json(const stats::DescriptiveStats<double>& d);
[[nodiscard]] Json to_json(const stats::RegressionResult<double>& r);
[[nodiscard]] Json to_json(const fitting::FitResult<double>& f);

template <typename T>
Json to_json_array(std::span<const T> items) {
    Json arr = Json::array();
    for (const auto& item : items) arr.push_back(to_json(item));
    return arr;
}

/// Named indicator series: csf_o, csf_e (years of the interval end), tc, cu, tu
/// (by publication age).
enum class SeriesId { CsfObserved, CsfExpected, Tc, Cu, Tu };
[[nodiscard]] SeriesId parse_series(std::string_view name);
[[nodiscard]] std::string_view series_name(SeriesId id) noexcept;

/// Reference parameters reported for this dataset: Harris fit of TC against
/// age and rational fit of TU against age.
inline const Eigen::Vector3d kReferenceHarrisTc{-5.789, 6.114, 0.242};
inline const Eigen::Vector4d kReferenceRationalTu{7.55e-13, 4.346e10, 2.404e10, 7.068e10};

/// Every analysis over one set of yearly aggregates.
struct Analysis {
    std::vector<corpus::AggregateRow> aggregates;
    std::vector<diffusion::CsfInterval> csf;
    std::vector<ratios::RatioRow> ratios;
};

[[nodiscard]] Analysis analyze(std::span<const corpus::AggregateRow> rows, Year ref_year);

/// Values of a named series; CSF series are magnitudes unless `sign` is Signed.
[[nodiscard]] std::vector<double> series_values(const Analysis& a, SeriesId id,
                                                diffusion::Sign sign = diffusion::Sign::Magnitude);
/// Publication ages matching ratio series order.
[[nodiscard]] std::vector<double> ages(const Analysis& a);

/// The full report document: aggregates, csf_intervals, ratios, stats,
/// correlations, regressions, fits.
[[nodiscard]] Json build_report(const Analysis& a);

/// CSF magnitudes by year (observed dashed, expected solid).
[[nodiscard]] std::string csf_chart(const Analysis& a);
/// TC, CU and TU against publication age.
[[nodiscard]] std::string ratio_chart(const Analysis& a);

}  // namespace citeswing::report
