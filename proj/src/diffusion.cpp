#include "citeswing/diffusion.hpp"

#include <algorithm>
#include <cmath>

#include "citeswing/error.hpp"

namespace citeswing::diffusion {

double fet(double total, double excess) {
    if (!(total > 0.0)) throw Error(ErrorCode::ZeroTotal, "FET needs T > 0");
    return std::sqrt(excess / total);
}

double fhe(double core, double excess) {
    if (!(excess > 0.0)) throw Error(ErrorCode::ZeroExcess, "FHE needs E > 0");
    return std::sqrt(core / excess);
}

DiffusionPoint diffusion_point(const indices::ZoneDecomposition& z, Year year) {
    try {
        const auto total = static_cast<double>(z.total);
        const auto excess = static_cast<double>(z.excess);
        const double epsilon = fet(total, excess);
        const double theta = fhe(static_cast<double>(z.core), excess);
        return {year, epsilon, theta};
    } catch (const Error& err) {
        if (year != 0) throw err.with_year(year);
        throw;
    }
}

double csf_expected(double total, double core, double excess) {
    if (!(core > 0.0)) throw Error(ErrorCode::ZeroCore, "closed-form swing needs h > 0");
    if (!(excess > 0.0)) throw Error(ErrorCode::ZeroExcess, "closed-form swing needs E > 0");
    return -(total * std::sqrt(total)) / (std::sqrt(core) * excess);
}

double csf_expected(const indices::ZoneDecomposition& z) {
    if (z.h <= 0) throw Error(ErrorCode::ZeroCore, "closed-form swing needs h > 0");
    if (z.excess <= 0) throw Error(ErrorCode::ZeroExcess, "closed-form swing needs E > 0");
    const double r3 = z.r * z.r * z.r;
    return -r3 / (static_cast<double>(z.h) * static_cast<double>(z.excess));
}

double csf_observed(const DiffusionPoint& from, const DiffusionPoint& to) {
    const double d_eps = to.epsilon - from.epsilon;
    if (d_eps == 0.0) {
        throw Error(ErrorCode::ZeroDeltaEpsilon, "FET unchanged, slope undefined");
    }
    return (to.theta - from.theta) / d_eps;
}

double pct_error(double observed, double expected) {
    return 100.0 * std::abs(observed - expected) / std::abs(expected);
}

std::vector<CsfInterval> csf_table(std::span<const corpus::AggregateRow> rows) {
    std::vector<corpus::AggregateRow> sorted(rows.begin(), rows.end());
    std::ranges::sort(sorted, {}, &corpus::AggregateRow::pub_year);

    std::vector<CsfInterval> table;
    if (sorted.size() < 2) return table;
    table.reserve(sorted.size() - 1);

    auto zone_of = [](const corpus::AggregateRow& row) {
        try {
            return indices::zone_from_totals(row.total_citations, row.h_index);
        } catch (const Error& err) {
            throw err.with_year(row.pub_year);
        }
    };

    auto prev_zone = zone_of(sorted.front());
    auto prev_point = diffusion_point(prev_zone, sorted.front().pub_year);

    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const auto& row = sorted[i];
        const Year from_year = sorted[i - 1].pub_year;
        if (row.pub_year != from_year + 1) {
            throw Error(ErrorCode::GapInYears,
                        "interval " + std::to_string(from_year) + "->" +
                            std::to_string(row.pub_year) + " is not consecutive",
                        std::nullopt, row.pub_year);
        }
        const auto zone = zone_of(row);
        const auto point = diffusion_point(zone, row.pub_year);

        CsfInterval iv;
        iv.year_from = from_year;
        iv.year_to = row.pub_year;
        iv.d_eps = point.epsilon - prev_point.epsilon;
        iv.d_theta = point.theta - prev_point.theta;
        try {
            iv.csf_expected = csf_expected(prev_zone);
        } catch (const Error& err) {
            throw err.with_year(from_year);
        }
        try {
            iv.csf_observed = csf_observed(prev_point, point);
        } catch (const Error& err) {
            throw err.with_year(row.pub_year);
        }
        iv.pct_error = pct_error(iv.csf_observed, iv.csf_expected);
        table.push_back(iv);

        prev_zone = zone;
        prev_point = point;
    }
    return table;
}

namespace {

std::vector<double> series_of(std::span<const CsfInterval> table, double CsfInterval::*field,
                              Sign sign) {
    std::vector<double> out;
    out.reserve(table.size());
    for (const auto& iv : table) {
        const double v = iv.*field;
        out.push_back(sign == Sign::Magnitude ? std::abs(v) : v);
    }
    return out;
}

}  // namespace

std::vector<double> observed_series(std::span<const CsfInterval> table, Sign sign) {
    return series_of(table, &CsfInterval::csf_observed, sign);
}

std::vector<double> expected_series(std::span<const CsfInterval> table, Sign sign) {
    return series_of(table, &CsfInterval::csf_expected, sign);
}

double mean_pct_error(std::span<const CsfInterval> table) {
    if (table.empty()) throw Error(ErrorCode::TooFewPoints, "no intervals");
    double sum = 0.0;
    for (const auto& iv : table) sum += iv.pct_error;
    return sum / static_cast<double>(table.size());
}

}  // namespace citeswing::diffusion
