#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "citeswing/error.hpp"

namespace citeswing::stats {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// View a contiguous double series as an Eigen column vector (no copy).
inline Eigen::Map<const Eigen::VectorXd> as_vector(std::span<const double> s) {
    return {s.data(), static_cast<Eigen::Index>(s.size())};
}

template <typename Scalar>
struct DescriptiveStats {
    Eigen::Index count = 0;
    Scalar mean{};
    Scalar median{};
    Scalar range{};
    Scalar std_dev{};  // sample, n-1 denominator
    Scalar cv{};       // std_dev / mean
    Scalar excess_kurtosis{};
};

template <typename Scalar>
struct RegressionResult {
    Scalar slope{};
    Scalar intercept{};
    Scalar r{};
    Scalar r_squared{};
    Scalar std_error{};  // sqrt(SSE / (n - 2))
};

namespace detail {

template <typename Derived>
void require_points(const Eigen::DenseBase<Derived>& x, Eigen::Index needed, const char* what) {
    if (x.size() < needed) {
        throw Error(ErrorCode::TooFewPoints, std::string(what) + " needs at least " +
                                                 std::to_string(needed) + " points, got " +
                                                 std::to_string(x.size()));
    }
}

template <typename Derived>
bool is_constant(const Eigen::DenseBase<Derived>& x) {
    return x.maxCoeff() == x.minCoeff();
}

template <typename Derived>
void require_variation(const Eigen::DenseBase<Derived>& x, const char* what) {
    if (is_constant(x)) throw Error(ErrorCode::ZeroVariance, std::string(what) + " of a constant series");
}

template <typename DX, typename DY>
void require_same_length(const Eigen::DenseBase<DX>& x, const Eigen::DenseBase<DY>& y) {
    if (x.size() != y.size()) {
        throw Error(ErrorCode::LengthMismatch, "series lengths differ: " + std::to_string(x.size()) +
                                                   " vs " + std::to_string(y.size()));
    }
}

}  // namespace detail

template <typename Derived>
typename Derived::Scalar mean(const Eigen::DenseBase<Derived>& x) {
    detail::require_points(x, 1, "mean");
    return x.mean();
}

/// Even-length series take the mean of the two middle order statistics.
template <typename Derived>
typename Derived::Scalar median(const Eigen::DenseBase<Derived>& x) {
    using Scalar = typename Derived::Scalar;
    detail::require_points(x, 1, "median");
    Vector<Scalar> sorted = x.derived();
    std::sort(sorted.begin(), sorted.end());
    const Eigen::Index n = sorted.size();
    if (n % 2 == 1) return sorted(n / 2);
    return (sorted(n / 2 - 1) + sorted(n / 2)) / Scalar(2);
}

template <typename Derived>
typename Derived::Scalar range(const Eigen::DenseBase<Derived>& x) {
    detail::require_points(x, 1, "range");
    return x.maxCoeff() - x.minCoeff();
}

template <typename Derived>
typename Derived::Scalar std_dev(const Eigen::DenseBase<Derived>& x) {
    using Scalar = typename Derived::Scalar;
    detail::require_points(x, 2, "std_dev");
    if (detail::is_constant(x)) return Scalar(0);
    const Scalar m = x.mean();
    const Scalar ss = (x.derived().array() - m).square().sum();
    return std::sqrt(ss / Scalar(x.size() - 1));
}

template <typename Derived>
typename Derived::Scalar coefficient_of_variation(const Eigen::DenseBase<Derived>& x) {
    detail::require_points(x, 2, "cv");
    detail::require_variation(x, "cv");
    const auto m = x.mean();
    if (m == 0) throw Error(ErrorCode::ZeroMean, "cv of a zero-mean series");
    return std_dev(x) / m;
}

/// Bias-corrected sample excess kurtosis (the spreadsheet KURT convention):
///   n(n+1)/((n-1)(n-2)(n-3)) * sum z^4 - 3(n-1)^2/((n-2)(n-3)),  z = (x - mean)/s
template <typename Derived>
typename Derived::Scalar excess_kurtosis(const Eigen::DenseBase<Derived>& x) {
    using Scalar = typename Derived::Scalar;
    detail::require_points(x, 4, "excess_kurtosis");
    detail::require_variation(x, "excess_kurtosis");
    const Scalar n = Scalar(x.size());
    const Scalar s = std_dev(x);
    const Scalar z4 = ((x.derived().array() - x.mean()) / s).square().square().sum();
    const Scalar lead = n * (n + 1) / ((n - 1) * (n - 2) * (n - 3));
    const Scalar shift = Scalar(3) * (n - 1) * (n - 1) / ((n - 2) * (n - 3));
    return lead * z4 - shift;
}

/// All six summary statistics; throws if any one of them is undefined.
template <typename Derived>
DescriptiveStats<typename Derived::Scalar> describe(const Eigen::DenseBase<Derived>& x) {
    DescriptiveStats<typename Derived::Scalar> d;
    d.count = x.size();
    d.mean = mean(x);
    d.median = median(x);
    d.range = range(x);
    d.std_dev = std_dev(x);
    d.cv = coefficient_of_variation(x);
    d.excess_kurtosis = excess_kurtosis(x);
    return d;
}

/// Sample Pearson correlation, clamped to [-1, 1].
template <typename DX, typename DY>
typename DX::Scalar pearson(const Eigen::DenseBase<DX>& x, const Eigen::DenseBase<DY>& y) {
    using Scalar = typename DX::Scalar;
    detail::require_same_length(x, y);
    detail::require_points(x, 2, "pearson");
    detail::require_variation(x, "pearson (x)");
    detail::require_variation(y, "pearson (y)");
    const auto dx = (x.derived().array() - x.mean()).eval();
    const auto dy = (y.derived().array() - y.mean()).eval();
    const Scalar r = (dx * dy).sum() / std::sqrt(dx.square().sum() * dy.square().sum());
    return std::clamp(r, Scalar(-1), Scalar(1));
}

/// Ordinary least squares y = intercept + slope * x. R^2 is computed from the
/// residuals (1 - SSE/SST), independently of r.
template <typename DX, typename DY>
RegressionResult<typename DX::Scalar> linreg(const Eigen::DenseBase<DX>& x,
                                             const Eigen::DenseBase<DY>& y) {
    using Scalar = typename DX::Scalar;
    detail::require_same_length(x, y);
    detail::require_points(x, 3, "linreg");
    detail::require_variation(x, "linreg (x)");
    detail::require_variation(y, "linreg (y)");

    const Scalar mx = x.mean();
    const Scalar my = y.mean();
    const auto dx = (x.derived().array() - mx).eval();
    const auto dy = (y.derived().array() - my).eval();

    RegressionResult<Scalar> out;
    out.slope = (dx * dy).sum() / dx.square().sum();
    out.intercept = my - out.slope * mx;

    const auto residuals = (y.derived().array() - out.intercept - out.slope * x.derived().array()).eval();
    const Scalar sse = residuals.square().sum();
    const Scalar sst = dy.square().sum();
    out.r = pearson(x, y);
    out.r_squared = Scalar(1) - sse / sst;
    out.std_error = std::sqrt(sse / Scalar(x.size() - 2));
    return out;
}

// Convenience overloads for plain double series.
inline double mean(std::span<const double> x) { return mean(as_vector(x)); }
inline double median(std::span<const double> x) { return median(as_vector(x)); }
inline double range(std::span<const double> x) { return range(as_vector(x)); }
inline double std_dev(std::span<const double> x) { return std_dev(as_vector(x)); }
inline double coefficient_of_variation(std::span<const double> x) {
    return coefficient_of_variation(as_vector(x));
}
inline double excess_kurtosis(std::span<const double> x) { return excess_kurtosis(as_vector(x)); }
inline DescriptiveStats<double> describe(std::span<const double> x) { return describe(as_vector(x)); }
inline double pearson(std::span<const double> x, std::span<const double> y) {
    return pearson(as_vector(x), as_vector(y));
}
inline RegressionResult<double> linreg(std::span<const double> x, std::span<const double> y) {
    return linreg(as_vector(x), as_vector(y));
}

}  // namespace citeswing::stats
