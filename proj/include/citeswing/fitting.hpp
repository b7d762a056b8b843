#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citeswing/error.hpp"

namespace citeswing::fitting {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

enum class ModelId {
    Harris,    // 1 / (a + b y^c)
    Rational,  // (a + b y) / (1 + c y + d y^2)
};

struct ModelSpec {
    ModelId id;
    Eigen::Index param_count;
    std::string_view name;
};

inline constexpr ModelSpec kHarris{ModelId::Harris, 3, "harris"};
inline constexpr ModelSpec kRational{ModelId::Rational, 4, "rational"};

[[nodiscard]] const ModelSpec& model_spec(ModelId id) noexcept;
/// "harris" or "rational"; throws InvalidArgument otherwise.
[[nodiscard]] const ModelSpec& parse_model(std::string_view name);

/// Prediction at age y, or nullopt where the model is undefined (vanishing
/// denominator, y <= 0 for harris, non-finite result).
template <typename Derived>
std::optional<typename Derived::Scalar> try_evaluate(const ModelSpec& model,
                                                     const Eigen::MatrixBase<Derived>& p,
                                                     typename Derived::Scalar y) {
    using Scalar = typename Derived::Scalar;
    Scalar denom{};
    Scalar numer{1};
    switch (model.id) {
        case ModelId::Harris:
            if (!(y > Scalar(0))) return std::nullopt;
            denom = p(0) + p(1) * std::pow(y, p(2));
            break;
        case ModelId::Rational:
            numer = p(0) + p(1) * y;
            denom = Scalar(1) + p(2) * y + p(3) * y * y;
            break;
    }
    if (denom == Scalar(0) || !std::isfinite(denom)) return std::nullopt;
    const Scalar value = numer / denom;
    if (!std::isfinite(value)) return std::nullopt;
    return value;
}

template <typename Derived>
typename Derived::Scalar evaluate(const ModelSpec& model, const Eigen::MatrixBase<Derived>& p,
                                  typename Derived::Scalar y) {
    if (p.size() != model.param_count) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string(model.name) + " takes " + std::to_string(model.param_count) +
                        " parameters, got " + std::to_string(p.size()));
    }
    const auto value = try_evaluate(model, p, y);
    if (!value) {
        throw Error(ErrorCode::SingularDenominator,
                    std::string(model.name) + " undefined at y = " + std::to_string(y));
    }
    return *value;
}

namespace detail {

template <typename Scalar>
std::optional<Vector<Scalar>> try_residuals(const ModelSpec& model, const Vector<Scalar>& p,
                                            const Vector<Scalar>& xs, const Vector<Scalar>& ys) {
    Vector<Scalar> r(xs.size());
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
        const auto pred = try_evaluate(model, p, xs(i));
        if (!pred) return std::nullopt;
        r(i) = ys(i) - *pred;
    }
    return r;
}

template <typename Scalar>
std::optional<Scalar> try_sse(const ModelSpec& model, const Vector<Scalar>& p,
                              const Vector<Scalar>& xs, const Vector<Scalar>& ys) {
    const auto r = try_residuals(model, p, xs, ys);
    if (!r) return std::nullopt;
    const Scalar s = r->squaredNorm();
    if (!std::isfinite(s)) return std::nullopt;
    return s;
}

template <typename Scalar>
void check_series(const Vector<Scalar>& xs, const Vector<Scalar>& ys, Eigen::Index min_points) {
    if (xs.size() != ys.size()) {
        throw Error(ErrorCode::LengthMismatch, "xs and ys differ in length");
    }
    if (xs.size() < min_points) {
        throw Error(ErrorCode::TooFewPoints, "need at least " + std::to_string(min_points) +
                                                 " points, got " + std::to_string(xs.size()));
    }
}

}  // namespace detail

/// Sum of squared residuals. Throws SingularDenominator naming the offending x.
template <typename Scalar>
Scalar sse(const ModelSpec& model, const Vector<Scalar>& p, const Vector<Scalar>& xs,
           const Vector<Scalar>& ys) {
    detail::check_series(xs, ys, 1);
    Scalar total{0};
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
        const Scalar d = ys(i) - evaluate(model, p, xs(i));
        total += d * d;
    }
    return total;
}

/// Central-difference Jacobian of the predictions, one column per parameter,
/// step max(1e-6, 1e-6 |p_j|). Falls back to a one-sided difference when one
/// neighbour is undefined; nullopt when both are.
template <typename Scalar>
std::optional<Matrix<Scalar>> numeric_jacobian(const ModelSpec& model, const Vector<Scalar>& p,
                                               const Vector<Scalar>& xs) {
    Matrix<Scalar> jac(xs.size(), p.size());
    for (Eigen::Index j = 0; j < p.size(); ++j) {
        const Scalar h = std::max(Scalar(1e-6), Scalar(1e-6) * std::abs(p(j)));
        Vector<Scalar> plus = p;
        Vector<Scalar> minus = p;
        plus(j) += h;
        minus(j) -= h;
        for (Eigen::Index i = 0; i < xs.size(); ++i) {
            const auto fp = try_evaluate(model, plus, xs(i));
            const auto fm = try_evaluate(model, minus, xs(i));
            if (fp && fm) {
                jac(i, j) = (*fp - *fm) / (Scalar(2) * h);
                continue;
            }
            const auto f0 = try_evaluate(model, p, xs(i));
            if (!f0) return std::nullopt;
            if (fp) {
                jac(i, j) = (*fp - *f0) / h;
            } else if (fm) {
                jac(i, j) = (*f0 - *fm) / h;
            } else {
                return std::nullopt;
            }
        }
    }
    return jac;
}

struct SolverOptions {
    double rel_tolerance = 1e-10;  // stop when an accepted step improves SSE by less than this
    int max_iterations = 500;      // per start
    double initial_damping = 1e-3;
    double max_damping = 1e16;
};

template <typename Scalar>
struct LmRun {
    Vector<Scalar> params;
    Scalar sse{};
    bool converged = false;
    int iterations = 0;
    std::vector<Scalar> accepted_sse;  // SSE at the start and after every accepted step
};

/// Damped Gauss-Newton (Levenberg-Marquardt with Marquardt diagonal scaling)
/// from one starting point. Trial points where the model is undefined count as
/// infinite SSE and raise the damping. Returns nullopt if the start itself is
/// undefined.
template <typename Scalar>
std::optional<LmRun<Scalar>> levenberg_marquardt(const ModelSpec& model, const Vector<Scalar>& xs,
                                                 const Vector<Scalar>& ys,
                                                 const Vector<Scalar>& start,
                                                 const SolverOptions& options = {}) {
    const auto initial = detail::try_sse(model, start, xs, ys);
    if (!initial) return std::nullopt;

    LmRun<Scalar> run;
    run.params = start;
    run.sse = *initial;
    run.accepted_sse.push_back(run.sse);

    Scalar damping = Scalar(options.initial_damping);
    const Eigen::Index np = start.size();

    while (run.iterations < options.max_iterations) {
        ++run.iterations;
        if (run.sse == Scalar(0)) {
            run.converged = true;
            break;
        }
        const auto jac = numeric_jacobian(model, run.params, xs);
        const auto resid = detail::try_residuals(model, run.params, xs, ys);
        if (!jac || !resid) break;

        const Matrix<Scalar> jtj = jac->transpose() * *jac;
        const Vector<Scalar> grad = jac->transpose() * *resid;
        const Scalar diag_floor = std::max(jtj.diagonal().maxCoeff(), Scalar(1)) *
                                  std::numeric_limits<Scalar>::epsilon();

        bool accepted = false;
        Scalar improvement{};
        while (damping <= Scalar(options.max_damping)) {
            Matrix<Scalar> lhs = jtj;
            for (Eigen::Index j = 0; j < np; ++j) {
                lhs(j, j) += damping * std::max(jtj(j, j), diag_floor);
            }
            const Eigen::LDLT<Matrix<Scalar>> solver(lhs);
            const Vector<Scalar> step = solver.solve(grad);
            if (solver.info() == Eigen::Success && step.allFinite()) {
                const Vector<Scalar> trial = run.params + step;
                const auto trial_sse = detail::try_sse(model, trial, xs, ys);
                if (trial_sse && *trial_sse < run.sse) {
                    improvement = (run.sse - *trial_sse) / run.sse;
                    run.params = trial;
                    run.sse = *trial_sse;
                    run.accepted_sse.push_back(run.sse);
                    damping = std::max(damping / Scalar(10), Scalar(1e-15));
                    accepted = true;
                    break;
                }
            }
            damping *= Scalar(10);
        }
        // No descent at any damping: a minimum to working precision.
        if (!accepted || improvement < Scalar(options.rel_tolerance)) {
            run.converged = true;
            break;
        }
    }
    return run;
}

/// Coarse multi-start grid.
///   harris:   a in {-10,-1,0,1}, b in {0.1,1,10}, c in {0.1,0.5,1}
///   rational: every coefficient in {-1,0,1}, scaled by 1 and by mean(y)/mean(x)
template <typename Scalar>
std::vector<Vector<Scalar>> seed_grid(const ModelSpec& model, const Vector<Scalar>& xs,
                                      const Vector<Scalar>& ys) {
    std::vector<Vector<Scalar>> seeds;
    if (model.id == ModelId::Harris) {
        for (Scalar a : {-10.0, -1.0, 0.0, 1.0})
            for (Scalar b : {0.1, 1.0, 10.0})
                for (Scalar c : {0.1, 0.5, 1.0}) seeds.push_back((Vector<Scalar>(3) << a, b, c).finished());
        return seeds;
    }
    const Scalar mx = xs.mean();
    const Scalar ratio = mx != Scalar(0) ? ys.mean() / mx : Scalar(1);
    constexpr std::array<double, 3> unit{-1.0, 0.0, 1.0};
    for (Scalar scale : {Scalar(1), ratio})
        for (double a : unit)
            for (double b : unit)
                for (double c : unit)
                    for (double d : unit)
                        seeds.push_back((Vector<Scalar>(4) << a, b, c, d).finished() * scale);
    return seeds;
}

template <typename Scalar>
struct FitResult {
    ModelId model_id{};
    Vector<Scalar> params;
    Scalar sse{};
    bool converged = false;
    int iterations = 0;
    int start_index = -1;  // index into seed_grid of the winning start
};

/// Multi-start least-squares fit; the lowest-SSE run wins, ties going to the
/// earlier seed.
template <typename Scalar>
FitResult<Scalar> fit(const ModelSpec& model, const Vector<Scalar>& xs, const Vector<Scalar>& ys,
                      const SolverOptions& options = {}) {
    detail::check_series(xs, ys, model.param_count + 1);
    std::vector<Scalar> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::InvalidArgument, "x values must be distinct");
    }

    const auto seeds = seed_grid(model, xs, ys);
    std::optional<FitResult<Scalar>> best;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        const auto run = levenberg_marquardt(model, xs, ys, seeds[i], options);
        if (!run || !run->params.allFinite() || !std::isfinite(run->sse)) continue;
        if (best && !(run->sse < best->sse)) continue;
        best = FitResult<Scalar>{model.id, run->params, run->sse, run->converged,
                                 run->iterations, static_cast<int>(i)};
    }
    if (!best) {
        throw Error(ErrorCode::AllStartsFailed,
                    "every start of " + std::string(model.name) + " was undefined on the data");
    }
    return *best;
}

// Convenience overloads for plain double series.
inline Eigen::VectorXd to_vector(std::span<const double> s) {
    return Eigen::Map<const Eigen::VectorXd>(s.data(), static_cast<Eigen::Index>(s.size()));
}

inline FitResult<double> fit(const ModelSpec& model, std::span<const double> xs,
                             std::span<const double> ys, const SolverOptions& options = {}) {
    return fit(model, to_vector(xs), to_vector(ys), options);
}

inline double sse(const ModelSpec& model, std::span<const double> params,
                  std::span<const double> xs, std::span<const double> ys) {
    return sse(model, to_vector(params), to_vector(xs), to_vector(ys));
}

}  // namespace citeswing::fitting
