#include "citeswing/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "citeswing/error.hpp"

namespace citeswing::report {

double round_half_away(double value, int decimals) {
    const double scale = std::pow(10.0, decimals);
    const double r = std::round(value * scale) / scale;
    return r == 0.0 ? 0.0 : r;
}

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, round_half_away(value, decimals));
    return buf;
}

double significant6(double value) {
    if (value == 0.0) return 0.0;
    if (!std::isfinite(value)) return value;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return std::strtod(buf, nullptr);
}

std::string csf_csv(std::span<const diffusion::CsfInterval> table) {
    std::string out = "year_from,year_to,d_eps,d_theta,csf_observed,csf_expected,pct_error\n";
    for (const auto& iv : table) {
        out += std::to_string(iv.year_from) + ',' + std::to_string(iv.year_to) + ',' + fixed(iv.d_eps, 4) +
               ',' + fixed(iv.d_theta, 4) + ',' + fixed(iv.csf_observed, 3) + ',' +
               fixed(iv.csf_expected, 3) + ',' + fixed(iv.pct_error, 2) + '\n';
    }
    return out;
}

std::string ratios_csv(std::span<const ratios::RatioRow> rows) {
    std::string out = "pub_year,age,n,k,uncited,tc,cu,tu\n";
    for (const auto& r : rows) {
        out += std::to_string(r.pub_year) + ',' + std::to_string(r.age) + ',' + std::to_string(r.n) + ',' +
               std::to_string(r.k) + ',' + std::to_string(r.uncited) + ',' + fixed(r.tc, 3) + ',' +
               fixed(r.cu, 3) + ',' + fixed(r.tu, 3) + '\n';
    }
    return out;
}

std::string stats_csv(std::string_view series, const stats::DescriptiveStats<double>& d) {
    std::string out = "series,count,mean,median,range,std_dev,cv,excess_kurtosis\n";
    out += std::string(series) + ',' + std::to_string(d.count) + ',' + fixed(d.mean, 3) + ',' +
           fixed(d.median, 3) + ',' + fixed(d.range, 3) + ',' + fixed(d.std_dev, 3) + ',' + fixed(d.cv, 3) +
           ',' + fixed(d.excess_kurtosis, 3) + '\n';
    return out;
}

std::string fit_csv(const fitting::ModelSpec& model, const Eigen::VectorXd& params,
                    std::span<const double> ages, std::span<const double> observed) {
    if (ages.size() != observed.size()) throw Error(ErrorCode::LengthMismatch, "ages and values differ in length");
    std::string out = "age,observed,predicted,residual\n";
    for (std::size_t i = 0; i < ages.size(); ++i) {
        const double predicted = fitting::evaluate(model, params, ages[i]);
        out += fixed(ages[i], 0) + ',' + fixed(observed[i], 4) + ',' + fixed(predicted, 4) + ',' +
               fixed(observed[i] - predicted, 4) + '\n';
    }
    return out;
}

Json to_json(const corpus::AggregateRow& row) {
    return Json{{"year", row.pub_year},
                {"n_published", row.n_published},
                {"n_cited", row.n_cited},
                {"total_citations", row.total_citations},
                {"h_index", row.h_index}};
}

Json to_json(const diffusion::CsfInterval& iv) {
    return Json{{"year_from", iv.year_from},
                {"year_to", iv.year_to},
                {"d_eps", significant6(iv.d_eps)},
                {"d_theta", significant6(iv.d_theta)},
                {"csf_observed", significant6(iv.csf_observed)},
                {"csf_expected", significant6(iv.csf_expected)},
                {"pct_error", significant6(iv.pct_error)}};
}

Json to_json(const ratios::RatioRow& row) {
    return Json{{"pub_year", row.pub_year},   {"age", row.age},
                {"n", row.n},                 {"k", row.k},
                {"uncited", row.uncited},     {"tc", significant6(row.tc)},
                {"cu", significant6(row.cu)}, {"tu", significant6(row.tu)}};
}

Json to_json(const stats::DescriptiveStats<double>& d) {
    return Json{{"count", d.count},
                {"mean", significant6(d.mean)},
                {"median", significant6(d.median)},
                {"range", significant6(d.range)},
                {"std_dev", significant6(d.std_dev)},
                {"cv", significant6(d.cv)},
                {"excess_kurtosis", significant6(d.excess_kurtosis)}};
}

Json to_json(const stats::RegressionResult<double>& r) {
    return Json{{"slope", significant6(r.slope)},
                {"intercept", significant6(r.intercept)},
                {"r", significant6(r.r)},
                {"r_squared", significant6(r.r_squared)},
                {"std_error", significant6(r.std_error)}};
}

namespace {

Json params_json(const Eigen::VectorXd& p) {
    Json arr = Json::array();
    for (double v : p) arr.push_back(significant6(v));
    return arr;
}

}  // namespace

Json to_json(const fitting::FitResult<double>& f) {
    return Json{{"model_id", fitting::model_spec(f.model_id).name},
                {"params", params_json(f.params)},
                {"sse", significant6(f.sse)},
                {"converged", f.converged},
                {"iterations", f.iterations},
                {"start_index", f.start_index}};
}

SeriesId parse_series(std::string_view name) {
    if (name == "csf_o") return SeriesId::CsfObserved;
    if (name == "csf_e") return SeriesId::CsfExpected;
    if (name == "tc") return SeriesId::Tc;
    if (name == "cu") return SeriesId::Cu;
    if (name == "tu") return SeriesId::Tu;
    throw Error(ErrorCode::InvalidArgument, "unknown series '" + std::string(name) + "'");
}

std::string_view series_name(SeriesId id) noexcept {
    switch (id) {
        case SeriesId::CsfObserved: return "csf_o";
        case SeriesId::CsfExpected: return "csf_e";
        case SeriesId::Tc: return "tc";
        case SeriesId::Cu: return "cu";
        case SeriesId::Tu: return "tu";
    }
    return "";
}

Analysis analyze(std::span<const corpus::AggregateRow> rows, Year ref_year) {
    Analysis a;
    a.aggregates.assign(rows.begin(), rows.end());
    std::ranges::sort(a.aggregates, {}, &corpus::AggregateRow::pub_year);
    a.csf = diffusion::csf_table(a.aggregates);
    a.ratios = ratios::ratio_table(a.aggregates, ref_year);
    return a;
}

std::vector<double> series_values(const Analysis& a, SeriesId id, diffusion::Sign sign) {
    std::vector<double> out;
    switch (id) {
        case SeriesId::CsfObserved: return diffusion::observed_series(a.csf, sign);
        case SeriesId::CsfExpected: return diffusion::expected_series(a.csf, sign);
        case SeriesId::Tc:
            for (const auto& r : a.ratios) out.push_back(r.tc);
            break;
        case SeriesId::Cu:
            for (const auto& r : a.ratios) out.push_back(r.cu);
            break;
        case SeriesId::Tu:
            for (const auto& r : a.ratios) out.push_back(r.tu);
            break;
    }
    return out;
}

std::vector<double> ages(const Analysis& a) {
    std::vector<double> out;
    out.reserve(a.ratios.size());
    for (const auto& r : a.ratios) out.push_back(r.age);
    return out;
}

namespace {

Json fit_entry(const fitting::ModelSpec& model, const Eigen::VectorXd& reference,
               std::span<const double> x, std::span<const double> y) {
    Json entry = to_json(fitting::fit(model, x, y));
    entry["reference_params"] = params_json(reference);
    const auto xs = fitting::to_vector(x);
    const auto ys = fitting::to_vector(y);
    if (const auto ref_sse = fitting::detail::try_sse(model, reference, xs, ys)) {
        entry["reference_sse"] = significant6(*ref_sse);
    } else {
        entry["reference_sse"] = nullptr;
    }
    return entry;
}

}  // namespace

Json build_report(const Analysis& a) {
    Json doc;
    doc["aggregates"] = to_json_array<corpus::AggregateRow>(a.aggregates);
    doc["csf_intervals"] = to_json_array<diffusion::CsfInterval>(a.csf);
    doc["ratios"] = to_json_array<ratios::RatioRow>(a.ratios);

    Json stats_obj = Json::object();
    for (auto id : {SeriesId::CsfObserved, SeriesId::CsfExpected, SeriesId::Tc, SeriesId::Cu, SeriesId::Tu}) {
        stats_obj[std::string(series_name(id))] = to_json(stats::describe(series_values(a, id)));
    }
    doc["stats"] = stats_obj;

    // sample SD over observed and expected swing magnitudes together
    auto pooled = series_values(a, SeriesId::CsfObserved);
    const auto expected = series_values(a, SeriesId::CsfExpected);
    pooled.insert(pooled.end(), expected.begin(), expected.end());
    doc["csf_pooled_std_dev"] = significant6(stats::std_dev(std::span<const double>(pooled)));

    const auto tc = series_values(a, SeriesId::Tc);
    const auto cu = series_values(a, SeriesId::Cu);
    const auto tu = series_values(a, SeriesId::Tu);
    doc["correlations"] = Json{{"tc_cu", significant6(stats::pearson(tc, cu))},
                               {"cu_tu", significant6(stats::pearson(cu, tu))},
                               {"tc_tu", significant6(stats::pearson(tc, tu))}};
    doc["regressions"] = Json{{"cu_on_tu", to_json(stats::linreg(tu, cu))},
                              {"tc_on_tu", to_json(stats::linreg(tu, tc))}};

    const auto age = ages(a);
    doc["fits"] = Json{{"harris_tc", fit_entry(fitting::kHarris, kReferenceHarrisTc, age, tc)},
                       {"rational_tu", fit_entry(fitting::kRational, kReferenceRationalTu, age, tu)}};
    return doc;
}

std::string csf_chart(const Analysis& a) {
    chart::ChartSeries observed{"CSF(O)", {}, chart::LineStyle::Dashed};
    chart::ChartSeries expected{"CSF(E)", {}, chart::LineStyle::Line};
    for (const auto& iv : a.csf) {
        observed.points.push_back({static_cast<double>(iv.year_to), std::abs(iv.csf_observed)});
        expected.points.push_back({static_cast<double>(iv.year_to), std::abs(iv.csf_expected)});
    }
    const std::vector<chart::ChartSeries> series{observed, expected};
    return chart::render_chart(series, {"Temporal variation of CSF(O) and CSF(E)", "Year", "|CSF|"});
}

std::string ratio_chart(const Analysis& a) {
    std::vector<ratios::RatioRow> by_age = a.ratios;
    std::ranges::sort(by_age, {}, &ratios::RatioRow::age);
    chart::ChartSeries tc{"TC", {}, chart::LineStyle::Line};
    chart::ChartSeries cu{"CU", {}, chart::LineStyle::Line};
    chart::ChartSeries tu{"TU", {}, chart::LineStyle::Line};
    for (const auto& r : by_age) {
        const double x = r.age;
        tc.points.push_back({x, r.tc});
        cu.points.push_back({x, r.cu});
        tu.points.push_back({x, r.tu});
    }
    const std::vector<chart::ChartSeries> series{tc, cu, tu};
    return chart::render_chart(series, {"Variation of TC, CU and TU with publication age",
                                        "Publication age (years)", "Ratio (1/years)"});
}

}  // namespace citeswing::report
