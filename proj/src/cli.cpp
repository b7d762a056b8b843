#include "citeswing/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "citeswing/corpus.hpp"
#include "citeswing/error.hpp"
#include "citeswing/fitting.hpp"
#include "citeswing/report.hpp"
#include "citeswing/stats.hpp"

namespace citeswing::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
    f << content;
    if (!f) throw Error(ErrorCode::Io, "failed writing '" + path + "'");
}

std::vector<corpus::AggregateRow> load(const RunConfig& cfg) {
    const std::string text = read_file(cfg.input_path);
    std::vector<corpus::AggregateRow> rows;
    if (cfg.input_kind == InputKind::Records) {
        const auto records = corpus::parse_records_csv(text);
        rows = corpus::aggregate_records(records);
    } else {
        rows = corpus::parse_aggregates_csv(text);
    }
    for (const auto& r : rows) {
        if (r.pub_year >= cfg.ref_year) {
            throw Error(ErrorCode::NonPositiveAge,
                        "--ref-year " + std::to_string(cfg.ref_year) +
                            " must be later than every publication year",
                        std::nullopt, r.pub_year);
        }
    }
    return rows;
}

std::string dump(const report::Json& j) { return j.dump(2) + "\n"; }

std::string run_summary(const RunConfig& cfg) {
    const auto rows = load(cfg);
    if (cfg.output_format == OutputFormat::Json) {
        return dump(report::to_json_array<corpus::AggregateRow>(rows));
    }
    return corpus::write_aggregates_csv(rows);
}

std::string run_csf(const RunConfig& cfg) {
    const auto rows = load(cfg);
    const auto table = diffusion::csf_table(rows);
    if (cfg.output_format == OutputFormat::Json) {
        return dump(report::to_json_array<diffusion::CsfInterval>(table));
    }
    return report::csf_csv(table);
}

std::string run_ratios(const RunConfig& cfg) {
    const auto table = ratios::ratio_table(load(cfg), cfg.ref_year);
    if (cfg.output_format == OutputFormat::Json) {
        return dump(report::to_json_array<ratios::RatioRow>(table));
    }
    return report::ratios_csv(table);
}

std::string run_stats(const RunConfig& cfg) {
    const auto analysis = report::analyze(load(cfg), cfg.ref_year);
    const auto id = report::parse_series(cfg.series);
    const auto sign = cfg.signed_values ? diffusion::Sign::Signed : diffusion::Sign::Magnitude;
    const auto described = stats::describe(report::series_values(analysis, id, sign));
    if (cfg.output_format == OutputFormat::Json) {
        report::Json j = report::to_json(described);
        j["series"] = cfg.series;
        return dump(j);
    }
    return report::stats_csv(cfg.series, described);
}

std::string run_fit(const RunConfig& cfg) {
    const auto analysis = report::analyze(load(cfg), cfg.ref_year);
    const auto& model = fitting::parse_model(cfg.model);
    const auto y = report::series_values(analysis, report::parse_series(cfg.series));
    const auto x = report::ages(analysis);
    const auto result = fitting::fit(model, x, y);
    if (cfg.output_format == OutputFormat::Json) {
        report::Json j = report::to_json(result);
        j["series"] = cfg.series;
        return dump(j);
    }
    return report::fit_csv(model, result.params, x, y);
}

std::string run_report(const RunConfig& cfg) {
    const auto analysis = report::analyze(load(cfg), cfg.ref_year);
    const auto doc = report::build_report(analysis);
    std::optional<std::string> chart = cfg.chart_path;
    if (!chart && cfg.output_path) chart = cfg.output_path;
    if (chart) {
        const auto paths = chart_paths(*chart);
        write_file(paths.csf, report::csf_chart(analysis));
        write_file(paths.ratios, report::ratio_chart(analysis));
    }
    return dump(doc);
}

}  // namespace

ChartPaths chart_paths(const std::string& chart_path) {
    std::string stem = chart_path;
    for (const char* ext : {".svg", ".json"}) {
        const std::string e = ext;
        if (stem.size() > e.size() && stem.ends_with(e)) {
            stem.erase(stem.size() - e.size());
            break;
        }
    }
    return {stem + "_csf.svg", stem + "_ratios.svg"};
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Citation indicator engine: h-zones, citation swing factor, time-normalized ratios"};
    app.name("citeswing");
    app.require_subcommand(1);

    RunConfig cfg;
    std::string kind = "aggregates";
    std::string format = "csv";
    std::string out_path;
    std::string chart_path;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input_path, "Input CSV file")->required();
        sub->add_option("--kind", kind, "Input layout")
            ->check(CLI::IsMember({"records", "aggregates"}))
            ->capture_default_str();
        sub->add_option("--ref-year", cfg.ref_year, "Observation year for publication age")
            ->capture_default_str();
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("--out", out_path, "Output file (default: standard output)");
    };

    auto* summary = app.add_subcommand("summary", "Per-year aggregates (n, k, T, h)");
    auto* csf = app.add_subcommand("csf", "Observed and expected citation swing per interval");
    auto* ratio = app.add_subcommand("ratios", "TC, CU and TU per publication year");
    auto* stat = app.add_subcommand("stats", "Descriptive statistics of one series");
    auto* fit = app.add_subcommand("fit", "Nonlinear least-squares fit of a series against age");
    auto* rep = app.add_subcommand("report", "Everything as one JSON document plus two SVG charts");
    for (auto* sub : {summary, csf, ratio, stat, fit, rep}) common(sub);

    stat->add_option("--series", cfg.series, "Series to describe")
        ->required()
        ->check(CLI::IsMember({"tc", "cu", "tu", "csf_o", "csf_e"}));
    stat->add_flag("--signed", cfg.signed_values, "Keep the sign of CSF values");
    fit->add_option("--series", cfg.series, "Series to fit against publication age")
        ->required()
        ->check(CLI::IsMember({"tc", "cu", "tu"}));
    fit->add_option("--model", cfg.model, "Model")->required()->check(CLI::IsMember({"harris", "rational"}));
    rep->add_option("--chart", chart_path, "Chart path stem; writes <stem>_csf.svg and <stem>_ratios.svg");

    std::vector<std::string> argv_storage{"citeswing"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    cfg.input_kind = kind == "records" ? InputKind::Records : InputKind::Aggregates;
    cfg.output_format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    if (!out_path.empty()) cfg.output_path = out_path;
    if (!chart_path.empty()) cfg.chart_path = chart_path;

    try {
        std::string data;
        if (summary->parsed()) data = run_summary(cfg);
        else if (csf->parsed()) data = run_csf(cfg);
        else if (ratio->parsed()) data = run_ratios(cfg);
        else if (stat->parsed()) data = run_stats(cfg);
        else if (fit->parsed()) data = run_fit(cfg);
        else data = run_report(cfg);

        if (cfg.output_path) {
            write_file(*cfg.output_path, data);
        } else {
            out << data;
        }
    } catch (const Error& e) {
        err << "citeswing: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace citeswing::cli
