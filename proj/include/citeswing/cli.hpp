#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "citeswing/types.hpp"

namespace citeswing::cli {

enum class InputKind { Records, Aggregates };
enum class OutputFormat { Csv, Json };

struct RunConfig {
    std::string input_path;
    InputKind input_kind = InputKind::Aggregates;
    Year ref_year = kDefaultRefYear;
    OutputFormat output_format = OutputFormat::Csv;
    std::optional<std::string> output_path;  // standard output when empty
    std::optional<std::string> chart_path;
    std::string series;
    std::string model;
    bool signed_values = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand (summary, csf, ratios, stats, fit, report). `args`
/// excludes the program name. Data goes to `out` (or --out), diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// `report` writes two charts: <stem>_csf.svg and <stem>_ratios.svg, where the
/// stem is --chart with any .svg extension removed.
struct ChartPaths {
    std::string csf;
    std::string ratios;
};
[[nodiscard]] ChartPaths chart_paths(const std::string& chart_path);

}  // namespace citeswing::cli
