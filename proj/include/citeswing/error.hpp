#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace citeswing {

enum class ErrorCode {
    // ingestion
    MissingHeader,
    BadFieldCount,
    NonNumericField,
    NegativeCitations,
    DuplicateDocId,
    YearOutOfRange,
    InvariantViolation,
    // h-zones and citation swing
    ZeroTotal,
    ZeroExcess,
    ZeroCore,
    ZeroDeltaEpsilon,
    GapInYears,
    // ratios
    NoCited,
    NoUncited,
    NonPositiveAge,
    // statistics and fitting
    TooFewPoints,
    ZeroVariance,
    ZeroMean,
    LengthMismatch,
    InvalidArgument,
    SingularDenominator,
    AllStartsFailed,
    // output
    EmptyChart,
    Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// The single exception type thrown by the library. `row` is a 1-based CSV
/// line number (the header is row 1); `year` names the publication year the
/// failure belongs to.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<long> row = std::nullopt,
          std::optional<int> year = std::nullopt);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] std::optional<long> row() const noexcept { return row_; }
    [[nodiscard]] std::optional<int> year() const noexcept { return year_; }

    /// Copy of this error with a year attached (keeps an existing year).
    [[nodiscard]] Error with_year(int year) const;

private:
    ErrorCode code_;
    std::optional<long> row_;
    std::optional<int> year_;
    std::string bare_message_;
};

}  // namespace citeswing
