#include "citeswing/error.hpp"

namespace citeswing {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MissingHeader: return "MissingHeader";
        case ErrorCode::BadFieldCount: return "BadFieldCount";
        case ErrorCode::NonNumericField: return "NonNumericField";
        case ErrorCode::NegativeCitations: return "NegativeCitations";
        case ErrorCode::DuplicateDocId: return "DuplicateDocId";
        case ErrorCode::YearOutOfRange: return "YearOutOfRange";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::ZeroTotal: return "ZeroTotal";
        case ErrorCode::ZeroExcess: return "ZeroExcess";
        case ErrorCode::ZeroCore: return "ZeroCore";
        case ErrorCode::ZeroDeltaEpsilon: return "ZeroDeltaEpsilon";
        case ErrorCode::GapInYears: return "GapInYears";
        case ErrorCode::NoCited: return "NoCited";
        case ErrorCode::NoUncited: return "NoUncited";
        case ErrorCode::NonPositiveAge: return "NonPositiveAge";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::ZeroVariance: return "ZeroVariance";
        case ErrorCode::ZeroMean: return "ZeroMean";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::SingularDenominator: return "SingularDenominator";
        case ErrorCode::AllStartsFailed: return "AllStartsFailed";
        case ErrorCode::EmptyChart: return "EmptyChart";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<long> row, std::optional<int> year) {
    std::string out(to_string(code));
    if (row) out += " (row " + std::to_string(*row) + ")";
    if (year) out += " (year " + std::to_string(*year) + ")";
    out += ": ";
    out += message;
    return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<long> row,
             std::optional<int> year)
    : std::runtime_error(decorate(code, message, row, year)),
      code_(code),
      row_(row),
      year_(year),
      bare_message_(message) {}

Error Error::with_year(int year) const {
    if (year_) return *this;
    return Error(code_, bare_message_, row_, year);
}

}  // namespace citeswing
