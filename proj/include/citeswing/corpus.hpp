#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citeswing/types.hpp"

namespace citeswing::corpus {

/// One document and the citations it has received.
struct PublicationRecord {
    std::string doc_id;
    std::string journal;
    Year pub_year = 0;
    Count citations = 0;

    friend bool operator==(const PublicationRecord&, const PublicationRecord&) = default;
};

/// All documents published in one year, reduced to their citation counts.
struct YearCohort {
    Year pub_year = 0;
    std::vector<Count> citation_counts;

    friend bool operator==(const YearCohort&, const YearCohort&) = default;
};

/// Pooled yearly figures: published (n), cited (k), total citations (T) and h.
struct AggregateRow {
    Year pub_year = 0;
    Count n_published = 0;
    Count n_cited = 0;
    Count total_citations = 0;
    Count h_index = 0;

    friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

struct YearWindow {
    Year min_year = 1900;
    Year max_year = 2100;

    [[nodiscard]] bool contains(Year y) const noexcept { return y >= min_year && y <= max_year; }
};

inline constexpr std::string_view kRecordsHeader = "doc_id,journal,pub_year,citations";
inline constexpr std::string_view kAggregatesHeader =
    "year,n_published,n_cited,total_citations,h_index";

/// Splits CSV text into rows of trimmed fields. Quoted fields may contain
/// commas, doubled quotes and line breaks. Blank lines are dropped; each row
/// keeps its 1-based line number.
struct CsvRow {
    long line = 0;
    std::vector<std::string> fields;
};
std::vector<CsvRow> split_csv(std::string_view text);

/// Parses `records.csv`. Duplicate doc_id within the same year is rejected.
std::vector<PublicationRecord> parse_records_csv(std::string_view text, YearWindow window = {});
std::string write_records_csv(std::span<const PublicationRecord> records);

/// One cohort per distinct year, ascending. Years without documents are absent.
std::vector<YearCohort> build_cohorts(std::span<const PublicationRecord> records);

AggregateRow cohort_aggregate(const YearCohort& cohort);

/// build_cohorts followed by cohort_aggregate on each cohort.
std::vector<AggregateRow> aggregate_records(std::span<const PublicationRecord> records);

/// Checks n_cited <= n_published, h <= n_cited and h^2 <= T.
/// Throws InvariantViolation naming the failed condition.
void validate(const AggregateRow& row, long line = 0);

/// Parses `aggregates.csv`, validating every row. Rows keep file order;
/// a repeated year is an InvariantViolation.
std::vector<AggregateRow> parse_aggregates_csv(std::string_view text, YearWindow window = {});
std::string write_aggregates_csv(std::span<const AggregateRow> rows);

}  // namespace citeswing::corpus
