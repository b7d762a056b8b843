#include "citeswing/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <utility>

#include "citeswing/error.hpp"
#include "citeswing/indices.hpp"

namespace citeswing::corpus {

namespace {

std::string trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(ws);
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_header(std::string_view header) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = header.find(',', pos);
        out.push_back(trim(header.substr(pos, comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

// Consumes the header row, throwing MissingHeader when it does not match.
std::vector<CsvRow> rows_after_header(std::string_view text, std::string_view header) {
    auto rows = split_csv(text);
    if (rows.empty() || rows.front().fields != split_header(header)) {
        throw Error(ErrorCode::MissingHeader, "expected header '" + std::string(header) + "'");
    }
    rows.erase(rows.begin());
    return rows;
}

std::int64_t parse_integer(const CsvRow& row, std::size_t column, std::string_view name) {
    const std::string& field = row.fields[column];
    std::int64_t value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    if (!field.empty() && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (field.empty() || ec != std::errc{} || ptr != end) {
        throw Error(ErrorCode::NonNumericField,
                    "column '" + std::string(name) + "' is not an integer: '" + field + "'",
                    row.line);
    }
    return value;
}

void require_field_count(const CsvRow& row, std::size_t expected) {
    if (row.fields.size() != expected) {
        throw Error(ErrorCode::BadFieldCount,
                    "expected " + std::to_string(expected) + " fields, found " +
                        std::to_string(row.fields.size()),
                    row.line);
    }
}

Year parse_year(const CsvRow& row, std::size_t column, std::string_view name, YearWindow window) {
    const auto value = parse_integer(row, column, name);
    if (value < window.min_year || value > window.max_year) {
        throw Error(ErrorCode::YearOutOfRange,
                    "year " + std::to_string(value) + " outside " +
                        std::to_string(window.min_year) + "-" + std::to_string(window.max_year),
                    row.line);
    }
    return static_cast<Year>(value);
}

std::string quote_if_needed(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::vector<CsvRow> split_csv(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    std::vector<CsvRow> rows;
    CsvRow current;
    std::string field;
    bool quoted = false;       // inside a quoted section
    bool was_quoted = false;   // current field had a quoted section (kept verbatim)
    bool row_has_content = false;
    long line = 1;
    current.line = 1;

    auto finish_field = [&] {
        current.fields.push_back(was_quoted ? field : trim(field));
        field.clear();
        was_quoted = false;
    };
    auto finish_row = [&] {
        finish_field();
        if (row_has_content) rows.push_back(std::move(current));
        current = CsvRow{};
        row_has_content = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                // a quote opens a quoted section only at the start of a field
                if (trim(field).empty()) {
                    field.clear();
                    quoted = true;
                    was_quoted = true;
                    row_has_content = true;
                } else {
                    field += c;
                }
                break;
            case ',':
                row_has_content = true;
                finish_field();
                break;
            case '\r':
                break;
            case '\n':
                finish_row();
                ++line;
                current.line = line;
                break;
            default:
                if (c != ' ' && c != '\t') row_has_content = true;
                field += c;
        }
    }
    finish_row();
    return rows;
}

std::vector<PublicationRecord> parse_records_csv(std::string_view text, YearWindow window) {
    const auto rows = rows_after_header(text, kRecordsHeader);
    std::vector<PublicationRecord> records;
    records.reserve(rows.size());
    std::set<std::pair<Year, std::string>> seen;

    for (const auto& row : rows) {
        require_field_count(row, 4);
        PublicationRecord rec;
        rec.doc_id = row.fields[0];
        rec.journal = row.fields[1];
        if (rec.doc_id.empty()) {
            throw Error(ErrorCode::InvariantViolation, "doc_id is empty", row.line);
        }
        rec.pub_year = parse_year(row, 2, "pub_year", window);
        rec.citations = parse_integer(row, 3, "citations");
        if (rec.citations < 0) {
            throw Error(ErrorCode::NegativeCitations,
                        "citations must be >= 0, got " + std::to_string(rec.citations), row.line);
        }
        if (!seen.emplace(rec.pub_year, rec.doc_id).second) {
            throw Error(ErrorCode::DuplicateDocId,
                        "doc_id '" + rec.doc_id + "' repeated within year " +
                            std::to_string(rec.pub_year),
                        row.line);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::string write_records_csv(std::span<const PublicationRecord> records) {
    std::string out(kRecordsHeader);
    out += '\n';
    for (const auto& r : records) {
        out += quote_if_needed(r.doc_id) + ',' + quote_if_needed(r.journal) + ',' +
               std::to_string(r.pub_year) + ',' + std::to_string(r.citations) + '\n';
    }
    return out;
}

std::vector<YearCohort> build_cohorts(std::span<const PublicationRecord> records) {
    std::map<Year, std::vector<Count>> by_year;
    for (const auto& r : records) by_year[r.pub_year].push_back(r.citations);

    std::vector<YearCohort> cohorts;
    cohorts.reserve(by_year.size());
    for (auto& [year, counts] : by_year) cohorts.push_back({year, std::move(counts)});
    return cohorts;
}

AggregateRow cohort_aggregate(const YearCohort& cohort) {
    const auto& c = cohort.citation_counts;
    AggregateRow row;
    row.pub_year = cohort.pub_year;
    row.n_published = static_cast<Count>(c.size());
    row.n_cited = static_cast<Count>(std::ranges::count_if(c, [](Count v) { return v > 0; }));
    for (Count v : c) row.total_citations += v;
    row.h_index = indices::h_index(c);
    return row;
}

std::vector<AggregateRow> aggregate_records(std::span<const PublicationRecord> records) {
    std::vector<AggregateRow> rows;
    for (const auto& cohort : build_cohorts(records)) rows.push_back(cohort_aggregate(cohort));
    return rows;
}

void validate(const AggregateRow& row, long line) {
    const std::optional<long> where = line > 0 ? std::optional<long>(line) : std::nullopt;
    auto fail = [&](const std::string& which) {
        throw Error(ErrorCode::InvariantViolation, which, where, row.pub_year);
    };
    if (row.n_published < 0 || row.n_cited < 0 || row.total_citations < 0 || row.h_index < 0) {
        fail("counts must be non-negative");
    }
    if (row.n_cited > row.n_published) fail("n_cited > n_published (k > n)");
    if (row.h_index > row.n_cited) fail("h_index > n_cited");
    if (row.h_index * row.h_index > row.total_citations) fail("h_index^2 > total_citations");
}

std::vector<AggregateRow> parse_aggregates_csv(std::string_view text, YearWindow window) {
    const auto rows = rows_after_header(text, kAggregatesHeader);
    std::vector<AggregateRow> out;
    out.reserve(rows.size());
    std::set<Year> years;

    for (const auto& row : rows) {
        require_field_count(row, 5);
        AggregateRow agg;
        agg.pub_year = parse_year(row, 0, "year", window);
        agg.n_published = parse_integer(row, 1, "n_published");
        agg.n_cited = parse_integer(row, 2, "n_cited");
        agg.total_citations = parse_integer(row, 3, "total_citations");
        agg.h_index = parse_integer(row, 4, "h_index");
        validate(agg, row.line);
        if (!years.insert(agg.pub_year).second) {
            throw Error(ErrorCode::InvariantViolation, "year appears more than once", row.line,
                        agg.pub_year);
        }
        out.push_back(agg);
    }
    return out;
}

std::string write_aggregates_csv(std::span<const AggregateRow> rows) {
    std::string out(kAggregatesHeader);
    out += '\n';
    for (const auto& r : rows) {
        out += std::to_string(r.pub_year) + ',' + std::to_string(r.n_published) + ',' +
               std::to_string(r.n_cited) + ',' + std::to_string(r.total_citations) + ',' +
               std::to_string(r.h_index) + '\n';
    }
    return out;
}

}  // namespace citeswing::corpus
