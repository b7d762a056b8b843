#include "citeswing/ratios.hpp"

#include <algorithm>

#include "citeswing/error.hpp"

namespace citeswing::ratios {

RatioRow ratio_row(Count n, Count k, Year pub_year, Year ref_year) {
    if (ref_year <= pub_year) {
        throw Error(ErrorCode::NonPositiveAge,
                    "reference year " + std::to_string(ref_year) +
                        " must be after the publication year",
                    std::nullopt, pub_year);
    }
    if (k < 0 || n < 0 || k > n) {
        throw Error(ErrorCode::InvariantViolation, "need 0 <= k <= n", std::nullopt, pub_year);
    }
    if (k == 0) throw Error(ErrorCode::NoCited, "no cited articles (k = 0)", std::nullopt, pub_year);
    if (k == n) {
        throw Error(ErrorCode::NoUncited, "no uncited articles (k = n)", std::nullopt, pub_year);
    }

    RatioRow row;
    row.pub_year = pub_year;
    row.ref_year = ref_year;
    row.age = ref_year - pub_year;
    row.n = n;
    row.k = k;
    row.uncited = n - k;

    const double age = row.age;
    const auto dn = static_cast<double>(n);
    const auto dk = static_cast<double>(k);
    const auto du = static_cast<double>(row.uncited);
    row.tc = dn / (dk * age);
    row.cu = dk / (du * age);
    row.tu = dn / (du * age);
    return row;
}

std::vector<RatioRow> ratio_table(std::span<const corpus::AggregateRow> rows, Year ref_year) {
    std::vector<RatioRow> table;
    table.reserve(rows.size());
    for (const auto& r : rows) table.push_back(ratio_row(r.n_published, r.n_cited, r.pub_year, ref_year));
    std::ranges::sort(table, {}, &RatioRow::pub_year);
    return table;
}

}  // namespace citeswing::ratios
