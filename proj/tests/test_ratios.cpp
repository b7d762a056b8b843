#include <doctest.h>

#include <cmath>
#include <random>

#include "citeswing/corpus.hpp"
#include "citeswing/error.hpp"
#include "citeswing/ratios.hpp"
#include "support/fixture.hpp"
#include "support/published_tables.hpp"

using namespace citeswing;
using namespace citeswing::ratios;

namespace {

double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected citeswing::Error");
    return ErrorCode::Io;
}

}  // namespace

TEST_CASE("ratio_row examples") {
    const auto r05 = ratio_row(947, 754, 2005, 2021);
    CHECK(r05.age == 16);
    CHECK(r05.uncited == 193);
    CHECK(round3(r05.tc) == doctest::Approx(0.078));
    CHECK(round3(r05.cu) == doctest::Approx(0.244));
    CHECK(round3(r05.tu) == doctest::Approx(0.307));

    const auto r20 = ratio_row(1702, 556, 2020, 2021);
    CHECK(round3(r20.tc) == doctest::Approx(3.061));
    CHECK(round3(r20.cu) == doctest::Approx(0.485));
    CHECK(round3(r20.tu) == doctest::Approx(1.485));

    // n=2, k=1, age 1: TC = 2/1, CU = 1/1, TU = 2/1
    const auto small = ratio_row(2, 1, 2020, 2021);
    CHECK(small.tc == 2.0);
    CHECK(small.cu == 1.0);
    CHECK(small.tu == 2.0);

    CHECK(ratio_row(10, 3, 2015).ref_year == kDefaultRefYear);
}

TEST_CASE("ratio_row errors") {
    CHECK(code_of([] { (void)ratio_row(10, 10, 2010, 2011); }) == ErrorCode::NoUncited);
    CHECK(code_of([] { (void)ratio_row(10, 0, 2010, 2011); }) == ErrorCode::NoCited);
    CHECK(code_of([] { (void)ratio_row(10, 5, 2011, 2011); }) == ErrorCode::NonPositiveAge);
    CHECK(code_of([] { (void)ratio_row(10, 5, 2012, 2011); }) == ErrorCode::NonPositiveAge);
    CHECK(code_of([] { (void)ratio_row(10, 11, 2010, 2011); }) == ErrorCode::InvariantViolation);
}

TEST_CASE("ratio_table reproduces the published table") {
    const auto rows = corpus::parse_aggregates_csv(testdata::read_fixture("table1_table2.csv"));
    const auto table = ratio_table(rows, 2021);
    REQUIRE(table.size() == 16);
    for (std::size_t i = 0; i < table.size(); ++i) {
        CHECK(table[i].pub_year == 2005 + static_cast<int>(i));
        CHECK(std::abs(table[i].tc - testdata::kTc[i]) <= 0.001);
        CHECK(std::abs(table[i].cu - testdata::kCu[i]) <= 0.001);
        CHECK(std::abs(table[i].tu - testdata::kTu[i]) <= 0.001);
        // 2005 spot check: 0.244 + 1/16 = 0.3065
        CHECK(std::abs(table[i].tu - table[i].cu - 1.0 / table[i].age) <= 1e-12);
    }
    CHECK(ratio_table({}, 2021).empty());
}

TEST_CASE("ratio_table tags the failing year") {
    const std::vector<corpus::AggregateRow> rows{{2010, 10, 5, 10, 2}, {2011, 10, 10, 50, 5}};
    try {
        (void)ratio_table(rows, 2021);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoUncited);
        CHECK(e.year() == 2011);
    }
}

TEST_CASE("ratio identities on random rows") {
    std::mt19937_64 rng(2021);
    for (int trial = 0; trial < 2000; ++trial) {
        const Count n = std::uniform_int_distribution<Count>(2, 100000)(rng);
        const Count k = std::uniform_int_distribution<Count>(1, n - 1)(rng);
        const int age = std::uniform_int_distribution<int>(1, 60)(rng);
        const auto r = ratio_row(n, k, 2000, 2000 + age);
        CHECK(std::abs((r.tu - r.cu) - 1.0 / age) <= 1e-12 * std::max(1.0, r.tu));
        CHECK(std::abs((1.0 / r.tc + 1.0 / r.tu) - age) <= 1e-12 * age);
        CHECK(r.tc * age >= 1.0);
        CHECK(r.tu * age >= 1.0);

        // depends on n/k only
        const auto doubled = ratio_row(2 * n, 2 * k, 2000, 2000 + age);
        CHECK(doubled.tc == doctest::Approx(r.tc).epsilon(1e-15));
        CHECK(doubled.cu == doctest::Approx(r.cu).epsilon(1e-15));
        CHECK(doubled.tu == doctest::Approx(r.tu).epsilon(1e-15));

        if (k + 1 < n) {
            const auto more = ratio_row(n, k + 1, 2000, 2000 + age);
            CHECK(more.tc < r.tc);
            CHECK(more.cu > r.cu);
        }
    }
}
