#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "citeswing/cli.hpp"
#include "support/fixture.hpp"
#include "support/published_tables.hpp"
#include "support/schema_check.hpp"
#include "support/xml_check.hpp"

using namespace citeswing;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kFixture = testdata::fixture_path("table1_table2.csv");

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        rows.push_back(fields);
    }
    return rows;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("citeswing_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("csf csv matches the expected-swing column") {
    const auto r = invoke({"csf", "--input", kFixture, "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 16);
    CHECK(rows[0] == std::vector<std::string>{"year_from", "year_to", "d_eps", "d_theta", "csf_observed",
                                              "csf_expected", "pct_error"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::abs(std::stod(rows[i][5]) - testdata::kCsfExpected[i - 1]) <= 0.002);
    }
}

TEST_CASE("ratios json matches the published ratios") {
    const auto r = invoke({"ratios", "--input", kFixture, "--ref-year", "2021", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 16);
    for (std::size_t i = 0; i < 16; ++i) {
        const auto& o = doc[i];
        for (const char* key : {"pub_year", "age", "n", "k", "uncited", "tc", "cu", "tu"}) CHECK(o.contains(key));
        CHECK(std::abs(o["tc"].get<double>() - testdata::kTc[i]) <= 0.001);
        CHECK(std::abs(o["cu"].get<double>() - testdata::kCu[i]) <= 0.001);
        CHECK(std::abs(o["tu"].get<double>() - testdata::kTu[i]) <= 0.001);
    }
}

TEST_CASE("every subcommand succeeds on the fixture") {
    const std::vector<std::vector<std::string>> commands{
        {"summary", "--input", kFixture},
        {"summary", "--input", kFixture, "--format", "json"},
        {"csf", "--input", kFixture, "--format", "json"},
        {"ratios", "--input", kFixture},
        {"stats", "--input", kFixture, "--series", "tc"},
        {"stats", "--input", kFixture, "--series", "csf_o", "--format", "json"},
        {"stats", "--input", kFixture, "--series", "csf_e", "--signed"},
        {"fit", "--input", kFixture, "--series", "tc", "--model", "harris"},
        {"fit", "--input", kFixture, "--series", "tu", "--model", "rational", "--format", "json"},
        {"report", "--input", kFixture},
    };
    for (const auto& args : commands) {
        CAPTURE(args[0]);
        const auto r = invoke(args);
        CHECK(r.code == 0);
        CHECK_FALSE(r.out.empty());
        CHECK(r.err.empty());
    }
}

TEST_CASE("summary csv round-trips the fixture") {
    const auto r = invoke({"summary", "--input", kFixture});
    CHECK(r.out == testdata::read_fixture("table1_table2.csv"));
}

TEST_CASE("stats sign handling") {
    const auto mag = nlohmann::json::parse(
        invoke({"stats", "--input", kFixture, "--series", "csf_o", "--format", "json"}).out);
    const auto sgn = nlohmann::json::parse(
        invoke({"stats", "--input", kFixture, "--series", "csf_o", "--format", "json", "--signed"}).out);
    CHECK(mag["mean"].get<double>() > 0.0);
    CHECK(sgn["mean"].get<double>() == doctest::Approx(-mag["mean"].get<double>()));
    CHECK(mag["series"] == "csf_o");
}

TEST_CASE("fit csv lists age, observed, predicted, residual") {
    const auto r = invoke({"fit", "--input", kFixture, "--series", "tc", "--model", "harris"});
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 17);
    CHECK(rows[0] == std::vector<std::string>{"age", "observed", "predicted", "residual"});
}

TEST_CASE("validation errors exit 1 on the error stream") {
    auto r = invoke({"csf", "--input", "missing.csv"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("missing.csv") != std::string::npos);

    r = invoke({"ratios", "--input", kFixture, "--ref-year", "2020"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("2020") != std::string::npos);

    const auto dir = scratch_dir("bad");
    std::ofstream(dir / "bad.csv") << "year,n_published,n_cited,total_citations,h_index\n2005,947,1000,6910,34\n";
    r = invoke({"summary", "--input", (dir / "bad.csv").string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("row 2") != std::string::npos);
    CHECK(r.err.find("2005") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"bogus"}).code == 2);
    CHECK(invoke({"csf"}).code == 2);
    CHECK(invoke({"csf", "--input", kFixture, "--format", "xml"}).code == 2);
    CHECK(invoke({"stats", "--input", kFixture}).code == 2);
    CHECK(invoke({"fit", "--input", kFixture, "--series", "tc", "--model", "cubic"}).code == 2);
    CHECK(invoke({"fit", "--input", kFixture, "--series", "csf_o", "--model", "harris"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("per-document records input") {
    const auto dir = scratch_dir("records");
    std::ofstream(dir / "records.csv") << "doc_id,journal,pub_year,citations\n"
                                          "a,Pramana,2018,5\nb,Pramana,2018,0\nc,\"J. Phys, A\",2018,3\n"
                                          "d,Pramana,2019,2\ne,Pramana,2019,0\nf,Pramana,2019,7\n";
    const auto r = invoke({"summary", "--input", (dir / "records.csv").string(), "--kind", "records"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "year,n_published,n_cited,total_citations,h_index\n2018,3,2,8,2\n2019,3,2,9,2\n");

    const auto ratios = invoke({"ratios", "--input", (dir / "records.csv").string(), "--kind", "records"});
    CHECK(ratios.code == 0);
}

TEST_CASE("--out writes to a file") {
    const auto dir = scratch_dir("out");
    const auto path = dir / "csf.csv";
    const auto r = invoke({"csf", "--input", kFixture, "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == invoke({"csf", "--input", kFixture}).out);
}

TEST_CASE("report writes JSON and two charts, byte-stable") {
    const auto dir = scratch_dir("report");
    const auto json_path = dir / "report.json";
    const auto chart = dir / "fig.svg";
    const std::vector<std::string> args{"report", "--input", kFixture, "--out", json_path.string(),
                                        "--chart", chart.string()};
    REQUIRE(invoke(args).code == 0);
    const auto paths = cli::chart_paths(chart.string());
    CHECK(paths.csf == (dir / "fig_csf.svg").string());
    const auto first = std::array{slurp(json_path), slurp(paths.csf), slurp(paths.ratios)};
    REQUIRE(invoke(args).code == 0);
    const auto second = std::array{slurp(json_path), slurp(paths.csf), slurp(paths.ratios)};
    CHECK(first == second);

    CHECK(testdata::well_formed_xml(first[1]));
    CHECK(testdata::count_occurrences(first[1], "<polyline") == 2);
    CHECK(testdata::count_occurrences(first[2], "<polyline") == 3);

    const auto doc = nlohmann::json::parse(first[0]);
    for (const char* key : {"aggregates", "csf_intervals", "ratios", "stats", "correlations", "regressions", "fits"}) {
        CHECK(doc.contains(key));
    }

    // pooled sample SD recomputed from the emitted intervals
    std::vector<double> pooled;
    for (const auto& iv : doc["csf_intervals"]) {
        pooled.push_back(std::abs(iv["csf_observed"].get<double>()));
        pooled.push_back(std::abs(iv["csf_expected"].get<double>()));
    }
    double mean = 0.0;
    for (double v : pooled) mean += v / static_cast<double>(pooled.size());
    double ss = 0.0;
    for (double v : pooled) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(pooled.size() - 1));
    CHECK(doc["csf_pooled_std_dev"].get<double>() == doctest::Approx(sd).epsilon(1e-5));
    CHECK(doc["csf_pooled_std_dev"].get<double>() == doctest::Approx(0.278).epsilon(0.01));

    testdata::SchemaCheck schema(nlohmann::json::parse(slurp(CITESWING_SCHEMA)));
    CHECK(schema.validate(doc));
    auto broken = doc;
    broken["ratios"][0]["tc"] = "0.078";
    broken["fits"]["harris_tc"].erase("sse");
    CHECK_FALSE(schema.validate(broken));
    CHECK(schema.errors().size() == 2);
}
