#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pellprime/report.hpp"

using namespace pellprime;
using json = nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::vector<std::string> lines(const std::string& text) { return split(text, '\n'); }

}  // namespace

TEST_CASE("parse_format") {
    CHECK(parse_format("jsonl") == Format::kJsonl);
    CHECK(parse_format("csv") == Format::kCsv);
    CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("verdict records carry the same fields in both formats") {
    TestConfig const config = TestConfig::make(Method::kLucas, LucasParams{4, 1});
    struct Case {
        std::uint64_t n;
        Verdict verdict;
    };
    std::vector<Case> const cases{{65, config.evaluate(65)},
                                  {63, config.evaluate(63)},
                                  {15, Verdict::found_factor(3, 0)},
                                  {21, Verdict::invalid(Reason::kDegenerateDiscriminant)}};
    std::vector<std::string> const header = split(verdict_csv_header(), ',');
    for (auto const& [n, verdict] : cases) {
        json const j = json::parse(format_verdict(n, config, verdict, Format::kJsonl));
        std::vector<std::string> const row = split(format_verdict(n, config, verdict, Format::kCsv), ',');
        REQUIRE(row.size() == header.size());
        CHECK(j["schema"] == "v1");
        CHECK(j["record"] == "verdict");
        CHECK(j["command"] == "test");
        CHECK(row[0] == "verdict");
        CHECK(row[1] == j["method"].get<std::string>());
        CHECK(row[2] == j["params"].get<std::string>());
        CHECK(row[3] == std::to_string(j["n"].get<std::uint64_t>()));
        CHECK(row[4] == j["outcome"].get<std::string>());
        CHECK(row[5] == j["reason"].get<std::string>());
        CHECK(row[6] == (j["factor"].is_null() ? "" : std::to_string(j["factor"].get<std::uint64_t>())));
        CHECK(row[7] == (j["jacobi"].is_null() ? "" : std::to_string(j["jacobi"].get<int>())));
    }
    json const passed = json::parse(format_verdict(65, config, config.evaluate(65), Format::kJsonl));
    CHECK(passed["outcome"] == "probable-prime");
    CHECK(passed["jacobi"] == -1);
    CHECK(passed["factor"].is_null());
    json const factor = json::parse(format_verdict(15, config, Verdict::found_factor(3, 0), Format::kJsonl));
    CHECK(factor["outcome"] == "composite");
    CHECK(factor["factor"] == 3);
}

TEST_CASE("scan records") {
    TestConfig const config = TestConfig::make(Method::kLucas, LucasParams{4, 1});
    ScanReport const report = scan_range(config, 3, 5000);

    json const p = json::parse(format_pseudoprime(report.method, report.params, 65, Format::kJsonl));
    CHECK(p == json{{"schema", "v1"}, {"record", "pseudoprime"}, {"method", "lucas"}, {"params", "P=4;Q=1"}, {"n", 65}});
    std::vector<std::string> const header = split(scan_csv_header(), ',');
    std::vector<std::string> const prow = split(format_pseudoprime(report.method, report.params, 65, Format::kCsv), ',');
    REQUIRE(prow.size() == header.size());
    CHECK(prow[0] == "pseudoprime");
    CHECK(prow[3] == "65");

    json const s = json::parse(format_scan_summary(report, Format::kJsonl, false));
    std::vector<std::string> const row = split(format_scan_summary(report, Format::kCsv, false), ',');
    REQUIRE(row.size() == header.size());
    CHECK(s["record"] == "summary");
    CHECK(s["count"] == 16);
    CHECK(s["elapsed_seconds"].is_null());
    for (std::size_t i = 0; i < header.size(); ++i) {
        std::string const& key = header[i];
        if (key == "record" || key == "method" || key == "params") {
            CHECK(row[i] == s[key].get<std::string>());
        } else if (key == "lo" || key == "hi" || key == "count") {
            CHECK(row[i] == std::to_string(s[key].get<std::uint64_t>()));
        } else if (key == "resumed") {
            CHECK(row[i] == (s[key].get<bool>() ? "true" : "false"));
        } else if (key == "n" || key == "elapsed_seconds") {
            CHECK(row[i].empty());
        } else {
            CHECK(row[i] == std::to_string(s["stats"][key].get<std::uint64_t>()));
        }
    }
    json const timed = json::parse(format_scan_summary(report, Format::kJsonl, true));
    CHECK(timed["elapsed_seconds"].is_number());

    // without timing the summary is a function of the inputs
    ScanOptions o;
    o.jobs = 2;
    o.chunk_size = 50;
    CHECK(format_scan_summary(scan_range(config, 3, 5000, o), Format::kJsonl, false) ==
          format_scan_summary(report, Format::kJsonl, false));
}

TEST_CASE("grid records") {
    GridReport report;
    report.method = "lucas";
    report.axes = {{"P", {-1, 0}}, {"Q", {1, 2, 3}}};
    report.limit = 1000;
    report.convention = "charpoly";
    report.cells = {7, std::nullopt, 2, std::nullopt, std::nullopt, std::nullopt};

    CHECK(lines(format_grid(report, Format::kCsv)) ==
          std::vector<std::string>{"# method=lucas limit=1000 convention=charpoly", "P\\Q,1,2,3", "-1,7,skip,2",
                                   "0,skip,skip,skip"});
    json const j = json::parse(format_grid(report, Format::kJsonl));
    CHECK(j["record"] == "grid");
    CHECK(j["limit"] == 1000);
    CHECK(j["axes"][1]["name"] == "Q");
    CHECK(j["axes"][1]["values"] == json{1, 2, 3});
    CHECK(j["cells"] == json{7, nullptr, 2, nullptr, nullptr, nullptr});

    report.method = "matrix";
    report.axes = {{"R", {1, 2}}, {"P", {3}}, {"Q", {4}}};
    report.cells = {5, 6};
    CHECK(lines(format_grid(report, Format::kCsv)) ==
          std::vector<std::string>{"# method=matrix limit=1000 convention=charpoly", "# R=1", "P\\Q,4", "3,5",
                                   "# R=2", "P\\Q,4", "3,6"});
}
