#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hypsum/identities.hpp"
#include "hypsum/report_format.hpp"

using namespace hypsum;

namespace {

VerificationReport theorem_point() {
    const auto reports = verify(IdentityId::Kind::TheoremEven, Grid{{1, 1}, {2, 2}, {}, {}});
    REQUIRE(reports.size() == 1);
    return reports.front();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

TEST_CASE("empty CSV is the header line") {
    CHECK(emit_table({}, OutputFormat::Csv) == std::string(kCsvHeader) + "\n");
}

TEST_CASE("CSV row for a theorem point") {
    const auto lines = split_lines(emit_table({theorem_point()}, OutputFormat::Csv));
    REQUIRE(lines.size() == 2);
    CHECK(lines[1] == "theorem-even,1,2,,exact,7/2,7/2,true");
    CHECK(lines[1].find("7/2,7/2,true") != std::string::npos);
}

TEST_CASE("LaTeX renders fractions") {
    const std::string tex = emit_table({theorem_point()}, OutputFormat::Latex);
    CHECK(tex.find("\\begin{tabular}") != std::string::npos);
    CHECK(tex.find("\\texttt{theorem-even} & 1 & 2 &  & exact & $\\frac{7}{2}$ & $\\frac{7}{2}$ & yes \\\\") !=
          std::string::npos);
    CHECK(tex.find("\\end{tabular}") != std::string::npos);
}

TEST_CASE("Markdown table") {
    const auto lines = split_lines(emit_table({theorem_point()}, OutputFormat::Markdown));
    REQUIRE(lines.size() == 3);
    CHECK(lines[2] == "| theorem-even | 1 | 2 |  | exact | 7/2 | 7/2 | yes |");
}

TEST_CASE("JSON carries exact strings") {
    const auto doc = nlohmann::json::parse(emit_table({theorem_point()}, OutputFormat::Json));
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["identity"] == "theorem-even");
    CHECK(doc[0]["nu"] == 1);
    CHECK(doc[0]["i"] == 2);
    CHECK(doc[0]["alpha"].is_null());
    CHECK(doc[0]["lhs"] == "7/2");
    CHECK(doc[0]["matched"] == true);
}

TEST_CASE("float values and alpha columns") {
    const auto reports = verify(IdentityId::Kind::MasterOdd,
                                Grid{{1, 1}, {2, 2}, {BigRational(2, 5)}, EvalMode::floating(1e-10)});
    REQUIRE(reports.size() == 1);
    const auto lines = split_lines(emit_table(reports, OutputFormat::Csv));
    REQUIRE(lines.size() == 2);
    CHECK(lines[1].rfind("master-odd,1,2,2/5,float:1e-10,75/133,", 0) == 0);
    CHECK(lines[1].substr(lines[1].size() - 5) == ",true");
}

TEST_CASE("value text round-trips exactly") {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 500; ++k) {
        const BigRational q = BigRational(static_cast<long>(rng() >> 2) - (1L << 60),
                                          static_cast<long>(rng() % 1000000 + 1)) *
                              pow2(static_cast<long>(rng() % 200) - 100);
        CHECK(std::get<BigRational>(parse_value(format_value(q))) == q);

        double d = 0.0;
        const std::uint64_t bits = rng();
        std::memcpy(&d, &bits, sizeof d);
        if (!std::isfinite(d)) {
            continue;
        }
        const double back = std::get<double>(parse_value(format_value(d)));
        CHECK(std::memcmp(&back, &d, sizeof d) == 0);
    }
    CHECK(std::get<double>(parse_value("0.5")) == 0.5);
    CHECK(std::get<double>(parse_value("1e-300")) == 1e-300);
    CHECK_THROWS_AS(parse_value("1.5x"), std::invalid_argument);
}

TEST_CASE("format names") {
    CHECK(output_format_from_name("csv") == OutputFormat::Csv);
    CHECK(output_format_from_name("latex") == OutputFormat::Latex);
    CHECK_FALSE(output_format_from_name("xml").has_value());
}
