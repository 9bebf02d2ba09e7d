#include <doctest.h>

#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support/subprocess.hpp"

using testsupport::run_cli;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(current);
    return fields;
}

}  // namespace

TEST_CASE("pn prints the plain value") {
    auto result = run_cli("pn --n 4 --method bell");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "5\n");

    result = run_cli("pn --n 0 --method euler");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "1\n");

    result = run_cli("pn --n 4 --method bell --algo nested");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "5\n");
}

TEST_CASE("pn maps cap violations to exit 2 with a stderr message") {
    const auto result = run_cli("pn --n 25 --method theta");
    CHECK(result.exit_code == 2);
    CHECK(result.out.empty());
    CHECK(result.err.find("cap") != std::string::npos);
    CHECK(result.err.find("24") != std::string::npos);
}

TEST_CASE("--unsafe-cap and BELLPART_CAP_OVERRIDE lift the caps") {
    auto result = run_cli("pn --n 25 --method theta --unsafe-cap");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "1958\n");
    CHECK(result.err.find("warning") != std::string::npos);

    result = run_cli("pn --n 25 --method theta", "BELLPART_CAP_OVERRIDE=1");
    CHECK(result.exit_code == 0);
    CHECK(result.out == "1958\n");

    // An explicit zero keeps the caps on.
    result = run_cli("pn --n 25 --method theta", "BELLPART_CAP_OVERRIDE=0");
    CHECK(result.exit_code == 2);
}

TEST_CASE("usage errors exit 64") {
    CHECK(run_cli("pn --n 4 --method nope").exit_code == 64);
    CHECK(run_cli("pn --method euler").exit_code == 64);       // missing --n
    CHECK(run_cli("pn --n 4").exit_code == 64);                // missing --method
    CHECK(run_cli("table --max 3").exit_code == 64);           // missing --methods
    CHECK(run_cli("nonsense --n 1").exit_code == 64);
    CHECK(run_cli("").exit_code == 64);                        // subcommand required
    CHECK(run_cli("pn --n 4 --method euler --format yaml").exit_code == 64);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("table emits the euler prefix as CSV") {
    const auto result = run_cli("table --max 4 --methods euler --format csv");
    CHECK(result.exit_code == 0);
    const auto lines = lines_of(result.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "n,method,value,elapsed_ns,ok");
    const std::vector<std::string> expected_values{"1", "1", "2", "3", "5"};
    for (std::size_t i = 0; i < 5; ++i) {
        const auto fields = csv_fields(lines[i + 1]);
        REQUIRE(fields.size() == 5);
        CHECK(fields[0] == std::to_string(i));
        CHECK(fields[1] == "euler");
        CHECK(fields[2] == expected_values[i]);
        CHECK(fields[4] == "true");
    }
}

TEST_CASE("table at max 0 has one row per applicable method") {
    const auto result = run_cli("table --max 0 --methods bell,euler");
    CHECK(result.exit_code == 0);
    const auto lines = lines_of(result.out);
    REQUIRE(lines.size() == 3);  // header + bell + euler
    CHECK(csv_fields(lines[1])[1] == "bell");
    CHECK(csv_fields(lines[1])[2] == "1");
    CHECK(csv_fields(lines[2])[1] == "euler");
    CHECK(csv_fields(lines[2])[2] == "1");
}

TEST_CASE("table cross-checks several methods and exits 0 when all agree") {
    const auto result = run_cli("table --max 12 --methods bell,theta,corollary");
    CHECK(result.exit_code == 0);
    const auto lines = lines_of(result.out);
    // theta is only defined from n = 1, so one cell is skipped
    CHECK(lines.size() == 1 + 13 + 12 + 13);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        CHECK(csv_fields(lines[i])[4] == "true");
    }

    SUBCASE("rows are sorted by n, then method name") {
        std::size_t previous_n = 0;
        std::string previous_method;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const auto fields = csv_fields(lines[i]);
            const std::size_t n = std::stoul(fields[0]);
            CHECK(n >= previous_n);
            if (n == previous_n && i > 1) CHECK(fields[1] > previous_method);
            previous_n = n;
            previous_method = fields[1];
        }
    }
}

TEST_CASE("json output is one well-formed object per line") {
    const auto result = run_cli("table --max 3 --methods euler,bell --format json");
    CHECK(result.exit_code == 0);
    const auto lines = lines_of(result.out);
    REQUIRE(lines.size() == 8);

    const std::regex value_pattern("^-?[0-9]+$");
    for (const auto& line : lines) {
        const auto record = nlohmann::json::parse(line);
        REQUIRE(record.is_object());
        CHECK(record.size() == 5);
        CHECK(record.contains("n"));
        CHECK(record.contains("method"));
        CHECK(record.contains("value"));
        CHECK(record.contains("elapsed_ns"));
        CHECK(record.contains("ok"));
        CHECK(record["n"].is_number_unsigned());
        CHECK(record["value"].is_string());  // decimal string, never a float
        CHECK(std::regex_match(record["value"].get<std::string>(), value_pattern));
        CHECK(record["ok"].is_boolean());
        CHECK(record["ok"].get<bool>());
    }
}

TEST_CASE("pn json and csv formats reuse the record shape") {
    auto result = run_cli("pn --n 7 --method euler --format json");
    CHECK(result.exit_code == 0);
    const auto record = nlohmann::json::parse(result.out);
    CHECK(record["n"] == 7);
    CHECK(record["method"] == "euler");
    CHECK(record["value"] == "15");
    CHECK(record["ok"] == true);

    result = run_cli("pn --n 7 --method euler --format csv");
    const auto lines = lines_of(result.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "n,method,value,elapsed_ns,ok");
    CHECK(csv_fields(lines[1])[2] == "15");
}

TEST_CASE("bench reports one median row per cell without gating") {
    const auto result = run_cli("bench --max 5 --methods euler --repeats 2");
    CHECK(result.exit_code == 0);
    const auto lines = lines_of(result.out);
    REQUIRE(lines.size() == 7);  // header + n = 0..5
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = csv_fields(lines[i]);
        CHECK(fields[1] == "euler");
        CHECK(!fields[3].empty());
    }
}

TEST_CASE("verify summarizes the invariant suite and exits 0") {
    const auto result = run_cli("verify --max 12");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("16/16 invariants passed") != std::string::npos);
    CHECK(result.out.find("FAIL") == std::string::npos);

    const auto degenerate = run_cli("verify --max 0");
    CHECK(degenerate.exit_code == 0);
    CHECK(degenerate.out.find("16/16 invariants passed") != std::string::npos);
}
