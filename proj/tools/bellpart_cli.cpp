// bellpart command-line tool: compute p(n) by any of the five methods,
// cross-verify them against the Euler-recurrence oracle, run the invariant
// suite, and time the methods. Stdout carries data only; diagnostics go to
// stderr. Exit codes: 0 success, 1 verification failure, 2 domain/cap
// error, 64 usage error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellpart/errors.hpp"
#include "bellpart/partition.hpp"
#include "bellpart/verify.hpp"

namespace {

using bellpart::ComputeOptions;
using bellpart::Method;
using bellpart::MethodReport;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitDomainError = 2;
constexpr int kExitUsage = 64;

struct OutputRecord {
    std::size_t n = 0;
    std::string method;
    std::string value;      // decimal string, arbitrary length
    long long elapsed_ns = 0;
    bool ok = false;        // agrees with the Euler-recurrence oracle
};

OutputRecord to_record(const MethodReport& report) {
    return OutputRecord{report.result.n, bellpart::method_name(report.result.method),
                        bellpart::to_decimal(report.result.value),
                        static_cast<long long>(report.elapsed.count()),
                        report.agrees_with_oracle};
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void print_csv_header() { std::cout << "n,method,value,elapsed_ns,ok\n"; }

void print_record(const OutputRecord& r, const std::string& format) {
    if (format == "csv") {
        std::cout << r.n << ',' << csv_field(r.method) << ',' << csv_field(r.value) << ','
                  << r.elapsed_ns << ',' << (r.ok ? "true" : "false") << '\n';
    } else if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = r.n;
        j["method"] = r.method;
        j["value"] = r.value;
        j["elapsed_ns"] = r.elapsed_ns;
        j["ok"] = r.ok;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << r.n << ' ' << r.method << ' ' << r.value << ' ' << r.elapsed_ns << ' '
                  << (r.ok ? "true" : "false") << '\n';
    }
}

bool env_cap_override() {
    const char* env = std::getenv("BELLPART_CAP_OVERRIDE");
    if (env == nullptr) return false;
    const std::string value(env);
    return !value.empty() && value != "0";
}

ComputeOptions make_options(const std::string& algo, bool unsafe_cap) {
    ComputeOptions options;
    options.bell_algo = (algo == "nested") ? bellpart::BellAlgorithm::nested
                                           : bellpart::BellAlgorithm::recurrence;
    if (unsafe_cap || env_cap_override()) {
        const char* source = unsafe_cap ? "--unsafe-cap" : "BELLPART_CAP_OVERRIDE";
        std::cerr << "warning: safety caps disabled via " << source
                  << "; exponential methods may run for a very long time\n";
        options.theta_cap = std::numeric_limits<std::size_t>::max();
        options.nested_cap = std::numeric_limits<std::size_t>::max();
        options.naive_cap = std::numeric_limits<std::size_t>::max();
    }
    return options;
}

// Canonical row order for table/bench output: n ascending, then method
// name alphabetically.
std::vector<Method> sorted_methods(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::vector<Method> methods;
    methods.reserve(names.size());
    for (const std::string& name : names) {
        methods.push_back(*bellpart::parse_method(name));
    }
    return methods;
}

// The theta-product formula is only defined for n >= 1, so table and
// bench skip that single cell instead of failing the whole run.
bool in_method_domain(std::size_t n, Method m) {
    return !(m == Method::theta && n == 0);
}

int run_pn(std::size_t n, const std::string& method_name, const std::string& format,
           const std::string& algo, bool unsafe_cap) {
    const ComputeOptions options = make_options(algo, unsafe_cap);
    const Method method = *bellpart::parse_method(method_name);
    const MethodReport report = bellpart::run_method(n, method, options);
    if (format == "plain") {
        std::cout << bellpart::to_decimal(report.result.value) << '\n';
    } else {
        if (format == "csv") print_csv_header();
        print_record(to_record(report), format);
    }
    return 0;
}

int run_table(std::size_t max_n, const std::vector<std::string>& method_names,
              const std::string& format, const std::string& algo, bool unsafe_cap) {
    const ComputeOptions options = make_options(algo, unsafe_cap);
    const std::vector<Method> methods = sorted_methods(method_names);
    if (format == "csv") print_csv_header();
    bool all_ok = true;
    for (std::size_t n = 0; n <= max_n; ++n) {
        for (Method method : methods) {
            if (!in_method_domain(n, method)) continue;
            const MethodReport report = bellpart::run_method(n, method, options);
            all_ok = all_ok && report.agrees_with_oracle;
            print_record(to_record(report), format);
        }
    }
    return all_ok ? 0 : kExitVerificationFailure;
}

int run_bench(std::size_t max_n, const std::vector<std::string>& method_names,
              std::size_t repeats, const std::string& format, const std::string& algo,
              bool unsafe_cap) {
    const ComputeOptions options = make_options(algo, unsafe_cap);
    const std::vector<Method> methods = sorted_methods(method_names);
    if (format == "csv") print_csv_header();
    for (std::size_t n = 0; n <= max_n; ++n) {
        for (Method method : methods) {
            if (!in_method_domain(n, method)) continue;
            std::vector<MethodReport> runs;
            runs.reserve(repeats);
            for (std::size_t i = 0; i < repeats; ++i) {
                runs.push_back(bellpart::run_method(n, method, options));
            }
            std::vector<long long> times;
            times.reserve(repeats);
            for (const MethodReport& r : runs) {
                times.push_back(static_cast<long long>(r.elapsed.count()));
            }
            std::sort(times.begin(), times.end());
            OutputRecord record = to_record(runs.front());
            record.elapsed_ns = times[times.size() / 2];
            print_record(record, format);
        }
    }
    return 0;
}

int run_verify(std::size_t max_n) {
    const auto results = bellpart::run_invariants(bellpart::VerifyBounds::from_max(max_n));
    std::size_t passed = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.summary << '\n';
        if (!r.passed) {
            std::cout << "      " << r.detail << '\n';
        } else {
            ++passed;
        }
    }
    std::cout << passed << "/" << results.size() << " invariants passed\n";
    return passed == results.size() ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact partition numbers p(n) via partial Bell polynomials, the pentagonal\n"
                 "theta-product formula, a binomial corollary, and independent oracles."};
    app.require_subcommand(1);

    const std::vector<std::string> method_choices = {"bell", "theta", "corollary", "euler",
                                                     "naive"};
    const std::vector<std::string> format_choices = {"plain", "json", "csv"};
    const std::vector<std::string> algo_choices = {"rec", "nested"};

    // pn
    auto* pn = app.add_subcommand("pn", "Compute p(n) by one method");
    std::size_t pn_n = 0;
    std::string pn_method;
    std::string pn_format = "plain";
    std::string pn_algo = "rec";
    bool pn_unsafe = false;
    pn->add_option("--n", pn_n, "Index n")->required();
    pn->add_option("--method", pn_method, "Computation method")
        ->required()
        ->check(CLI::IsMember(method_choices));
    pn->add_option("--format", pn_format, "Output format")->check(CLI::IsMember(format_choices));
    pn->add_option("--algo", pn_algo, "Bell evaluation algorithm for --method bell")
        ->check(CLI::IsMember(algo_choices));
    pn->add_flag("--unsafe-cap", pn_unsafe, "Disable the safety caps of exponential methods");

    // table
    auto* table = app.add_subcommand("table", "p(n) for n = 0..max by several methods, "
                                              "each row checked against the Euler oracle");
    std::size_t table_max = 0;
    std::vector<std::string> table_methods;
    std::string table_format = "csv";
    std::string table_algo = "rec";
    bool table_unsafe = false;
    table->add_option("--max", table_max, "Largest n")->required();
    table->add_option("--methods", table_methods, "Comma-separated methods")
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember(method_choices));
    table->add_option("--format", table_format, "Output format")
        ->check(CLI::IsMember(format_choices));
    table->add_option("--algo", table_algo, "Bell evaluation algorithm for method bell")
        ->check(CLI::IsMember(algo_choices));
    table->add_flag("--unsafe-cap", table_unsafe,
                    "Disable the safety caps of exponential methods");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the cross-validation invariant suite");
    std::size_t verify_max = 0;
    verify->add_option("--max", verify_max, "Bound for the n-type invariant ranges")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "Median timings per (n, method); no gating");
    std::size_t bench_max = 0;
    std::vector<std::string> bench_methods;
    std::size_t bench_repeats = 3;
    std::string bench_format = "csv";
    std::string bench_algo = "rec";
    bool bench_unsafe = false;
    bench->add_option("--max", bench_max, "Largest n")->required();
    bench->add_option("--methods", bench_methods, "Comma-separated methods")
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember(method_choices));
    bench->add_option("--repeats", bench_repeats, "Runs per cell (median reported)")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
    bench->add_option("--format", bench_format, "Output format")
        ->check(CLI::IsMember(format_choices));
    bench->add_option("--algo", bench_algo, "Bell evaluation algorithm for method bell")
        ->check(CLI::IsMember(algo_choices));
    bench->add_flag("--unsafe-cap", bench_unsafe,
                    "Disable the safety caps of exponential methods");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*pn) return run_pn(pn_n, pn_method, pn_format, pn_algo, pn_unsafe);
        if (*table) return run_table(table_max, table_methods, table_format, table_algo,
                                     table_unsafe);
        if (*verify) return run_verify(verify_max);
        if (*bench) return run_bench(bench_max, bench_methods, bench_repeats, bench_format,
                                     bench_algo, bench_unsafe);
    } catch (const bellpart::ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return kExitVerificationFailure;
    } catch (const bellpart::CapExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomainError;
    } catch (const bellpart::ArgumentLengthError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomainError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
    return 0;
}
