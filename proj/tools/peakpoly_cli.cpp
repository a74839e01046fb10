// peakpoly command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 usage error, 2 inadmissible peak set,
// 3 cross-check disagreement or failed verification.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "peakpoly/peakpoly.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInadmissible = 2;
constexpr int kExitCheckFailed = 3;

struct Failure {
    int code;
};

int exit_code_for(pp_status status)
{
    switch (status) {
    case PP_OK:
        return kExitOk;
    case PP_ERR_INADMISSIBLE:
        return kExitInadmissible;
    case PP_ERR_DISAGREEMENT:
    case PP_ERR_INTERNAL:
        return kExitCheckFailed;
    case PP_ERR_INVALID_ARGUMENT:
    case PP_ERR_RESOURCE_LIMIT:
    case PP_ERR_IO:
        return kExitUsage;
    }
    return kExitUsage;
}

void check(pp_status status)
{
    if (status != PP_OK) {
        std::cerr << "peakpoly: " << pp_status_string(status) << ": " << pp_last_error() << "\n";
        throw Failure{exit_code_for(status)};
    }
}

struct StringDeleter {
    void operator()(char* s) const { pp_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <typename F>
std::string take_string(F&& call)
{
    char* raw = nullptr;
    check(call(&raw));
    OwnedString owned(raw);
    return raw ? std::string(raw) : std::string();
}

struct ContextDeleter {
    void operator()(pp_context* c) const { pp_context_destroy(c); }
};
struct PolyDeleter {
    void operator()(pp_poly* p) const { pp_poly_destroy(p); }
};
struct TableDeleter {
    void operator()(pp_table* t) const { pp_table_destroy(t); }
};
struct ReportDeleter {
    void operator()(pp_report* r) const { pp_report_destroy(r); }
};
struct SweepDeleter {
    void operator()(pp_sweep* s) const { pp_sweep_destroy(s); }
};

using Context = std::unique_ptr<pp_context, ContextDeleter>;
using Poly = std::unique_ptr<pp_poly, PolyDeleter>;

std::vector<int> parse_set(const std::string& text)
{
    size_t count = 0;
    std::vector<int> positions(64);
    auto status = pp_parse_peak_set(text.c_str(), positions.data(), positions.size(), &count);
    if (status == PP_ERR_INVALID_ARGUMENT && count > positions.size()) {
        positions.resize(count);
        status = pp_parse_peak_set(text.c_str(), positions.data(), positions.size(), &count);
    }
    check(status);
    positions.resize(count);
    return positions;
}

pp_format parse_format(const std::string& name)
{
    if (name == "json") {
        return PP_FORMAT_JSON;
    }
    if (name == "csv") {
        return PP_FORMAT_CSV;
    }
    return PP_FORMAT_TEXT;
}

void require_admissible(const std::vector<int>& set)
{
    int ok = 0;
    char* reason = nullptr;
    check(pp_check_admissible(set.data(), set.size(), &ok, &reason));
    OwnedString owned(reason);
    if (!ok) {
        std::cerr << "peakpoly: inadmissible peak set: " << (reason ? reason : "") << "\n";
        throw Failure{kExitInadmissible};
    }
}

unsigned parse_checks(const std::string& text)
{
    unsigned mask = 0;
    std::string token;
    for (char c : text + ",") {
        if (c == ',') {
            if (token == "positivity") {
                mask |= PP_CHECK_POSITIVITY;
            } else if (token == "logconcavity" || token == "log-concavity") {
                mask |= PP_CHECK_LOGCONCAVITY;
            } else if (token == "counts") {
                mask |= PP_CHECK_COUNTS;
            } else if (token == "all") {
                mask |= PP_CHECK_POSITIVITY | PP_CHECK_LOGCONCAVITY | PP_CHECK_COUNTS;
            } else if (!token.empty()) {
                std::cerr << "peakpoly: unknown check '" << token << "'\n";
                throw Failure{kExitUsage};
            }
            token.clear();
        } else if (c != ' ') {
            token += c;
        }
    }
    if (mask == 0) {
        std::cerr << "peakpoly: no checks selected\n";
        throw Failure{kExitUsage};
    }
    return mask;
}

void write_report(const std::string& path, const std::string& contents)
{
    check(pp_write_file_atomic(path.c_str(), contents.c_str()));
}

int max_of(const std::vector<int>& set) { return set.empty() ? 0 : set.back(); }

Poly make_poly(pp_context* ctx, const std::vector<int>& set)
{
    require_admissible(set);
    pp_poly* raw = nullptr;
    check(pp_poly_create(ctx, set.data(), set.size(), &raw));
    return Poly(raw);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Peak polynomials of permutation peak sets: exact computation, counting and verification"};
    app.require_subcommand(1);

    std::optional<int> enum_cap;
    std::optional<std::size_t> cache_limit;
    app.add_option("--enum-cap", enum_cap, "Largest n for brute-force enumeration (overrides PEAKPOLY_ENUM_CAP)")
        ->check(CLI::Range(1, 20));
    app.add_option("--cache-limit", cache_limit, "Maximum cached peak polynomials (0 = unbounded)");

    std::string set_text;
    std::string format_name = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* poly = app.add_subcommand("poly", "Peak polynomial in the binomial basis");
    std::optional<long> center;
    poly->add_option("--set", set_text, "Peak set, e.g. 4,6")->required();
    poly->add_option("--center", center, "Basis centre k (default max(S))")->check(CLI::NonNegativeNumber);
    add_format(poly);

    auto* table = app.add_subcommand("table", "Forward-difference table (rows j, columns k)");
    std::optional<int> jmax;
    std::optional<long> kmin;
    std::optional<long> kmax;
    table->add_option("--set", set_text, "Peak set")->required();
    table->add_option("--jmax", jmax, "Largest difference order (default max(S))")->check(CLI::NonNegativeNumber);
    table->add_option("--kmin", kmin, "First column (default 0)");
    table->add_option("--kmax", kmax, "Last column (default max(S))");
    add_format(table);

    auto* count = app.add_subcommand("count", "Number of permutations of length n with the given peak set");
    int n = 0;
    std::string method = "formula";
    count->add_option("--set", set_text, "Peak set")->required();
    count->add_option("--n", n, "Permutation length")->required()->check(CLI::PositiveNumber);
    count->add_option("--method", method, "Counting method")
        ->check(CLI::IsMember({"formula", "recursion", "brute", "all"}));
    add_format(count);

    auto* verify = app.add_subcommand("verify", "Check positivity, log-concavity and counts for one set");
    std::string checks_text = "positivity,logconcavity";
    int k_span = 5;
    int n_span = 2;
    std::string report_path;
    verify->add_option("--set", set_text, "Peak set")->required();
    verify->add_option("--checks", checks_text, "Comma-separated: positivity,logconcavity,counts");
    verify->add_option("--k-span", k_span, "Check k in [m, m + span]")->check(CLI::NonNegativeNumber);
    verify->add_option("--n-span", n_span, "Check counts for n up to m + span")->check(CLI::NonNegativeNumber);
    verify->add_option("--report", report_path, "Also write the JSON report to this file");
    add_format(verify);

    auto* sweep = app.add_subcommand("sweep", "Verify every admissible set with max(S) <= bound");
    int max_m = 0;
    int jobs = 1;
    std::string sweep_checks = "positivity";
    sweep->add_option("--max-m", max_m, "Largest max(S)")->required()->check(CLI::Range(2, 64));
    sweep->add_option("--checks", sweep_checks, "Comma-separated: positivity,logconcavity,counts");
    sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--report", report_path, "Also write the JSON summary to this file");
    add_format(sweep);

    auto* enumerate = app.add_subcommand("enumerate", "Brute-force enumeration of S_n");
    bool group = false;
    enumerate->add_option("--n", n, "Permutation length")->required()->check(CLI::PositiveNumber);
    enumerate->add_flag("--group-by-peaks", group, "Count permutations per peak set");
    add_format(enumerate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        pp_context* raw_ctx = nullptr;
        check(pp_context_create(&raw_ctx));
        Context ctx(raw_ctx);
        if (enum_cap) {
            check(pp_context_set_enumeration_cap(ctx.get(), *enum_cap));
        }
        if (cache_limit) {
            check(pp_context_set_cache_limit(ctx.get(), *cache_limit));
        }
        const auto format = parse_format(format_name);

        if (poly->parsed()) {
            const auto set = parse_set(set_text);
            auto p = make_poly(ctx.get(), set);
            if (center) {
                pp_poly* moved = nullptr;
                check(pp_poly_recenter(p.get(), *center, &moved));
                p.reset(moved);
            }
            std::cout << take_string([&](char** out) { return pp_poly_render(p.get(), format, out); });
            return kExitOk;
        }

        if (table->parsed()) {
            const auto set = parse_set(set_text);
            auto p = make_poly(ctx.get(), set);
            const int m = max_of(set);
            pp_table* raw = nullptr;
            check(pp_table_create(p.get(), jmax.value_or(m), kmin.value_or(0), kmax.value_or(m), &raw));
            std::unique_ptr<pp_table, TableDeleter> t(raw);
            std::cout << take_string([&](char** out) { return pp_table_render(t.get(), format, out); });
            return kExitOk;
        }

        if (count->parsed()) {
            const auto set = parse_set(set_text);
            auto run = [&](pp_count_method m) {
                return take_string([&](char** out) { return pp_count(ctx.get(), set.data(), set.size(), n, m, out); });
            };
            std::vector<std::pair<std::string, std::string>> rows;
            if (method == "formula" || method == "all") {
                rows.emplace_back("formula", run(PP_COUNT_FORMULA));
            }
            if (method == "recursion" || method == "all") {
                rows.emplace_back("recursion", run(PP_COUNT_RECURSION));
            }
            if (method == "brute" || method == "all") {
                rows.emplace_back("brute", run(PP_COUNT_BRUTE));
            }
            bool agree = true;
            for (const auto& row : rows) {
                agree = agree && row.second == rows.front().second;
            }
            if (format == PP_FORMAT_JSON) {
                nlohmann::json j{{"set", set}, {"n", n}};
                for (const auto& [name, value] : rows) {
                    j[name] = value;
                }
                if (rows.size() > 1) {
                    j["agree"] = agree;
                }
                std::cout << j.dump() << "\n";
            } else if (format == PP_FORMAT_CSV) {
                std::cout << "method,count\n";
                for (const auto& [name, value] : rows) {
                    std::cout << name << ',' << value << "\n";
                }
            } else if (rows.size() == 1) {
                std::cout << rows.front().second << "\n";
            } else {
                for (const auto& [name, value] : rows) {
                    std::cout << name << ": " << value << "\n";
                }
                std::cout << (agree ? "agree" : "DISAGREE") << "\n";
            }
            if (!agree) {
                std::cerr << "peakpoly: counting methods disagree\n";
                return kExitCheckFailed;
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            const auto set = parse_set(set_text);
            const auto checks = parse_checks(checks_text);
            if (checks & (PP_CHECK_POSITIVITY | PP_CHECK_LOGCONCAVITY)) {
                require_admissible(set);
            }
            pp_report* raw = nullptr;
            check(pp_verify(ctx.get(), set.data(), set.size(), checks, k_span, n_span, &raw));
            std::unique_ptr<pp_report, ReportDeleter> r(raw);
            std::cout << take_string([&](char** out) { return pp_report_render(r.get(), format, out); });
            if (!report_path.empty()) {
                write_report(report_path,
                             take_string([&](char** out) { return pp_report_render(r.get(), PP_FORMAT_JSON, out); }));
            }
            return pp_report_passed(r.get()) ? kExitOk : kExitCheckFailed;
        }

        if (sweep->parsed()) {
            const auto checks = parse_checks(sweep_checks);
            pp_sweep* raw = nullptr;
            check(pp_sweep_run(ctx.get(), max_m, checks, jobs, &raw));
            std::unique_ptr<pp_sweep, SweepDeleter> s(raw);
            std::cout << take_string([&](char** out) { return pp_sweep_render(s.get(), format, out); });
            if (!report_path.empty()) {
                write_report(report_path,
                             take_string([&](char** out) { return pp_sweep_render(s.get(), PP_FORMAT_JSON, out); }));
            }
            return pp_sweep_failure_count(s.get()) == 0 ? kExitOk : kExitCheckFailed;
        }

        if (enumerate->parsed()) {
            std::cout << take_string(
                [&](char** out) { return pp_enumerate(ctx.get(), n, group ? 1 : 0, format, out); });
            return kExitOk;
        }
    } catch (const Failure& f) {
        return f.code;
    }
    return kExitUsage;
}
