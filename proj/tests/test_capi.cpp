// Exercises the shared library through its C interface only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "peakpoly/peakpoly.h"

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    pp_string_free(s);
    return out;
}

struct Ctx {
    pp_context* raw = nullptr;
    Ctx() { REQUIRE(pp_context_create(&raw) == PP_OK); }
    ~Ctx() { pp_context_destroy(raw); }
};

} // namespace

TEST_CASE("status strings and error reporting")
{
    CHECK(std::string(pp_status_string(PP_OK)) == "ok");
    pp_poly* p = nullptr;
    Ctx ctx;
    const int bad[] = {1};
    CHECK(pp_poly_create(ctx.raw, bad, 1, &p) == PP_ERR_INADMISSIBLE);
    CHECK(p == nullptr);
    CHECK(std::string(pp_last_error()).find("position 1") != std::string::npos);
    CHECK(pp_poly_create(nullptr, bad, 1, &p) == PP_ERR_INVALID_ARGUMENT);
    const int descending[] = {6, 4};
    CHECK(pp_poly_create(ctx.raw, descending, 2, &p) == PP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("peak set parsing")
{
    int buf[4];
    size_t n = 0;
    REQUIRE(pp_parse_peak_set(" 3, 5 ,8", buf, 4, &n) == PP_OK);
    CHECK(n == 3);
    CHECK(buf[2] == 8);
    CHECK(pp_parse_peak_set("5,3", buf, 4, &n) == PP_ERR_INVALID_ARGUMENT);
    CHECK(pp_parse_peak_set("2,4,6,8,10", buf, 4, &n) == PP_ERR_INVALID_ARGUMENT);
    CHECK(n == 5);
    int ok = -1;
    char* reason = nullptr;
    const int adjacent[] = {2, 3};
    REQUIRE(pp_check_admissible(adjacent, 2, &ok, &reason) == PP_OK);
    CHECK(ok == 0);
    CHECK(take(reason).find("adjacent") != std::string::npos);
}

TEST_CASE("polynomials, tables and JSON round trip")
{
    Ctx ctx;
    const int set[] = {4, 6};
    pp_poly* p = nullptr;
    REQUIRE(pp_poly_create(ctx.raw, set, 2, &p) == PP_OK);
    CHECK(pp_poly_center(p) == 6);
    CHECK(pp_poly_degree(p) == 5);

    char* out = nullptr;
    REQUIRE(pp_poly_evaluate(p, 7, &out) == PP_OK);
    CHECK(take(out) == "25");

    pp_poly* at0 = nullptr;
    REQUIRE(pp_poly_recenter(p, 0, &at0) == PP_OK);
    REQUIRE(pp_poly_render(at0, PP_FORMAT_JSON, &out) == PP_OK);
    CHECK(take(out) == "{\"center\":0,\"coefficients\":[\"4\",\"-2\",\"2\",\"-2\",\"0\",\"3\"],\"degree\":5}\n");

    REQUIRE(pp_poly_render(p, PP_FORMAT_JSON, &out) == PP_OK);
    const auto json = take(out);
    pp_poly* back = nullptr;
    REQUIRE(pp_poly_from_json(json.c_str(), &back) == PP_OK);
    // re-evaluating the parsed polynomial reproduces the formula count
    for (int n = 7; n <= 12; ++n) {
        REQUIRE(pp_poly_evaluate(back, n, &out) == PP_OK);
        const long value = std::stol(take(out));
        REQUIRE(pp_count(ctx.raw, set, 2, n, PP_COUNT_FORMULA, &out) == PP_OK);
        CHECK(std::stol(take(out)) == value * (1L << (n - 3)));
    }
    CHECK(pp_poly_from_json("{not json", &back) == PP_ERR_INVALID_ARGUMENT);

    pp_poly* d6 = nullptr;
    REQUIRE(pp_poly_difference(p, 6, &d6) == PP_OK);
    CHECK(pp_poly_degree(d6) == -1);

    pp_table* t = nullptr;
    REQUIRE(pp_table_create(p, 6, 0, 6, &t) == PP_OK);
    REQUIRE(pp_table_cell(t, 3, 3, &out) == PP_OK);
    CHECK(take(out) == "7");
    CHECK(pp_table_cell(t, 7, 3, &out) == PP_ERR_INVALID_ARGUMENT);
    REQUIRE(pp_table_render(t, PP_FORMAT_CSV, &out) == PP_OK);
    std::ifstream golden(PEAKPOLY_TEST_DATA "/table1_p46.csv");
    std::stringstream expected;
    expected << golden.rdbuf();
    CHECK(take(out) == expected.str());

    pp_table_destroy(t);
    pp_poly_destroy(d6);
    pp_poly_destroy(back);
    pp_poly_destroy(at0);
    pp_poly_destroy(p);
}

TEST_CASE("counts and enumeration")
{
    Ctx ctx;
    const int set[] = {4, 6};
    char* out = nullptr;
    for (auto method : {PP_COUNT_FORMULA, PP_COUNT_RECURSION, PP_COUNT_BRUTE}) {
        REQUIRE(pp_count(ctx.raw, set, 2, 7, method, &out) == PP_OK);
        CHECK(take(out) == "400");
    }
    REQUIRE(pp_context_set_enumeration_cap(ctx.raw, 6) == PP_OK);
    CHECK(pp_count(ctx.raw, set, 2, 7, PP_COUNT_BRUTE, &out) == PP_ERR_RESOURCE_LIMIT);
    CHECK(pp_context_set_enumeration_cap(ctx.raw, 21) == PP_ERR_INVALID_ARGUMENT);

    REQUIRE(pp_enumerate(ctx.raw, 3, 1, PP_FORMAT_TEXT, &out) == PP_OK);
    CHECK(take(out) == "{}:4\n{2}:2\n");
    REQUIRE(pp_enumerate(ctx.raw, 3, 0, PP_FORMAT_TEXT, &out) == PP_OK);
    CHECK(take(out) == "123 {}\n132 {2}\n213 {}\n231 {2}\n312 {}\n321 {}\n");
}

TEST_CASE("environment sets the enumeration cap")
{
    setenv("PEAKPOLY_ENUM_CAP", "7", 1);
    pp_context* ctx = nullptr;
    REQUIRE(pp_context_create(&ctx) == PP_OK);
    CHECK(pp_context_enumeration_cap(ctx) == 7);
    pp_context_destroy(ctx);
    setenv("PEAKPOLY_ENUM_CAP", "lots", 1);
    CHECK(pp_context_create(&ctx) == PP_ERR_INVALID_ARGUMENT);
    unsetenv("PEAKPOLY_ENUM_CAP");
}

TEST_CASE("verify and sweep reports")
{
    Ctx ctx;
    const int set[] = {4, 6};
    pp_report* r = nullptr;
    REQUIRE(pp_verify(ctx.raw, set, 2, PP_CHECK_POSITIVITY | PP_CHECK_LOGCONCAVITY | PP_CHECK_COUNTS, 5, 2, &r) ==
            PP_OK);
    CHECK(pp_report_passed(r) == 1);
    char* out = nullptr;
    REQUIRE(pp_report_render(r, PP_FORMAT_JSON, &out) == PP_OK);
    const auto j = nlohmann::json::parse(take(out));
    CHECK(j["passed"] == true);
    CHECK(j["coefficients"] == nlohmann::json({"0", "25", "50", "43", "18", "3", "0"}));
    CHECK(j["counts"][0]["brute"] == "400");
    pp_report_destroy(r);

    const int empty_set[] = {0};
    CHECK(pp_verify(ctx.raw, empty_set, 0, PP_CHECK_POSITIVITY, 5, 2, &r) == PP_ERR_INVALID_ARGUMENT);
    REQUIRE(pp_verify(ctx.raw, empty_set, 0, PP_CHECK_COUNTS, 5, 6, &r) == PP_OK);
    CHECK(pp_report_passed(r) == 1);
    pp_report_destroy(r);

    std::vector<std::string> renders;
    for (int jobs : {1, 3}) {
        pp_sweep* s = nullptr;
        REQUIRE(pp_sweep_run(ctx.raw, 9, PP_CHECK_POSITIVITY | PP_CHECK_LOGCONCAVITY, jobs, &s) == PP_OK);
        CHECK(pp_sweep_sets_checked(s) == 54);
        CHECK(pp_sweep_failure_count(s) == 0);
        CHECK(pp_sweep_elapsed_seconds(s) >= 0.0);
        REQUIRE(pp_sweep_render(s, PP_FORMAT_JSON, &out) == PP_OK);
        renders.push_back(take(out));
        pp_sweep_destroy(s);
    }
    CHECK(renders[0] == renders[1]);
}

TEST_CASE("atomic report files")
{
    const std::string path = "capi_atomic_report.json";
    REQUIRE(pp_write_file_atomic(path.c_str(), "{\"ok\":true}\n") == PP_OK);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "{\"ok\":true}");
    std::remove(path.c_str());
    CHECK(pp_write_file_atomic("/nonexistent-dir/x.json", "{}") == PP_ERR_IO);
}

TEST_CASE("contexts are independent across threads")
{
    std::vector<std::string> results(4);
    {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < results.size(); ++i) {
            pool.emplace_back([&results, i] {
                pp_context* ctx = nullptr;
                pp_context_create(&ctx);
                const int set[] = {3, 5, 8};
                pp_poly* p = nullptr;
                pp_poly_create(ctx, set, 3, &p);
                char* out = nullptr;
                pp_poly_render(p, PP_FORMAT_JSON, &out);
                results[i] = take(out);
                pp_poly_destroy(p);
                pp_context_destroy(ctx);
            });
        }
    }
    for (const auto& r : results) {
        CHECK(r == results[0]);
        CHECK_FALSE(r.empty());
    }
}
