#include <doctest.h>

#include <fstream>
#include <sstream>

#include "peakpoly/errors.hpp"
#include "peakpoly/serialize.hpp"

using namespace peakpoly;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("polynomial JSON")
{
    const BinomialPolynomial p(6, {0, 25, 50, 43, 18, 3});
    const auto j = to_json(p);
    CHECK(j.dump() == R"({"center":6,"coefficients":["0","25","50","43","18","3"],"degree":5})");
    CHECK(polynomial_from_json(j) == p);
    CHECK(to_json(BinomialPolynomial()).dump() == R"({"center":0,"coefficients":[],"degree":-1})");

    // coefficients past 64 bits survive the round trip
    BigInt huge = pow2(130) - 1;
    const BinomialPolynomial wide(3, {huge, -huge, 7});
    CHECK(polynomial_from_json(nlohmann::json::parse(to_json(wide).dump())) == wide);

    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"center":1})")), InvalidArgument);
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"center":1,"coefficients":["1x"]})")),
                    InvalidArgument);
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"center":1,"coefficients":["1"],"degree":3})")),
                    InvalidArgument);
}

TEST_CASE("binomial expansion text")
{
    CHECK(binomial_expansion(BinomialPolynomial(2, {0, 1})) == "C(x-2,1)");
    CHECK(binomial_expansion(BinomialPolynomial(0, {4, -2, 2, -2, 0, 3})) ==
          "4 - 2*C(x,1) + 2*C(x,2) - 2*C(x,3) + 3*C(x,5)");
    CHECK(binomial_expansion(BinomialPolynomial()) == "0");
    CHECK(binomial_expansion(BinomialPolynomial(1, {-1})) == "-1");
}

TEST_CASE("difference table CSV matches the golden {4,6} grid")
{
    const auto t = difference_table(BinomialPolynomial(6, {0, 25, 50, 43, 18, 3}), 6, 0, 6);
    CHECK(table_csv(t) == read_file(PEAKPOLY_TEST_DATA "/table1_p46.csv"));
    const auto small = difference_table(BinomialPolynomial(2, {0, 1}), 2, 2, 4);
    CHECK(table_csv(small) == "j\\k,2,3,4\n0,0,1,2\n1,1,1,1\n2,0,0,0\n");
}

TEST_CASE("report JSON carries witnesses and decimal coefficients")
{
    VerificationReport r;
    r.set = PeakSet{3};
    r.m = 3;
    r.coefficients = {0, 2, 1, 0};
    CheckResult ok;
    ok.name = "positivity";
    CheckResult bad;
    bad.name = "logconcavity";
    bad.pass = false;
    bad.witness = Witness{2, 3, std::nullopt, "-1"};
    r.checks = {ok, bad};
    const auto j = to_json(r);
    CHECK(j["passed"] == false);
    CHECK(j["checks"][0]["witness"].is_null());
    CHECK(j["checks"][1]["witness"]["j"] == 2);
    CHECK(j["checks"][1]["witness"]["k"] == 3);
    CHECK_FALSE(j["checks"][1]["witness"].contains("n"));
    CHECK(j["coefficients"][1] == "2");
}

TEST_CASE("peak counts rendering")
{
    const auto counts = enumerate_by_peak_set(3);
    CHECK(render(counts, Format::Text) == "{}:4\n{2}:2\n");
    CHECK(render(counts, Format::Csv) == "peak_set,count\n{},4\n{2},2\n");
    // sets with several positions contain commas and are quoted
    const PeakCounts wide{{PeakSet{2, 4}, 16}};
    CHECK(render(wide, Format::Csv) == "peak_set,count\n\"{2,4}\",16\n");
    CHECK(render(counts, Format::Json) == R"([{"count":"4","peak_set":[]},{"count":"2","peak_set":[2]}])" "\n");
}

TEST_CASE("parse_format")
{
    CHECK(parse_format("csv") == Format::Csv);
    CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
}
