#include "peakpoly/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "peakpoly/errors.hpp"

namespace peakpoly {

using nlohmann::json;

namespace {

std::string basis_term(std::int64_t center, std::size_t j)
{
    std::string arg = center == 0 ? "x" : "x-" + std::to_string(center);
    return "C(" + arg + "," + std::to_string(j) + ")";
}

json set_json(const PeakSet& s) { return s.positions(); }

json decimal_array(const std::vector<BigInt>& values)
{
    json out = json::array();
    for (const auto& v : values) {
        out.push_back(to_decimal(v));
    }
    return out;
}

json witness_json(const Witness& w)
{
    json out = json::object();
    if (w.j) {
        out["j"] = *w.j;
    }
    if (w.k) {
        out["k"] = *w.k;
    }
    if (w.n) {
        out["n"] = *w.n;
    }
    out["value"] = w.value;
    return out;
}

std::string witness_text(const Witness& w)
{
    std::string s;
    if (w.j) {
        s += " j=" + std::to_string(*w.j);
    }
    if (w.k) {
        s += " k=" + std::to_string(*w.k);
    }
    if (w.n) {
        s += " n=" + std::to_string(*w.n);
    }
    return s + " value=" + w.value;
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

} // namespace

Format parse_format(const std::string& name)
{
    if (name == "text") {
        return Format::Text;
    }
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    throw InvalidArgument("unknown output format '" + name + "' (expected text, json or csv)");
}

json to_json(const BinomialPolynomial& p)
{
    std::vector<BigInt> coeffs(p.coefficients().begin(), p.coefficients().end());
    return json{{"center", p.center()}, {"coefficients", decimal_array(coeffs)}, {"degree", p.degree()}};
}

BinomialPolynomial polynomial_from_json(const json& j)
{
    try {
        const auto center = j.at("center").get<std::int64_t>();
        std::vector<BigInt> coeffs;
        for (const auto& c : j.at("coefficients")) {
            coeffs.push_back(parse_decimal(c.get<std::string>()));
        }
        BinomialPolynomial p(center, std::move(coeffs));
        if (j.contains("degree") && j.at("degree").get<int>() != p.degree()) {
            throw InvalidArgument("polynomial JSON degree does not match its coefficients");
        }
        return p;
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed polynomial JSON: ") + e.what());
    }
}

std::string binomial_expansion(const BinomialPolynomial& p)
{
    std::string out;
    const auto coeffs = p.coefficients();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        const auto& c = coeffs[j];
        if (c == 0) {
            continue;
        }
        const BigInt mag = abs(c);
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (j == 0) {
            out += to_decimal(mag);
        } else {
            if (mag != 1) {
                out += to_decimal(mag) + "*";
            }
            out += basis_term(p.center(), j);
        }
    }
    return out.empty() ? "0" : out;
}

std::string render(const BinomialPolynomial& p, Format format)
{
    std::ostringstream out;
    switch (format) {
    case Format::Json:
        return to_json(p).dump() + "\n";
    case Format::Csv:
        out << "j,coefficient\n";
        for (std::size_t j = 0; j < p.coefficients().size(); ++j) {
            out << j << ',' << to_decimal(p.coefficients()[j]) << '\n';
        }
        return out.str();
    case Format::Text:
        out << "center: " << p.center() << "\n";
        out << "degree: " << p.degree() << "\n";
        out << "coefficients:";
        for (const auto& c : p.coefficients()) {
            out << ' ' << to_decimal(c);
        }
        out << "\np(x) = " << binomial_expansion(p) << "\n";
        return out.str();
    }
    return {};
}

std::string table_csv(const DifferenceTable& t)
{
    std::ostringstream out;
    out << "j\\k";
    for (auto k = t.kmin; k <= t.kmax; ++k) {
        out << ',' << k;
    }
    out << '\n';
    for (int j = 0; j <= t.jmax; ++j) {
        out << j;
        for (const auto& v : t.cells[static_cast<std::size_t>(j)]) {
            out << ',' << to_decimal(v);
        }
        out << '\n';
    }
    return out.str();
}

std::string render(const DifferenceTable& t, Format format)
{
    switch (format) {
    case Format::Csv:
        return table_csv(t);
    case Format::Json: {
        json rows = json::array();
        for (const auto& row : t.cells) {
            rows.push_back(decimal_array(row));
        }
        return json{{"jmax", t.jmax}, {"kmin", t.kmin}, {"kmax", t.kmax}, {"rows", rows}}.dump() + "\n";
    }
    case Format::Text: {
        std::size_t width = 3;
        for (const auto& row : t.cells) {
            for (const auto& v : row) {
                width = std::max(width, to_decimal(v).size());
            }
        }
        for (auto k = t.kmin; k <= t.kmax; ++k) {
            width = std::max(width, std::to_string(k).size());
        }
        std::ostringstream out;
        out << std::setw(4) << "j\\k" << " |";
        for (auto k = t.kmin; k <= t.kmax; ++k) {
            out << ' ' << std::setw(static_cast<int>(width)) << k;
        }
        out << '\n';
        for (int j = 0; j <= t.jmax; ++j) {
            out << std::setw(4) << j << " |";
            for (const auto& v : t.cells[static_cast<std::size_t>(j)]) {
                out << ' ' << std::setw(static_cast<int>(width)) << to_decimal(v);
            }
            out << '\n';
        }
        return out.str();
    }
    }
    return {};
}

json to_json(const VerificationReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) {
        json entry{{"name", c.name}, {"pass", c.pass}, {"gating", c.gating}};
        entry["witness"] = c.witness ? witness_json(*c.witness) : json(nullptr);
        if (c.name == "logconcavity") {
            entry["equalities"] = c.equalities;
        }
        checks.push_back(std::move(entry));
    }
    json out{{"set", set_json(r.set)},
             {"m", r.m},
             {"passed", r.passed()},
             {"checks", checks},
             {"coefficients", decimal_array(r.coefficients)}};
    if (!r.counts.empty()) {
        json rows = json::array();
        for (const auto& row : r.counts) {
            json e{{"n", row.n}, {"formula", to_decimal(row.formula)}, {"recursion", to_decimal(row.recursion)}};
            e["brute"] = row.brute ? json(std::to_string(*row.brute)) : json(nullptr);
            rows.push_back(std::move(e));
        }
        out["counts"] = rows;
    }
    return out;
}

std::string render(const VerificationReport& r, Format format)
{
    std::ostringstream out;
    switch (format) {
    case Format::Json:
        return to_json(r).dump() + "\n";
    case Format::Csv:
        out << "set,check,pass,gating,j,k,n,value\n";
        for (const auto& c : r.checks) {
            out << csv_quote(r.set.to_string()) << ',' << c.name << ',' << (c.pass ? "true" : "false") << ','
                << (c.gating ? "true" : "false") << ',';
            if (c.witness) {
                const auto& w = *c.witness;
                out << (w.j ? std::to_string(*w.j) : "") << ',' << (w.k ? std::to_string(*w.k) : "") << ','
                    << (w.n ? std::to_string(*w.n) : "") << ',' << csv_quote(w.value);
            } else {
                out << ",,,";
            }
            out << '\n';
        }
        return out.str();
    case Format::Text:
        out << "set " << r.set.to_string() << " (m = " << r.m << ")\n";
        out << "coefficients at m:";
        for (const auto& c : r.coefficients) {
            out << ' ' << to_decimal(c);
        }
        out << '\n';
        for (const auto& c : r.checks) {
            out << "  " << (c.pass ? "pass" : (c.gating ? "FAIL" : "note")) << "  " << c.name;
            if (!c.gating) {
                out << " (reported only)";
            }
            if (c.witness) {
                out << " at" << witness_text(*c.witness);
            }
            if (!c.equalities.empty()) {
                out << " (equality at j =";
                for (int j : c.equalities) {
                    out << ' ' << j;
                }
                out << ')';
            }
            out << '\n';
        }
        for (const auto& row : r.counts) {
            out << "  n=" << row.n << "  formula " << to_decimal(row.formula) << "  recursion "
                << to_decimal(row.recursion);
            if (row.brute) {
                out << "  brute " << *row.brute;
            }
            out << '\n';
        }
        out << (r.passed() ? "PASS" : "FAIL") << '\n';
        return out.str();
    }
    return {};
}

json to_json(const SweepSummary& s)
{
    json failures = json::array();
    for (const auto& r : s.failures) {
        failures.push_back(to_json(r));
    }
    json non_unimodal = json::array();
    for (const auto& set : s.non_unimodal) {
        non_unimodal.push_back(set_json(set));
    }
    return json{{"m_max", s.m_max},
                {"checks", check_names(s.checks)},
                {"sets_checked", s.sets_checked},
                {"failure_count", s.failures.size()},
                {"failures", failures},
                {"non_unimodal", non_unimodal}};
}

std::string render(const SweepSummary& s, Format format)
{
    std::ostringstream out;
    switch (format) {
    case Format::Json:
        return to_json(s).dump() + "\n";
    case Format::Csv:
        out << "m_max,sets_checked,failures,non_unimodal\n"
            << s.m_max << ',' << s.sets_checked << ',' << s.failures.size() << ',' << s.non_unimodal.size() << '\n';
        return out.str();
    case Format::Text: {
        std::string checks;
        for (const auto& name : check_names(s.checks)) {
            checks += (checks.empty() ? "" : ",") + name;
        }
        out << "sweep max(S) <= " << s.m_max << " checks " << checks << '\n';
        out << "sets checked: " << s.sets_checked << '\n';
        out << "failures: " << s.failures.size() << '\n';
        for (const auto& r : s.failures) {
            out << render(r, Format::Text);
        }
        if (s.checks & kCheckLogConcavity) {
            out << "non-unimodal sets: " << s.non_unimodal.size() << '\n';
        }
        out << "elapsed: " << std::fixed << std::setprecision(3) << s.elapsed_seconds << " s\n";
        return out.str();
    }
    }
    return {};
}

std::string render(const PeakCounts& counts, Format format)
{
    std::ostringstream out;
    switch (format) {
    case Format::Json: {
        json rows = json::array();
        for (const auto& [set, count] : counts) {
            rows.push_back(json{{"peak_set", set_json(set)}, {"count", std::to_string(count)}});
        }
        return rows.dump() + "\n";
    }
    case Format::Csv:
        out << "peak_set,count\n";
        for (const auto& [set, count] : counts) {
            out << csv_quote(set.to_string()) << ',' << count << '\n';
        }
        return out.str();
    case Format::Text:
        for (const auto& [set, count] : counts) {
            out << set.to_string() << ':' << count << '\n';
        }
        return out.str();
    }
    return {};
}

} // namespace peakpoly
