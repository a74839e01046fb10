#include "peakpoly/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "peakpoly/errors.hpp"

namespace peakpoly {

namespace {

void require_nonempty_admissible(const PeakSet& s)
{
    if (s.empty()) {
        throw InvalidArgument("this check needs a non-empty peak set");
    }
    if (auto why = admissibility_violation(s); !why.empty()) {
        throw InadmissibleSet("peak set " + s.to_string() + " is not admissible: " + why);
    }
}

std::vector<BigInt> coefficients_at_max(const BinomialPolynomial& p, int m)
{
    const auto at_m = recenter(p, m);
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
        out.push_back(at_m.coefficient(static_cast<std::size_t>(j)));
    }
    return out;
}

VerificationReport base_report(const PeakEngine& engine, const PeakSet& s)
{
    VerificationReport r;
    r.set = s;
    r.m = s.max();
    r.coefficients = coefficients_at_max(engine.peak_polynomial(s), r.m);
    return r;
}

CheckResult failed(std::string name, Witness w)
{
    CheckResult c;
    c.name = std::move(name);
    c.pass = false;
    c.witness = std::move(w);
    return c;
}

CheckResult passed(std::string name)
{
    CheckResult c;
    c.name = std::move(name);
    return c;
}

} // namespace

unsigned parse_checks(const std::string& text)
{
    unsigned mask = 0;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                    token.end());
        if (token == "positivity") {
            mask |= kCheckPositivity;
        } else if (token == "logconcavity" || token == "log-concavity") {
            mask |= kCheckLogConcavity;
        } else if (token == "counts") {
            mask |= kCheckCounts;
        } else if (token == "all") {
            mask |= kAllChecks;
        } else {
            throw InvalidArgument("unknown check '" + token + "' (expected positivity, logconcavity, counts)");
        }
    }
    if (mask == 0) {
        throw InvalidArgument("no checks selected");
    }
    return mask;
}

std::vector<std::string> check_names(unsigned checks)
{
    std::vector<std::string> out;
    if (checks & kCheckPositivity) {
        out.emplace_back("positivity");
    }
    if (checks & kCheckLogConcavity) {
        out.emplace_back("logconcavity");
    }
    if (checks & kCheckCounts) {
        out.emplace_back("counts");
    }
    return out;
}

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass || !c.gating; });
}

const CheckResult* VerificationReport::find(const std::string& name) const
{
    for (const auto& c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

CheckResult check_difference_positivity(const BinomialPolynomial& p, int m, std::int64_t k_max)
{
    auto result = passed("positivity");
    if (m < 2 || k_max < m) {
        return result;
    }
    const auto table = difference_table(p, m - 1, m, k_max);
    for (int j = 1; j <= m - 1; ++j) {
        for (std::int64_t k = m; k <= k_max; ++k) {
            if (table.at(j, k) <= 0) {
                return failed("positivity", {j, k, std::nullopt, to_decimal(table.at(j, k))});
            }
        }
    }
    return result;
}

CheckResult check_log_concavity(std::span<const BigInt> c)
{
    auto result = passed("logconcavity");
    const int m = static_cast<int>(c.size()) - 1;
    for (int j = 2; j <= m - 2; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        const BigInt lhs = c[ju] * c[ju];
        const BigInt rhs = c[ju - 1] * c[ju + 1];
        if (lhs < rhs) {
            auto bad = failed("logconcavity", {j, m, std::nullopt, to_decimal(lhs - rhs)});
            bad.equalities = std::move(result.equalities);
            return bad;
        }
        if (lhs == rhs) {
            result.equalities.push_back(j);
        }
    }
    return result;
}

VerificationReport verify_positivity(const PeakEngine& engine, const PeakSet& s, std::int64_t k_max)
{
    require_nonempty_admissible(s);
    const int m = s.max();
    if (k_max < m) {
        throw InvalidArgument("k_max must be >= max(S) = " + std::to_string(m));
    }
    auto report = base_report(engine, s);
    const auto p = engine.peak_polynomial(s);
    const auto table = difference_table(p, m, m, k_max);

    auto positivity = check_difference_positivity(p, m, k_max);
    report.checks.push_back(std::move(positivity));

    auto top = passed("top-difference-vanishes");
    if (!forward_difference(p, m).is_zero()) {
        top = failed(top.name, {m, std::nullopt, std::nullopt, "nonzero polynomial"});
    } else {
        for (std::int64_t k = m; k <= k_max; ++k) {
            if (table.at(m, k) != 0) {
                top = failed(top.name, {m, k, std::nullopt, to_decimal(table.at(m, k))});
                break;
            }
        }
    }
    report.checks.push_back(std::move(top));

    const auto at_m = evaluate(p, m);
    report.checks.push_back(at_m == 0 ? passed("anchor-zero")
                                      : failed("anchor-zero", {0, m, std::nullopt, to_decimal(at_m)}));

    report.checks.push_back(p.degree() == m - 1
                                ? passed("degree")
                                : failed("degree", {std::nullopt, std::nullopt, std::nullopt,
                                                    std::to_string(p.degree())}));

    auto values = passed("evaluation-positive");
    for (std::int64_t k = m + 1; k <= k_max; ++k) {
        if (table.at(0, k) <= 0) {
            values = failed(values.name, {0, k, std::nullopt, to_decimal(table.at(0, k))});
            break;
        }
    }
    report.checks.push_back(std::move(values));
    return report;
}

VerificationReport verify_log_concavity(const PeakEngine& engine, const PeakSet& s)
{
    require_nonempty_admissible(s);
    auto report = base_report(engine, s);
    const auto& c = report.coefficients;
    const int m = report.m;

    auto lc = check_log_concavity(c);
    report.checks.push_back(std::move(lc));

    // c_1..c_{m-1} rises weakly, then falls weakly.
    auto uni = passed("unimodality");
    uni.gating = false;
    bool falling = false;
    for (int j = 2; j <= m - 1; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        if (c[ju] < c[ju - 1]) {
            falling = true;
        } else if (c[ju] > c[ju - 1] && falling) {
            uni.pass = false;
            uni.witness = Witness{j, m, std::nullopt, to_decimal(c[ju])};
            break;
        }
    }
    report.checks.push_back(std::move(uni));
    return report;
}

VerificationReport verify_counts(const PeakEngine& engine, const PeakSet& s, int n_max, EnumerationTable& table)
{
    if (auto why = admissibility_violation(s); !why.empty()) {
        throw InadmissibleSet("peak set " + s.to_string() + " is not admissible: " + why);
    }
    VerificationReport report;
    report.set = s;
    report.m = s.max();
    report.coefficients = coefficients_at_max(engine.peak_polynomial(s), report.m);

    auto check = passed("counts");
    for (int n = std::max(1, report.m + 1); n <= n_max; ++n) {
        CountRow row;
        row.n = n;
        row.formula = engine.count_via_formula(s, n);
        row.recursion = engine.count_via_recursion(s, n);
        bool agree = row.formula == row.recursion;
        if (n <= table.cap()) {
            row.brute = table.count(s, n);
            agree = agree && row.formula == big_from_u64(*row.brute);
        }
        if (!agree && check.pass) {
            check = failed("counts", {std::nullopt, std::nullopt, n, to_decimal(row.formula)});
        }
        report.counts.push_back(std::move(row));
    }
    report.checks.push_back(std::move(check));
    return report;
}

VerificationReport verify(const PeakEngine& engine, const PeakSet& s, const VerifyOptions& options,
                          EnumerationTable& table)
{
    if (options.checks == 0) {
        throw InvalidArgument("no checks selected");
    }
    if (options.checks & (kCheckPositivity | kCheckLogConcavity)) {
        require_nonempty_admissible(s);
    }
    VerificationReport merged;
    auto absorb = [&merged](VerificationReport&& part) {
        merged.set = std::move(part.set);
        merged.m = part.m;
        merged.coefficients = std::move(part.coefficients);
        for (auto& c : part.checks) {
            merged.checks.push_back(std::move(c));
        }
        for (auto& row : part.counts) {
            merged.counts.push_back(std::move(row));
        }
    };
    if (options.checks & kCheckPositivity) {
        absorb(verify_positivity(engine, s, s.max() + options.k_span));
    }
    if (options.checks & kCheckLogConcavity) {
        absorb(verify_log_concavity(engine, s));
    }
    if (options.checks & kCheckCounts) {
        absorb(verify_counts(engine, s, std::max(1, s.max() + options.n_span), table));
    }
    return merged;
}

std::vector<PeakSet> admissible_sets(int m_max)
{
    std::vector<PeakSet> out;
    // Sets with max m: m together with a gap-respecting subset of {2..m-2}.
    std::vector<int> current;
    for (int m = 2; m <= m_max; ++m) {
        std::vector<PeakSet> with_max;
        std::vector<std::vector<int>> prefixes{{}};
        current.clear();
        std::function<void(int)> collect = [&](int from) {
            for (int v = from; v <= m - 2; ++v) {
                current.push_back(v);
                prefixes.push_back(current);
                collect(v + 2);
                current.pop_back();
            }
        };
        collect(2);
        for (auto& prefix : prefixes) {
            prefix.push_back(m);
            with_max.emplace_back(std::move(prefix));
        }
        std::sort(with_max.begin(), with_max.end());
        for (auto& s : with_max) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

SweepSummary sweep(const PeakEngine& engine, const SweepOptions& options)
{
    if (options.m_max < 2) {
        throw InvalidArgument("sweep needs m_max >= 2");
    }
    if (options.workers < 1) {
        throw InvalidArgument("sweep needs at least one worker");
    }
    const auto start = std::chrono::steady_clock::now();
    const auto sets = admissible_sets(options.m_max);
    std::vector<VerificationReport> reports(sets.size());
    EnumerationTable table(options.enumeration_cap);

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        try {
            for (auto i = next.fetch_add(1); i < sets.size(); i = next.fetch_add(1)) {
                reports[i] = verify(engine, sets[i], options.verify, table);
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
            next = sets.size();
        }
    };
    const int workers = std::min<int>(options.workers, static_cast<int>(std::max<std::size_t>(sets.size(), 1)));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    SweepSummary summary;
    summary.m_max = options.m_max;
    summary.checks = options.verify.checks;
    summary.sets_checked = sets.size();
    for (auto& r : reports) {
        if (const auto* uni = r.find("unimodality"); uni && !uni->pass) {
            summary.non_unimodal.push_back(r.set);
        }
        if (!r.passed()) {
            summary.failures.push_back(std::move(r));
        }
    }
    summary.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

} // namespace peakpoly
