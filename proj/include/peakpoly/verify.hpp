#pragma once

// Checks on peak polynomials: positivity of the differences at and past max(S),
// log-concavity/unimodality of the coefficients at max(S), three-way count
// agreement, and bulk sweeps over every admissible set up to a bound.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "peakpoly/bigint.hpp"
#include "peakpoly/engine.hpp"
#include "peakpoly/perm.hpp"

namespace peakpoly {

enum Check : unsigned {
    kCheckPositivity = 1u << 0,
    kCheckLogConcavity = 1u << 1,
    kCheckCounts = 1u << 2,
};

inline constexpr unsigned kAllChecks = kCheckPositivity | kCheckLogConcavity | kCheckCounts;

/// "positivity,logconcavity,counts" -> bit mask. Throws InvalidArgument on unknown names.
unsigned parse_checks(const std::string& text);
std::vector<std::string> check_names(unsigned checks);

/// Where a check failed. Only the coordinates relevant to the check are set.
struct Witness {
    std::optional<int> j;
    std::optional<std::int64_t> k;
    std::optional<int> n;
    std::string value; // offending value, decimal
};

struct CheckResult {
    std::string name;
    bool pass = true;
    /// Non-gating checks are reported but never fail a report.
    bool gating = true;
    std::optional<Witness> witness;
    /// Log-concavity: indices j where c_j^2 == c_{j-1} c_{j+1}.
    std::vector<int> equalities;
};

struct CountRow {
    int n = 0;
    BigInt formula;
    BigInt recursion;
    std::optional<std::uint64_t> brute;
};

struct VerificationReport {
    PeakSet set;
    int m = 0;
    std::vector<CheckResult> checks;
    /// (Delta^j p_S)(m) for j = 0..m.
    std::vector<BigInt> coefficients;
    std::vector<CountRow> counts;

    bool passed() const;
    const CheckResult* find(const std::string& name) const;
};

/// (Delta^j p)(k) > 0 for 1 <= j <= m-1 and m <= k <= k_max, on any polynomial.
/// The witness is the first failing (j, k) in row-major order.
CheckResult check_difference_positivity(const BinomialPolynomial& p, int m, std::int64_t k_max);

/// c_j^2 >= c_{j-1} c_{j+1} for 2 <= j <= size-3, i.e. over the interior of
/// c_0..c_m with the boundary entries excluded. Witness j is the first failure.
CheckResult check_log_concavity(std::span<const BigInt> c);

/// (Delta^j p_S)(k) > 0 for 1 <= j <= m-1 and m <= k <= k_max; Delta^m p_S = 0;
/// p_S(m) = 0; deg p_S = m-1; p_S(k) > 0 for m < k <= k_max.
VerificationReport verify_positivity(const PeakEngine& engine, const PeakSet& s, std::int64_t k_max);

/// c_j^2 >= c_{j-1} c_{j+1} for 2 <= j <= m-2 with c_j = (Delta^j p_S)(m);
/// unimodality of c_1..c_{m-1} is reported without gating.
VerificationReport verify_log_concavity(const PeakEngine& engine, const PeakSet& s);

/// For n in max(S)+1..n_max (1..n_max for the empty set): formula == recursion,
/// and == brute force while n <= table.cap().
VerificationReport verify_counts(const PeakEngine& engine, const PeakSet& s, int n_max, EnumerationTable& table);

struct VerifyOptions {
    unsigned checks = kCheckPositivity | kCheckLogConcavity;
    /// Positivity is checked for m <= k <= m + k_span.
    int k_span = 5;
    /// Counts are checked for n up to m + n_span.
    int n_span = 2;
};

/// Runs the selected checks and merges them into one report.
VerificationReport verify(const PeakEngine& engine, const PeakSet& s, const VerifyOptions& options,
                          EnumerationTable& table);

/// Every structurally admissible non-empty set with max <= m_max, ordered by
/// (max, lexicographic positions).
std::vector<PeakSet> admissible_sets(int m_max);

struct SweepOptions {
    int m_max = 10;
    VerifyOptions verify;
    int workers = 1;
    int enumeration_cap = kDefaultEnumerationCap;
};

struct SweepSummary {
    int m_max = 0;
    unsigned checks = 0;
    std::size_t sets_checked = 0;
    std::vector<VerificationReport> failures;
    /// Sets whose coefficient sequence is not unimodal (informational).
    std::vector<PeakSet> non_unimodal;
    double elapsed_seconds = 0.0;
};

/// Checks every admissible set with max <= m_max. The summary (timing aside)
/// is the same for any worker count.
SweepSummary sweep(const PeakEngine& engine, const SweepOptions& options);

} // namespace peakpoly
