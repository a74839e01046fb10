#pragma once

// Peak polynomials and peak-set counts via the insertion recursion.
//
// For S = {i_1 < ... < i_s} and each l, the lowered set S_{i_l} shifts i_l and
// everything after it down by one; the omitted set drops i_l and shifts the
// rest down by one. Then
//
//   |P_S(q+1)| = 2|P_S(q)| + 2 sum_l |P_{S_{i_l}}(q)| + sum_l |P_{omit_l}(q)|   (q >= max S)
//   Delta p_S  = sum_l p_{S_{i_l}} + sum_l p_{omit_l}
//
// and p_S(max S) = 0 pins down the constant of summation.

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "peakpoly/bigint.hpp"
#include "peakpoly/intpoly.hpp"
#include "peakpoly/perm.hpp"

namespace peakpoly {

struct DerivedPair {
    int index = 0;    // l, 1-based
    int position = 0; // i_l
    PeakSet lowered;
    bool lowered_admissible = false;
    PeakSet omitted;
};

/// One pair per element of S, in increasing order of l. Throws on empty S, and
/// when lowering would repeat a position or reach 0 (only for sets containing 1
/// or two adjacent positions).
std::vector<DerivedPair> derived_sets(const PeakSet& s);

/// Memo of peak polynomials keyed by peak set. Concurrent lookups and inserts
/// are safe; when two threads compute the same key the first insert wins.
class PolynomialCache {
public:
    /// `max_entries` == 0 means unbounded. A full cache stops accepting inserts.
    explicit PolynomialCache(std::size_t max_entries = 0) : max_entries_(max_entries) {}

    std::shared_ptr<const BinomialPolynomial> find(const PeakSet& s) const;
    std::shared_ptr<const BinomialPolynomial> insert(const PeakSet& s, BinomialPolynomial p);
    std::size_t size() const;
    void clear();

private:
    std::size_t max_entries_;
    mutable std::shared_mutex mutex_;
    std::map<PeakSet, std::shared_ptr<const BinomialPolynomial>> entries_;
};

struct EngineOptions {
    bool cache_enabled = true;
    std::size_t cache_limit = 0;
};

class PeakEngine {
public:
    explicit PeakEngine(EngineOptions options = {});
    /// Shares an existing cache across engines (and threads).
    explicit PeakEngine(std::shared_ptr<PolynomialCache> cache);

    /// p_S centred at max(S) (centre 0 and constant 1 for the empty set).
    /// Throws InadmissibleSet if S is non-empty and not structurally admissible.
    BinomialPolynomial peak_polynomial(const PeakSet& s) const;

    /// p_S(n) * 2^(n-|S|-1) when S is n-admissible, otherwise 0.
    BigInt count_via_formula(const PeakSet& s, int n) const;

    /// |P_S(n)| from the count recursion, memoized per call.
    BigInt count_via_recursion(const PeakSet& s, int n) const;

    const std::shared_ptr<PolynomialCache>& cache() const noexcept { return cache_; }

private:
    std::shared_ptr<const BinomialPolynomial> polynomial(const PeakSet& s) const;

    std::shared_ptr<PolynomialCache> cache_; // null when caching is disabled
};

enum class InsertionCase : std::size_t {
    AppendLast = 0, // Case 1: pi in P_S(q), q+1 appended
    LastPeak,       // Case 2: pi in P_S(q), q+1 inserted at position i_s
    LoweredPeak,    // Case 3: pi in P_{S_{i_l}}(q), q+1 inserted at position i_l
    PreviousPeak,   // Case 4.1: pi in P_{S_{i_l}}(q), l > 1, q+1 inserted at position i_{l-1}
    Front,          // Case 4.2: pi in P_{S_{i_1}}(q), q+1 prepended
    OmittedPeak,    // Case 5: pi in P_{omit_l}(q), q+1 inserted at position i_l
};

inline constexpr std::size_t kInsertionCaseCount = 6;

const char* insertion_case_name(InsertionCase c);

struct InsertionCases {
    PeakSet set;
    int q = 0;
    /// Indexed by InsertionCase; each list sorted lexicographically.
    std::array<std::vector<Permutation>, kInsertionCaseCount> cases;

    const std::vector<Permutation>& operator[](InsertionCase c) const
    {
        return cases[static_cast<std::size_t>(c)];
    }
    std::size_t total() const;
};

/// Builds P_S(q+1) from permutations of length q by inserting q+1, labelled by
/// construction case. Requires non-empty admissible S and q >= max(S); the
/// source permutations come from brute force over S_q.
InsertionCases insertion_cases(const PeakSet& s, int q, int cap = kDefaultEnumerationCap);

} // namespace peakpoly
