#pragma once

// Permutations in one-line notation, peak sets, and the exhaustive
// enumeration oracle over S_n. All indices are 1-based.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

namespace peakpoly {

inline constexpr int kDefaultEnumerationCap = 10;
// Peak sets are packed into a 64-bit mask during enumeration and n! must fit in
// 64 bits, so the cap cannot be raised past this.
inline constexpr int kMaxEnumerationCap = 20;

/// Strictly increasing sequence of positive positions. The empty set is valid.
class PeakSet {
public:
    PeakSet() = default;
    PeakSet(std::initializer_list<int> positions);
    explicit PeakSet(std::vector<int> positions);

    /// Parses "3,5,8" (whitespace tolerated). "", "{}" and "{3,5}" are accepted.
    /// Duplicates, descending order and non-positive entries are rejected.
    static PeakSet parse(const std::string& text);

    /// Builds from a bitmask where bit i marks position i.
    static PeakSet from_mask(std::uint64_t mask);

    const std::vector<int>& positions() const noexcept { return positions_; }
    std::size_t size() const noexcept { return positions_.size(); }
    bool empty() const noexcept { return positions_.empty(); }
    bool contains(int position) const;
    /// Largest position, 0 for the empty set.
    int max() const noexcept { return positions_.empty() ? 0 : positions_.back(); }
    int operator[](std::size_t i) const { return positions_[i]; }

    /// Bit i set for each position i. Requires max() < 64.
    std::uint64_t mask() const;

    /// "{3,5,8}", "{}" for the empty set.
    std::string to_string() const;

    auto operator<=>(const PeakSet&) const = default;
    bool operator==(const PeakSet&) const = default;

private:
    std::vector<int> positions_;
};

class Permutation {
public:
    /// Validates that entries is a bijection on {1..n}, n >= 1.
    explicit Permutation(std::vector<int> entries);
    Permutation(std::initializer_list<int> entries);

    /// Parses "25143" for n <= 9 or "2 5 1 4 3" / "2,5,1,4,3" in general.
    static Permutation parse(const std::string& text);

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    /// 1-based access, as in the one-line notation.
    int at(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
    std::span<const int> entries() const noexcept { return entries_; }

    /// Returns a copy with `value` placed so that it ends up at 1-based `position`.
    Permutation with_inserted(int position, int value) const;

    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> entries_;
};

/// Indices i with 2 <= i <= n-1 and pi_{i-1} < pi_i > pi_{i+1}.
PeakSet peak_set(const Permutation& p);

/// Peak mask of a raw one-line sequence; bit i marks a peak at position i.
std::uint64_t peak_mask(std::span<const int> entries) noexcept;

/// S is empty, or 1 is not in S and no two elements are consecutive.
bool is_structurally_admissible(const PeakSet& s);

/// Some permutation of length n has peak set exactly s.
bool is_admissible(const PeakSet& s, int n);

/// Human-readable reason why `s` is not structurally admissible, empty if it is.
std::string admissibility_violation(const PeakSet& s);

using PeakCounts = std::map<PeakSet, std::uint64_t>;

/// Counts every permutation of S_n by its peak set; absent keys have count 0.
/// `workers` > 1 splits the enumeration by leading entry; the result does not
/// depend on the worker count. Throws ResourceLimit if n > cap.
PeakCounts enumerate_by_peak_set(int n, int cap = kDefaultEnumerationCap, int workers = 1);

/// |{pi in S_n : P(pi) = s}| by exhaustive scan.
std::uint64_t count_bruteforce(const PeakSet& s, int n, int cap = kDefaultEnumerationCap);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n, int cap = kDefaultEnumerationCap);

/// Every permutation of S_n with peak set in `wanted`, bucketed by peak set,
/// each bucket in lexicographic order.
std::map<PeakSet, std::vector<Permutation>> permutations_with_peak_sets(
    int n, std::span<const PeakSet> wanted, int cap = kDefaultEnumerationCap);

/// Thread-safe memo of enumerate_by_peak_set results keyed by n.
class EnumerationTable {
public:
    explicit EnumerationTable(int cap = kDefaultEnumerationCap) : cap_(cap) {}

    int cap() const noexcept { return cap_; }
    const PeakCounts& counts(int n);
    std::uint64_t count(const PeakSet& s, int n);

private:
    int cap_;
    std::mutex mutex_;
    std::map<int, PeakCounts> tables_;
};

std::uint64_t factorial_u64(int n);

} // namespace peakpoly
