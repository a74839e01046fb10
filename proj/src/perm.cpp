#include "peakpoly/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <thread>

#include "peakpoly/errors.hpp"

namespace peakpoly {

namespace {

void check_strictly_increasing(const std::vector<int>& v)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1) {
            throw InvalidArgument("peak positions must be >= 1, got " + std::to_string(v[i]));
        }
        if (i > 0 && v[i] == v[i - 1]) {
            throw InvalidArgument("duplicate peak position " + std::to_string(v[i]));
        }
        if (i > 0 && v[i] < v[i - 1]) {
            throw InvalidArgument("peak positions must be increasing: " + std::to_string(v[i - 1]) +
                                  " then " + std::to_string(v[i]));
        }
    }
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& token, const std::string& context)
{
    auto t = trim(token);
    if (t.empty()) {
        throw InvalidArgument("empty entry in " + context);
    }
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) {
        throw InvalidArgument("malformed integer '" + t + "' in " + context);
    }
    for (std::size_t j = i; j < t.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(t[j]))) {
            throw InvalidArgument("malformed integer '" + t + "' in " + context);
        }
    }
    try {
        return std::stoi(t);
    } catch (const std::out_of_range&) {
        throw InvalidArgument("integer '" + t + "' out of range in " + context);
    }
}

void check_cap(int n, int cap)
{
    if (n < 1) {
        throw InvalidArgument("permutation length must be >= 1, got " + std::to_string(n));
    }
    if (cap > kMaxEnumerationCap) {
        throw InvalidArgument("enumeration cap cannot exceed " + std::to_string(kMaxEnumerationCap));
    }
    if (n > cap) {
        throw ResourceLimit("enumerating S_" + std::to_string(n) + " exceeds the enumeration cap n <= " +
                            std::to_string(cap));
    }
}

// Visits every permutation of {1..n} whose first entry is `lead`, in
// lexicographic order.
template <typename Visit>
void for_each_with_lead(int n, int lead, Visit&& visit)
{
    std::vector<int> a(static_cast<std::size_t>(n));
    a[0] = lead;
    int v = 1;
    for (std::size_t i = 1; i < a.size(); ++i, ++v) {
        if (v == lead) {
            ++v;
        }
        a[i] = v;
    }
    do {
        visit(std::span<const int>(a));
    } while (std::next_permutation(a.begin() + 1, a.end()));
}

} // namespace

PeakSet::PeakSet(std::initializer_list<int> positions) : PeakSet(std::vector<int>(positions)) {}

PeakSet::PeakSet(std::vector<int> positions) : positions_(std::move(positions))
{
    check_strictly_increasing(positions_);
}

PeakSet PeakSet::parse(const std::string& text)
{
    auto t = trim(text);
    if (!t.empty() && t.front() == '{') {
        if (t.back() != '}') {
            throw InvalidArgument("unbalanced braces in peak set '" + text + "'");
        }
        t = trim(t.substr(1, t.size() - 2));
    }
    std::vector<int> out;
    if (t.empty()) {
        return PeakSet{};
    }
    std::size_t start = 0;
    while (true) {
        auto comma = t.find(',', start);
        out.push_back(parse_int(t.substr(start, comma - start), "peak set '" + text + "'"));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return PeakSet(std::move(out));
}

PeakSet PeakSet::from_mask(std::uint64_t mask)
{
    std::vector<int> out;
    for (int i = 0; i < 64; ++i) {
        if (mask & (std::uint64_t{1} << i)) {
            out.push_back(i);
        }
    }
    return PeakSet(std::move(out));
}

bool PeakSet::contains(int position) const
{
    return std::binary_search(positions_.begin(), positions_.end(), position);
}

std::uint64_t PeakSet::mask() const
{
    std::uint64_t m = 0;
    for (int p : positions_) {
        if (p >= 64) {
            throw InvalidArgument("peak position " + std::to_string(p) + " does not fit a 64-bit mask");
        }
        m |= std::uint64_t{1} << p;
    }
    return m;
}

std::string PeakSet::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(positions_[i]);
    }
    return s + "}";
}

Permutation::Permutation(std::initializer_list<int> entries) : Permutation(std::vector<int>(entries)) {}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries))
{
    const auto n = entries_.size();
    if (n == 0) {
        throw InvalidArgument("a permutation needs at least one entry");
    }
    std::vector<bool> seen(n + 1, false);
    for (int v : entries_) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
            throw InvalidArgument("entries are not a permutation of 1.." + std::to_string(n));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::parse(const std::string& text)
{
    auto t = trim(text);
    std::vector<int> out;
    if (t.find_first_of(" ,") == std::string::npos) {
        for (char c : t) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw InvalidArgument("malformed permutation '" + text + "'");
            }
            out.push_back(c - '0');
        }
    } else {
        std::string token;
        for (char c : t + " ") {
            if (c == ' ' || c == ',') {
                if (!token.empty()) {
                    out.push_back(parse_int(token, "permutation '" + text + "'"));
                    token.clear();
                }
            } else {
                token += c;
            }
        }
    }
    return Permutation(std::move(out));
}

Permutation Permutation::with_inserted(int position, int value) const
{
    std::vector<int> out(entries_);
    out.insert(out.begin() + (position - 1), value);
    return Permutation(std::move(out));
}

std::string Permutation::to_string() const
{
    const bool compact = entries_.size() <= 9;
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!compact && i) {
            s += ' ';
        }
        s += std::to_string(entries_[i]);
    }
    return s;
}

std::uint64_t peak_mask(std::span<const int> a) noexcept
{
    std::uint64_t m = 0;
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        if (a[i - 1] < a[i] && a[i] > a[i + 1]) {
            // 0-based index i is position i+1
            m |= std::uint64_t{1} << (i + 1);
        }
    }
    return m;
}

PeakSet peak_set(const Permutation& p)
{
    std::vector<int> out;
    const int n = p.size();
    for (int i = 2; i <= n - 1; ++i) {
        if (p.at(i - 1) < p.at(i) && p.at(i) > p.at(i + 1)) {
            out.push_back(i);
        }
    }
    return PeakSet(std::move(out));
}

std::string admissibility_violation(const PeakSet& s)
{
    if (s.empty()) {
        return {};
    }
    if (s[0] == 1) {
        return "position 1 has no left neighbour and can never be a peak";
    }
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == s[i - 1] + 1) {
            return "positions " + std::to_string(s[i - 1]) + " and " + std::to_string(s[i]) +
                   " are adjacent; two peaks cannot be consecutive";
        }
    }
    return {};
}

bool is_structurally_admissible(const PeakSet& s) { return admissibility_violation(s).empty(); }

bool is_admissible(const PeakSet& s, int n)
{
    if (n < 1) {
        return false;
    }
    if (s.empty()) {
        return true;
    }
    return is_structurally_admissible(s) && s.max() <= n - 1;
}

std::uint64_t factorial_u64(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

PeakCounts enumerate_by_peak_set(int n, int cap, int workers)
{
    check_cap(n, cap);
    workers = std::clamp(workers, 1, n);

    // One mask->count table per leading entry; merged in lead order afterwards.
    std::vector<std::map<std::uint64_t, std::uint64_t>> partial(static_cast<std::size_t>(n));
    auto run_lead = [&](int lead) {
        auto& table = partial[static_cast<std::size_t>(lead - 1)];
        for_each_with_lead(n, lead, [&](std::span<const int> a) { ++table[peak_mask(a)]; });
    };

    if (workers == 1) {
        for (int lead = 1; lead <= n; ++lead) {
            run_lead(lead);
        }
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int lead = 1 + w; lead <= n; lead += workers) {
                    run_lead(lead);
                }
            });
        }
    }

    std::map<std::uint64_t, std::uint64_t> merged;
    for (const auto& table : partial) {
        for (const auto& [mask, count] : table) {
            merged[mask] += count;
        }
    }
    PeakCounts out;
    for (const auto& [mask, count] : merged) {
        out.emplace(PeakSet::from_mask(mask), count);
    }
    return out;
}

std::uint64_t count_bruteforce(const PeakSet& s, int n, int cap)
{
    check_cap(n, cap);
    if (s.max() >= 64) {
        return 0;
    }
    const auto target = s.mask();
    std::uint64_t count = 0;
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 1);
    do {
        if (peak_mask(a) == target) {
            ++count;
        }
    } while (std::next_permutation(a.begin(), a.end()));
    return count;
}

std::vector<Permutation> all_permutations(int n, int cap)
{
    check_cap(n, cap);
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(factorial_u64(n)));
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 1);
    do {
        out.emplace_back(a);
    } while (std::next_permutation(a.begin(), a.end()));
    return out;
}

std::map<PeakSet, std::vector<Permutation>> permutations_with_peak_sets(int n, std::span<const PeakSet> wanted,
                                                                        int cap)
{
    check_cap(n, cap);
    std::map<std::uint64_t, PeakSet> by_mask;
    std::map<PeakSet, std::vector<Permutation>> out;
    for (const auto& s : wanted) {
        out[s];
        if (s.max() < 64) {
            by_mask.emplace(s.mask(), s);
        }
    }
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 1);
    do {
        auto it = by_mask.find(peak_mask(a));
        if (it != by_mask.end()) {
            out[it->second].emplace_back(a);
        }
    } while (std::next_permutation(a.begin(), a.end()));
    return out;
}

const PeakCounts& EnumerationTable::counts(int n)
{
    std::lock_guard lock(mutex_);
    auto it = tables_.find(n);
    if (it == tables_.end()) {
        it = tables_.emplace(n, enumerate_by_peak_set(n, cap_)).first;
    }
    return it->second;
}

std::uint64_t EnumerationTable::count(const PeakSet& s, int n)
{
    const auto& table = counts(n);
    auto it = table.find(s);
    return it == table.end() ? 0 : it->second;
}

} // namespace peakpoly
