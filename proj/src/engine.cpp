#include "peakpoly/engine.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <utility>

#include "peakpoly/errors.hpp"

namespace peakpoly {

std::vector<DerivedPair> derived_sets(const PeakSet& s)
{
    if (s.empty()) {
        throw InvalidArgument("derived sets are only defined for a non-empty peak set");
    }
    const auto& pos = s.positions();
    std::vector<DerivedPair> out;
    out.reserve(pos.size());
    for (std::size_t l = 0; l < pos.size(); ++l) {
        std::vector<int> lowered(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(l));
        std::vector<int> omitted = lowered;
        lowered.push_back(pos[l] - 1);
        for (std::size_t r = l + 1; r < pos.size(); ++r) {
            lowered.push_back(pos[r] - 1);
            omitted.push_back(pos[r] - 1);
        }
        // i_l - 1 can collide with i_{l-1}; that is not a set any permutation has.
        DerivedPair pair;
        pair.index = static_cast<int>(l) + 1;
        pair.position = pos[l];
        if (l > 0 && lowered[l] == lowered[l - 1]) {
            throw InvalidArgument("peak set " + s.to_string() + " has adjacent positions " +
                                  std::to_string(pos[l - 1]) + "," + std::to_string(pos[l]) +
                                  "; lowering would collide");
        }
        if (lowered.front() < 1) {
            throw InvalidArgument("peak set " + s.to_string() + " contains position 1, which cannot be lowered");
        }
        pair.lowered = PeakSet(std::move(lowered));
        pair.lowered_admissible = is_structurally_admissible(pair.lowered);
        pair.omitted = PeakSet(std::move(omitted));
        out.push_back(std::move(pair));
    }
    return out;
}

std::shared_ptr<const BinomialPolynomial> PolynomialCache::find(const PeakSet& s) const
{
    std::shared_lock lock(mutex_);
    auto it = entries_.find(s);
    return it == entries_.end() ? nullptr : it->second;
}

std::shared_ptr<const BinomialPolynomial> PolynomialCache::insert(const PeakSet& s, BinomialPolynomial p)
{
    auto value = std::make_shared<const BinomialPolynomial>(std::move(p));
    std::unique_lock lock(mutex_);
    auto it = entries_.find(s);
    if (it != entries_.end()) {
        return it->second;
    }
    if (max_entries_ == 0 || entries_.size() < max_entries_) {
        entries_.emplace(s, value);
    }
    return value;
}

std::size_t PolynomialCache::size() const
{
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void PolynomialCache::clear()
{
    std::unique_lock lock(mutex_);
    entries_.clear();
}

PeakEngine::PeakEngine(EngineOptions options)
    : cache_(options.cache_enabled ? std::make_shared<PolynomialCache>(options.cache_limit) : nullptr)
{
}

PeakEngine::PeakEngine(std::shared_ptr<PolynomialCache> cache) : cache_(std::move(cache)) {}

std::shared_ptr<const BinomialPolynomial> PeakEngine::polynomial(const PeakSet& s) const
{
    if (s.empty()) {
        static const auto one = std::make_shared<const BinomialPolynomial>(BinomialPolynomial::constant(1));
        return one;
    }
    if (!is_structurally_admissible(s)) {
        // No permutation has this peak set, so its counts (and polynomial) vanish.
        static const auto zero = std::make_shared<const BinomialPolynomial>();
        return zero;
    }
    if (cache_) {
        if (auto hit = cache_->find(s)) {
            return hit;
        }
    }

    const std::int64_t m = s.max();
    std::vector<BinomialPolynomial> summands;
    for (const auto& pair : derived_sets(s)) {
        summands.push_back(*polynomial(pair.lowered));
        summands.push_back(*polynomial(pair.omitted));
    }
    auto delta = recenter(add(summands), m);
    auto p = antidifference(delta, m, 0);
    assert(p.degree() == m - 1);

    if (cache_) {
        return cache_->insert(s, std::move(p));
    }
    return std::make_shared<const BinomialPolynomial>(std::move(p));
}

BinomialPolynomial PeakEngine::peak_polynomial(const PeakSet& s) const
{
    if (auto why = admissibility_violation(s); !why.empty()) {
        throw InadmissibleSet("peak set " + s.to_string() + " is not admissible: " + why);
    }
    return *polynomial(s);
}

BigInt PeakEngine::count_via_formula(const PeakSet& s, int n) const
{
    if (n < 1) {
        throw InvalidArgument("n must be >= 1");
    }
    if (!is_admissible(s, n)) {
        return 0;
    }
    const auto exponent = static_cast<unsigned long>(n - static_cast<int>(s.size()) - 1);
    return evaluate(*polynomial(s), n) * pow2(exponent);
}

namespace {

using CountMemo = std::map<std::pair<PeakSet, int>, BigInt>;

BigInt count_recursive(const PeakSet& t, int q, CountMemo& memo)
{
    if (!is_admissible(t, q)) {
        return 0;
    }
    if (t.empty()) {
        return pow2(static_cast<unsigned long>(q - 1));
    }
    auto key = std::make_pair(t, q);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    // t is q-admissible, so q - 1 >= max(t) and the recursion applies at q - 1.
    const int prev = q - 1;
    BigInt total = 2 * count_recursive(t, prev, memo);
    for (const auto& pair : derived_sets(t)) {
        total += 2 * count_recursive(pair.lowered, prev, memo);
        total += count_recursive(pair.omitted, prev, memo);
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

BigInt PeakEngine::count_via_recursion(const PeakSet& s, int n) const
{
    if (n < 1) {
        throw InvalidArgument("n must be >= 1");
    }
    CountMemo memo;
    return count_recursive(s, n, memo);
}

const char* insertion_case_name(InsertionCase c)
{
    switch (c) {
    case InsertionCase::AppendLast:
        return "case1";
    case InsertionCase::LastPeak:
        return "case2";
    case InsertionCase::LoweredPeak:
        return "case3";
    case InsertionCase::PreviousPeak:
        return "case4.1";
    case InsertionCase::Front:
        return "case4.2";
    case InsertionCase::OmittedPeak:
        return "case5";
    }
    return "unknown";
}

std::size_t InsertionCases::total() const
{
    std::size_t n = 0;
    for (const auto& c : cases) {
        n += c.size();
    }
    return n;
}

InsertionCases insertion_cases(const PeakSet& s, int q, int cap)
{
    if (s.empty()) {
        throw InvalidArgument("insertion cases need a non-empty peak set");
    }
    if (auto why = admissibility_violation(s); !why.empty()) {
        throw InadmissibleSet("peak set " + s.to_string() + " is not admissible: " + why);
    }
    if (q < s.max()) {
        throw InvalidArgument("insertion construction needs q >= max(S) = " + std::to_string(s.max()));
    }

    const auto pairs = derived_sets(s);
    std::vector<PeakSet> wanted{s};
    for (const auto& pair : pairs) {
        wanted.push_back(pair.lowered);
        wanted.push_back(pair.omitted);
    }
    const auto sources = permutations_with_peak_sets(q, wanted, cap);
    const int top = q + 1;
    const int last_peak = s.positions().back();

    InsertionCases out;
    out.set = s;
    out.q = q;
    auto emit = [&](InsertionCase c, const std::vector<Permutation>& from, int position) {
        auto& dst = out.cases[static_cast<std::size_t>(c)];
        for (const auto& pi : from) {
            dst.push_back(pi.with_inserted(position, top));
        }
    };

    const auto& same = sources.at(s);
    emit(InsertionCase::AppendLast, same, top);
    emit(InsertionCase::LastPeak, same, last_peak);
    for (std::size_t l = 0; l < pairs.size(); ++l) {
        const auto& lowered = sources.at(pairs[l].lowered);
        emit(InsertionCase::LoweredPeak, lowered, pairs[l].position);
        if (l == 0) {
            emit(InsertionCase::Front, lowered, 1);
        } else {
            emit(InsertionCase::PreviousPeak, lowered, pairs[l - 1].position);
        }
        emit(InsertionCase::OmittedPeak, sources.at(pairs[l].omitted), pairs[l].position);
    }
    for (auto& c : out.cases) {
        std::sort(c.begin(), c.end());
    }
    return out;
}

} // namespace peakpoly
