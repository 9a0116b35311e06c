#include "mseg/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "mseg/rsk.hpp"

namespace mseg {

namespace {

std::vector<Segment> all_segments(const EnumerationBounds& bounds)
{
    std::vector<Segment> segs;
    for (long long b = bounds.support_min; b <= bounds.support_max; ++b)
        for (long long e = b; e <= bounds.support_max; ++e)
            segs.push_back(Segment::make(b, e));
    return segs;
}

void check_bounds(const EnumerationBounds& bounds)
{
    if (bounds.support_min > bounds.support_max)
        throw PreconditionError("enumeration bounds need support_min <= support_max");
    if (bounds.max_segments < 0)
        throw PreconditionError("enumeration bounds need max_segments >= 0");
    checked_index(bounds.support_min);
    checked_index(bounds.support_max);
}

bool try_augment(std::size_t x, const std::vector<std::vector<std::size_t>>& adj,
                 std::vector<long>& match_right, std::vector<bool>& seen)
{
    for (auto y : adj[x]) {
        if (seen[y])
            continue;
        seen[y] = true;
        if (match_right[y] < 0 ||
            try_augment(static_cast<std::size_t>(match_right[y]), adj, match_right, seen)) {
            match_right[y] = static_cast<long>(x);
            return true;
        }
    }
    return false;
}

// Longest strictly increasing chain starting at x, minus one, by plain recursion.
int brute_depth(std::size_t x, const std::vector<Segment>& segs, std::vector<int>& memo)
{
    if (memo[x] >= 0)
        return memo[x];
    int best = 0;
    for (std::size_t y = 0; y < segs.size(); ++y)
        if (precedes(segs[x], segs[y]))
            best = std::max(best, brute_depth(y, segs, memo) + 1);
    return memo[x] = best;
}

} // namespace

std::uint64_t enumerate_multisegments(const EnumerationBounds& bounds,
                                      const std::function<void(const Multisegment&)>& visit)
{
    check_bounds(bounds);
    const auto segs = all_segments(bounds);
    std::uint64_t visited = 0;
    std::vector<Segment> chosen;
    auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
        if (remaining == 0) {
            visit(Multisegment(chosen));
            ++visited;
            return;
        }
        for (std::size_t s = from; s < segs.size(); ++s) {
            chosen.push_back(segs[s]);
            self(self, s, remaining - 1);
            chosen.pop_back();
        }
    };
    for (int k = 0; k <= bounds.max_segments; ++k) {
        if (k > 0 && segs.empty())
            break;
        rec(rec, 0, k);
    }
    return visited;
}

std::uint64_t count_multisegments(const EnumerationBounds& bounds)
{
    check_bounds(bounds);
    const std::uint64_t n = static_cast<std::uint64_t>(bounds.support_max - bounds.support_min) + 1;
    const std::uint64_t segs = n * (n + 1) / 2;
    // Multisets of size k from segs kinds: C(segs + k - 1, k), built incrementally.
    std::uint64_t total = 1;
    std::uint64_t term = 1;
    for (int k = 1; k <= bounds.max_segments; ++k) {
        term = term * (segs + static_cast<std::uint64_t>(k) - 1) / static_cast<std::uint64_t>(k);
        total += term;
    }
    return total;
}

std::size_t dilworth_width(const Multisegment& m)
{
    const auto segs = m.segments();
    const std::size_t n = segs.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (precedes(segs[x], segs[y]))
                adj[x].push_back(y);
    std::vector<long> match_right(n, -1);
    std::size_t matching = 0;
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<bool> seen(n, false);
        if (try_augment(x, adj, match_right, seen))
            ++matching;
    }
    return n - matching;
}

bool brute_permissible(const Multisegment& l, const Multisegment& m)
{
    if (!is_ladder(l))
        throw PreconditionError("brute_permissible requires a ladder, got " + to_string(l));
    if (m.size() > kBrutePermissibleLimit)
        throw PreconditionError("brute_permissible is limited to " + std::to_string(kBrutePermissibleLimit) +
                                " occurrences, got " + std::to_string(m.size()));
    // Both sides listed from the <<-largest element down.
    std::vector<Segment> ladder(l.segments().begin(), l.segments().end());
    std::sort(ladder.begin(), ladder.end(), [](Segment a, Segment b) { return a.e > b.e; });
    const auto segs = m.segments();
    const std::size_t n = segs.size();

    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Segment> chain;
        for (std::size_t x = 0; x < n; ++x)
            if (mask & (1u << x))
                chain.push_back(segs[x]);
        bool is_chain = true;
        for (std::size_t s = 0; s < chain.size() && is_chain; ++s)
            for (std::size_t t = s + 1; t < chain.size(); ++t)
                if (!precedes(chain[s], chain[t]) && !precedes(chain[t], chain[s]))
                    is_chain = false;
        if (!is_chain)
            continue;
        std::sort(chain.begin(), chain.end(), [](Segment a, Segment b) { return a.e > b.e; });
        if (chain.size() > ladder.size())
            return false;

        // Every increasing injection phi is a choice of chain.size() positions.
        std::vector<bool> pick(ladder.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(chain.size()), true);
        bool found = false;
        do {
            std::size_t t = 0;
            bool ok = true;
            for (std::size_t p = 0; p < ladder.size() && ok; ++p) {
                if (!pick[p])
                    continue;
                ok = ladder[p].b <= chain[t].e && chain[t].e <= ladder[p].e;
                ++t;
            }
            found = ok;
        } while (!found && std::prev_permutation(pick.begin(), pick.end()));
        if (!found)
            return false;
    }
    return true;
}

std::uint64_t hook_length_count(const Partition& mu)
{
    if (mu.size() > 20)
        throw PreconditionError("hook_length_count is limited to partitions of at most 20");
    auto conj = conjugate(mu);
    std::uint64_t numerator = 1;
    for (std::uint64_t k = 2; k <= static_cast<std::uint64_t>(mu.size()); ++k)
        numerator *= k;
    std::uint64_t hooks = 1;
    for (std::size_t i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i); ++j) {
            auto arm = static_cast<std::uint64_t>(mu.part(i) - j);
            auto leg = static_cast<std::uint64_t>(conj.part(static_cast<std::size_t>(j))) - i;
            hooks *= arm + leg + 1;
        }
    return numerator / hooks;
}

std::int64_t a_invariant_by_cells(const Partition& mu)
{
    std::int64_t total = 0;
    for (std::size_t i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i); ++j)
            for (std::size_t below = i + 1; below <= mu.length(); ++below)
                if (mu.part(below) >= j)
                    total += 2;
    return total;
}

bool kv_choice_independence(const Multisegment& m)
{
    if (m.size() > kChoiceIndependenceLimit)
        throw PreconditionError("kv_choice_independence is limited to " +
                                std::to_string(kChoiceIndependenceLimit) + " occurrences, got " +
                                std::to_string(m.size()));
    if (m.empty())
        throw PreconditionError("kv_choice_independence requires a nonempty multisegment");
    const std::vector<Segment> segs(m.segments().begin(), m.segments().end());
    std::vector<int> memo(segs.size(), -1);
    int max_depth = 0;
    for (std::size_t x = 0; x < segs.size(); ++x)
        max_depth = std::max(max_depth, brute_depth(x, segs, memo));

    // Every valid enumeration of each class, as permutations of occurrences.
    std::vector<std::vector<std::vector<Segment>>> options(static_cast<std::size_t>(max_depth) + 1);
    for (int d = 0; d <= max_depth; ++d) {
        std::vector<std::size_t> ids;
        for (std::size_t x = 0; x < segs.size(); ++x)
            if (memo[x] == d)
                ids.push_back(x);
        std::sort(ids.begin(), ids.end());
        do {
            bool nested = true;
            for (std::size_t r = 1; r < ids.size(); ++r)
                if (segs[ids[r - 1]].b > segs[ids[r]].b || segs[ids[r - 1]].e < segs[ids[r]].e)
                    nested = false;
            if (!nested)
                continue;
            std::vector<Segment> order;
            for (auto x : ids)
                order.push_back(segs[x]);
            options[static_cast<std::size_t>(d)].push_back(std::move(order));
        } while (std::next_permutation(ids.begin(), ids.end()));
        if (options[static_cast<std::size_t>(d)].empty())
            return false;
    }

    const auto reference = knuth_viennot(m);
    std::vector<std::size_t> choice(options.size(), 0);
    std::vector<std::vector<Segment>> classes(options.size());
    while (true) {
        for (std::size_t d = 0; d < options.size(); ++d)
            classes[d] = options[d][choice[d]];
        if (knuth_viennot_from_classes(classes) != reference)
            return false;
        std::size_t d = 0;
        while (d < options.size() && ++choice[d] == options[d].size())
            choice[d++] = 0;
        if (d == options.size())
            break;
    }
    return true;
}

} // namespace mseg
