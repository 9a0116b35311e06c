#include "mseg/rsk.hpp"

#include <algorithm>
#include <functional>

namespace mseg {

namespace {

std::vector<int> depths(std::span<const Segment> segs)
{
    // Canonical order sorts by end, and a << b forces e(a) < e(b), so every
    // successor of position i sits at a later position.
    std::vector<int> depth(segs.size(), 0);
    for (std::size_t i = segs.size(); i-- > 0;)
        for (std::size_t j = i + 1; j < segs.size(); ++j)
            if (precedes(segs[i], segs[j]))
                depth[i] = std::max(depth[i], depth[j] + 1);
    return depth;
}

// Greedy earliest-fit matching of a chain (largest segment first) into the
// ladder intervals (largest first). Earliest fit is optimal because both the
// chain ends and the ladder intervals move strictly downward.
bool chain_embeds(std::span<const Segment> chain_desc, std::span<const Segment> ladder_desc)
{
    std::size_t next = 0;
    for (auto seg : chain_desc) {
        while (next < ladder_desc.size() &&
               !(ladder_desc[next].b <= seg.e && seg.e <= ladder_desc[next].e))
            ++next;
        if (next == ladder_desc.size())
            return false;
        ++next;
    }
    return true;
}

} // namespace

DepthTable depth_function(const Multisegment& m)
{
    if (m.empty())
        throw PreconditionError("depth function requires a nonempty multisegment");
    auto segs = m.segments();
    auto d = depths(segs);
    DepthTable table;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        table.entries.push_back({i, segs[i], d[i]});
        table.max_depth = std::max(table.max_depth, d[i]);
    }
    return table;
}

KnuthViennotResult knuth_viennot_from_classes(std::span<const std::vector<Segment>> classes)
{
    std::vector<Segment> ladder;
    std::vector<Segment> rest;
    for (const auto& cls : classes) {
        if (cls.empty())
            throw PreconditionError("empty depth class");
        for (std::size_t r = 1; r < cls.size(); ++r)
            if (cls[r - 1].b > cls[r].b || cls[r - 1].e < cls[r].e)
                throw PreconditionError("depth class enumeration is not nested: " +
                                        to_string(cls[r - 1]) + " before " + to_string(cls[r]));
        // Cycle (i_1, ..., i_l): Delta*_{i_r} takes its end from i_{r+1}.
        for (std::size_t r = 0; r < cls.size(); ++r) {
            Segment star{cls[r].b, cls[(r + 1) % cls.size()].e};
            if (r + 1 == cls.size())
                ladder.push_back(star);
            else
                rest.push_back(star);
        }
    }
    return {Multisegment(std::move(ladder)), Multisegment(std::move(rest))};
}

KnuthViennotResult knuth_viennot(const Multisegment& m)
{
    if (m.empty())
        throw PreconditionError("Knuth-Viennot step requires a nonempty multisegment");
    auto segs = m.segments();
    auto d = depths(segs);
    int max_depth = *std::max_element(d.begin(), d.end());
    std::vector<std::vector<Segment>> classes(static_cast<std::size_t>(max_depth) + 1);
    for (std::size_t i = 0; i < segs.size(); ++i)
        classes[static_cast<std::size_t>(d[i])].push_back(segs[i]);
    for (auto& cls : classes)
        std::stable_sort(cls.begin(), cls.end(), [](Segment a, Segment b) {
            return a.b != b.b ? a.b < b.b : a.e > b.e;
        });

    auto result = knuth_viennot_from_classes(classes);

    if (!is_ladder(result.ladder))
        throw InvariantViolation("Knuth-Viennot ladder " + to_string(result.ladder) +
                                 " is not a ladder for m = " + to_string(m));
    if (wt(result.ladder) + wt(result.rest) != wt(m))
        throw InvariantViolation("Knuth-Viennot step changed the weight of m = " + to_string(m));
    if (!is_permissible_pair(result.ladder, result.rest))
        throw InvariantViolation("Knuth-Viennot output (" + to_string(result.ladder) + ", " +
                                 to_string(result.rest) + ") is not permissible for m = " +
                                 to_string(m));
    return result;
}

LadderSequence rsk_transform(const Multisegment& m)
{
    LadderSequence seq;
    Multisegment current = m;
    while (!current.empty()) {
        auto step = knuth_viennot(current);
        seq.ladders.push_back(std::move(step.ladder));
        current = std::move(step.rest);
    }
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i].size() > seq[i - 1].size())
            throw InvariantViolation("shape violation: RSK ladder sizes increase for m = " +
                                     to_string(m) + " (" + to_string(seq) + ")");
    return seq;
}

std::size_t width(const Multisegment& m) { return rsk_transform(m).size(); }

bool is_permissible_pair(const Multisegment& l, const Multisegment& m)
{
    if (!is_ladder(l))
        throw PreconditionError("permissibility requires a ladder first argument, got " +
                                to_string(l));
    if (m.empty())
        return true;

    std::vector<Segment> ladder_desc(l.segments().rbegin(), l.segments().rend());
    auto segs = m.segments();
    const std::size_t n = segs.size();

    // Covering relation of << on the occurrences of m.
    std::vector<std::vector<std::size_t>> covers(n);
    std::vector<bool> has_lower(n, false);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (!precedes(segs[x], segs[y]))
                continue;
            has_lower[y] = true;
            bool covered = true;
            for (std::size_t z = 0; z < n && covered; ++z)
                if (precedes(segs[x], segs[z]) && precedes(segs[z], segs[y]))
                    covered = false;
            if (covered)
                covers[x].push_back(y);
        }

    // Maximal chains are exactly the cover paths from a minimal to a maximal
    // element. The path is built ascending; matching wants it descending.
    std::vector<Segment> path;
    std::function<bool(std::size_t)> walk = [&](std::size_t x) {
        path.push_back(segs[x]);
        bool ok = true;
        if (covers[x].empty()) {
            std::vector<Segment> desc(path.rbegin(), path.rend());
            ok = chain_embeds(desc, ladder_desc);
        } else {
            for (auto y : covers[x])
                if (!walk(y)) {
                    ok = false;
                    break;
                }
        }
        path.pop_back();
        return ok;
    };
    for (std::size_t x = 0; x < n; ++x)
        if (!has_lower[x] && !walk(x))
            return false;
    return true;
}

BitableauPair bitableau_of(const Multisegment& m)
{
    if (m.empty())
        throw PreconditionError("bitableau requires a nonempty multisegment");
    auto seq = rsk_transform(m);
    std::vector<std::vector<int>> p_rows;
    std::vector<std::vector<int>> q_rows;
    for (const auto& l : seq.ladders) {
        std::vector<int> p_row;
        std::vector<int> q_row;
        for (auto it = l.segments().rbegin(); it != l.segments().rend(); ++it) {
            p_row.push_back(it->b);
            q_row.push_back(it->e + 1);
        }
        p_rows.push_back(std::move(p_row));
        q_rows.push_back(std::move(q_row));
    }
    auto build = [&](std::vector<std::vector<int>> rows, const char* which) {
        try {
            return Tableau(std::move(rows));
        } catch (const PreconditionError& ex) {
            throw InvariantViolation(std::string("shape violation in ") + which + " for m = " +
                                     to_string(m) + ": " + ex.what());
        }
    };
    BitableauPair pq(build(std::move(p_rows), "P"), build(std::move(q_rows), "Q"));
    if (!pair_checks(pq).permissible)
        throw InvariantViolation("bitableau of m = " + to_string(m) + " is not permissible");
    if (ladders_of(pq) != seq)
        throw InvariantViolation("bitableau ladders disagree with RSK for m = " + to_string(m));
    return pq;
}

} // namespace mseg
