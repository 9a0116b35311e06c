#include <set>

#include "doctest.h"
#include "mseg/oracle.hpp"
#include "mseg/rsk.hpp"

using namespace mseg;

namespace {

Multisegment ms(const char* text) { return parse_multisegment(text); }
Tableau tab(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }

// Longest <<-chain starting at each occurrence, by plain recursion.
int chain_depth(std::span<const Segment> segs, std::size_t i)
{
    int best = 0;
    for (std::size_t j = 0; j < segs.size(); ++j)
        if (precedes(segs[i], segs[j]))
            best = std::max(best, 1 + chain_depth(segs, j));
    return best;
}

int depth_of(const DepthTable& t, Segment s)
{
    for (const auto& e : t.entries)
        if (e.segment == s)
            return e.depth;
    FAIL("segment missing from depth table");
    return -1;
}

} // namespace

TEST_CASE("depth function")
{
    auto t = depth_function(ms("[1,2]+[2,3]"));
    CHECK(depth_of(t, {1, 2}) == 1);
    CHECK(depth_of(t, {2, 3}) == 0);
    CHECK(t.max_depth == 1);
    CHECK(depth_function(ms("[5,5]")).entries.at(0).depth == 0);
    auto twice = depth_function(ms("[1,1]+[1,1]"));
    CHECK(twice.entries.size() == 2);
    for (const auto& e : twice.entries)
        CHECK(e.depth == 0);
    CHECK_THROWS_AS(depth_function(Multisegment{}), PreconditionError);
}

TEST_CASE("depth function against recursion")
{
    enumerate_multisegments({-2, 1, 4}, [](const Multisegment& m) {
        if (m.empty())
            return;
        auto t = depth_function(m);
        for (const auto& e : t.entries)
            CHECK(e.depth == chain_depth(m.segments(), e.occurrence));
    });
}

TEST_CASE("Knuth-Viennot step")
{
    CHECK(knuth_viennot(ms("[1,2]+[2,3]")) == KnuthViennotResult{ms("[1,2]+[2,3]"), {}});
    CHECK(knuth_viennot(ms("[1,1]+[1,2]")) == KnuthViennotResult{ms("[1,2]"), ms("[1,1]")});
    CHECK(knuth_viennot(ms("[1,1]+[1,1]")) == KnuthViennotResult{ms("[1,1]"), ms("[1,1]")});
}

TEST_CASE("recycling step rejects badly ordered classes")
{
    std::vector<std::vector<Segment>> classes{{{1, 1}, {1, 2}}};
    CHECK_THROWS_AS(knuth_viennot_from_classes(classes), PreconditionError);
    classes = {{{1, 2}, {1, 1}}};
    CHECK(knuth_viennot_from_classes(classes) == KnuthViennotResult{ms("[1,2]"), ms("[1,1]")});
}

TEST_CASE("RSK transform")
{
    CHECK(rsk_transform(ms("[1,2]+[2,3]")) == LadderSequence{{ms("[1,2]+[2,3]")}});
    CHECK(rsk_transform(ms("[1,1]+[1,2]")) == LadderSequence{{ms("[1,2]"), ms("[1,1]")}});
    CHECK(rsk_transform(ms("[1,1]+[1,1]")) == LadderSequence{{ms("[1,1]"), ms("[1,1]")}});
    CHECK(rsk_transform(Multisegment{}).empty());
}

TEST_CASE("width")
{
    CHECK(width(ms("[1,1]+[1,1]")) == 2);
    CHECK(width(ms("[0,1]+[1,2]+[2,3]")) == 1);
    CHECK(width(ms("[1,1]+[1,2]")) == 2);
    CHECK(width(Multisegment{}) == 0);
}

TEST_CASE("permissible pairs")
{
    CHECK(is_permissible_pair(ms("[1,2]"), ms("[1,1]")));
    CHECK_FALSE(is_permissible_pair(ms("[5,5]"), ms("[1,1]")));
    CHECK(is_permissible_pair(ms("[0,1]+[1,2]"), Multisegment{}));
    CHECK_THROWS_AS(is_permissible_pair(ms("[1,1]+[1,1]"), ms("[0,0]")), PreconditionError);
}

TEST_CASE("permissibility agrees with exhaustive search")
{
    const Multisegment ladders[] = {ms("[0,0]"), ms("[-1,0]+[0,1]"), ms("[-2,-1]+[0,0]+[1,1]"), ms("[1,2]"),
                                    ms("[-2,0]+[-1,2]")};
    int agreements = 0;
    for (const auto& l : ladders)
        enumerate_multisegments({-2, 2, 3}, [&](const Multisegment& m) {
            CHECK(is_permissible_pair(l, m) == brute_permissible(l, m));
            ++agreements;
        });
    CHECK(agreements == 5 * 816);
}

TEST_CASE("RSK invariants on a small domain")
{
    std::set<std::pair<Multisegment, Multisegment>> seen;
    enumerate_multisegments({-2, 2, 4}, [&](const Multisegment& m) {
        if (m.empty())
            return;
        auto seq = rsk_transform(m);
        CHECK(seq.well_formed());
        Weight wts, begins;
        for (const auto& l : seq.ladders) {
            wts += wt(l);
            begins += b_invariant(l);
        }
        CHECK(wts == wt(m));
        CHECK(begins == b_invariant(m));
        CHECK(seq.size() == dilworth_width(m));
        for (std::size_t i = 1; i < seq.size(); ++i)
            CHECK(seq[i - 1].size() >= seq[i].size());
        auto kv = knuth_viennot(m);
        CHECK(is_permissible_pair(kv.ladder, kv.rest));
        CHECK(width(kv.rest) + 1 == width(m));
        CHECK(seen.insert({kv.ladder, kv.rest}).second);
    });
}

TEST_CASE("bitableau of a multisegment")
{
    auto pq = bitableau_of(ms("[1,1]+[1,2]"));
    CHECK(pq.p == tab({{1}, {1}}));
    CHECK(pq.q == tab({{3}, {2}}));
    pq = bitableau_of(ms("[1,1]+[1,1]"));
    CHECK(pq.p == tab({{1}, {1}}));
    CHECK(pq.q == tab({{2}, {2}}));
    pq = bitableau_of(ms("[1,2]+[2,3]"));
    CHECK(pq.p == tab({{2, 1}}));
    CHECK(pq.q == tab({{4, 3}}));
}
