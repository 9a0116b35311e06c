#include "doctest.h"
#include "mseg/rsk.hpp"
#include "mseg/specht.hpp"

using namespace mseg;

namespace {

Weight a(int i, std::int64_t c = 1) { return Weight::simple_root(i, c); }
Multisegment ms(const char* text) { return parse_multisegment(text); }

const Multicharge kCharge({2, 1, -1});
const Multipartition kProper{{4, 2, 2, 2, 1}, {3, 3, 2, 2}, {3, 2}};
const Multipartition kNotProper{{4, 3, 2}, {3, 3, 2}, {3, 1}};

} // namespace

TEST_CASE("multicharges")
{
    CHECK(Multicharge({2, 1, -1}).dagger() == Multicharge({1, -1, -2}));
    CHECK(Multicharge({2, 1, -1}).lambda().level() == 3);
    CHECK_THROWS_AS(Multicharge({0, 1}), PreconditionError);
    CHECK(parse_charge("2,1,-1") == kCharge);
    CHECK_THROWS_AS(parse_charge("2,,1"), ParseError);
    CHECK(parse_parts("4,2,2,2,1|3,3,2,2|3,2") == kProper);
    CHECK(parse_parts("1|0|") == Multipartition{{1}, {}, {}});
    CHECK(to_string(kProper) == "((4,2,2,2,1),(3,3,2,2),(3,2))");
}

TEST_CASE("content")
{
    CHECK(content(0, Partition{2, 1}) == a(-1) + a(0) + a(1));
    CHECK(content(4, Partition{1}) == a(4));
    CHECK(content(0, Partition{}).is_zero());
    CHECK(content(Multicharge({1, 0}), {{1}, {1}}) == a(1) + a(0));
    CHECK_THROWS_AS(content(Multicharge({1, 0}), {{1}}), PreconditionError);
}

TEST_CASE("restricted and proper")
{
    CHECK(is_restricted(kCharge, kProper));
    CHECK(is_proper(kCharge, kProper));
    CHECK(is_restricted(kCharge, kNotProper));
    CHECK_FALSE(is_proper(kCharge, kNotProper));
    CHECK(is_restricted(Multicharge({0}), {{3, 1}}));
    CHECK(is_proper(Multicharge({0}), {{3, 1}}));
    CHECK_FALSE(is_restricted(Multicharge({0, 0}), {{2}, {1}}));
}

TEST_CASE("padding")
{
    Multicharge k10({1, 0});
    CHECK(pad(k10, {{2}, {2, 1}}) == Multipartition{{3, 1, 1}, {3, 2}});
    CHECK(pad(Multicharge({0}), {{1}}) == Multipartition{{2}});
    auto padded = pad(kCharge, kProper);
    for (std::size_t i = 0; i < padded.size(); ++i) {
        CHECK(padded[i].length() == kProper[i].length());
        for (std::size_t j = 1; j <= padded[i].length(); ++j)
            CHECK(padded[i].part(j) == kProper[i].part(j) + 1);
    }
    CHECK(is_proper(k10, pad(k10, {{2}, {2, 1}})));
    CHECK(cut(pad(k10, {{2}, {2, 1}})) == Multipartition{{2}, {2, 1}});
    CHECK_THROWS_AS(pad(Multicharge({0, 0}), {{2}, {1}}), PreconditionError);
}

TEST_CASE("ladder multisegments of partitions")
{
    CHECK(ladder_of_partition(0, {2, 1}) == ms("[-1,0]+[1,1]"));
    CHECK(ladder_of_partition(5, {1}) == ms("[5,5]"));
    CHECK(derive(ladder_of_partition(0, {2, 1})) == ladder_of_partition(0, {1}));
    CHECK(ladder_of_partition(0, {1}) == ms("[0,0]"));
    CHECK(ladder_of_partition(3, {}).empty());
    for (int k = -2; k <= 2; ++k)
        for (int n = 1; n <= 6; ++n)
            for (const auto& mu : partitions_of(n)) {
                auto m = ladder_of_partition(k, mu);
                CHECK(is_ladder(m));
                CHECK(wt(m) == content(k, conjugate(mu)));
                CHECK(derive(m) == ladder_of_partition(k, mu.cut()));
            }
}

TEST_CASE("multisegments of multipartitions")
{
    CHECK(multiseg_of(Multicharge({1, 0}), {{2}, {2, 1}}) == ms("[-2,-1]+[-1,0]+[1,1]"));
    CHECK(multiseg_of(Multicharge({0}), {{1}}) == ms("[0,0]"));
    CHECK(multiseg_of(Multicharge({3}), {{}}).empty());
    auto ladders = component_ladders(Multicharge({1, 0}), {{2}, {}});
    CHECK(ladders == LadderSequence{{ms("[-2,-1]"), Multisegment{}}});
}

TEST_CASE("proper inputs: RSK matches the components")
{
    auto m = multiseg_of(kCharge, kProper);
    CHECK(rsk_transform(m) == component_ladders(kCharge, kProper));
}

TEST_CASE("Specht/RSK verification")
{
    auto r = specht_rsk_verify(Multicharge({0}), {{1}});
    CHECK(r.m == ms("[0,0]"));
    CHECK(r.padded == Multipartition{{2}});
    CHECK(r.n == ms("[-1,0]"));
    CHECK(r.gamma.is_zero());
    CHECK(r.rsk_n == LadderSequence{{ms("[-1,0]")}});
    CHECK(r.rsk_n.derived() == LadderSequence{{ms("[0,0]")}});

    r = specht_rsk_verify(kCharge, kProper);
    CHECK(r.proper);
    CHECK(r.restricted);

    Multicharge k10({1, 0});
    r = specht_rsk_verify(k10, {{2}, {2, 1}});
    CHECK(r.padded == Multipartition{{3, 1, 1}, {3, 2}});
    CHECK(r.n == multiseg_of(k10, r.padded));
    CHECK(r.n == extend(r.m) + point_multisegment(r.gamma));
    CHECK(r.gamma.is_positive());
    CHECK(r.rsk_n.derived().without_gaps() == component_ladders(k10, {{2}, {2, 1}}).without_gaps());

    CHECK_THROWS_AS(specht_rsk_verify(Multicharge({0, 0}), {{2}, {1}}), PreconditionError);
}

TEST_CASE("column removal")
{
    CHECK(column_removal_check(Multicharge({0}), {{2, 1}}));
    CHECK(column_removal_check(Multicharge({1, 0}), {{1, 1}, {1}}));
    CHECK(column_removal_check(kCharge, kProper));
    CHECK(column_removal_check(kCharge, kNotProper));
}
