#include <numeric>

#include "doctest.h"
#include "mseg/oracle.hpp"
#include "mseg/rsk.hpp"
#include "mseg/specht.hpp"
#include "mseg/tableaux.hpp"

using namespace mseg;

namespace {

Multisegment ms(const char* text) { return parse_multisegment(text); }
Tableau tab(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }
Weight a(int i, std::int64_t c = 1) { return Weight::simple_root(i, c); }

} // namespace

TEST_CASE("partitions")
{
    CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
    CHECK(conjugate(Partition{3}) == Partition{1, 1, 1});
    CHECK(conjugate(Partition{4, 2}) == Partition{2, 2, 1, 1});
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(Partition{3, 1, 1}.cut() == Partition{2});
    CHECK(Partition{2, 1}.size() == 3);
    CHECK_THROWS_AS(Partition({1, 2}), PreconditionError);
    CHECK_THROWS_AS(Partition({2, 0}), PreconditionError);
    CHECK(parse_partition("4,2,1") == Partition{4, 2, 1});
    CHECK(parse_partition("0").empty());
    CHECK(parse_partition("").empty());
    CHECK_THROWS_AS(parse_partition("2,x"), ParseError);
    CHECK(to_string(Partition{2, 1}) == "(2,1)");
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(4).front() == Partition{4});
    CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("a invariant")
{
    CHECK(a_invariant(Partition{1, 1, 1}) == 6);
    CHECK(a_invariant(Partition{5}) == 0);
    CHECK(a_invariant(Partition{2, 1}) == 2);
    for (int n = 0; n <= 8; ++n)
        for (const auto& mu : partitions_of(n)) {
            CHECK(a_invariant(mu) == a_invariant_by_cells(mu));
            CHECK(a_invariant(mu) % 2 == 0);
        }
}

TEST_CASE("admissible and permissible bitableaux")
{
    auto c = pair_checks({tab({{1}}), tab({{3}})});
    CHECK(c.admissible);
    CHECK(c.permissible);
    c = pair_checks({tab({{1}}), tab({{1}})});
    CHECK(c.admissible);
    CHECK_FALSE(c.permissible);
    c = pair_checks({tab({{2}}), tab({{1}})});
    CHECK_FALSE(c.admissible);
    CHECK_THROWS_AS(BitableauPair(tab({{1}}), tab({{2, 1}})), PreconditionError);
    CHECK_THROWS_AS(tab({{1, 2}}), PreconditionError);
    CHECK_THROWS_AS(tab({{1}, {2}}), PreconditionError);
}

TEST_CASE("increment")
{
    CHECK(increment(tab({{2, 1}})) == tab({{3, 2}}));
    CHECK(increment(Tableau{}).empty());
    CHECK(increment(tab({{1}, {1}})) == tab({{2}, {2}}));
}

TEST_CASE("ladders of a bitableau")
{
    CHECK(ladders_of({tab({{2, 1}}), tab({{4, 3}})}) == LadderSequence{{ms("[2,3]+[1,2]")}});
    CHECK(ladders_of({tab({{1}}), tab({{1}})}) == LadderSequence{{Multisegment{}}});
    CHECK(ladders_of({tab({{1}, {1}}), tab({{3}, {2}})}) == LadderSequence{{ms("[1,2]"), ms("[1,1]")}});
}

TEST_CASE("C(P,Q)")
{
    CHECK(c_count({tab({{1}, {1}}), tab({{3}, {2}})}) == 0);
    CHECK(c_count({tab({{3, 2, 1}}), tab({{4, 3, 2}})}) == 0);
    CHECK(c_count({tab({{2}, {2}}), tab({{2}, {2}})}) == 1);
    // Q with rows (2),(3) is not inverted semistandard.
    CHECK_THROWS_AS(tab({{2}, {3}}), PreconditionError);
}

TEST_CASE("C(P,Q) equals C over the ladders")
{
    // C(l_i, l_j) for i < j counted directly on segments.
    auto c_over = [](const LadderSequence& seq) {
        std::int64_t total = 0;
        for (std::size_t i = 0; i < seq.size(); ++i)
            for (std::size_t j = i + 1; j < seq.size(); ++j)
                for (auto d1 : seq[i].segments())
                    for (auto d2 : seq[j].segments())
                        total += d1.b == d2.e + 1;
        return total;
    };
    enumerate_multisegments({-2, 2, 4}, [&](const Multisegment& m) {
        if (m.empty())
            return;
        auto pq = bitableau_of(m);
        CHECK(pair_checks(pq).permissible);
        CHECK(ladders_of(pq) == rsk_transform(m));
        CHECK(c_count(pq) == c_over(rsk_transform(m)));
        BitableauPair derived(increment(pq.p), pq.q);
        std::int64_t c_prime = 0;
        auto seq = rsk_transform(m);
        for (std::size_t i = 0; i < seq.size(); ++i)
            for (std::size_t j = i + 1; j < seq.size(); ++j) {
                const auto shifted = shift_right(seq[i]);
                for (auto d1 : shifted.segments())
                    for (auto d2 : seq[j].segments())
                        c_prime += d1.b == d2.e + 1;
            }
        CHECK(c_count(derived) == c_prime);
    });
}

TEST_CASE("the permissible bitableau of a multisegment is unique")
{
    // Every inverted semistandard filling of a shape with entries in [lo, hi].
    auto fillings = [](const Partition& shape, int lo, int hi) {
        std::vector<Tableau> out;
        std::vector<std::vector<int>> rows;
        for (int len : shape.parts())
            rows.emplace_back(static_cast<std::size_t>(len), 0);
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                cells.push_back({r, c});
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == cells.size()) {
                try {
                    out.emplace_back(rows);
                } catch (const PreconditionError&) {
                }
                return;
            }
            for (int v = lo; v <= hi; ++v) {
                rows[cells[k].first][cells[k].second] = v;
                self(self, k + 1);
            }
        };
        rec(rec, 0);
        return out;
    };
    // A permissible pair has no dropped entries, so its shape is forced by
    // the ladder sizes and only fillings of that shape need searching.
    // P holds begins in [-2, 2] and Q holds ends plus one in [-1, 3].
    enumerate_multisegments({-2, 2, 3}, [&](const Multisegment& m) {
        if (m.empty())
            return;
        const auto seq = rsk_transform(m);
        const auto shape = bitableau_of(m).shape();
        const auto ps = fillings(shape, -2, 2);
        const auto qs = fillings(shape, -1, 3);
        int found = 0;
        for (const auto& p : ps)
            for (const auto& q : qs) {
                BitableauPair pq(p, q);
                if (!pair_checks(pq).permissible)
                    continue;
                LadderSequence got;
                try {
                    got = ladders_of(pq);
                } catch (const PreconditionError&) {
                    continue;
                }
                if (got == seq) {
                    ++found;
                    CHECK(pq == bitableau_of(m));
                }
            }
        CHECK(found == 1);
    });
}

TEST_CASE("Gamma descriptors")
{
    auto g = gamma_descriptor(ms("[1,1]+[1,1]"), false);
    CHECK(g.ladders == LadderSequence{{ms("[1,1]"), ms("[1,1]")}});
    CHECK(g.shape == Partition{1, 1});
    CHECK(g.a == 2);
    CHECK(g.c == 0);
    CHECK(g.shift == 2);
    g = gamma_descriptor(ms("[1,1]+[1,1]"), true);
    CHECK(g.ladders == LadderSequence{{Multisegment{}, Multisegment{}}});
    CHECK(g.c == 1);
    CHECK(g.shift == 1);
    g = gamma_descriptor(ms("[1,1]"), false);
    CHECK(g.ladders.size() == 1);
    CHECK(g.shape == Partition{1});
    CHECK(g.shift == 0);
    CHECK_THROWS_AS(gamma_descriptor(Multisegment{}, false), PreconditionError);
}

TEST_CASE("standard tableaux")
{
    CHECK(standard_tableaux(Partition{2, 1}).size() == 2);
    CHECK(standard_tableaux(Partition{4}).size() == 1);
    CHECK(standard_tableaux(Partition{2, 2}).size() == 2);
    for (int n = 0; n <= 6; ++n)
        for (const auto& mu : partitions_of(n))
            CHECK(standard_tableaux(mu).size() == hook_length_count(mu));
    auto rows = filling_rows(standard_tableaux(Partition{2, 1}).front());
    CHECK(rows == std::vector<std::vector<int>>{{1, 2}, {3}});
}

TEST_CASE("residue sequences")
{
    CHECK(residue_sequence(0, standard_tableaux(Partition{1}).front()) == std::vector<int>{0});
    StandardTableau column_first{{1, 1}, {2, 1}, {1, 2}};
    CHECK(residue_sequence(0, column_first) == std::vector<int>{0, -1, 1});
    for (int k = -2; k <= 2; ++k)
        for (int n = 0; n <= 5; ++n)
            for (const auto& mu : partitions_of(n))
                for (const auto& t : standard_tableaux(conjugate(mu))) {
                    Weight sum;
                    for (int nu : residue_sequence(k, t))
                        sum += a(nu);
                    CHECK(sum == content(k, conjugate(mu)));
                }
}
