#include <set>

#include "doctest.h"
#include "mseg/oracle.hpp"
#include "mseg/rsk.hpp"

using namespace mseg;

namespace {

Multisegment ms(const char* text) { return parse_multisegment(text); }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("enumeration counts")
{
    CHECK(count_multisegments({-1, 1, 1}) == 7);
    CHECK(count_multisegments({0, 0, 2}) == 3);
    CHECK(count_multisegments({-5, 5, 0}) == 1);
    // Multisets of size <= k over N segments number C(N + k, k).
    for (int width = 1; width <= 5; ++width)
        for (int k = 0; k <= 4; ++k) {
            std::uint64_t segments = static_cast<std::uint64_t>(width * (width + 1) / 2);
            CHECK(count_multisegments({0, width - 1, k}) == binomial(segments + k, k));
        }
}

TEST_CASE("enumeration visits each multisegment once")
{
    std::set<Multisegment> seen;
    auto visited = enumerate_multisegments({-1, 1, 3}, [&](const Multisegment& m) {
        CHECK(m.size() <= 3);
        for (auto s : m.segments()) {
            CHECK(s.b >= -1);
            CHECK(s.e <= 1);
        }
        CHECK(seen.insert(m).second);
    });
    CHECK(visited == seen.size());
    CHECK(visited == count_multisegments({-1, 1, 3}));
    CHECK_THROWS_AS(count_multisegments({1, 0, 1}), PreconditionError);
}

TEST_CASE("Dilworth width")
{
    CHECK(dilworth_width(ms("[1,1]+[1,1]")) == 2);
    CHECK(dilworth_width(ms("[1,2]+[2,3]")) == 1);
    CHECK(dilworth_width(ms("[1,1]+[1,2]")) == 2);
    CHECK(dilworth_width(Multisegment{}) == 0);
}

TEST_CASE("brute-force permissibility")
{
    CHECK(brute_permissible(ms("[1,2]"), ms("[1,1]")));
    CHECK_FALSE(brute_permissible(ms("[5,5]"), ms("[1,1]")));
    CHECK(brute_permissible(ms("[1,2]+[2,3]"), Multisegment{}));
    CHECK_THROWS_AS(brute_permissible(ms("[0,0]"), ms("[0,0]+[0,0]+[0,0]+[0,0]+[0,0]+[0,0]+[0,0]+[0,0]+[0,0]")),
                    PreconditionError);
}

TEST_CASE("hook length count")
{
    CHECK(hook_length_count(Partition{2, 1}) == 2);
    CHECK(hook_length_count(Partition{7}) == 1);
    CHECK(hook_length_count(Partition{2, 2}) == 2);
    CHECK(hook_length_count(Partition{3, 2}) == 5);
    CHECK(hook_length_count(Partition{}) == 1);
}

TEST_CASE("Knuth-Viennot choice independence")
{
    CHECK(kv_choice_independence(ms("[1,1]+[1,1]")));
    CHECK(kv_choice_independence(ms("[0,3]+[1,2]+[2,2]")));
    CHECK(kv_choice_independence(ms("[0,0]+[0,0]+[0,0]")));
    CHECK_THROWS_AS(kv_choice_independence(ms("[0,0]+[0,0]+[0,0]+[0,0]+[0,0]+[0,0]+[0,0]")), PreconditionError);
}
