#include <vector>

#include "doctest.h"
#include "mseg/oracle.hpp"
#include "mseg/strings.hpp"

using namespace mseg;

namespace {

Weight a(int i, std::int64_t c = 1) { return Weight::simple_root(i, c); }
Multisegment ms(const char* text) { return parse_multisegment(text); }

StringVector sv(std::vector<std::int64_t> c) { return StringVector(std::move(c)); }

// C and C' counted segment by segment from the definitions.
std::int64_t c_direct(const std::vector<Multisegment>& t, bool primed)
{
    std::int64_t total = 0;
    for (std::size_t j = 0; j < t.size(); ++j)
        for (std::size_t k = j + 1; k < t.size(); ++k)
            for (auto d1 : t[j].segments())
                for (auto d2 : t[k].segments())
                    total += d1.b + (primed ? 1 : 0) == d2.e + 1;
    return total;
}

} // namespace

TEST_CASE("admissible sequences")
{
    CHECK(AdmissibleSequence::bz(1) == AdmissibleSequence({1, 0, -1}));
    CHECK(AdmissibleSequence::bz(0).size() == 1);
    CHECK_THROWS_AS(AdmissibleSequence({1, 1}), PreconditionError);
    CHECK_THROWS_AS(AdmissibleSequence::bz(-1), PreconditionError);
    CHECK(to_string(AdmissibleSequence({2, 1})) == "(2,1)");
}

TEST_CASE("beta of a string")
{
    CHECK(beta_of(AdmissibleSequence({2, 1}), sv({1, 1})) == a(2) + a(1));
    CHECK(beta_of(AdmissibleSequence({2, 1}), sv({0, 0})).is_zero());
    CHECK(beta_of(AdmissibleSequence({1, 2, 1}), sv({1, 0, 2})) == a(1, 3));
    CHECK_THROWS_AS(StringVector({-1}), PreconditionError);
    CHECK(sv({1, 0}) > sv({0, 5}));
}

TEST_CASE("string form")
{
    AdmissibleSequence i({2, 1});
    StringVector e1 = sv({1, 0}), e2 = sv({0, 1});
    CHECK(string_form(i, e1, e1) == 1);
    CHECK(string_form(i, e2, e1) == -1);
    CHECK(string_form(i, e1, e2) == 0);
}

TEST_CASE("string form polarizes to the cartan form")
{
    AdmissibleSequence i({2, 1, 0, -1, 1, 2});
    const StringVector vs[] = {sv({0, 0, 0, 0, 0, 0}), sv({1, 0, 2, 0, 0, 1}), sv({0, 3, 0, 1, 1, 0}),
                               sv({2, 2, 2, 2, 2, 2}), sv({0, 0, 0, 0, 0, 4})};
    for (const auto& x : vs)
        for (const auto& y : vs)
            CHECK(string_form(i, x, y) + string_form(i, y, x) == cartan_form(beta_of(i, x), beta_of(i, y)));
}

TEST_CASE("Phi on strings")
{
    AdmissibleSequence i0({2, 1, 0, -1, -2});
    std::vector<StringVector> as{sv({0, 1, 0, 0, 0}), sv({1, 0, 0, 0, 0})};
    std::vector<Weight> betas{a(1), a(2)};
    CHECK(phi_weights(i0, std::span<const StringVector>(as.data(), 1), std::span<const Weight>(betas.data(), 1)) ==
          0);
    CHECK(phi_weights(i0, as, betas) == 0);
    std::vector<StringVector> swapped{sv({1, 0, 0, 0, 0}), sv({0, 1, 0, 0, 0})};
    std::vector<Weight> swapped_betas{a(2), a(1)};
    CHECK(phi_weights(i0, swapped, swapped_betas) == 1);
}

TEST_CASE("C and C'")
{
    std::vector<Multisegment> t{ms("[2,3]"), ms("[1,1]")};
    CHECK(c_tuple(t) == 1);
    t = {ms("[1,1]"), ms("[2,2]")};
    CHECK(c_tuple(t) == 0);
    CHECK(c_prime_tuple(t) == 0);
    t = {ms("[1,3]"), Multisegment{}};
    CHECK(c_tuple(t) == 0);
}

TEST_CASE("Phi of multisegments")
{
    std::vector<Multisegment> t{ms("[1,1]"), ms("[2,2]")};
    CHECK(phi_multiseg(t) == 0);
    t = {ms("[2,2]"), ms("[1,1]")};
    CHECK(phi_multiseg(t) == 1);
    t = {ms("[0,3]")};
    CHECK(phi_multiseg(t) == 0);
    // The counterexample in the ell-sign mutation differs from the true value.
    t = {ms("[-2,-2]"), ms("[-1,-1]")};
    CHECK(phi_multiseg(t) == 0);
    CHECK(phi_multiseg_mutated(t) != phi_multiseg(t));
}

TEST_CASE("C - C' = Phi on pairs")
{
    std::vector<Multisegment> all;
    enumerate_multisegments({-1, 1, 2}, [&](const Multisegment& m) { all.push_back(m); });
    for (const auto& x : all)
        for (const auto& y : all) {
            std::vector<Multisegment> t{x, y};
            CHECK(c_tuple(t) == c_direct(t, false));
            CHECK(c_prime_tuple(t) == c_direct(t, true));
            CHECK(c_tuple(t) - c_prime_tuple(t) == phi_multiseg(t));
        }
}

TEST_CASE("BZ strings")
{
    auto s = bz_string(ms("[1,3]+[2,2]"), 3);
    CHECK(s.sequence == AdmissibleSequence::bz(3));
    CHECK(s.string == sv({0, 1, 1, 0, 0, 0, 0}));
    CHECK(bz_string(Multisegment{}, 2).string == StringVector::zero(5));
    CHECK(bz_string(ms("[1,1]+[1,1]"), 1).string == sv({2, 0, 0}));
    CHECK_THROWS_AS(bz_string(ms("[1,3]"), 2), PreconditionError);
}

TEST_CASE("single derivatives")
{
    CHECK(single_derivative(ms("[1,3]"), 1) == ms("[2,3]"));
    CHECK(single_derivative(ms("[1,1]+[1,1]"), 1).empty());
    CHECK(single_derivative(ms("[1,3]"), 5) == ms("[1,3]"));
    CHECK_THROWS_AS(single_derivative(ms("[1,3]"), 0), PreconditionError);
}

TEST_CASE("BZ derivatives")
{
    CHECK(bz_derivative(ms("[1,3]+[2,2]"), 3) == ms("[2,3]"));
    CHECK(bz_derivative(point_multisegment(a(0, 2) + a(1)), 1).empty());
    CHECK(bz_derivative(ms("[0,1]+[1,2]"), 2) == ms("[1,1]+[2,2]"));
    CHECK_THROWS_AS(bz_derivative(ms("[0,3]"), 2), PreconditionError);
}

TEST_CASE("BZ derivative equals the full sweep of single derivatives")
{
    enumerate_multisegments({-2, 2, 4}, [](const Multisegment& m) {
        for (int T : {2, 4}) {
            Multisegment current = m;
            for (int j = T; j >= -T; --j)
                current = single_derivative(current, j);
            CHECK(current == derive(m));
            CHECK(bz_derivative(m, T) == current);
        }
    });
}

TEST_CASE("transfer of multiplicity tables")
{
    MultiplicityTable table;
    table.insert(ms("[1,1]+[2,2]"), LaurentPoly::constant(1));
    table.insert(ms("[1,2]"), LaurentPoly::monomial(1));
    std::vector<Multisegment> t{ms("[1,1]"), ms("[2,2]")};
    MultiplicityTable expected;
    expected.insert(Multisegment{}, LaurentPoly::constant(1));
    CHECK(transfer_multiplicities(table, t) == expected);

    MultiplicityTable single;
    single.insert(ms("[0,2]"), LaurentPoly::constant(1));
    std::vector<Multisegment> one{ms("[0,2]")};
    MultiplicityTable derived;
    derived.insert(ms("[1,2]"), LaurentPoly::constant(1));
    CHECK(transfer_multiplicities(single, one) == derived);

    CHECK(transfer_multiplicities(MultiplicityTable{}, one).empty());
}

TEST_CASE("transfer shifts by -Phi")
{
    MultiplicityTable table;
    table.insert(ms("[1,1]+[2,2]"), LaurentPoly::monomial(2));
    std::vector<Multisegment> t{ms("[2,2]"), ms("[1,1]")};
    auto out = transfer_multiplicities(table, t);
    REQUIRE(out.size() == 1);
    CHECK(out.rows().begin()->second == LaurentPoly::monomial(2 - phi_multiseg(t)));
}

TEST_CASE("multiplicity table preconditions")
{
    MultiplicityTable table;
    table.insert(ms("[1,2]"), LaurentPoly::constant(1));
    CHECK_THROWS_AS(table.insert(ms("[1,1]"), LaurentPoly::constant(1)), PreconditionError);
    CHECK_THROWS_AS(table.insert(ms("[1,1]+[2,2]"), LaurentPoly::constant(-1)), PreconditionError);
    std::vector<Multisegment> wrong{ms("[0,0]")};
    CHECK_THROWS_AS(transfer_multiplicities(table, wrong), PreconditionError);
    nlohmann::json j = table;
    CHECK(j.get<MultiplicityTable>() == table);
    CHECK_THROWS_AS(nlohmann::json::parse(R"([{"key": 3}])").get<MultiplicityTable>(), ParseError);
}
