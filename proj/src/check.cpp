#include "mseg/check.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <unordered_set>

#include "mseg/rsk.hpp"
#include "mseg/specht.hpp"
#include "mseg/strings.hpp"

namespace mseg {

namespace {

constexpr std::size_t kMaxRecordedFailures = 20;

using Clock = std::chrono::steady_clock;

class Timer {
public:
    explicit Timer(SuiteReport& report) : report_(report), start_(Clock::now()) {}
    ~Timer() { report_.seconds = std::chrono::duration<double>(Clock::now() - start_).count(); }

private:
    SuiteReport& report_;
    Clock::time_point start_;
};

EnumerationBounds bounds_or(const CheckOptions& opts, EnumerationBounds fallback)
{
    return opts.bounds.value_or(fallback);
}

std::string repro(const std::string& suite, const CheckOptions& opts, const EnumerationBounds& b)
{
    std::string cmd = "mseg check --suite " + suite + " --min " + std::to_string(b.support_min) +
                      " --max " + std::to_string(b.support_max) + " --max-segments " +
                      std::to_string(b.max_segments) + " --seed " + std::to_string(opts.seed);
    if (opts.mutate_ell_sign)
        cmd += " --inject-mutation ell-sign";
    return cmd;
}

std::vector<Multisegment> collect(const EnumerationBounds& b)
{
    std::vector<Multisegment> out;
    out.reserve(static_cast<std::size_t>(count_multisegments(b)));
    enumerate_multisegments(b, [&](const Multisegment& m) { out.push_back(m); });
    return out;
}

int bz_radius(const EnumerationBounds& b)
{
    return std::max(std::abs(b.support_min), std::abs(b.support_max));
}

std::string tuple_text(std::span<const Multisegment> ms)
{
    std::string out;
    for (const auto& m : ms) {
        if (!out.empty())
            out += " ; ";
        out += to_string(m);
    }
    return out;
}

// Compact byte key of a multisegment pair; endpoints are small in every suite.
std::string pair_key(const Multisegment& a, const Multisegment& b)
{
    std::string key;
    key.reserve(2 * (a.size() + b.size()) + 1);
    for (auto s : a.segments()) {
        key.push_back(static_cast<char>(s.b));
        key.push_back(static_cast<char>(s.e));
    }
    key.push_back('|');
    for (auto s : b.segments()) {
        key.push_back(static_cast<char>(s.b));
        key.push_back(static_cast<char>(s.e));
    }
    return key;
}

template <class Fn>
void guarded(SuiteReport& report, const std::string& context, Fn&& fn)
{
    try {
        fn();
    } catch (const Error& ex) {
        report.fail(context + ": " + ex.what());
    } catch (const std::overflow_error& ex) {
        report.fail(context + ": " + ex.what());
    }
}

} // namespace

void SuiteReport::fail(std::string what)
{
    ++failure_count;
    if (failures.size() < kMaxRecordedFailures)
        failures.push_back(std::move(what));
}

// ----------------------------------------------------------------- combi

SuiteReport check_combi(const CheckOptions& opts)
{
    SuiteReport rep;
    rep.suite = "combi";
    Timer timer(rep);
    const auto b = bounds_or(opts, {-2, 2, 3});
    rep.reproduce = repro("combi", opts, b);
    const auto domain = collect(b);
    const int T = bz_radius(b);
    const auto phi = opts.mutate_ell_sign ? phi_multiseg_mutated : phi_multiseg;

    // Strings and weights do not depend on the tuple.
    std::vector<StringVector> strings;
    std::vector<Weight> weights;
    for (const auto& m : domain) {
        strings.push_back(bz_string(m, T).string);
        weights.push_back(wt(m));
    }
    const auto seq = AdmissibleSequence::bz(T);

    auto check_tuple = [&](std::span<const std::size_t> ids) {
        std::vector<Multisegment> ms;
        std::vector<StringVector> as;
        std::vector<Weight> betas;
        for (auto id : ids) {
            ms.push_back(domain[id]);
            as.push_back(strings[id]);
            betas.push_back(weights[id]);
        }
        ++rep.instances;
        guarded(rep, tuple_text(ms), [&] {
            auto lhs = checked::sub(c_tuple(ms), c_prime_tuple(ms));
            auto rhs = phi(ms);
            if (lhs != rhs)
                rep.fail("C - C' = " + std::to_string(lhs) + " but Phi = " + std::to_string(rhs) +
                         " for (" + tuple_text(ms) + ")");
            auto via_strings = phi_weights(seq, as, betas);
            if (via_strings != rhs)
                rep.fail("Phi over b/wt = " + std::to_string(rhs) + " but Phi over BZ-strings = " +
                         std::to_string(via_strings) + " for (" + tuple_text(ms) + ")");
        });
    };

    const std::size_t n = domain.size();
    std::vector<std::size_t> ids;
    for (std::size_t x = 0; x < n; ++x) {
        ids = {x};
        check_tuple(ids);
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            ids = {x, y};
            check_tuple(ids);
        }
    const double triples = static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n);
    if (triples <= 1e6) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    ids = {x, y, z};
                    check_tuple(ids);
                }
        rep.notes.push_back("triples: exhaustive");
    } else if (n > 0) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::uint64_t k = 0; k < opts.samples; ++k) {
            ids = {pick(rng), pick(rng), pick(rng)};
            check_tuple(ids);
        }
        rep.notes.push_back("triples: " + std::to_string(opts.samples) + " seeded samples of " +
                            std::to_string(static_cast<std::uint64_t>(triples)));
    }
    rep.notes.push_back("domain size " + std::to_string(n));
    return rep;
}

// ------------------------------------------------------------------- rsk

SuiteReport check_rsk_wellformed(const CheckOptions& opts)
{
    SuiteReport rep;
    rep.suite = "rsk";
    Timer timer(rep);
    const auto b = bounds_or(opts, {-3, 3, 6});
    rep.reproduce = repro("rsk", opts, b);
    std::unordered_set<std::string> images;
    std::uint64_t brute_checked = 0;

    enumerate_multisegments(b, [&](const Multisegment& m) {
        if (m.empty())
            return;
        ++rep.instances;
        const auto text = to_string(m);
        guarded(rep, text, [&] {
            auto seq = rsk_transform(m);
            if (!seq.well_formed())
                rep.fail("RSK(" + text + ") has a non-ladder entry: " + to_string(seq));
            for (std::size_t i = 1; i < seq.size(); ++i)
                if (seq[i].size() > seq[i - 1].size())
                    rep.fail("RSK(" + text + ") sizes increase: " + to_string(seq));
            Weight wsum;
            Weight bsum;
            for (const auto& l : seq.ladders) {
                wsum += wt(l);
                bsum += b_invariant(l);
            }
            if (wsum != wt(m))
                rep.fail("RSK(" + text + ") changes wt");
            if (bsum != b_invariant(m))
                rep.fail("RSK(" + text + ") changes b");
            const auto w = dilworth_width(m);
            if (width(m) != w)
                rep.fail("width(" + text + ") = " + std::to_string(width(m)) + " but Dilworth gives " +
                         std::to_string(w));

            // Walk the peeling steps: each removes exactly one from the width.
            Multisegment current = m;
            std::size_t expected = w;
            while (!current.empty()) {
                auto step = knuth_viennot(current);
                if (!is_ladder(step.ladder))
                    rep.fail("K(" + to_string(current) + ") ladder is not a ladder");
                bool fast = is_permissible_pair(step.ladder, step.rest);
                if (step.rest.size() <= kBrutePermissibleLimit) {
                    ++brute_checked;
                    bool brute = brute_permissible(step.ladder, step.rest);
                    if (!brute)
                        rep.fail("K(" + to_string(current) + ") = (" + to_string(step.ladder) + ", " +
                                 to_string(step.rest) + ") is not permissible");
                    if (brute != fast)
                        rep.fail("permissibility oracle disagrees on (" + to_string(step.ladder) + ", " +
                                 to_string(step.rest) + ")");
                } else if (!fast) {
                    rep.fail("K(" + to_string(current) + ") output is not permissible");
                }
                const auto rest_width = dilworth_width(step.rest);
                if (rest_width + 1 != expected)
                    rep.fail("K(" + to_string(current) + ") rest has width " + std::to_string(rest_width) +
                             ", expected " + std::to_string(expected - 1));
                if (current == m && !images.insert(pair_key(step.ladder, step.rest)).second)
                    rep.fail("K is not injective: " + text + " collides on (" + to_string(step.ladder) +
                             ", " + to_string(step.rest) + ")");
                expected = rest_width;
                current = step.rest;
            }
        });
    });
    rep.notes.push_back(std::to_string(brute_checked) + " Knuth-Viennot steps checked by exhaustive search");
    return rep;
}

// ------------------------------------------------------------ derivatives

SuiteReport check_derivative_coherence(const CheckOptions& opts)
{
    SuiteReport rep;
    rep.suite = "derivative";
    Timer timer(rep);
    const auto b = bounds_or(opts, {-3, 3, 6});
    rep.reproduce = repro("strings", opts, b);
    const int radius = bz_radius(b);
    const int radii[] = {radius, radius + 2};
    std::uint64_t empty_ladders = 0;

    enumerate_multisegments(b, [&](const Multisegment& m) {
        ++rep.instances;
        const auto text = to_string(m);
        guarded(rep, text, [&] {
            const auto d = derive(m);
            for (int T : radii)
                if (bz_derivative(m, T) != d)
                    rep.fail("BZ-derivative of " + text + " at T = " + std::to_string(T) + " differs from m'");
            const auto plus = extend(m);
            if (derive(plus) != m)
                rep.fail("(" + text + ")^+' differs from m");
            const auto derived = rsk_transform(plus).derived();
            for (const auto& l : derived.ladders)
                if (l.empty())
                    ++empty_ladders;
            if (derived.without_gaps() != rsk_transform(m))
                rep.fail("derived RSK(m^+) = " + to_string(derived) + " differs from RSK(" + text + ")");
        });
    });
    rep.notes.push_back("BZ radii " + std::to_string(radii[0]) + " and " + std::to_string(radii[1]));
    rep.notes.push_back(std::to_string(empty_ladders) + " empty ladders met in derived RSK(m^+)");
    return rep;
}

// ---------------------------------------------------------------- specht

namespace {

void for_each_multipartition(std::size_t level, int budget,
                             const std::function<void(const Multipartition&)>& visit)
{
    std::vector<std::vector<Partition>> by_size;
    for (int n = 0; n <= budget; ++n)
        by_size.push_back(partitions_of(n));
    Multipartition current;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (current.size() == level) {
            visit(current);
            return;
        }
        for (int n = 0; n <= remaining; ++n)
            for (const auto& mu : by_size[static_cast<std::size_t>(n)]) {
                current.push_back(mu);
                self(self, remaining - n);
                current.pop_back();
            }
    };
    rec(rec, budget);
}

void for_each_multicharge(int level, int lo, int hi, const std::function<void(const Multicharge&)>& visit)
{
    std::vector<int> current;
    auto rec = [&](auto&& self, int top) -> void {
        if (static_cast<int>(current.size()) == level) {
            visit(Multicharge(current));
            return;
        }
        for (int k = top; k >= lo; --k) {
            current.push_back(k);
            self(self, k);
            current.pop_back();
        }
    };
    rec(rec, hi);
}

} // namespace

SuiteReport check_specht_dictionary(const CheckOptions& opts)
{
    SuiteReport rep;
    rep.suite = "specht";
    Timer timer(rep);
    rep.reproduce = "mseg check --suite specht --max-size " + std::to_string(opts.max_size) +
                    " --max-level " + std::to_string(opts.max_level);
    std::uint64_t proper_count = 0;
    std::uint64_t seen = 0;

    for (int level = 1; level <= opts.max_level; ++level)
        for_each_multicharge(level, opts.charge_min, opts.charge_max, [&](const Multicharge& kappa) {
            for_each_multipartition(kappa.level(), opts.max_size, [&](const Multipartition& mp) {
                ++seen;
                if (!is_restricted(kappa, mp))
                    return;
                ++rep.instances;
                const auto context = "kappa = " + to_string(kappa) + ", mu = " + to_string(mp);
                guarded(rep, context, [&] {
                    auto padded = pad(kappa, mp);
                    if (!is_proper(kappa, padded) || cut(padded) != mp)
                        rep.fail(context + ": padding " + to_string(padded) + " is not a proper lift");
                    if (is_proper(kappa, mp)) {
                        ++proper_count;
                        auto expected = component_ladders(kappa, mp).without_gaps();
                        auto got = rsk_transform(multiseg_of(kappa, mp));
                        if (got != expected)
                            rep.fail(context + ": RSK = " + to_string(got) + ", components " +
                                     to_string(expected));
                    }
                    auto report = specht_rsk_verify(kappa, mp);
                    if (!report.gamma.is_positive() && !report.gamma.is_zero())
                        rep.fail(context + ": gamma " + to_string(report.gamma) + " is not in Q+");
                    if (!column_removal_check(kappa, mp))
                        rep.fail(context + ": column removal fails");
                });
            });
        });
    rep.notes.push_back(std::to_string(seen) + " multipartitions enumerated, " +
                        std::to_string(rep.instances) + " restricted, " + std::to_string(proper_count) +
                        " proper");
    return rep;
}

SuiteReport check_goldens(const CheckOptions& opts)
{
    SuiteReport rep;
    rep.suite = "goldens";
    Timer timer(rep);
    rep.reproduce = "mseg check --suite specht";
    (void)opts;

    const Multicharge kappa({2, 1, -1});
    struct Golden {
        const char* parts;
        bool restricted;
        bool proper;
    };
    const Golden goldens[] = {{"4,2,2,2,1|3,3,2,2|3,2", true, true}, {"4,3,2|3,3,2|3,1", true, false}};
    for (const auto& g : goldens) {
        ++rep.instances;
        guarded(rep, g.parts, [&] {
            auto mp = parse_parts(g.parts);
            if (is_restricted(kappa, mp) != g.restricted || is_proper(kappa, mp) != g.proper)
                rep.fail(std::string("classification of ") + g.parts + " for (2,1,-1) is wrong");
        });
    }

    for (int n = 0; n <= 6; ++n)
        for (const auto& mu : partitions_of(n))
            for (int k = -2; k <= 2; ++k) {
                ++rep.instances;
                const auto context = "k = " + std::to_string(k) + ", mu = " + to_string(mu);
                guarded(rep, context, [&] {
                    if (derive(ladder_of_partition(k, mu)) != ladder_of_partition(k, mu.cut()))
                        rep.fail(context + ": m(k,mu)' differs from m(k,mu')");
                    if (wt(ladder_of_partition(k, mu)) != content(k, conjugate(mu)))
                        rep.fail(context + ": wt(m(k,mu)) differs from cont(k, conjugate)");
                });
            }
    return rep;
}

// --------------------------------------------------------------- tableaux

SuiteReport check_tableaux_layer(const CheckOptions& opts)
{
    SuiteReport rep;
    rep.suite = "tableaux";
    Timer timer(rep);
    const auto b = bounds_or(opts, {-3, 3, 6});
    rep.reproduce = repro("rsk", opts, b);

    enumerate_multisegments(b, [&](const Multisegment& m) {
        if (m.empty())
            return;
        ++rep.instances;
        const auto text = to_string(m);
        guarded(rep, text, [&] {
            auto pq = bitableau_of(m);
            auto seq = rsk_transform(m);
            auto ladders = ladders_of(pq);
            if (ladders != seq)
                rep.fail("ladders of the bitableau of " + text + " differ from RSK");
            if (!pair_checks(pq).permissible)
                rep.fail("bitableau of " + text + " is not permissible");
            auto c = c_tuple(ladders.ladders);
            auto c_prime = c_prime_tuple(ladders.ladders);
            if (c != c_count(pq))
                rep.fail("C over the ladders of " + text + " is " + std::to_string(c) + ", C(P,Q) is " +
                         std::to_string(c_count(pq)));
            BitableauPair derived(increment(pq.p), pq.q);
            if (c_prime != c_count(derived))
                rep.fail("C' over the ladders of " + text + " is " + std::to_string(c_prime) +
                         ", C(P',Q) is " + std::to_string(c_count(derived)));
        });
    });

    for (int n = 0; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            ++rep.instances;
            const auto context = "mu = " + to_string(mu);
            guarded(rep, context, [&] {
                auto shape = conjugate(mu);
                auto tableaux = standard_tableaux(shape);
                if (tableaux.size() != hook_length_count(shape))
                    rep.fail(context + ": " + std::to_string(tableaux.size()) +
                             " standard tableaux, hook formula gives " +
                             std::to_string(hook_length_count(shape)));
                auto a = a_invariant(mu);
                if (a % 2 != 0 || a != a_invariant_by_cells(mu))
                    rep.fail(context + ": a(mu) = " + std::to_string(a));
                for (int k = -2; k <= 2; ++k) {
                    auto expected = content(k, shape);
                    for (const auto& t : tableaux) {
                        Weight sum;
                        for (int nu : residue_sequence(k, t))
                            sum.add_term(nu, 1);
                        if (sum != expected)
                            rep.fail(context + ": residue sequence at k = " + std::to_string(k) +
                                     " does not sum to the content");
                    }
                }
            });
        }
    return rep;
}

// --------------------------------------------------------------- transfer

namespace {

// Independent reference: filter by BZ-strings, re-key by the BZ-derivative,
// shift via phi_weights, with polynomials rebuilt term by term.
std::map<Multisegment, LaurentPoly> reference_transfer(const MultiplicityTable& table,
                                                       const std::vector<Multisegment>& ms, int T)
{
    auto target = StringVector::zero(2 * static_cast<std::size_t>(T) + 1);
    std::vector<StringVector> as;
    std::vector<Weight> betas;
    for (const auto& m : ms) {
        as.push_back(bz_string(m, T).string);
        betas.push_back(wt(m));
        target += as.back();
    }
    const auto shift = phi_weights(AdmissibleSequence::bz(T), as, betas);
    std::map<Multisegment, LaurentPoly> out;
    for (const auto& [n, poly] : table.rows()) {
        if (bz_string(n, T).string != target)
            continue;
        LaurentPoly moved;
        for (const auto& [e, c] : poly.terms())
            moved.add_term(static_cast<int>(e - shift), c);
        auto key = bz_derivative(n, T);
        if (!out.emplace(key, moved).second)
            throw InvariantViolation("reference re-keying collides at " + to_string(key));
    }
    return out;
}

// Random weight-preserving moves: split a segment or join two adjacent ones.
Multisegment perturb(const Multisegment& m, std::mt19937_64& rng)
{
    std::vector<Segment> segs(m.segments().begin(), m.segments().end());
    std::uniform_int_distribution<int> coin(0, 1);
    if (segs.empty())
        return m;
    if (coin(rng) == 0) {
        std::uniform_int_distribution<std::size_t> which(0, segs.size() - 1);
        auto s = segs[which(rng)];
        if (s.b == s.e)
            return m;
        std::uniform_int_distribution<int> at(s.b, s.e - 1);
        int cut = at(rng);
        segs.erase(std::find(segs.begin(), segs.end(), s));
        segs.push_back(Segment{s.b, cut});
        segs.push_back(Segment{cut + 1, s.e});
    } else {
        std::vector<std::pair<std::size_t, std::size_t>> joins;
        for (std::size_t x = 0; x < segs.size(); ++x)
            for (std::size_t y = 0; y < segs.size(); ++y)
                if (x != y && segs[x].e + 1 == segs[y].b)
                    joins.emplace_back(x, y);
        if (joins.empty())
            return m;
        std::uniform_int_distribution<std::size_t> which(0, joins.size() - 1);
        auto [x, y] = joins[which(rng)];
        Segment joined{segs[x].b, segs[y].e};
        segs.erase(segs.begin() + static_cast<long>(std::max(x, y)));
        segs.erase(segs.begin() + static_cast<long>(std::min(x, y)));
        segs.push_back(joined);
    }
    return Multisegment(std::move(segs));
}

} // namespace

SuiteReport check_transfer(const CheckOptions& opts)
{
    SuiteReport rep;
    rep.suite = "transfer";
    Timer timer(rep);
    const auto b = bounds_or(opts, {-2, 2, 3});
    rep.reproduce = repro("strings", opts, b);
    const auto domain = collect(b);
    const int T = bz_radius(b);
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, domain.empty() ? 0 : domain.size() - 1);
    std::uniform_int_distribution<int> tuple_len(1, 3);
    std::uniform_int_distribution<int> exponent(-3, 3);
    std::uniform_int_distribution<int> coefficient(0, 3);
    std::uniform_int_distribution<int> walk(0, 12);
    std::uint64_t surviving = 0;

    // The example from the operation contract.
    {
        ++rep.instances;
        guarded(rep, "fixed example", [&] {
            MultiplicityTable t;
            t.insert(Multisegment{{1, 1}, {2, 2}}, LaurentPoly::constant(1));
            t.insert(Multisegment{{1, 2}}, LaurentPoly::monomial(1));
            std::vector<Multisegment> ms{Multisegment{{1, 1}}, Multisegment{{2, 2}}};
            auto out = transfer_multiplicities(t, ms);
            MultiplicityTable expected;
            expected.insert(Multisegment{}, LaurentPoly::constant(1));
            if (out != expected)
                rep.fail("transfer of {[1,1]+[2,2]: 1, [1,2]: q} along ([1,1], [2,2]) is wrong");
        });
    }

    for (std::uint64_t k = 0; k < opts.transfer_instances && !domain.empty(); ++k) {
        ++rep.instances;
        std::vector<Multisegment> ms;
        int s = tuple_len(rng);
        for (int j = 0; j < s; ++j)
            ms.push_back(domain[pick(rng)]);
        Multisegment total;
        for (const auto& m : ms)
            total += m;

        MultiplicityTable table;
        auto add_row = [&](const Multisegment& key) {
            LaurentPoly poly;
            int terms = 1 + coefficient(rng);
            for (int t = 0; t < terms; ++t)
                poly.add_term(exponent(rng), coefficient(rng));
            table.insert(key, poly);
        };
        add_row(total);
        Multisegment current = total;
        int steps = walk(rng);
        for (int t = 0; t < steps; ++t) {
            current = perturb(current, rng);
            add_row(current);
        }

        guarded(rep, "(" + tuple_text(ms) + ")", [&] {
            auto got = transfer_multiplicities(table, ms);
            auto expected = reference_transfer(table, ms, T);
            if (got.rows() != expected)
                rep.fail("transfer along (" + tuple_text(ms) + ") disagrees with the reference");
            surviving += got.size();
        });
    }
    rep.notes.push_back(std::to_string(surviving) + " surviving rows compared");
    return rep;
}

// --------------------------------------------------------------- KV choice

SuiteReport check_kv_choice(const CheckOptions& opts)
{
    SuiteReport rep;
    rep.suite = "kv-choice";
    Timer timer(rep);
    auto b = bounds_or(opts, {-2, 2, 5});
    b.max_segments = std::min<int>(b.max_segments, static_cast<int>(kChoiceIndependenceLimit));
    rep.reproduce = repro("rsk", opts, b);
    enumerate_multisegments(b, [&](const Multisegment& m) {
        if (m.empty())
            return;
        ++rep.instances;
        guarded(rep, to_string(m), [&] {
            if (!kv_choice_independence(m))
                rep.fail("Knuth-Viennot output of " + to_string(m) + " depends on the enumeration");
        });
    });
    return rep;
}

// ------------------------------------------------------------------ suites

std::vector<SuiteReport> run_suite(const std::string& name, const CheckOptions& opts)
{
    std::vector<SuiteReport> out;
    const bool all = name == "all";
    if (!all && name != "combi" && name != "rsk" && name != "specht" && name != "strings")
        throw PreconditionError("unknown suite '" + name + "' (expected combi, rsk, specht, strings or all)");
    if (all || name == "combi")
        out.push_back(check_combi(opts));
    if (all || name == "rsk") {
        out.push_back(check_rsk_wellformed(opts));
        out.push_back(check_tableaux_layer(opts));
        out.push_back(check_kv_choice(opts));
    }
    if (all || name == "strings") {
        out.push_back(check_derivative_coherence(opts));
        out.push_back(check_transfer(opts));
    }
    if (all || name == "specht") {
        out.push_back(check_specht_dictionary(opts));
        out.push_back(check_goldens(opts));
    }
    return out;
}

void to_json(nlohmann::json& j, const SuiteReport& r)
{
    j = {{"suite", r.suite},
         {"instances", r.instances},
         {"failure_count", r.failure_count},
         {"failures", r.failures},
         {"notes", r.notes},
         {"reproduce", r.reproduce},
         {"seconds", r.seconds},
         {"passed", r.passed()}};
}

} // namespace mseg
