#include "mseg/mseg.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "mseg/check.hpp"
#include "mseg/rsk.hpp"
#include "mseg/specht.hpp"
#include "mseg/strings.hpp"

struct mseg_multisegment {
    mseg::Multisegment value;
};

struct mseg_report {
    mseg_status status = MSEG_OK;
    std::string json;
    std::string text;
};

namespace {

thread_local std::string last_error;

using nlohmann::json;

struct Builder {
    json payload = json::object();
    std::vector<std::string> diagnostics;
    std::string text;
    mseg_status status = MSEG_OK;

    void line(const std::string& s) { text += s + "\n"; }
};

const char* status_key(mseg_status s)
{
    switch (s) {
    case MSEG_OK: return "ok";
    case MSEG_PARSE_ERROR: return "parse_error";
    case MSEG_PRECONDITION_ERROR: return "precondition_error";
    case MSEG_CHECK_FAILURE: return "check_failure";
    case MSEG_INTERNAL_ERROR: return "internal_error";
    }
    return "internal_error";
}

template <class Fn>
mseg_status guard(Fn&& fn)
{
    try {
        last_error.clear();
        return fn();
    } catch (const mseg::ParseError& ex) {
        last_error = ex.what();
        return MSEG_PARSE_ERROR;
    } catch (const json::exception& ex) {
        last_error = ex.what();
        return MSEG_PARSE_ERROR;
    } catch (const mseg::PreconditionError& ex) {
        last_error = ex.what();
        return MSEG_PRECONDITION_ERROR;
    } catch (const std::overflow_error& ex) {
        last_error = ex.what();
        return MSEG_PRECONDITION_ERROR;
    } catch (const mseg::InvariantViolation& ex) {
        last_error = std::string("counterexample: ") + ex.what();
        return MSEG_CHECK_FAILURE;
    } catch (const std::exception& ex) {
        last_error = ex.what();
        return MSEG_INTERNAL_ERROR;
    } catch (...) {
        last_error = "unknown error";
        return MSEG_INTERNAL_ERROR;
    }
}

template <class Fn>
mseg_status report(mseg_report** out, Fn&& fn)
{
    if (!out) {
        last_error = "null output pointer";
        return MSEG_PRECONDITION_ERROR;
    }
    *out = nullptr;
    Builder b;
    auto status = guard([&] {
        fn(b);
        return b.status;
    });
    if (status != MSEG_OK && b.diagnostics.empty() && !last_error.empty())
        b.diagnostics.push_back(last_error);
    if (status != MSEG_OK && last_error.empty() && !b.diagnostics.empty())
        last_error = b.diagnostics.front();
    try {
        auto* r = new mseg_report;
        r->status = status;
        json doc = {{"status", status_key(status)},
                    {"payload", status == MSEG_OK || status == MSEG_CHECK_FAILURE ? b.payload : json::object()},
                    {"diagnostics", b.diagnostics}};
        r->json = doc.dump();
        r->text = std::move(b.text);
        *out = r;
    } catch (...) {
        last_error = "out of memory";
        return MSEG_INTERNAL_ERROR;
    }
    return status;
}

template <class Fn>
mseg_status produce(mseg_multisegment** out, Fn&& fn)
{
    if (!out) {
        last_error = "null output pointer";
        return MSEG_PRECONDITION_ERROR;
    }
    *out = nullptr;
    return guard([&] {
        *out = new mseg_multisegment{fn()};
        return MSEG_OK;
    });
}

mseg::Multisegment parse_arg(const char* text)
{
    if (!text)
        throw mseg::PreconditionError("null multisegment text");
    return mseg::parse_multisegment(text);
}

std::vector<mseg::Multisegment> parse_list(const char* const* texts, std::size_t count)
{
    if (!texts && count)
        throw mseg::PreconditionError("null multisegment list");
    std::vector<mseg::Multisegment> ms;
    for (std::size_t i = 0; i < count; ++i)
        ms.push_back(parse_arg(texts[i]));
    return ms;
}

std::string rows_text(const mseg::Tableau& t)
{
    std::string out;
    for (const auto& row : t.rows()) {
        out += "(";
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j)
                out += ",";
            out += std::to_string(row[j]);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

} // namespace

extern "C" {

const char* mseg_version(void) { return "1.0.0"; }

const char* mseg_status_name(mseg_status status) { return status_key(status); }

const char* mseg_last_error(void) { return last_error.c_str(); }

void mseg_string_free(char* s) { std::free(s); }

mseg_status mseg_multisegment_parse(const char* text, mseg_multisegment** out)
{
    return produce(out, [&] { return parse_arg(text); });
}

void mseg_multisegment_free(mseg_multisegment* m) { delete m; }

size_t mseg_multisegment_size(const mseg_multisegment* m) { return m ? m->value.size() : 0; }

mseg_status mseg_multisegment_text(const mseg_multisegment* m, char** out)
{
    if (!m || !out) {
        last_error = "null argument";
        return MSEG_PRECONDITION_ERROR;
    }
    auto text = mseg::to_string(m->value);
    char* copy = static_cast<char*>(std::malloc(text.size() + 1));
    if (!copy) {
        last_error = "out of memory";
        return MSEG_INTERNAL_ERROR;
    }
    std::memcpy(copy, text.c_str(), text.size() + 1);
    *out = copy;
    return MSEG_OK;
}

int mseg_multisegment_equal(const mseg_multisegment* a, const mseg_multisegment* b)
{
    return a && b && a->value == b->value;
}

int mseg_multisegment_is_ladder(const mseg_multisegment* m) { return m && mseg::is_ladder(m->value); }

#define MSEG_REQUIRE(m)                                                                            \
    if (!(m))                                                                                      \
        throw mseg::PreconditionError("null multisegment handle");

mseg_status mseg_derive(const mseg_multisegment* m, mseg_multisegment** out)
{
    return produce(out, [&] {
        MSEG_REQUIRE(m);
        return mseg::derive(m->value);
    });
}

mseg_status mseg_extend(const mseg_multisegment* m, mseg_multisegment** out)
{
    return produce(out, [&] {
        MSEG_REQUIRE(m);
        return mseg::extend(m->value);
    });
}

mseg_status mseg_dagger(const mseg_multisegment* m, mseg_multisegment** out)
{
    return produce(out, [&] {
        MSEG_REQUIRE(m);
        return mseg::dagger(m->value);
    });
}

mseg_status mseg_bz_derivative(const mseg_multisegment* m, int radius, mseg_multisegment** out)
{
    return produce(out, [&] {
        MSEG_REQUIRE(m);
        return mseg::bz_derivative(m->value, radius);
    });
}

mseg_status mseg_single_derivative(const mseg_multisegment* m, int j, mseg_multisegment** out)
{
    return produce(out, [&] {
        MSEG_REQUIRE(m);
        return mseg::single_derivative(m->value, j);
    });
}

mseg_status mseg_width(const mseg_multisegment* m, size_t* out)
{
    return guard([&] {
        MSEG_REQUIRE(m);
        if (!out)
            throw mseg::PreconditionError("null output pointer");
        *out = mseg::width(m->value);
        return MSEG_OK;
    });
}

mseg_status mseg_report_status(const mseg_report* r) { return r ? r->status : MSEG_INTERNAL_ERROR; }

const char* mseg_report_json(const mseg_report* r) { return r ? r->json.c_str() : ""; }

const char* mseg_report_text(const mseg_report* r) { return r ? r->text.c_str() : ""; }

void mseg_report_free(mseg_report* r) { delete r; }

mseg_status mseg_rsk_report(const char* multisegment, unsigned flags, mseg_report** out)
{
    return report(out, [&](Builder& b) {
        auto m = parse_arg(multisegment);
        auto seq = mseg::rsk_transform(m);
        auto pq = m.empty() ? mseg::BitableauPair({}, {}) : mseg::bitableau_of(m);
        b.payload["ladders"] = seq;
        b.payload["width"] = seq.size();
        b.payload["P"] = pq.p;
        b.payload["Q"] = pq.q;
        b.line(mseg::to_string(seq));
        if (flags & MSEG_RSK_WIDTH)
            b.line("width: " + std::to_string(seq.size()));
        if (flags & MSEG_RSK_BITABLEAU) {
            b.line("P: " + rows_text(pq.p));
            b.line("Q: " + rows_text(pq.q));
        }
    });
}

mseg_status mseg_derive_report(const char* multisegment, mseg_derive_mode mode, int param, mseg_report** out)
{
    return report(out, [&](Builder& b) {
        auto m = parse_arg(multisegment);
        mseg::Multisegment result;
        switch (mode) {
        case MSEG_DERIVE_PLAIN: result = mseg::derive(m); break;
        case MSEG_DERIVE_BZ: result = mseg::bz_derivative(m, param); break;
        case MSEG_DERIVE_SINGLE: result = mseg::single_derivative(m, param); break;
        default: throw mseg::PreconditionError("unknown derivative mode");
        }
        b.payload = {{"input", mseg::to_string(m)}, {"result", mseg::to_string(result)}, {"segments", result}};
        b.line(mseg::to_string(result));
    });
}

mseg_status mseg_gamma_report(const char* multisegment, int derived, mseg_report** out)
{
    return report(out, [&](Builder& b) {
        auto m = parse_arg(multisegment);
        auto g = mseg::gamma_descriptor(m, derived != 0);
        b.payload = {{"ladders", g.ladders}, {"shape", g.shape}, {"a", g.a},
                     {"c", g.c},             {"shift", g.shift}, {"derived", g.derived}};
        b.line("ladders: " + mseg::to_string(g.ladders));
        b.line("shape: " + mseg::to_string(g.shape));
        b.line("a: " + std::to_string(g.a));
        b.line("c: " + std::to_string(g.c));
        b.line("shift: " + std::to_string(g.shift));
    });
}

mseg_status mseg_phi_report(const char* const* multisegments, size_t count, mseg_report** out)
{
    return report(out, [&](Builder& b) {
        auto ms = parse_list(multisegments, count);
        auto c = mseg::c_tuple(ms);
        auto c_prime = mseg::c_prime_tuple(ms);
        auto phi = mseg::phi_multiseg(ms);
        json list = json::array();
        for (const auto& m : ms)
            list.push_back(mseg::to_string(m));
        b.payload = {{"multisegments", list}, {"C", c}, {"C_prime", c_prime}, {"phi", phi}};
        b.line("C: " + std::to_string(c));
        b.line("C': " + std::to_string(c_prime));
        b.line("Phi: " + std::to_string(phi));
        if (c - c_prime != phi) {
            b.status = MSEG_CHECK_FAILURE;
            b.diagnostics.push_back("C - C' differs from Phi");
        }
    });
}

mseg_status mseg_bz_string_report(const char* multisegment, int radius, mseg_report** out)
{
    return report(out, [&](Builder& b) {
        auto m = parse_arg(multisegment);
        auto s = mseg::bz_string(m, radius);
        json seq = std::vector<int>(s.sequence.indices().begin(), s.sequence.indices().end());
        json str = std::vector<std::int64_t>(s.string.coords().begin(), s.string.coords().end());
        b.payload = {{"sequence", seq}, {"string", str}};
        b.line("sequence: " + mseg::to_string(s.sequence));
        b.line("string: " + mseg::to_string(s.string));
    });
}

mseg_status mseg_transfer_report(const char* table_json, const char* const* multisegments, size_t count,
                                 mseg_report** out)
{
    return report(out, [&](Builder& b) {
        if (!table_json)
            throw mseg::PreconditionError("null table");
        auto table = json::parse(table_json).get<mseg::MultiplicityTable>();
        auto ms = parse_list(multisegments, count);
        auto result = mseg::transfer_multiplicities(table, ms);
        b.payload["table"] = result;
        b.payload["phi"] = mseg::phi_multiseg(ms);
        for (const auto& [key, poly] : result.rows())
            b.line(mseg::to_string(key) + ": " + mseg::to_string(poly));
    });
}

void mseg_check_options_init(mseg_check_options* opts)
{
    if (!opts)
        return;
    mseg::CheckOptions d;
    opts->has_bounds = 0;
    opts->support_min = 0;
    opts->support_max = 0;
    opts->max_segments = 0;
    opts->seed = d.seed;
    opts->samples = d.samples;
    opts->transfer_instances = d.transfer_instances;
    opts->max_size = d.max_size;
    opts->max_level = d.max_level;
    opts->mutate_ell_sign = 0;
}

mseg_status mseg_specht_report(const char* charge, const char* parts, unsigned flags, mseg_report** out)
{
    return report(out, [&](Builder& b) {
        if (!charge || !parts)
            throw mseg::PreconditionError("null charge or parts");
        auto kappa = mseg::parse_charge(charge);
        auto mp = mseg::parse_parts(parts);
        if (kappa.level() != mp.size())
            throw mseg::PreconditionError("charge has level " + std::to_string(kappa.level()) + " but " +
                                          std::to_string(mp.size()) + " partitions were given");
        bool restricted = mseg::is_restricted(kappa, mp);
        bool proper = mseg::is_proper(kappa, mp);
        auto m = mseg::multiseg_of(kappa, mp);
        b.payload = {{"restricted", restricted},
                     {"proper", proper},
                     {"multisegment", mseg::to_string(m)},
                     {"gamma", nullptr},
                     {"ladders", nullptr},
                     {"checks", json::array()}};
        b.line("restricted: " + yes_no(restricted));
        b.line("proper: " + yes_no(proper));
        b.line("multisegment: " + mseg::to_string(m));
        if ((flags & (MSEG_SPECHT_PAD | MSEG_SPECHT_VERIFY_RSK | MSEG_SPECHT_DERIVE)) && !restricted)
            throw mseg::PreconditionError(mseg::to_string(mp) + " is not " + mseg::to_string(kappa) +
                                          "-restricted");
        if (flags & MSEG_SPECHT_PAD) {
            auto padded = mseg::pad(kappa, mp);
            json list = json::array();
            for (const auto& mu : padded)
                list.push_back(mu);
            b.payload["padded"] = list;
            b.line("padded: " + mseg::to_string(padded));
        }
        if (flags & MSEG_SPECHT_VERIFY_RSK) {
            auto rep = mseg::specht_rsk_verify(kappa, mp);
            b.payload["gamma"] = rep.gamma;
            b.payload["ladders"] = rep.ladders;
            b.payload["rsk"] = rep.rsk_n;
            b.payload["padded_multisegment"] = mseg::to_string(rep.n);
            b.payload["shift"] = rep.shift;
            for (const auto& c : rep.checks)
                b.payload["checks"].push_back(c);
            b.line("padded multisegment: " + mseg::to_string(rep.n));
            b.line("rsk: " + mseg::to_string(rep.rsk_n));
            b.line("gamma: " + mseg::to_string(rep.gamma));
            b.line("ladders: " + mseg::to_string(rep.ladders));
            b.line("shift: " + std::to_string(rep.shift));
            for (const auto& c : rep.checks)
                b.line("check: " + c);
        }
        if (flags & MSEG_SPECHT_DERIVE) {
            auto cmp = mseg::cut(mp);
            bool ok = mseg::column_removal_check(kappa, mp);
            b.payload["cut"] = mseg::to_string(cmp);
            b.payload["cut_multisegment"] = mseg::to_string(mseg::multiseg_of(kappa, cmp));
            b.payload["checks"].push_back(std::string("column removal: ") + (ok ? "pass" : "fail"));
            b.line("cut: " + mseg::to_string(cmp));
            b.line("cut multisegment: " + mseg::to_string(mseg::multiseg_of(kappa, cmp)));
            b.line(std::string("check: column removal ") + (ok ? "pass" : "fail"));
            if (!ok) {
                b.status = MSEG_CHECK_FAILURE;
                b.diagnostics.push_back("column removal identity fails for " + mseg::to_string(mp));
            }
        }
    });
}

mseg_status mseg_tableaux_report(const char* shape, int k, mseg_report** out)
{
    return report(out, [&](Builder& b) {
        if (!shape)
            throw mseg::PreconditionError("null shape");
        auto mu = mseg::parse_partition(shape);
        if (mu.size() > 12)
            throw mseg::PreconditionError("shapes are limited to at most 12 cells");
        auto tableaux = mseg::standard_tableaux(mu);
        json list = json::array();
        b.line("shape: " + mseg::to_string(mu));
        b.line("count: " + std::to_string(tableaux.size()));
        for (const auto& t : tableaux) {
            auto rows = mseg::filling_rows(t);
            auto nu = mseg::residue_sequence(k, t);
            list.push_back({{"rows", rows}, {"residues", nu}});
            std::string r;
            for (const auto& row : rows) {
                r += "(";
                for (std::size_t j = 0; j < row.size(); ++j)
                    r += (j ? "," : "") + std::to_string(row[j]);
                r += ")";
            }
            std::string s;
            for (std::size_t i = 0; i < nu.size(); ++i)
                s += (i ? "," : "") + std::to_string(nu[i]);
            b.line(r + "  residues (" + s + ")");
        }
        b.payload = {{"shape", mu}, {"k", k}, {"count", tableaux.size()}, {"tableaux", list},
                     {"content", mseg::content(k, mu)}};
    });
}

mseg_status mseg_check_report(const char* suite, const mseg_check_options* opts, mseg_report** out)
{
    return report(out, [&](Builder& b) {
        if (!suite)
            throw mseg::PreconditionError("null suite name");
        mseg::CheckOptions o;
        if (opts) {
            if (opts->has_bounds)
                o.bounds = mseg::EnumerationBounds{opts->support_min, opts->support_max, opts->max_segments};
            o.seed = opts->seed;
            o.samples = opts->samples;
            o.transfer_instances = opts->transfer_instances;
            o.max_size = opts->max_size;
            o.max_level = opts->max_level;
            o.mutate_ell_sign = opts->mutate_ell_sign != 0;
        }
        if (o.bounds && (o.bounds->support_max - static_cast<long long>(o.bounds->support_min) > 60 ||
                         o.bounds->max_segments > 64))
            throw mseg::PreconditionError("check bounds are limited to a support of width 60 and 64 segments");
        if (o.max_size < 0 || o.max_size > 20 || o.max_level < 0 || o.max_level > 6)
            throw mseg::PreconditionError("check needs 0 <= max-size <= 20 and 0 <= max-level <= 6");
        auto reports = mseg::run_suite(suite, o);
        json list = json::array();
        for (const auto& r : reports) {
            list.push_back(r);
            char seconds[32];
            std::snprintf(seconds, sizeof seconds, "%.2f", r.seconds);
            b.line(std::string(r.passed() ? "PASS " : "FAIL ") + r.suite + " instances=" +
                   std::to_string(r.instances) + " failures=" + std::to_string(r.failure_count) + " (" +
                   seconds + "s)");
            for (const auto& n : r.notes)
                b.line("  note: " + n);
            if (!r.passed()) {
                b.status = MSEG_CHECK_FAILURE;
                for (const auto& f : r.failures) {
                    b.line("  counterexample: " + f);
                    b.diagnostics.push_back(r.suite + ": " + f);
                }
                b.line("  reproduce: " + r.reproduce);
            }
        }
        b.payload["suites"] = list;
    });
}

} // extern "C"
