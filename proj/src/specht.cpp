#include "mseg/specht.hpp"

#include <algorithm>
#include <charconv>

#include "mseg/rsk.hpp"

namespace mseg {

namespace {

void require_paired(const Multicharge& kappa, const Multipartition& mp)
{
    if (kappa.level() != mp.size())
        throw PreconditionError("multicharge of level " + std::to_string(kappa.level()) +
                                " paired with " + std::to_string(mp.size()) + " partitions");
}

long long length_minus_charge(const Multipartition& mp, const Multicharge& kappa, std::size_t i)
{
    return static_cast<long long>(mp[i].length()) - kappa[i];
}

} // namespace

Multicharge::Multicharge(std::vector<int> charges) : charges_(std::move(charges))
{
    for (std::size_t i = 0; i < charges_.size(); ++i) {
        checked_index(charges_[i]);
        if (i && charges_[i] > charges_[i - 1])
            throw PreconditionError("multicharge must be weakly decreasing, got " + to_string(*this));
    }
}

Multicharge Multicharge::dagger() const
{
    std::vector<int> out(charges_.rbegin(), charges_.rend());
    for (auto& k : out)
        k = -k;
    return Multicharge(std::move(out));
}

DominantWeight Multicharge::lambda() const
{
    std::vector<std::pair<int, std::int64_t>> coeffs;
    for (int k : charges_)
        coeffs.emplace_back(k, 1);
    return DominantWeight(std::move(coeffs));
}

std::int64_t total_size(const Multipartition& mp)
{
    std::int64_t total = 0;
    for (const auto& mu : mp)
        total = checked::add(total, mu.size());
    return total;
}

Multipartition cut(const Multipartition& mp)
{
    Multipartition out;
    out.reserve(mp.size());
    for (const auto& mu : mp)
        out.push_back(mu.cut());
    return out;
}

Weight content(int k, const Partition& mu)
{
    Weight w;
    for (std::size_t i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i); ++j)
            w.add_term(checked_index(static_cast<long long>(k) + j - static_cast<long long>(i)), 1);
    return w;
}

Weight content(const Multicharge& kappa, const Multipartition& mp)
{
    require_paired(kappa, mp);
    Weight w;
    for (std::size_t i = 0; i < mp.size(); ++i)
        w += content(kappa[i], mp[i]);
    return w;
}

bool is_restricted(const Multicharge& kappa, const Multipartition& mp)
{
    require_paired(kappa, mp);
    for (std::size_t i = 0; i + 1 < mp.size(); ++i) {
        long long offset = static_cast<long long>(kappa[i]) - kappa[i + 1];
        for (long long j = 1; j + offset <= static_cast<long long>(mp[i].length()); ++j)
            if (mp[i].part(static_cast<std::size_t>(j + offset)) > mp[i + 1].part(static_cast<std::size_t>(j)))
                return false;
    }
    return true;
}

bool is_proper(const Multicharge& kappa, const Multipartition& mp)
{
    if (!is_restricted(kappa, mp))
        return false;
    for (std::size_t i = 1; i < mp.size(); ++i)
        if (length_minus_charge(mp, kappa, i) != length_minus_charge(mp, kappa, 0))
            return false;
    return true;
}

Multipartition pad(const Multicharge& kappa, const Multipartition& mp)
{
    require_paired(kappa, mp);
    if (!is_restricted(kappa, mp))
        throw PreconditionError("padding requires a restricted multipartition, got " +
                                to_string(mp) + " for " + to_string(kappa));
    Multipartition out;
    if (mp.empty())
        return out;
    const long long r = length_minus_charge(mp, kappa, mp.size() - 1);
    for (std::size_t i = 0; i < mp.size(); ++i) {
        long long ones = r + kappa[i] - static_cast<long long>(mp[i].length());
        if (ones < 0)
            throw InvariantViolation("negative padding count for component " + std::to_string(i + 1) +
                                     " of " + to_string(mp));
        if (ones > kIndexLimit)
            throw std::overflow_error("padding count out of range");
        std::vector<int> parts;
        for (int p : mp[i].parts())
            parts.push_back(checked::add(p, 1));
        parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
        out.emplace_back(std::move(parts));
    }
    if (!is_proper(kappa, out))
        throw InvariantViolation("padding of " + to_string(mp) + " is not proper: " + to_string(out));
    if (cut(out) != mp)
        throw InvariantViolation("padding of " + to_string(mp) + " does not cut back to the input");
    return out;
}

Multisegment ladder_of_partition(int k, const Partition& mu)
{
    std::vector<Segment> segs;
    for (std::size_t i = 1; i <= mu.length(); ++i) {
        long long row = static_cast<long long>(i);
        segs.push_back(Segment::make(k - mu.part(i) + row, k + row - 1));
    }
    Multisegment m(std::move(segs));
    if (m.empty())
        return m;
    if (!is_ladder(m))
        throw InvariantViolation("m(" + std::to_string(k) + ", " + to_string(mu) + ") = " + to_string(m) +
                                 " is not a ladder");
    if (wt(m) != content(k, conjugate(mu)))
        throw InvariantViolation("wt(m(" + std::to_string(k) + ", " + to_string(mu) +
                                 ")) differs from the content of the conjugate");
    return m;
}

LadderSequence component_ladders(const Multicharge& kappa, const Multipartition& mp)
{
    require_paired(kappa, mp);
    LadderSequence seq;
    for (std::size_t i = 0; i < mp.size(); ++i)
        seq.ladders.push_back(ladder_of_partition(checked::neg(kappa[i]), mp[i]));
    return seq;
}

Multisegment multiseg_of(const Multicharge& kappa, const Multipartition& mp)
{
    return component_ladders(kappa, mp).sum();
}

namespace {

// Empty components of a proper multipartition sit at the largest -k_i, which
// is a suffix; RSK never produces empty ladders, so those are dropped.
LadderSequence expected_rsk(const Multicharge& kappa, const Multipartition& mp)
{
    auto seq = component_ladders(kappa, mp);
    auto compact = seq.without_gaps();
    for (std::size_t i = 0; i < compact.size(); ++i)
        if (compact[i] != seq[i])
            throw InvariantViolation("empty components of proper " + to_string(mp) +
                                     " do not form a suffix");
    return compact;
}

bool equal_padded(const LadderSequence& a, const LadderSequence& b)
{
    static const Multisegment none;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        const auto& x = i < a.size() ? a[i] : none;
        const auto& y = i < b.size() ? b[i] : none;
        if (x != y)
            return false;
    }
    return true;
}

} // namespace

SpechtRskReport specht_rsk_verify(const Multicharge& kappa, const Multipartition& mp)
{
    require_paired(kappa, mp);
    SpechtRskReport rep;
    rep.restricted = is_restricted(kappa, mp);
    if (!rep.restricted)
        throw PreconditionError(to_string(mp) + " is not " + to_string(kappa) + "-restricted");
    rep.proper = is_proper(kappa, mp);
    auto context = [&] { return " for kappa = " + to_string(kappa) + ", mu = " + to_string(mp); };

    rep.padded = pad(kappa, mp);
    rep.checks.push_back("pad: proper and cuts back to the input");
    rep.m = multiseg_of(kappa, mp);
    rep.n = multiseg_of(kappa, rep.padded);

    rep.rsk_n = rsk_transform(rep.n);
    if (rep.rsk_n != expected_rsk(kappa, rep.padded))
        throw InvariantViolation("RSK(n) = " + to_string(rep.rsk_n) + " differs from the padded components " +
                                 to_string(component_ladders(kappa, rep.padded)) + context());
    rep.checks.push_back("RSK of the padded multisegment matches its components");

    if (rep.proper) {
        auto rsk_m = rsk_transform(rep.m);
        if (rsk_m != expected_rsk(kappa, mp))
            throw InvariantViolation("RSK(m) = " + to_string(rsk_m) + " differs from the components " +
                                     to_string(component_ladders(kappa, mp)) + context());
        rep.checks.push_back("proper input: RSK(m) matches its components");
    }

    auto rest = difference(rep.n, extend(rep.m));
    if (!rest)
        throw InvariantViolation("m^+ is not contained in n" + context());
    for (auto s : rest->segments())
        if (s.b != s.e)
            throw InvariantViolation("n - m^+ contains the non-point segment " + to_string(s) + context());
    rep.gamma = wt(*rest);
    rep.checks.push_back("n = m^+ + d(gamma) with gamma = " + to_string(rep.gamma));

    if (!equal_padded(rep.rsk_n.derived(), component_ladders(kappa, mp)))
        throw InvariantViolation("derived RSK(n) = " + to_string(rep.rsk_n.derived()) +
                                 " differs from " + to_string(component_ladders(kappa, mp)) + context());
    if (!rep.n.empty()) {
        auto g = gamma_descriptor(rep.n, true);
        if (g.ladders != rep.rsk_n.derived())
            throw InvariantViolation("Gamma'(n) ladders disagree with the derived RSK(n)" + context());
        rep.ladders = g.ladders;
        rep.shift = g.shift;
    }
    rep.checks.push_back("derived RSK(n) matches the components of m");
    return rep;
}

bool column_removal_check(const Multicharge& kappa, const Multipartition& mp)
{
    if (!is_restricted(kappa, mp))
        throw PreconditionError(to_string(mp) + " is not " + to_string(kappa) + "-restricted");
    auto cmp = cut(mp);
    return is_restricted(kappa, cmp) && derive(multiseg_of(kappa, mp)) == multiseg_of(kappa, cmp);
}

Multicharge parse_charge(std::string_view text)
{
    std::vector<int> charges;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        while (!token.empty() && token.front() == ' ')
            token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ')
            token.remove_suffix(1);
        if (!token.empty() && token.front() == '+')
            token.remove_prefix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || v > kIndexLimit ||
            v < -kIndexLimit)
            throw ParseError("malformed multicharge '" + std::string(text) + "'");
        charges.push_back(v);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    try {
        return Multicharge(std::move(charges));
    } catch (const PreconditionError& ex) {
        throw ParseError(ex.what());
    }
}

Multipartition parse_parts(std::string_view text)
{
    Multipartition mp;
    std::size_t start = 0;
    while (true) {
        auto bar = text.find('|', start);
        mp.push_back(parse_partition(text.substr(start, bar == std::string_view::npos ? text.npos : bar - start)));
        if (bar == std::string_view::npos)
            break;
        start = bar + 1;
    }
    return mp;
}

std::string to_string(const Multicharge& kappa)
{
    std::string out = "(";
    for (std::size_t i = 0; i < kappa.level(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(kappa[i]);
    }
    return out + ")";
}

std::string to_string(const Multipartition& mp)
{
    std::string out = "(";
    for (std::size_t i = 0; i < mp.size(); ++i) {
        if (i)
            out += ",";
        out += to_string(mp[i]);
    }
    return out + ")";
}

void to_json(nlohmann::json& j, const SpechtRskReport& r)
{
    auto padded = nlohmann::json::array();
    for (const auto& mu : r.padded)
        padded.push_back(mu);
    j = {{"restricted", r.restricted},
         {"proper", r.proper},
         {"padded", padded},
         {"multisegment", to_string(r.m)},
         {"padded_multisegment", to_string(r.n)},
         {"gamma", r.gamma},
         {"rsk", r.rsk_n},
         {"ladders", r.ladders},
         {"shift", r.shift},
         {"checks", r.checks}};
}

} // namespace mseg
