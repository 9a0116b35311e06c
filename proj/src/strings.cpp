#include "mseg/strings.hpp"

#include <algorithm>
#include <functional>

namespace mseg {

AdmissibleSequence::AdmissibleSequence(std::vector<int> indices) : indices_(std::move(indices))
{
    for (std::size_t r = 1; r < indices_.size(); ++r)
        if (indices_[r] == indices_[r - 1])
            throw PreconditionError("sequence is not admissible: index " +
                                    std::to_string(indices_[r]) + " repeats at positions " +
                                    std::to_string(r) + " and " + std::to_string(r + 1));
}

AdmissibleSequence AdmissibleSequence::bz(int T)
{
    if (T < 0 || T > kMaxBzRadius)
        throw PreconditionError("BZ-sequence radius must lie in [0, " + std::to_string(kMaxBzRadius) +
                                "], got " + std::to_string(T));
    std::vector<int> indices;
    indices.reserve(2 * static_cast<std::size_t>(T) + 1);
    for (int i = T; i >= -T; --i)
        indices.push_back(i);
    return AdmissibleSequence(std::move(indices));
}

StringVector::StringVector(std::vector<std::int64_t> coords) : coords_(std::move(coords))
{
    for (auto c : coords_)
        if (c < 0)
            throw PreconditionError("string coordinates must be non-negative");
}

StringVector& StringVector::operator+=(const StringVector& other)
{
    if (other.size() != size())
        throw PreconditionError("string vectors of different lengths");
    for (std::size_t r = 0; r < coords_.size(); ++r)
        coords_[r] = checked::add(coords_[r], other.coords_[r]);
    return *this;
}

namespace {

template <class Seq>
std::string join(const Seq& xs)
{
    std::string out = "(";
    bool first = true;
    for (auto x : xs) {
        if (!first)
            out += ",";
        first = false;
        out += std::to_string(x);
    }
    return out + ")";
}

void require_length(const AdmissibleSequence& i, const StringVector& a)
{
    if (a.size() != i.size())
        throw PreconditionError("string of length " + std::to_string(a.size()) +
                                " does not match a sequence of length " + std::to_string(i.size()));
}

std::int64_t cartan_entry(int i, int j)
{
    if (i == j)
        return 2;
    return (i - j == 1 || j - i == 1) ? -1 : 0;
}

std::int64_t phi_with(std::span<const Multisegment> ms, std::int64_t (*lform)(const Weight&, const Weight&))
{
    std::vector<Weight> begins;
    std::vector<Weight> weights;
    for (const auto& m : ms) {
        begins.push_back(b_invariant(m));
        weights.push_back(wt(m));
    }
    std::int64_t phi = 0;
    for (std::size_t j = 0; j < ms.size(); ++j)
        for (std::size_t k = j + 1; k < ms.size(); ++k)
            phi = checked::add(phi, checked::sub(lform(begins[j], begins[k]),
                                                 cartan_form(begins[j], weights[k])));
    return phi;
}

std::int64_t mutated_ell_form(const Weight& b1, const Weight& b2)
{
    std::int64_t total = 0;
    for (const auto& [i, c] : b1.terms())
        total = checked::add(total, checked::mul(c, checked::add(b2.coeff(i), b2.coeff(i + 1))));
    return total;
}

} // namespace

std::string to_string(const AdmissibleSequence& i) { return join(i.indices()); }
std::string to_string(const StringVector& a) { return join(a.coords()); }

Weight beta_of(const AdmissibleSequence& i, const StringVector& a)
{
    require_length(i, a);
    Weight w;
    for (std::size_t r = 0; r < i.size(); ++r)
        w.add_term(i[r], a[r]);
    return w;
}

std::int64_t string_form(const AdmissibleSequence& i, const StringVector& a1, const StringVector& a2)
{
    require_length(i, a1);
    require_length(i, a2);
    std::int64_t total = 0;
    for (std::size_t r = 0; r < i.size(); ++r) {
        if (a1[r] == 0)
            continue;
        std::int64_t inner = a2[r];
        for (std::size_t u = 0; u < r; ++u)
            inner = checked::add(inner, checked::mul(cartan_entry(i[r], i[u]), a2[u]));
        total = checked::add(total, checked::mul(a1[r], inner));
    }
    return total;
}

std::int64_t phi_weights(const AdmissibleSequence& i, std::span<const StringVector> as,
                         std::span<const Weight> betas)
{
    if (as.size() != betas.size())
        throw PreconditionError("phi_weights needs as many strings as weights");
    std::vector<Weight> string_weights;
    for (std::size_t j = 0; j < as.size(); ++j) {
        string_weights.push_back(beta_of(i, as[j]));
        if (!betas[j].is_positive() && !betas[j].is_zero())
            throw PreconditionError("phi_weights: beta_" + std::to_string(j + 1) + " is not positive");
        if (!leq(string_weights.back(), betas[j]))
            throw PreconditionError("phi_weights: beta(i, a_" + std::to_string(j + 1) +
                                    ") = " + to_string(string_weights.back()) +
                                    " is not below beta_" + std::to_string(j + 1) + " = " +
                                    to_string(betas[j]));
    }
    std::int64_t phi = 0;
    for (std::size_t j = 0; j < as.size(); ++j)
        for (std::size_t k = j + 1; k < as.size(); ++k)
            phi = checked::add(phi, checked::sub(string_form(i, as[j], as[k]),
                                                 cartan_form(betas[k], string_weights[j])));
    return phi;
}

std::int64_t c_pair(const Multisegment& n1, const Multisegment& n2)
{
    std::int64_t count = 0;
    for (auto d1 : n1.segments())
        for (auto d2 : n2.segments())
            if (static_cast<long long>(d1.b) == static_cast<long long>(d2.e) + 1)
                ++count;
    return count;
}

std::int64_t c_tuple(std::span<const Multisegment> ms)
{
    std::int64_t total = 0;
    for (std::size_t j = 0; j < ms.size(); ++j)
        for (std::size_t k = j + 1; k < ms.size(); ++k)
            total = checked::add(total, c_pair(ms[j], ms[k]));
    return total;
}

std::int64_t c_prime_tuple(std::span<const Multisegment> ms)
{
    std::int64_t total = 0;
    for (std::size_t j = 0; j < ms.size(); ++j) {
        auto shifted = shift_right(ms[j]);
        for (std::size_t k = j + 1; k < ms.size(); ++k)
            total = checked::add(total, c_pair(shifted, ms[k]));
    }
    return total;
}

std::int64_t phi_multiseg(std::span<const Multisegment> ms) { return phi_with(ms, ell_form); }

std::int64_t phi_multiseg_mutated(std::span<const Multisegment> ms)
{
    return phi_with(ms, mutated_ell_form);
}

BzString bz_string(const Multisegment& m, int T)
{
    auto seq = AdmissibleSequence::bz(T);
    auto w = wt(m);
    if (!w.in_subcone(T))
        throw PreconditionError("support of wt(" + to_string(m) + ") = " + to_string(w) +
                                " exceeds [" + std::to_string(-T) + "," + std::to_string(T) + "]");
    auto begins = b_invariant(m);
    std::vector<std::int64_t> coords(seq.size(), 0);
    for (const auto& [i, c] : begins.terms())
        coords[static_cast<std::size_t>(T - i)] = c;
    return {std::move(seq), StringVector(std::move(coords))};
}

Multisegment single_derivative(const Multisegment& m, int j)
{
    for (auto s : m.segments())
        if (static_cast<long long>(s.b) == static_cast<long long>(j) + 1)
            throw PreconditionError("single derivative at " + std::to_string(j) + " needs no segment beginning at " +
                                    std::to_string(static_cast<long long>(j) + 1) + ", but " +
                                    to_string(m) + " contains " + to_string(s));
    std::vector<Segment> out;
    out.reserve(m.size());
    for (auto s : m.segments()) {
        if (s.b != j)
            out.push_back(s);
        else if (s.b < s.e)
            out.push_back(Segment{s.b + 1, s.e});
    }
    return Multisegment(std::move(out));
}

Multisegment bz_derivative(const Multisegment& m, int T)
{
    if (!wt(m).in_subcone(T) || T < 0)
        throw PreconditionError("support of wt(" + to_string(m) + ") exceeds [" +
                                std::to_string(-T) + "," + std::to_string(T) + "]");
    // Steps at indices where nothing begins are the identity, and each step
    // only creates begins above its own index, so the begins of m suffice.
    std::vector<int> steps;
    for (auto s : m.segments())
        steps.push_back(s.b);
    std::sort(steps.begin(), steps.end(), std::greater<>());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    Multisegment current = m;
    for (int j : steps)
        current = single_derivative(current, j);
    if (current != derive(m))
        throw InvariantViolation("BZ-derivative of " + to_string(m) + " gave " + to_string(current) +
                                 " instead of " + to_string(derive(m)));
    return current;
}

void MultiplicityTable::insert(const Multisegment& key, const LaurentPoly& poly)
{
    if (!poly.has_nonnegative_coefficients())
        throw PreconditionError("multiplicity of " + to_string(key) + " has a negative coefficient");
    if (!rows_.empty()) {
        const auto& reference = rows_.begin()->first;
        if (wt(key) != wt(reference))
            throw PreconditionError("table key " + to_string(key) + " has weight " +
                                    to_string(wt(key)) + ", other keys have " +
                                    to_string(wt(reference)));
    }
    rows_[key] = poly;
}

MultiplicityTable transfer_multiplicities(const MultiplicityTable& table,
                                          std::span<const Multisegment> ms)
{
    Weight total_wt;
    Weight total_b;
    for (const auto& m : ms) {
        total_wt += wt(m);
        total_b += b_invariant(m);
    }
    auto shift = phi_multiseg(ms);
    if (shift > kIndexLimit || shift < -kIndexLimit)
        throw std::overflow_error("grading shift out of range");

    MultiplicityTable out;
    for (const auto& [n, poly] : table.rows()) {
        if (wt(n) != total_wt)
            throw PreconditionError("table key " + to_string(n) + " has weight " + to_string(wt(n)) +
                                    ", expected " + to_string(total_wt));
        if (b_invariant(n) != total_b)
            continue;
        auto key = derive(n);
        if (out.rows().count(key))
            throw InvariantViolation("re-keying collision at " + to_string(key));
        out.insert(key, poly.shifted(-static_cast<int>(shift)));
    }
    return out;
}

void to_json(nlohmann::json& j, const MultiplicityTable& t)
{
    j = nlohmann::json::array();
    for (const auto& [key, poly] : t.rows())
        j.push_back({{"key", to_string(key)}, {"poly", poly}});
}

void from_json(const nlohmann::json& j, MultiplicityTable& t)
{
    if (!j.is_array())
        throw ParseError("multiplicity table JSON must be a list of {key, poly} rows");
    MultiplicityTable out;
    for (const auto& row : j) {
        if (!row.is_object() || !row.contains("key") || !row.contains("poly") || !row["key"].is_string())
            throw ParseError("multiplicity table rows need a string \"key\" and a \"poly\" object");
        auto key = parse_multisegment(row["key"].get<std::string>());
        LaurentPoly poly = row["poly"].get<LaurentPoly>();
        if (out.rows().count(key))
            throw ParseError("duplicate multiplicity table key " + to_string(key));
        out.insert(key, poly);
    }
    t = std::move(out);
}

} // namespace mseg
