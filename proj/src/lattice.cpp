#include "mseg/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace mseg {

int checked_index(long long i)
{
    if (i < -kIndexLimit || i > kIndexLimit)
        throw std::overflow_error("root index " + std::to_string(i) + " outside the supported range");
    return static_cast<int>(i);
}

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

int add(int a, int b)
{
    int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in index arithmetic");
    return r;
}

int neg(int a)
{
    if (a == std::numeric_limits<int>::min())
        throw std::overflow_error("integer overflow in index negation");
    return -a;
}

} // namespace checked

namespace {

using SparseTerms = std::vector<std::pair<int, std::int64_t>>;

std::int64_t lookup(const SparseTerms& terms, int i)
{
    auto it = std::lower_bound(terms.begin(), terms.end(), i,
                               [](const auto& t, int key) { return t.first < key; });
    return (it != terms.end() && it->first == i) ? it->second : 0;
}

void accumulate(SparseTerms& terms, int i, std::int64_t c)
{
    if (c == 0)
        return;
    auto it = std::lower_bound(terms.begin(), terms.end(), i,
                               [](const auto& t, int key) { return t.first < key; });
    if (it != terms.end() && it->first == i) {
        it->second = checked::add(it->second, c);
        if (it->second == 0)
            terms.erase(it);
    } else {
        terms.insert(it, {i, c});
    }
}

// Merge b (scaled by sign) into a, keeping the canonical form.
SparseTerms merge(const SparseTerms& a, const SparseTerms& b, std::int64_t sign)
{
    SparseTerms out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, checked::mul(sign, ib->second));
            ++ib;
        } else {
            auto c = checked::add(ia->second, checked::mul(sign, ib->second));
            if (c != 0)
                out.emplace_back(ia->first, c);
            ++ia;
            ++ib;
        }
    }
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

template <typename Int>
Int parse_int(std::string_view s, const char* what)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    Int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(std::string("malformed ") + what + ": '" + std::string(s) + "'");
    return v;
}

// Splits "t1+t2-t3" into signed terms, honoring parentheses.
std::vector<std::pair<int, std::string_view>> signed_terms(std::string_view s)
{
    std::vector<std::pair<int, std::string_view>> out;
    int depth = 0;
    int sign = 1;
    std::size_t start = 0;
    bool leading = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '(')
            ++depth;
        else if (ch == ')')
            --depth;
        else if ((ch == '+' || ch == '-') && depth == 0) {
            if (leading && trim(s.substr(start, i - start)).empty()) {
                sign = (ch == '-') ? -sign : sign;
                start = i + 1;
                continue;
            }
            out.emplace_back(sign, trim(s.substr(start, i - start)));
            sign = (ch == '-') ? -1 : 1;
            start = i + 1;
            leading = true;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(ch)))
            leading = false;
    }
    out.emplace_back(sign, trim(s.substr(start)));
    return out;
}

void append_coeff_term(std::string& out, std::int64_t c, const std::string& base)
{
    if (c < 0)
        out += "-";
    else if (!out.empty())
        out += "+";
    auto mag = c < 0 ? -c : c;
    if (mag != 1)
        out += std::to_string(mag) + "*";
    out += base;
}

} // namespace

// ---------------------------------------------------------------- Weight

Weight::Weight(std::initializer_list<Term> terms)
{
    for (const auto& [i, c] : terms)
        add_term(i, c);
}

Weight Weight::simple_root(int i, std::int64_t coeff)
{
    Weight w;
    w.add_term(i, coeff);
    return w;
}

std::int64_t Weight::coeff(int i) const { return lookup(terms_, i); }

bool Weight::is_positive() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

std::int64_t Weight::height() const
{
    if (!is_positive())
        throw PreconditionError("height requires a positive weight, got " + to_string(*this));
    std::int64_t h = 0;
    for (const auto& t : terms_)
        h = checked::add(h, t.second);
    return h;
}

Weight Weight::dagger() const
{
    Weight out;
    out.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        out.terms_.emplace_back(checked::neg(it->first), it->second);
    return out;
}

bool Weight::in_subcone(int n) const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [n](const Term& t) { return -n <= t.first && t.first <= n; });
}

std::optional<std::pair<int, int>> Weight::support() const
{
    if (terms_.empty())
        return std::nullopt;
    return std::pair{terms_.front().first, terms_.back().first};
}

void Weight::add_term(int i, std::int64_t coeff) { accumulate(terms_, checked_index(i), coeff); }

Weight& Weight::operator+=(const Weight& other)
{
    terms_ = merge(terms_, other.terms_, 1);
    return *this;
}

Weight& Weight::operator-=(const Weight& other)
{
    terms_ = merge(terms_, other.terms_, -1);
    return *this;
}

Weight operator*(std::int64_t s, const Weight& w)
{
    Weight out;
    if (s == 0)
        return out;
    out.terms_.reserve(w.terms_.size());
    for (const auto& [i, c] : w.terms_)
        out.terms_.emplace_back(i, checked::mul(s, c));
    return out;
}

bool leq(const Weight& b1, const Weight& b2)
{
    if (!b1.is_positive() || !b2.is_positive())
        throw PreconditionError("cone order requires positive weights");
    return (b2 - b1).is_positive();
}

std::int64_t cartan_form(const Weight& b1, const Weight& b2)
{
    std::int64_t sum = 0;
    for (const auto& [i, c] : b1.terms()) {
        auto inner = checked::sub(checked::mul(2, b2.coeff(i)),
                                  checked::add(b2.coeff(i - 1), b2.coeff(i + 1)));
        sum = checked::add(sum, checked::mul(c, inner));
    }
    return sum;
}

std::int64_t ell_form(const Weight& b1, const Weight& b2)
{
    std::int64_t sum = 0;
    for (const auto& [i, c] : b1.terms())
        sum = checked::add(sum, checked::mul(c, checked::sub(b2.coeff(i), b2.coeff(i + 1))));
    return sum;
}

std::string to_string(const Weight& w)
{
    if (w.is_zero())
        return "0";
    std::string out;
    for (const auto& [i, c] : w.terms())
        append_coeff_term(out, c, "a(" + std::to_string(i) + ")");
    return out;
}

Weight parse_weight(std::string_view text)
{
    auto s = trim(text);
    if (s.empty())
        throw ParseError("empty weight");
    if (s == "0")
        return {};
    Weight w;
    for (auto [sign, term] : signed_terms(s)) {
        if (term.empty())
            throw ParseError("malformed weight: '" + std::string(text) + "'");
        std::int64_t coeff = 1;
        auto star = term.find('*');
        if (star != std::string_view::npos) {
            coeff = parse_int<std::int64_t>(term.substr(0, star), "weight coefficient");
            term = trim(term.substr(star + 1));
        }
        if (term.size() < 4 || term.substr(0, 2) != "a(" || term.back() != ')')
            throw ParseError("malformed weight term: '" + std::string(term) + "'");
        int index = parse_int<int>(term.substr(2, term.size() - 3), "root index");
        w.add_term(index, checked::mul(sign, coeff));
    }
    return w;
}

void to_json(nlohmann::json& j, const Weight& w)
{
    j = nlohmann::json::object();
    for (const auto& [i, c] : w.terms())
        j[std::to_string(i)] = c;
}

void from_json(const nlohmann::json& j, Weight& w)
{
    if (!j.is_object())
        throw ParseError("weight JSON must be an object");
    w = Weight{};
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number_integer())
            throw ParseError("weight coefficient must be an integer");
        w.add_term(parse_int<int>(key, "root index"), value.get<std::int64_t>());
    }
}

// -------------------------------------------------------- DominantWeight

DominantWeight::DominantWeight(std::vector<std::pair<int, std::int64_t>> coeffs)
{
    for (const auto& [i, c] : coeffs) {
        if (c < 0)
            throw PreconditionError("dominant weight coefficients must be non-negative");
        accumulate(terms_, i, c);
    }
}

std::int64_t DominantWeight::coeff(int i) const { return lookup(terms_, i); }

std::int64_t DominantWeight::level() const
{
    std::int64_t s = 0;
    for (const auto& t : terms_)
        s = checked::add(s, t.second);
    return s;
}

DominantWeight DominantWeight::dagger() const
{
    DominantWeight out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        out.terms_.emplace_back(checked::neg(it->first), it->second);
    return out;
}

std::int64_t DominantWeight::pair(const Weight& beta) const
{
    std::int64_t s = 0;
    for (const auto& [i, c] : terms_)
        s = checked::add(s, checked::mul(c, beta.coeff(i)));
    return s;
}

std::string to_string(const DominantWeight& w)
{
    if (w.terms().empty())
        return "0";
    std::string out;
    for (const auto& [i, c] : w.terms())
        append_coeff_term(out, c, "L(" + std::to_string(i) + ")");
    return out;
}

// ----------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(std::initializer_list<Term> terms)
{
    for (const auto& [k, c] : terms)
        add_term(k, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coeff)
{
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

std::int64_t LaurentPoly::coeff(int exponent) const { return lookup(terms_, exponent); }

bool LaurentPoly::has_nonnegative_coefficients() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second >= 0; });
}

void LaurentPoly::add_term(int exponent, std::int64_t coeff) { accumulate(terms_, exponent, coeff); }

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_)
        out.terms_.emplace_back(checked::add(e, k), c);
    return out;
}

std::int64_t LaurentPoly::eval_at_1() const
{
    std::int64_t s = 0;
    for (const auto& t : terms_)
        s = checked::add(s, t.second);
    return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other)
{
    terms_ = merge(terms_, other.terms_, 1);
    return *this;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out;
    out.terms_ = merge(a.terms_, b.terms_, -1);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(checked::add(ea, eb), checked::mul(ca, cb));
    return out;
}

std::string to_string(const LaurentPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto [e, c] = *it;
        if (e == 0) {
            if (c < 0)
                out += "-";
            else if (!out.empty())
                out += "+";
            out += std::to_string(c < 0 ? -c : c);
            continue;
        }
        std::string base = e == 1 ? "q" : "q^" + std::to_string(e);
        append_coeff_term(out, c, base);
    }
    return out;
}

void to_json(nlohmann::json& j, const LaurentPoly& p)
{
    j = nlohmann::json::object();
    for (const auto& [e, c] : p.terms())
        j[std::to_string(e)] = c;
}

void from_json(const nlohmann::json& j, LaurentPoly& p)
{
    if (!j.is_object())
        throw ParseError("Laurent polynomial JSON must be an object");
    p = LaurentPoly{};
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number_integer())
            throw ParseError("polynomial coefficient must be an integer");
        p.add_term(parse_int<int>(key, "exponent"), value.get<std::int64_t>());
    }
}

} // namespace mseg
