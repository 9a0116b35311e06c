#include "mseg/multisegment.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace mseg {

namespace {

bool rlex_less(Segment a, Segment b) { return compare_rlex(a, b) < 0; }

void skip_space(std::string_view s, std::size_t& pos)
{
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
}

long long read_int(std::string_view s, std::size_t& pos)
{
    skip_space(s, pos);
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
        ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    auto token = s.substr(start, pos - start);
    if (!token.empty() && token.front() == '+')
        token.remove_prefix(1);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("expected an integer at offset " + std::to_string(start) + " in '" +
                         std::string(s) + "'");
    return v;
}

void expect(std::string_view s, std::size_t& pos, char ch)
{
    skip_space(s, pos);
    if (pos >= s.size() || s[pos] != ch)
        throw ParseError(std::string("expected '") + ch + "' at offset " + std::to_string(pos) +
                         " in '" + std::string(s) + "'");
    ++pos;
}

} // namespace

Segment Segment::make(long long b, long long e)
{
    if (b > e)
        throw PreconditionError("segment requires b <= e, got [" + std::to_string(b) + "," +
                                std::to_string(e) + "]");
    return Segment{checked_index(b), checked_index(e)};
}

std::strong_ordering compare_lex(Segment a, Segment b)
{
    if (auto c = a.b <=> b.b; c != 0)
        return c;
    return a.e <=> b.e;
}

std::strong_ordering compare_rlex(Segment a, Segment b)
{
    if (auto c = a.e <=> b.e; c != 0)
        return c;
    return a.b <=> b.b;
}

SegmentComparison compare(Segment a, Segment b)
{
    return {compare_lex(a, b), compare_rlex(a, b), precedes(a, b)};
}

std::string to_string(Segment s)
{
    return "[" + std::to_string(s.b) + "," + std::to_string(s.e) + "]";
}

// ------------------------------------------------------------ Multisegment

Multisegment::Multisegment(std::initializer_list<Segment> segments)
    : Multisegment(std::vector<Segment>(segments))
{
}

Multisegment::Multisegment(std::vector<Segment> segments) : segs_(std::move(segments))
{
    for (auto s : segs_)
        Segment::make(s.b, s.e);
    std::sort(segs_.begin(), segs_.end(), rlex_less);
}

std::size_t Multisegment::count(Segment s) const
{
    auto [lo, hi] = std::equal_range(segs_.begin(), segs_.end(), s, rlex_less);
    return static_cast<std::size_t>(hi - lo);
}

void Multisegment::add(Segment s)
{
    Segment::make(s.b, s.e);
    segs_.insert(std::upper_bound(segs_.begin(), segs_.end(), s, rlex_less), s);
}

Multisegment& Multisegment::operator+=(const Multisegment& other)
{
    std::vector<Segment> merged;
    merged.reserve(segs_.size() + other.segs_.size());
    std::merge(segs_.begin(), segs_.end(), other.segs_.begin(), other.segs_.end(),
               std::back_inserter(merged), rlex_less);
    segs_ = std::move(merged);
    return *this;
}

std::optional<Multisegment> difference(const Multisegment& a, const Multisegment& b)
{
    if (!std::includes(a.segs_.begin(), a.segs_.end(), b.segs_.begin(), b.segs_.end(), rlex_less))
        return std::nullopt;
    Multisegment out;
    std::set_difference(a.segs_.begin(), a.segs_.end(), b.segs_.begin(), b.segs_.end(),
                        std::back_inserter(out.segs_), rlex_less);
    return out;
}

std::strong_ordering operator<=>(const Multisegment& a, const Multisegment& b)
{
    return std::lexicographical_compare_three_way(a.segs_.begin(), a.segs_.end(), b.segs_.begin(),
                                                  b.segs_.end(), compare_rlex);
}

Weight wt(const Multisegment& m)
{
    // Difference-array accumulation keeps this linear in the support.
    std::vector<std::pair<int, std::int64_t>> marks;
    marks.reserve(2 * m.size());
    for (auto s : m.segments()) {
        marks.emplace_back(s.b, 1);
        marks.emplace_back(s.e + 1, -1);
    }
    std::sort(marks.begin(), marks.end());
    Weight w;
    std::int64_t running = 0;
    for (std::size_t k = 0; k < marks.size();) {
        int at = marks[k].first;
        while (k < marks.size() && marks[k].first == at)
            running += marks[k++].second;
        int next = k < marks.size() ? marks[k].first : at;
        for (int i = at; i < next; ++i)
            w.add_term(i, running);
    }
    return w;
}

Weight b_invariant(const Multisegment& m)
{
    Weight w;
    for (auto s : m.segments())
        w.add_term(s.b, 1);
    return w;
}

Multisegment derive(const Multisegment& m)
{
    std::vector<Segment> out;
    out.reserve(m.size());
    for (auto s : m.segments())
        if (s.b < s.e)
            out.push_back(Segment{s.b + 1, s.e});
    return Multisegment(std::move(out));
}

Multisegment extend(const Multisegment& m)
{
    std::vector<Segment> out;
    out.reserve(m.size());
    for (auto s : m.segments())
        out.push_back(Segment::make(static_cast<long long>(s.b) - 1, s.e));
    return Multisegment(std::move(out));
}

Multisegment dagger(const Multisegment& m)
{
    std::vector<Segment> out;
    out.reserve(m.size());
    for (auto s : m.segments())
        out.push_back(Segment{-s.e, -s.b});
    return Multisegment(std::move(out));
}

Multisegment shift_right(const Multisegment& m)
{
    std::vector<Segment> out;
    out.reserve(m.size());
    for (auto s : m.segments())
        out.push_back(Segment::make(static_cast<long long>(s.b) + 1, static_cast<long long>(s.e) + 1));
    return Multisegment(std::move(out));
}

Multisegment point_multisegment(const Weight& g)
{
    if (!g.is_positive())
        throw PreconditionError("point multisegment requires a positive weight, got " + to_string(g));
    std::vector<Segment> out;
    for (const auto& [i, c] : g.terms())
        for (std::int64_t k = 0; k < c; ++k)
            out.push_back(Segment{i, i});
    return Multisegment(std::move(out));
}

Multisegment segments_beginning_at(const Multisegment& m, int j)
{
    std::vector<Segment> out;
    for (auto s : m.segments())
        if (s.b == j)
            out.push_back(s);
    return Multisegment(std::move(out));
}

bool is_ladder(const Multisegment& m)
{
    if (m.empty())
        return false;
    // Canonical order sorts by end; a chain must then have strictly
    // increasing begins and ends along that order.
    auto segs = m.segments();
    for (std::size_t k = 1; k < segs.size(); ++k)
        if (!precedes(segs[k - 1], segs[k]))
            return false;
    return true;
}

std::string to_string(const Multisegment& m)
{
    if (m.empty())
        return "0";
    std::string out;
    for (auto s : m.segments()) {
        if (!out.empty())
            out += "+";
        out += to_string(s);
    }
    return out;
}

Multisegment parse_multisegment(std::string_view text)
{
    std::size_t pos = 0;
    skip_space(text, pos);
    if (pos == text.size())
        throw ParseError("empty multisegment text (use \"0\" for the empty multisegment)");
    if (text[pos] == '0') {
        ++pos;
        skip_space(text, pos);
        if (pos != text.size())
            throw ParseError("trailing characters after \"0\" in '" + std::string(text) + "'");
        return {};
    }
    std::vector<Segment> segs;
    while (true) {
        expect(text, pos, '[');
        auto b = read_int(text, pos);
        expect(text, pos, ',');
        auto e = read_int(text, pos);
        expect(text, pos, ']');
        if (b > e)
            throw ParseError("segment [" + std::to_string(b) + "," + std::to_string(e) +
                             "] has begin greater than end");
        try {
            segs.push_back(Segment::make(b, e));
        } catch (const std::overflow_error& ex) {
            throw ParseError(ex.what());
        }
        skip_space(text, pos);
        if (pos == text.size())
            break;
        expect(text, pos, '+');
    }
    return Multisegment(std::move(segs));
}

void to_json(nlohmann::json& j, const Multisegment& m)
{
    j = nlohmann::json::array();
    for (auto s : m.segments())
        j.push_back({s.b, s.e});
}

void from_json(const nlohmann::json& j, Multisegment& m)
{
    if (!j.is_array())
        throw ParseError("multisegment JSON must be a list of [b,e] pairs");
    std::vector<Segment> segs;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer())
            throw ParseError("multisegment JSON entries must be [b,e] integer pairs");
        auto b = pair[0].get<long long>();
        auto e = pair[1].get<long long>();
        if (b > e)
            throw ParseError("segment with begin greater than end in JSON");
        segs.push_back(Segment::make(b, e));
    }
    m = Multisegment(std::move(segs));
}

// ---------------------------------------------------------- LadderSequence

bool LadderSequence::well_formed(bool allow_gaps) const
{
    return std::all_of(ladders.begin(), ladders.end(), [&](const Multisegment& l) {
        return is_ladder(l) || (allow_gaps && l.empty());
    });
}

LadderSequence LadderSequence::derived() const
{
    LadderSequence out;
    out.ladders.reserve(ladders.size());
    for (const auto& l : ladders)
        out.ladders.push_back(derive(l));
    return out;
}

LadderSequence LadderSequence::without_gaps() const
{
    LadderSequence out;
    for (const auto& l : ladders)
        if (!l.empty())
            out.ladders.push_back(l);
    return out;
}

Multisegment LadderSequence::sum() const
{
    Multisegment out;
    for (const auto& l : ladders)
        out += l;
    return out;
}

std::string to_string(const LadderSequence& seq)
{
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i)
            out += " ; ";
        out += to_string(seq[i]);
    }
    return out;
}

void to_json(nlohmann::json& j, const LadderSequence& seq)
{
    j = nlohmann::json::array();
    for (const auto& l : seq.ladders)
        j.push_back(l);
}

} // namespace mseg
