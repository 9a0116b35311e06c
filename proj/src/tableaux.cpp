#include "mseg/tableaux.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "mseg/rsk.hpp"

namespace mseg {

// --------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw PreconditionError("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1])
            throw PreconditionError("partition parts must be weakly decreasing");
    }
}

std::int64_t Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

Partition Partition::cut() const
{
    std::vector<int> out;
    for (int p : parts_)
        if (p > 1)
            out.push_back(p - 1);
    return Partition(std::move(out));
}

Partition conjugate(const Partition& mu)
{
    std::vector<int> out;
    int columns = mu.empty() ? 0 : mu.part(1);
    for (int c = 1; c <= columns; ++c) {
        int height = 0;
        for (int p : mu.parts())
            if (p >= c)
                ++height;
        out.push_back(height);
    }
    return Partition(std::move(out));
}

std::int64_t a_invariant(const Partition& mu)
{
    std::int64_t a = 0;
    const auto columns = conjugate(mu);
    for (int c : columns.parts())
        a = checked::add(a, checked::mul(c, c - 1));
    return a;
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    if (n >= 0)
        rec(rec, n, n);
    return out;
}

std::string to_string(const Partition& mu)
{
    std::string out = "(";
    for (std::size_t i = 0; i < mu.length(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(mu.parts()[i]);
    }
    return out + ")";
}

Partition parse_partition(std::string_view text)
{
    auto is_space = [](char ch) { return ch == ' ' || ch == '\t'; };
    while (!text.empty() && is_space(text.front()))
        text.remove_prefix(1);
    while (!text.empty() && is_space(text.back()))
        text.remove_suffix(1);
    if (text.empty() || text == "0")
        return {};
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        while (!token.empty() && is_space(token.front()))
            token.remove_prefix(1);
        while (!token.empty() && is_space(token.back()))
            token.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError("malformed partition '" + std::string(text) + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const PreconditionError& ex) {
        throw ParseError(std::string("invalid partition '") + std::string(text) + "': " + ex.what());
    }
}

// ----------------------------------------------------------------- Tableau

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows))
{
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& row = rows_[i];
        if (row.empty())
            throw PreconditionError("tableau rows must be nonempty");
        if (i && row.size() > rows_[i - 1].size())
            throw PreconditionError("tableau row lengths must weakly decrease");
        for (std::size_t j = 1; j < row.size(); ++j)
            if (row[j] >= row[j - 1])
                throw PreconditionError("tableau row " + std::to_string(i + 1) +
                                        " is not strictly descending");
        if (i)
            for (std::size_t j = 0; j < row.size(); ++j)
                if (row[j] > rows_[i - 1][j])
                    throw PreconditionError("tableau column " + std::to_string(j + 1) +
                                            " is not weakly descending");
    }
}

Partition Tableau::shape() const
{
    std::vector<int> parts;
    for (const auto& row : rows_)
        parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

Tableau increment(const Tableau& t)
{
    auto rows = t.rows();
    for (auto& row : rows)
        for (auto& x : row)
            x = checked_index(static_cast<long long>(x) + 1);
    return Tableau(std::move(rows));
}

BitableauPair::BitableauPair(Tableau p_, Tableau q_) : p(std::move(p_)), q(std::move(q_))
{
    if (p.shape() != q.shape())
        throw PreconditionError("bitableau shapes differ: " + to_string(p.shape()) + " vs " +
                                to_string(q.shape()));
}

PairChecks pair_checks(const BitableauPair& pq)
{
    PairChecks out{true, true};
    const auto& p = pq.p.rows();
    const auto& q = pq.q.rows();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i].size(); ++j) {
            if (p[i][j] > q[i][j])
                out.admissible = false;
            if (static_cast<long long>(p[i][j]) + 1 > q[i][j])
                out.permissible = false;
        }
    out.permissible = out.permissible && out.admissible;
    return out;
}

LadderSequence ladders_of(const BitableauPair& pq)
{
    if (!pair_checks(pq).admissible)
        throw PreconditionError("ladders_of requires an admissible pair");
    LadderSequence seq;
    const auto& p = pq.p.rows();
    const auto& q = pq.q.rows();
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::vector<Segment> row;
        for (std::size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] < q[i][j])
                row.push_back(Segment{p[i][j], q[i][j] - 1});
        Multisegment l(std::move(row));
        if (!l.empty() && !is_ladder(l))
            throw PreconditionError("row " + std::to_string(i + 1) + " gives " + to_string(l) +
                                    ", which is not a ladder");
        seq.ladders.push_back(std::move(l));
    }
    return seq;
}

std::int64_t c_count(const BitableauPair& pq)
{
    const auto& p = pq.p.rows();
    const auto& q = pq.q.rows();
    std::int64_t count = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int c : p[i])
            for (std::size_t lower = i + 1; lower < q.size(); ++lower)
                count += std::count(q[lower].begin(), q[lower].end(), c);
    return count;
}

GammaDescriptor gamma_descriptor(const Multisegment& m, bool derived)
{
    if (m.empty())
        throw PreconditionError("Gamma descriptor requires a nonempty multisegment");
    auto pq = bitableau_of(m);
    if (derived) {
        if (!pair_checks(pq).permissible)
            throw InvariantViolation("bitableau of " + to_string(m) + " is not permissible");
        pq = BitableauPair(increment(pq.p), pq.q);
    }
    GammaDescriptor g;
    g.derived = derived;
    g.ladders = ladders_of(pq);
    g.shape = pq.shape();
    g.a = a_invariant(g.shape);
    g.c = c_count(pq);
    g.shift = checked::sub(g.a, g.c);
    return g;
}

// ------------------------------------------------------ standard fillings

std::vector<StandardTableau> standard_tableaux(const Partition& shape)
{
    std::vector<StandardTableau> out;
    const auto rows = shape.length();
    const auto n = shape.size();
    std::vector<int> filled(rows, 0);
    StandardTableau current;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<std::int64_t>(current.size()) == n) {
            out.push_back(current);
            return;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (filled[r] >= shape.part(r + 1))
                continue;
            if (r > 0 && filled[r - 1] <= filled[r])
                continue;
            ++filled[r];
            current.emplace_back(static_cast<int>(r + 1), filled[r]);
            self(self);
            current.pop_back();
            --filled[r];
        }
    };
    rec(rec);
    return out;
}

std::vector<std::vector<int>> filling_rows(const StandardTableau& t)
{
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto [a, b] = t[i];
        if (rows.size() < static_cast<std::size_t>(a))
            rows.resize(static_cast<std::size_t>(a));
        auto& row = rows[static_cast<std::size_t>(a - 1)];
        if (row.size() < static_cast<std::size_t>(b))
            row.resize(static_cast<std::size_t>(b), 0);
        row[static_cast<std::size_t>(b - 1)] = static_cast<int>(i + 1);
    }
    return rows;
}

std::vector<int> residue_sequence(int k, const StandardTableau& t)
{
    std::vector<int> nu;
    nu.reserve(t.size());
    for (auto [a, b] : t)
        nu.push_back(checked_index(static_cast<long long>(k) - a + b));
    return nu;
}

void to_json(nlohmann::json& j, const Partition& mu)
{
    j = nlohmann::json::array();
    for (int p : mu.parts())
        j.push_back(p);
}

void to_json(nlohmann::json& j, const Tableau& t) { j = t.rows(); }

void from_json(const nlohmann::json& j, Tableau& t)
{
    try {
        t = Tableau(j.get<std::vector<std::vector<int>>>());
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("tableau JSON must be a list of integer rows: ") + ex.what());
    }
}

} // namespace mseg
