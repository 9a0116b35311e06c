#pragma once

// Partitions, inverted semistandard bitableaux, and the descriptors attached
// to them: ladder sequences, the shift a(mu) - C(P,Q), standard fillings and
// residue sequences.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mseg/multisegment.hpp"

namespace mseg {

class Partition {
public:
    Partition() = default;
    /// Parts must be positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    std::int64_t size() const;

    /// 1-based part; zero beyond the length.
    int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

    /// mu' : every part decreased by one, zeros dropped.
    Partition cut() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& mu);

/// a(mu) = sum over the conjugate parts c of c(c-1).
std::int64_t a_invariant(const Partition& mu);

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

std::string to_string(const Partition& mu);

/// Comma list "4,2,1"; the empty partition is "" or "0".
Partition parse_partition(std::string_view text);

/// Inverted semistandard tableau: rows strictly descending, columns weakly
/// descending, row lengths weakly decreasing.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    bool empty() const { return rows_.empty(); }

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// P' : every entry increased by one.
Tableau increment(const Tableau& t);

struct BitableauPair {
    Tableau p;
    Tableau q;

    /// Throws PreconditionError when the shapes differ.
    BitableauPair(Tableau p_, Tableau q_);

    Partition shape() const { return p.shape(); }

    friend bool operator==(const BitableauPair&, const BitableauPair&) = default;
};

struct PairChecks {
    bool admissible = false;  // c <= d entrywise
    bool permissible = false; // c + 1 <= d entrywise
};

PairChecks pair_checks(const BitableauPair& pq);

/// Row i gives the ladder sum_j Delta(c_ij, d_ij - 1); entries with c = d are
/// dropped, so a row may give an empty entry.
LadderSequence ladders_of(const BitableauPair& pq);

/// Number of pairs of entries c (row i of P) and d (row i' of Q) with i < i'
/// and c = d. Agrees with C over the ladders of a permissible pair.
std::int64_t c_count(const BitableauPair& pq);

struct GammaDescriptor {
    LadderSequence ladders; // may contain gaps when derived
    Partition shape;
    std::int64_t a = 0;
    std::int64_t c = 0;
    std::int64_t shift = 0; // a - c
    bool derived = false;
};

/// Gamma(m) (derived = false) or Gamma'(m) (derived = true) built from the
/// RSK bitableau of m. Requires m nonempty.
GammaDescriptor gamma_descriptor(const Multisegment& m, bool derived);

/// Standard filling: cell of entry i+1 as 1-based (row, column).
using StandardTableau = std::vector<std::pair<int, int>>;

/// All standard fillings of shape, ordered lexicographically by filling.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

/// Rows of entries of a standard filling.
std::vector<std::vector<int>> filling_rows(const StandardTableau& t);

/// nu_i = k - a_i + b_i where T(i) = (a_i, b_i).
std::vector<int> residue_sequence(int k, const StandardTableau& t);

void to_json(nlohmann::json& j, const Partition& mu);
void to_json(nlohmann::json& j, const Tableau& t);
void from_json(const nlohmann::json& j, Tableau& t);

} // namespace mseg
