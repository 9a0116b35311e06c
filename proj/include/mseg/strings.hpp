#pragma once

// Admissible sequences, the monoid A_t with its non-symmetric form, the
// shift constants Phi, BZ-strings and derivatives, and multiplicity tables.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "mseg/lattice.hpp"
#include "mseg/multisegment.hpp"

namespace mseg {

/// Largest radius for which the full BZ-sequence is materialised.
inline constexpr int kMaxBzRadius = 1 << 20;

class AdmissibleSequence {
public:
    AdmissibleSequence() = default;
    /// Neighbouring indices must differ.
    explicit AdmissibleSequence(std::vector<int> indices);

    /// The BZ-sequence (T, T-1, ..., -T). Requires 0 <= T <= kMaxBzRadius.
    static AdmissibleSequence bz(int T);

    std::span<const int> indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    int operator[](std::size_t r) const { return indices_[r]; }

    friend bool operator==(const AdmissibleSequence&, const AdmissibleSequence&) = default;

private:
    std::vector<int> indices_;
};

/// Element of A_t; compared lexicographically from the left.
class StringVector {
public:
    StringVector() = default;
    explicit StringVector(std::vector<std::int64_t> coords);
    static StringVector zero(std::size_t t) { return StringVector(std::vector<std::int64_t>(t, 0)); }

    std::span<const std::int64_t> coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    std::int64_t operator[](std::size_t r) const { return coords_[r]; }

    StringVector& operator+=(const StringVector& other);
    friend StringVector operator+(StringVector a, const StringVector& b) { return a += b; }

    friend bool operator==(const StringVector&, const StringVector&) = default;
    friend auto operator<=>(const StringVector&, const StringVector&) = default;

private:
    std::vector<std::int64_t> coords_;
};

std::string to_string(const AdmissibleSequence& i);
std::string to_string(const StringVector& a);

/// beta(i, a) = a_1 alpha_{i_1} + ... + a_t alpha_{i_t}.
Weight beta_of(const AdmissibleSequence& i, const StringVector& a);

/// (a1, a2)_i with (e_r, e_u)_i = 1 if r = u, (alpha_{i_r}, alpha_{i_u}) if
/// r > u, and 0 if r < u.
std::int64_t string_form(const AdmissibleSequence& i, const StringVector& a1, const StringVector& a2);

/// Phi_{beta_1..beta_s}(i, a_1..a_s) = sum_{j<k} ((a_j,a_k)_i - (beta_k, beta(i,a_j))).
std::int64_t phi_weights(const AdmissibleSequence& i, std::span<const StringVector> as,
                         std::span<const Weight> betas);

/// Ordered pairs (D1 in n1, D2 in n2) with b(D1) = e(D2) + 1.
std::int64_t c_pair(const Multisegment& n1, const Multisegment& n2);
std::int64_t c_tuple(std::span<const Multisegment> ms);
std::int64_t c_prime_tuple(std::span<const Multisegment> ms);

/// sum_{j<k} ((b(m_j), b(m_k))_l - (b(m_j), wt(m_k))).
std::int64_t phi_multiseg(std::span<const Multisegment> ms);

/// Same as phi_multiseg, with the l-form replaced by one whose off-diagonal
/// sign is flipped. Exists only so the check harness can be mutation-tested.
std::int64_t phi_multiseg_mutated(std::span<const Multisegment> ms);

struct BzString {
    AdmissibleSequence sequence;
    StringVector string;
};

/// The BZ-sequence of radius T together with the string a with beta(i0, a) = b(m).
/// Requires the support of wt(m) inside [-T, T].
BzString bz_string(const Multisegment& m, int T);

/// m - m_j + m_j', where m_j collects the segments beginning at j.
/// Requires that no segment of m begins at j + 1.
Multisegment single_derivative(const Multisegment& m, int j);

/// Single derivatives along j = T, T-1, ..., -T; asserted equal to derive(m).
Multisegment bz_derivative(const Multisegment& m, int T);

class MultiplicityTable {
public:
    using Rows = std::map<Multisegment, LaurentPoly>;

    MultiplicityTable() = default;

    /// Rejects keys whose weight differs from the existing keys and
    /// polynomials with negative coefficients. Re-inserting a key replaces it.
    void insert(const Multisegment& key, const LaurentPoly& poly);

    const Rows& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    friend bool operator==(const MultiplicityTable&, const MultiplicityTable&) = default;

private:
    Rows rows_;
};

/// Keep the keys n with b(n) = sum b(m_j), re-key them by n', and multiply by
/// q^{-Phi(m_1, ..., m_s)}. Every key must have weight sum wt(m_j).
MultiplicityTable transfer_multiplicities(const MultiplicityTable& table,
                                          std::span<const Multisegment> ms);

/// JSON: list of {"key": "<multisegment>", "poly": {"exp": coeff}}.
void to_json(nlohmann::json& j, const MultiplicityTable& t);
void from_json(const nlohmann::json& j, MultiplicityTable& t);

} // namespace mseg
