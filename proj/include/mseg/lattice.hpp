#pragma once

// Root lattice Q of type A_infinity, the dominant cone P_+, and Laurent
// polynomials in q used for graded multiplicities.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mseg/error.hpp"

namespace mseg {

/// Finitely supported integer combination of simple roots alpha_i.
///
/// Stored as a sorted list of (index, coefficient) pairs with no zero
/// coefficients, so structural equality is lattice equality.
class Weight {
public:
    using Term = std::pair<int, std::int64_t>;

    Weight() = default;
    Weight(std::initializer_list<Term> terms);

    static Weight simple_root(int i, std::int64_t coeff = 1);

    std::int64_t coeff(int i) const;
    std::span<const Term> terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Membership in Q_+.
    bool is_positive() const;

    /// Coefficient sum. Requires a positive weight.
    std::int64_t height() const;

    /// alpha_i -> alpha_{-i}.
    Weight dagger() const;

    /// Support contained in [-n, n], i.e. membership in Q_+^(n) for positive weights.
    bool in_subcone(int n) const;

    /// Smallest and largest index with a nonzero coefficient.
    std::optional<std::pair<int, int>> support() const;

    void add_term(int i, std::int64_t coeff);

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(std::int64_t s, const Weight& w);

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

private:
    std::vector<Term> terms_;
};

/// b1 <= b2 in the cone order on Q_+. Both arguments must be positive.
bool leq(const Weight& b1, const Weight& b2);

/// Symmetric Cartan form: (a_i,a_i) = 2, (a_i,a_{i+-1}) = -1, else 0.
std::int64_t cartan_form(const Weight& b1, const Weight& b2);

/// Non-symmetric form: (a_i,a_i)_l = 1, (a_i,a_{i+1})_l = -1, else 0.
std::int64_t ell_form(const Weight& b1, const Weight& b2);

/// "2*a(1)+a(3)"; the zero weight prints as "0".
std::string to_string(const Weight& w);
Weight parse_weight(std::string_view text);

void to_json(nlohmann::json& j, const Weight& w);
void from_json(const nlohmann::json& j, Weight& w);

/// Element of P_+ = Z_{>=0}[Lambda_i].
class DominantWeight {
public:
    DominantWeight() = default;
    explicit DominantWeight(std::vector<std::pair<int, std::int64_t>> coeffs);

    std::int64_t coeff(int i) const;
    std::span<const std::pair<int, std::int64_t>> terms() const { return terms_; }
    std::int64_t level() const;
    DominantWeight dagger() const;

    /// Pairing (Lambda, beta) with (Lambda_i, alpha_j) = delta_ij.
    std::int64_t pair(const Weight& beta) const;

    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

private:
    std::vector<std::pair<int, std::int64_t>> terms_;
};

std::string to_string(const DominantWeight& w);

/// Laurent polynomial in q with integer coefficients.
class LaurentPoly {
public:
    using Term = std::pair<int, std::int64_t>;

    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<Term> terms);

    static LaurentPoly constant(std::int64_t c) { return monomial(0, c); }
    static LaurentPoly monomial(int exponent, std::int64_t coeff = 1);

    std::int64_t coeff(int exponent) const;
    std::span<const Term> terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_nonnegative_coefficients() const;

    void add_term(int exponent, std::int64_t coeff);

    /// Multiplication by q^k.
    LaurentPoly shifted(int k) const;
    std::int64_t eval_at_1() const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::vector<Term> terms_;
};

/// "q^2+2*q-1", "q^-2", "0".
std::string to_string(const LaurentPoly& p);

/// JSON object {"exp": coeff} with string keys.
void to_json(nlohmann::json& j, const LaurentPoly& p);
void from_json(const nlohmann::json& j, LaurentPoly& p);

} // namespace mseg
