#pragma once

// Multicharges, multipartitions, the restricted and proper conditions,
// padding, and the dictionary between multipartitions and ladder
// multisegments used to compare Specht data with RSK.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mseg/lattice.hpp"
#include "mseg/multisegment.hpp"
#include "mseg/tableaux.hpp"

namespace mseg {

class Multicharge {
public:
    Multicharge() = default;
    /// Charges must be weakly decreasing.
    explicit Multicharge(std::vector<int> charges);

    const std::vector<int>& charges() const { return charges_; }
    std::size_t level() const { return charges_.size(); }
    int operator[](std::size_t i) const { return charges_[i]; }

    /// (-k_l, ..., -k_1).
    Multicharge dagger() const;

    /// Lambda(kappa) = Lambda_{k_1} + ... + Lambda_{k_l}.
    DominantWeight lambda() const;

    friend bool operator==(const Multicharge&, const Multicharge&) = default;

private:
    std::vector<int> charges_;
};

using Multipartition = std::vector<Partition>;

std::int64_t total_size(const Multipartition& mp);

/// Componentwise mu'.
Multipartition cut(const Multipartition& mp);

/// cont(k, mu) = sum over cells (i, j) of alpha_{k + j - i}.
Weight content(int k, const Partition& mu);
Weight content(const Multicharge& kappa, const Multipartition& mp);

/// mu^i_{j + k_i - k_{i+1}} <= mu^{i+1}_j for all i, j.
bool is_restricted(const Multicharge& kappa, const Multipartition& mp);

/// Restricted, and l(mu^i) - k_i independent of i.
bool is_proper(const Multicharge& kappa, const Multipartition& mp);

/// With r = l(mu^l) - k_l, component i becomes (mu^i_1 + 1, ..., mu^i_l + 1)
/// followed by r + k_i - l(mu^i) ones. Requires a restricted input; the output
/// is asserted proper with cut(output) = input.
Multipartition pad(const Multicharge& kappa, const Multipartition& mp);

/// m(k, mu) = sum_i Delta(k - mu_i + i, k + i - 1); empty for the empty partition.
Multisegment ladder_of_partition(int k, const Partition& mu);

/// m(-k_1, mu^1) + ... + m(-k_l, mu^l).
Multisegment multiseg_of(const Multicharge& kappa, const Multipartition& mp);

/// (m(-k_1, mu^1), ..., m(-k_l, mu^l)), empty components kept in place.
LadderSequence component_ladders(const Multicharge& kappa, const Multipartition& mp);

struct SpechtRskReport {
    bool restricted = false;
    bool proper = false;
    Multipartition padded;
    Multisegment m;         // multiseg_of(kappa, mp)
    Multisegment n;         // multiseg_of(kappa, pad(kappa, mp))
    Weight gamma;           // n = m^+ + d(gamma)
    LadderSequence rsk_n;   // RSK(n)
    LadderSequence ladders; // ladders of Gamma(m, gamma), gaps kept
    std::int64_t shift = 0; // a - C of Gamma'(n); 0 when n is empty
    std::vector<std::string> checks;
};

/// Runs the full Specht/RSK comparison for a restricted (kappa, mp) and
/// throws InvariantViolation with the counterexample if any identity fails.
SpechtRskReport specht_rsk_verify(const Multicharge& kappa, const Multipartition& mp);

/// multiseg_of(kappa, mp)' = multiseg_of(kappa, cut(mp)), and cut(mp) is
/// restricted. Requires a restricted input.
bool column_removal_check(const Multicharge& kappa, const Multipartition& mp);

/// "2,1,-1".
Multicharge parse_charge(std::string_view text);

/// Components separated by '|', parts by ','; an empty component is "" or "0".
Multipartition parse_parts(std::string_view text);

std::string to_string(const Multicharge& kappa);
std::string to_string(const Multipartition& mp);

void to_json(nlohmann::json& j, const SpechtRskReport& r);

} // namespace mseg
