#pragma once

// Brute-force reference implementations. Nothing here calls into the RSK
// code paths it is meant to check, except kv_choice_independence, which
// re-runs the recycling step under every admissible enumeration.

#include <cstdint>
#include <functional>

#include "mseg/multisegment.hpp"
#include "mseg/tableaux.hpp"

namespace mseg {

struct EnumerationBounds {
    int support_min = 0;
    int support_max = 0;
    int max_segments = 0;
};

/// Every multisegment with endpoints in [support_min, support_max] and at most
/// max_segments segments, exactly once, in a fixed order (by size, then by
/// multiset of segments in lexicographic order). Returns the number visited.
std::uint64_t enumerate_multisegments(const EnumerationBounds& bounds,
                                      const std::function<void(const Multisegment&)>& visit);

/// Number of multisegments enumerate_multisegments would visit.
std::uint64_t count_multisegments(const EnumerationBounds& bounds);

/// Minimum <<-chain cover: occurrences minus a maximum bipartite matching.
std::size_t dilworth_width(const Multisegment& m);

inline constexpr std::size_t kBrutePermissibleLimit = 8;
inline constexpr std::size_t kChoiceIndependenceLimit = 6;

/// Exhaustive search over every <<-chain of m and every injective increasing
/// map into the ladder. Requires a ladder l and |m| <= kBrutePermissibleLimit.
bool brute_permissible(const Multisegment& l, const Multisegment& m);

/// |mu|! divided by the product of hook lengths.
std::uint64_t hook_length_count(const Partition& mu);

/// a(mu) by counting, for each cell, twice the cells strictly below it in its column.
std::int64_t a_invariant_by_cells(const Partition& mu);

/// Runs the Knuth-Viennot recycling step under every admissible enumeration
/// of every depth class (depths recomputed by brute force) and confirms a
/// single output. Requires |m| <= kChoiceIndependenceLimit.
bool kv_choice_independence(const Multisegment& m);

} // namespace mseg
