#pragma once

// The Knuth-Viennot step K, the recursive RSK transform of multisegments,
// width, permissible pairs, and the bitableau (P_m, Q_m).

#include <cstddef>
#include <span>
#include <vector>

#include "mseg/multisegment.hpp"
#include "mseg/tableaux.hpp"

namespace mseg {

struct DepthEntry {
    std::size_t occurrence; // position in m.segments()
    Segment segment;
    int depth;
};

struct DepthTable {
    std::vector<DepthEntry> entries;
    int max_depth = 0;
};

/// Depth of an occurrence: length of the longest <<-increasing chain that
/// starts at it, minus one. Requires m nonempty.
DepthTable depth_function(const Multisegment& m);

struct KnuthViennotResult {
    Multisegment ladder;
    Multisegment rest;

    friend bool operator==(const KnuthViennotResult&, const KnuthViennotResult&) = default;
};

/// One peeling step K(m) = (ladder, rest). Requires m nonempty.
KnuthViennotResult knuth_viennot(const Multisegment& m);

/// The recycling step of K for caller-supplied enumerations of the depth
/// classes. classes[k] lists the segments of depth k in an order with begins
/// weakly increasing and ends weakly decreasing; the order is validated.
KnuthViennotResult knuth_viennot_from_classes(std::span<const std::vector<Segment>> classes);

/// RSK(m) = (l_1, ..., l_w). The empty multisegment maps to the empty sequence.
LadderSequence rsk_transform(const Multisegment& m);

/// Minimal number of ladders summing to m; 0 for the empty multisegment.
std::size_t width(const Multisegment& m);

/// Permissibility of (l, m) via maximal <<-chains of m and greedy interval
/// matching. Requires l to be a ladder.
bool is_permissible_pair(const Multisegment& l, const Multisegment& m);

/// The unique permissible bitableau with ladders_of(P_m, Q_m) = RSK(m).
/// Requires m nonempty.
BitableauPair bitableau_of(const Multisegment& m);

} // namespace mseg
