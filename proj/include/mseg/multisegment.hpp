#pragma once

// Segments Delta(b, e) and multisegments: finite multisets of segments,
// together with the maps wt, b, derivative, antiderivative, shift and dagger.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mseg/lattice.hpp"

namespace mseg {

struct Segment {
    int b = 0;
    int e = 0;

    /// Validates b <= e and the index range.
    static Segment make(long long b, long long e);

    friend bool operator==(Segment, Segment) = default;
};

/// Total lexicographic order: by begin, then end.
std::strong_ordering compare_lex(Segment a, Segment b);

/// Right lexicographic order: by end, then begin.
std::strong_ordering compare_rlex(Segment a, Segment b);

/// Strict partial order: a << b iff b(a) < b(b) and e(a) < e(b).
inline bool precedes(Segment a, Segment b) { return a.b < b.b && a.e < b.e; }

struct SegmentComparison {
    std::strong_ordering lex;
    std::strong_ordering rlex;
    bool ll;
};

SegmentComparison compare(Segment a, Segment b);

std::string to_string(Segment s);

/// Finite multiset of segments, kept sorted ascending under the right
/// lexicographic order with equal segments adjacent.
class Multisegment {
public:
    Multisegment() = default;
    Multisegment(std::initializer_list<Segment> segments);
    explicit Multisegment(std::vector<Segment> segments);

    std::span<const Segment> segments() const { return segs_; }
    std::size_t size() const { return segs_.size(); }
    bool empty() const { return segs_.empty(); }

    std::size_t count(Segment s) const;

    void add(Segment s);
    Multisegment& operator+=(const Multisegment& other);
    friend Multisegment operator+(Multisegment a, const Multisegment& b) { return a += b; }

    /// a - b as multisets; nullopt when b is not contained in a.
    friend std::optional<Multisegment> difference(const Multisegment& a, const Multisegment& b);

    friend bool operator==(const Multisegment& a, const Multisegment& b) { return a.segs_ == b.segs_; }
    friend std::strong_ordering operator<=>(const Multisegment& a, const Multisegment& b);

private:
    std::vector<Segment> segs_;
};

/// Sum of alpha_b + ... + alpha_e over all segments.
Weight wt(const Multisegment& m);

/// Sum of alpha_{b(Delta)} over all segments; its height is |m|.
Weight b_invariant(const Multisegment& m);

/// Delta(i,j) -> Delta(i+1,j); point segments disappear.
Multisegment derive(const Multisegment& m);

/// Delta(i,j) -> Delta(i-1,j).
Multisegment extend(const Multisegment& m);

/// Delta(i,j) -> Delta(-j,-i).
Multisegment dagger(const Multisegment& m);

/// Delta(i,j) -> Delta(i+1,j+1).
Multisegment shift_right(const Multisegment& m);

/// The multisegment of point segments with weight g. Requires g positive.
Multisegment point_multisegment(const Weight& g);

/// The segments of m beginning at j.
Multisegment segments_beginning_at(const Multisegment& m, int j);

/// Nonempty chain under <<. The empty multisegment is not a ladder.
bool is_ladder(const Multisegment& m);

/// Grammar "[b,e]+[b,e]+..."; the empty multisegment is "0".
std::string to_string(const Multisegment& m);
Multisegment parse_multisegment(std::string_view text);

/// JSON: list of [b,e] pairs.
void to_json(nlohmann::json& j, const Multisegment& m);
void from_json(const nlohmann::json& j, Multisegment& m);

/// Ordered tuple of multisegments, each a ladder. Sequences derived from
/// bitableaux may carry empty entries ("gaps") in place of vanished ladders.
struct LadderSequence {
    std::vector<Multisegment> ladders;

    std::size_t size() const { return ladders.size(); }
    bool empty() const { return ladders.empty(); }
    const Multisegment& operator[](std::size_t i) const { return ladders[i]; }

    /// Every entry is a ladder, or empty when gaps are allowed.
    bool well_formed(bool allow_gaps = false) const;

    /// Entrywise derivative, keeping positions.
    LadderSequence derived() const;

    /// Copy with empty entries removed.
    LadderSequence without_gaps() const;

    Multisegment sum() const;

    friend bool operator==(const LadderSequence&, const LadderSequence&) = default;
};

/// "[1,2] ; [1,1]"; empty entries print as "0", the empty sequence as "".
std::string to_string(const LadderSequence& seq);

void to_json(nlohmann::json& j, const LadderSequence& seq);

} // namespace mseg
