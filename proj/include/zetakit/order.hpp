#pragma once

#include <cstdint>
#include <string>

namespace zetakit::order {

/// Strict order 0, 1, 2, 3, ..., -3, -2, -1 on the integers: a precedes b iff
/// -1/a < -1/b, where -1/0 counts as -infinity.
bool precedes(std::int64_t a, std::int64_t b);

enum class Relation { Precedes, Equal, Follows };

Relation compare(std::int64_t a, std::int64_t b);

/// The index set Z_{a,b} of a generalized sum from a to b.
///
/// Standard(a, b) with a <= b is the ordinary run {a, ..., b}. Wrapped(a, b)
/// with a > b is everything except the ordinary open interval (b, a); for
/// 0 <= b < a that is [a, -1] ∪ [0, b] read along the order above.
struct Segment {
    enum class Kind { Standard, Wrapped };

    Kind kind;
    std::int64_t a;
    std::int64_t b;

    bool is_finite() const { return kind == Kind::Standard; }
    std::string describe() const;

    friend bool operator==(const Segment&, const Segment&) = default;
};

Segment make_segment(std::int64_t a, std::int64_t b);

bool contains(const Segment& seg, std::int64_t u);

}  // namespace zetakit::order
