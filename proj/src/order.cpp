#include "zetakit/order.hpp"

#include <optional>

#include "zetakit/rational.hpp"

namespace zetakit::order {

namespace {

// -1/a, with std::nullopt standing for -infinity at a = 0.
std::optional<Rational> reciprocal_key(std::int64_t a) {
    if (a == 0) {
        return std::nullopt;
    }
    return Rational(BigInt(-1), BigInt(a));
}

}  // namespace

bool precedes(std::int64_t a, std::int64_t b) {
    auto ka = reciprocal_key(a);
    auto kb = reciprocal_key(b);
    if (!ka) return kb.has_value();
    if (!kb) return false;
    return *ka < *kb;
}

Relation compare(std::int64_t a, std::int64_t b) {
    if (a == b) return Relation::Equal;
    return precedes(a, b) ? Relation::Precedes : Relation::Follows;
}

Segment make_segment(std::int64_t a, std::int64_t b) {
    if (a <= b) {
        return {Segment::Kind::Standard, a, b};
    }
    return {Segment::Kind::Wrapped, a, b};
}

bool contains(const Segment& seg, std::int64_t u) {
    if (seg.kind == Segment::Kind::Standard) {
        return seg.a <= u && u <= seg.b;
    }
    return u >= seg.a || u <= seg.b;
}

std::string Segment::describe() const {
    const std::string sa = std::to_string(a);
    const std::string sb = std::to_string(b);
    if (kind == Kind::Standard) {
        return "[" + sa + ".." + sb + "]";
    }
    if (b >= 0) {
        return "[" + sa + "..-1] ∪ [0.." + sb + "]";
    }
    return "Z \\ (" + sb + ", " + sa + ")";
}

}  // namespace zetakit::order
