#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fill/presentation.hpp"

namespace fill {

enum class HoleKind : std::uint8_t { Inner = 0, Outer = 1, Lambda = 2, Rho = 3 };

// Boundary component of the planar page. leg/level/copy are 1-based and only
// meaningful for stabilization holes.
struct Hole {
    HoleKind kind = HoleKind::Inner;
    int leg = 0;
    int level = 0;
    int copy = 0;

    friend bool operator==(const Hole&, const Hole&) = default;
    friend auto operator<=>(const Hole&, const Hole&) = default;
};

std::string hole_name(const Hole& h);           // "in", "out", "L3.1.2", "R1.1.1"
Hole parse_hole(const std::string& name);

using HoleMask = std::uint64_t;

// Signed Dehn twist given by the set of holes its curve encircles (stored
// against the book's current outer boundary).
struct SignedTwist {
    int sign = 1;
    std::vector<Hole> holes; // canonically sorted
};

// Planar open book: hole universe (canonically sorted, includes the outer
// boundary) plus a multiset of signed twists kept as bitmasks over universe
// indices. Twist masks never contain the outer bit.
struct OpenBook {
    std::vector<Hole> universe;
    std::size_t outer = 0;

    struct Twist {
        int sign;
        HoleMask mask;
    };
    std::vector<Twist> twists;

    HoleMask full_mask() const { return (HoleMask{1} << universe.size()) - 1; }
    HoleMask hole_bit(std::size_t i) const { return HoleMask{1} << i; }
    std::size_t index_of(const Hole& h) const; // throws ValidationError if unknown
    std::vector<Hole> holes_of(HoleMask mask) const;
    std::vector<SignedTwist> signed_twists() const;
};

// Origin of each twist in a translated book, in twist order.
struct TwistOrigin {
    enum Kind { Core, Unknot, Boundary } kind = Core;
    int leg = 0;   // 1-based, Unknot only
    int level = 0; // Unknot: unknot index; Boundary: unused
    Hole hole;     // Boundary only
};

struct TranslatedBook {
    OpenBook book;
    std::vector<TwistOrigin> origins;
};

// Surgery-presentation-to-open-book translation (initial perspective, outer =
// lambda^out): one negative core twist through rho^in and every Rho hole; per
// unknot j of leg i a positive twist through rho^in, all Rho holes of other
// legs, own-leg Rho holes of levels > j and own-leg Lambda holes of levels
// <= j; one positive boundary twist around every stabilization hole.
// Accepts two legs (sublink books) or three (full presentations).
TranslatedBook translate(const std::vector<Leg>& legs);
OpenBook translate_book(const std::vector<Leg>& legs);
TranslatedBook translate(const Presentation& p);

// Re-distinguish the outer boundary. A stored hole set S becomes S when the
// new outer is not in S, else universe \ (S + new outer). Involution.
OpenBook reroot(const OpenBook& b, const Hole& new_outer);

// Cap off holes: universe shrinks, twist sets are intersected with the rest,
// empty twists are dropped.
OpenBook cap(const OpenBook& b, const std::vector<Hole>& holes);

} // namespace fill
