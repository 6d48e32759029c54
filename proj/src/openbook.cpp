#include "fill/openbook.hpp"

#include <algorithm>

namespace fill {

std::string hole_name(const Hole& h) {
    switch (h.kind) {
        case HoleKind::Inner: return "in";
        case HoleKind::Outer: return "out";
        case HoleKind::Lambda:
        case HoleKind::Rho:
            return std::string(h.kind == HoleKind::Lambda ? "L" : "R") + std::to_string(h.leg) + "." +
                   std::to_string(h.level) + "." + std::to_string(h.copy);
    }
    throw InternalError("unreachable hole kind");
}

Hole parse_hole(const std::string& name) {
    if (name == "in") return Hole{HoleKind::Inner, 0, 0, 0};
    if (name == "out") return Hole{HoleKind::Outer, 0, 0, 0};
    if (name.size() < 6 || (name[0] != 'L' && name[0] != 'R'))
        throw ValidationError("unknown hole name '" + name + "'");
    Hole h;
    h.kind = name[0] == 'L' ? HoleKind::Lambda : HoleKind::Rho;
    std::size_t d1 = name.find('.');
    std::size_t d2 = d1 == std::string::npos ? std::string::npos : name.find('.', d1 + 1);
    if (d1 == std::string::npos || d2 == std::string::npos)
        throw ValidationError("unknown hole name '" + name + "'");
    try {
        h.leg = std::stoi(name.substr(1, d1 - 1));
        h.level = std::stoi(name.substr(d1 + 1, d2 - d1 - 1));
        h.copy = std::stoi(name.substr(d2 + 1));
    } catch (const std::exception&) {
        throw ValidationError("unknown hole name '" + name + "'");
    }
    if (h.leg < 1 || h.level < 1 || h.copy < 1) throw ValidationError("unknown hole name '" + name + "'");
    return h;
}

std::size_t OpenBook::index_of(const Hole& h) const {
    auto it = std::lower_bound(universe.begin(), universe.end(), h);
    if (it == universe.end() || *it != h)
        throw ValidationError("hole " + hole_name(h) + " not in this book's universe");
    return static_cast<std::size_t>(it - universe.begin());
}

std::vector<Hole> OpenBook::holes_of(HoleMask mask) const {
    std::vector<Hole> out;
    for (std::size_t i = 0; i < universe.size(); ++i)
        if (mask & hole_bit(i)) out.push_back(universe[i]);
    return out;
}

std::vector<SignedTwist> OpenBook::signed_twists() const {
    std::vector<SignedTwist> out;
    out.reserve(twists.size());
    for (const Twist& t : twists) out.push_back(SignedTwist{t.sign, holes_of(t.mask)});
    return out;
}

TranslatedBook translate(const std::vector<Leg>& legs) {
    if (legs.size() < 2 || legs.size() > 3)
        throw ValidationError("translate expects two or three legs, got " + std::to_string(legs.size()));
    for (const Leg& leg : legs) validate_leg(leg);

    TranslatedBook out;
    OpenBook& b = out.book;
    b.universe.push_back(Hole{HoleKind::Inner, 0, 0, 0});
    b.universe.push_back(Hole{HoleKind::Outer, 0, 0, 0});
    for (int i = 1; i <= static_cast<int>(legs.size()); ++i) {
        auto counts = stab_counts(legs[static_cast<std::size_t>(i - 1)]);
        for (int j = 1; j <= static_cast<int>(counts.size()); ++j) {
            auto [lam, rho] = counts[static_cast<std::size_t>(j - 1)];
            for (int c = 1; c <= lam; ++c) b.universe.push_back(Hole{HoleKind::Lambda, i, j, c});
            for (int c = 1; c <= rho; ++c) b.universe.push_back(Hole{HoleKind::Rho, i, j, c});
        }
    }
    std::sort(b.universe.begin(), b.universe.end());
    if (b.universe.size() > 63) throw ValidationError("book too large (more than 63 boundary components)");
    b.outer = b.index_of(Hole{HoleKind::Outer, 0, 0, 0});

    HoleMask in_bit = b.hole_bit(b.index_of(Hole{HoleKind::Inner, 0, 0, 0}));
    auto leg_mask = [&](int leg, HoleKind kind, bool deeper_than, int j) {
        // kind holes of `leg`; levels > j when deeper_than, else levels <= j
        HoleMask m = 0;
        for (std::size_t idx = 0; idx < b.universe.size(); ++idx) {
            const Hole& h = b.universe[idx];
            if (h.kind != kind || h.leg != leg) continue;
            if (deeper_than ? h.level > j : h.level <= j) m |= b.hole_bit(idx);
        }
        return m;
    };

    HoleMask all_rho = 0;
    for (std::size_t idx = 0; idx < b.universe.size(); ++idx)
        if (b.universe[idx].kind == HoleKind::Rho) all_rho |= b.hole_bit(idx);

    b.twists.push_back(OpenBook::Twist{-1, in_bit | all_rho});
    out.origins.push_back(TwistOrigin{TwistOrigin::Core, 0, 0, {}});

    for (int i = 1; i <= static_cast<int>(legs.size()); ++i) {
        HoleMask other_rho = all_rho & ~leg_mask(i, HoleKind::Rho, true, 0);
        int n = static_cast<int>(legs[static_cast<std::size_t>(i - 1)].coefficients.size());
        for (int j = 1; j <= n; ++j) {
            HoleMask m = in_bit | other_rho | leg_mask(i, HoleKind::Rho, true, j) |
                         leg_mask(i, HoleKind::Lambda, false, j);
            b.twists.push_back(OpenBook::Twist{+1, m});
            out.origins.push_back(TwistOrigin{TwistOrigin::Unknot, i, j, {}});
        }
    }
    for (std::size_t idx = 0; idx < b.universe.size(); ++idx) {
        const Hole& h = b.universe[idx];
        if (h.kind != HoleKind::Lambda && h.kind != HoleKind::Rho) continue;
        b.twists.push_back(OpenBook::Twist{+1, b.hole_bit(idx)});
        out.origins.push_back(TwistOrigin{TwistOrigin::Boundary, 0, 0, h});
    }
    return out;
}

OpenBook translate_book(const std::vector<Leg>& legs) { return translate(legs).book; }

TranslatedBook translate(const Presentation& p) {
    validate_presentation(p);
    return translate(p.legs);
}

OpenBook reroot(const OpenBook& b, const Hole& new_outer) {
    std::size_t ni = b.index_of(new_outer);
    OpenBook out = b;
    if (ni == b.outer) return out;
    out.outer = ni;
    HoleMask nbit = b.hole_bit(ni);
    HoleMask full = b.full_mask();
    for (auto& t : out.twists)
        if (t.mask & nbit) t.mask = full & ~(t.mask | nbit);
    return out;
}

OpenBook cap(const OpenBook& b, const std::vector<Hole>& holes) {
    HoleMask capped = 0;
    for (const Hole& h : holes) {
        std::size_t i = b.index_of(h);
        if (i == b.outer) throw ValidationError("cannot cap the outer boundary");
        capped |= b.hole_bit(i);
    }
    OpenBook out;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < b.universe.size(); ++i) {
        if (capped & b.hole_bit(i)) continue;
        if (i == b.outer) out.outer = keep.size();
        keep.push_back(i);
        out.universe.push_back(b.universe[i]);
    }
    for (const auto& t : b.twists) {
        HoleMask m = 0;
        for (std::size_t ni = 0; ni < keep.size(); ++ni)
            if (t.mask & b.hole_bit(keep[ni])) m |= HoleMask{1} << ni;
        if (m != 0) out.twists.push_back(OpenBook::Twist{t.sign, m});
    }
    return out;
}

} // namespace fill
