#include "fill/factorization.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace fill {

namespace {

std::vector<std::size_t> heavy_positions(const Chain& c, bool skip_first) {
    std::vector<std::size_t> out;
    for (std::size_t i = skip_first ? 1 : 0; i < c.size(); ++i)
        if (c[i] <= -3) out.push_back(i);
    return out;
}

int run_after(const Chain& c, std::size_t pos) {
    int n = 0;
    for (std::size_t i = pos + 1; i < c.size() && c[i] == -2; ++i) ++n;
    return n;
}

} // namespace

BPattern extract_bpattern(const Chain& L_pos, const Chain& L_neg) {
    validate_chain(L_pos);
    validate_chain(L_neg);
    if (chain_value(L_pos) + chain_value(L_neg) != 1)
        throw ValidationError("duality violation: chain values do not sum to 1");

    BPattern b;
    bool neg_all_two = std::all_of(L_neg.begin(), L_neg.end(), [](int a) { return a == -2; });
    int lead = 0;
    while (lead < static_cast<int>(L_neg.size()) && L_neg[static_cast<std::size_t>(lead)] == -2) ++lead;
    b.runs.push_back(neg_all_two ? static_cast<int>(L_neg.size()) - 1 : lead);
    b.runs.push_back(run_after(L_pos, 0));

    auto pos_heavies = heavy_positions(L_pos, /*skip_first=*/true);
    auto neg_heavies = heavy_positions(L_neg, /*skip_first=*/false);
    for (std::size_t k = 0;; ++k) {
        if (k >= neg_heavies.size()) break;
        b.runs.push_back(run_after(L_neg, neg_heavies[k]));
        if (k >= pos_heavies.size()) break;
        b.runs.push_back(run_after(L_pos, pos_heavies[k]));
    }

    if (resynthesize_positive(b) != L_pos || dual_chain(L_pos) != L_neg)
        throw ValidationError("duality violation: run pattern does not re-synthesize the legs");
    return b;
}

Chain resynthesize_positive(const BPattern& b) {
    std::vector<int> r = b.runs;
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) return Chain{-2};
    Chain out{-(r[0] + 2)};
    for (std::size_t k = 1; 2 * k - 1 < r.size(); ++k) {
        std::size_t even = 2 * k - 1; // 0-based slot of b_{2k}
        for (int i = 0; i < r[even]; ++i) out.push_back(-2);
        std::size_t odd = 2 * k; // slot of b_{2k+1}
        if (odd < r.size()) out.push_back(-(r[odd] + 3) + (odd + 1 == r.size() ? 1 : 0));
    }
    return out;
}

namespace {

// Zipper state: twist slots over the view-rooted page (universe indices of the
// translated book, outer = the reserved hole).
struct Engine {
    const OpenBook& view; // reroot(translated book, reserved hole)
    std::vector<OpenBook::Twist> slot;
    std::vector<bool> alive;
    std::vector<DaisyStep> steps;

    explicit Engine(const OpenBook& v) : view(v) {
        for (const auto& t : v.twists) {
            slot.push_back(t);
            alive.push_back(true);
        }
    }

    std::size_t add(int sign, HoleMask m) {
        slot.push_back(OpenBook::Twist{sign, m});
        alive.push_back(true);
        return slot.size() - 1;
    }

    void kill(std::size_t i, const char* what) {
        if (!alive.at(i)) throw InternalError(std::string("daisy template mismatch: ") + what + " already consumed");
        alive[i] = false;
    }

    AbClass class_now() const {
        std::vector<OpenBook::Twist> live;
        for (std::size_t i = 0; i < slot.size(); ++i)
            if (alive[i]) live.push_back(slot[i]);
        return ab_class_of_twists(view.universe, view.outer, live);
    }

    int negatives_alive() const {
        int n = 0;
        for (std::size_t i = 0; i < slot.size(); ++i)
            if (alive[i] && slot[i].sign < 0) ++n;
        return n;
    }

    std::vector<Hole> holes(HoleMask m) const { return view.holes_of(m); }
};

struct LegStructure {
    int leg = 0;                  // 1-based index in the book
    HoleKind kind = HoleKind::Rho;
    int n = 0;                    // unknot count
    std::vector<int> counts;      // stabilization holes per level, 1-based at [j-1]
    std::vector<int> hole_levels; // levels with counts > 0, ascending
    Hole anchor;                  // Inner for a Rho leg, Outer for a Lambda leg

    // class t (1-based) covers unknot indices [hole_levels[t-1], next_level)
    std::pair<int, int> class_range(int t) const {
        int lo = hole_levels[static_cast<std::size_t>(t - 1)];
        int hi = t < static_cast<int>(hole_levels.size()) ? hole_levels[static_cast<std::size_t>(t)] : n + 1;
        return {lo, hi};
    }
};

LegStructure leg_structure(const Leg& leg, int index, bool positive) {
    LegStructure out;
    out.leg = index;
    out.kind = positive ? HoleKind::Lambda : HoleKind::Rho;
    out.n = static_cast<int>(leg.coefficients.size());
    auto counts = stab_counts(leg);
    for (int j = 1; j <= out.n; ++j) {
        auto [lam, rho] = counts[static_cast<std::size_t>(j - 1)];
        int c = positive ? lam : rho;
        if ((positive ? rho : lam) != 0)
            throw ValidationError("sublink leg " + std::to_string(index) + " is not one-sided");
        out.counts.push_back(c);
        if (c > 0) out.hole_levels.push_back(j);
    }
    out.anchor = positive ? Hole{HoleKind::Outer, 0, 0, 0} : Hole{HoleKind::Inner, 0, 0, 0};
    return out;
}

DaisyResult run_engine(const std::vector<Leg>& legs, int pos_index) {
    int neg_index = 3 - pos_index;
    const Leg& pos_leg = legs[static_cast<std::size_t>(pos_index - 1)];
    const Leg& neg_leg = legs[static_cast<std::size_t>(neg_index - 1)];
    if (chain_value(pos_leg.coefficients) + chain_value(neg_leg.coefficients) != 1)
        throw ValidationError("sublink legs are not dual: chain values do not sum to 1");

    TranslatedBook tb = translate(legs);
    const OpenBook& book = tb.book;

    // A = the leg whose first coefficient is -2 (the -2-starting leg of the
    // proof); on the [-2],[-2] tie the negative leg. B = the other leg.
    bool pos_starts_two = pos_leg.coefficients[0] == -2;
    bool neg_starts_two = neg_leg.coefficients[0] == -2;
    if (!pos_starts_two && !neg_starts_two)
        throw InternalError("daisy template mismatch: neither leg starts with -2");
    bool a_is_neg = neg_starts_two;
    LegStructure A = a_is_neg ? leg_structure(neg_leg, neg_index, false) : leg_structure(pos_leg, pos_index, true);
    LegStructure B = a_is_neg ? leg_structure(pos_leg, pos_index, true) : leg_structure(neg_leg, neg_index, false);

    Hole reserved{B.kind, B.leg, B.hole_levels.at(0), 1};
    OpenBook view = reroot(book, reserved);
    std::size_t rstar = view.outer;

    Engine eng(view);

    // twist lookups; translate() order matches tb.origins
    std::map<std::pair<int, int>, std::size_t> unknot_twist;
    std::map<std::size_t, std::size_t> bd_twist; // universe index -> slot
    std::size_t core = 0;
    for (std::size_t i = 0; i < tb.origins.size(); ++i) {
        const TwistOrigin& o = tb.origins[i];
        if (o.kind == TwistOrigin::Core) core = i;
        if (o.kind == TwistOrigin::Unknot) unknot_twist[{o.leg, o.level}] = i;
        if (o.kind == TwistOrigin::Boundary) bd_twist[view.index_of(o.hole)] = i;
    }

    auto level_holes = [&](const LegStructure& L, int level) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < view.universe.size(); ++i) {
            const Hole& h = view.universe[i];
            if (h.kind == L.kind && h.leg == L.leg && h.level == level && i != rstar) out.push_back(i);
        }
        return out;
    };
    auto bit = [&](std::size_t i) { return view.hole_bit(i); };

    int P = static_cast<int>(A.hole_levels.size());
    int Q = static_cast<int>(B.hole_levels.size());
    if (P != Q && P != Q + 1)
        throw InternalError("daisy template mismatch: hole-level counts P=" + std::to_string(P) +
                            " Q=" + std::to_string(Q));
    int m = P == Q ? 2 * Q - 1 : 2 * P - 2;

    AbClass before = eng.class_now();

    std::size_t pusherA = core, pusherB = SIZE_MAX, dcur = SIZE_MAX;

    auto class_twists = [&](const LegStructure& L, int t) {
        auto [lo, hi] = L.class_range(t);
        std::vector<std::size_t> out;
        for (int j = lo; j < hi; ++j) out.push_back(unknot_twist.at({L.leg, j}));
        return out;
    };
    auto check_equal_masks = [&](const std::vector<std::size_t>& idxs, const char* what) {
        for (std::size_t i : idxs)
            if (!eng.alive[i] || eng.slot[i].mask != eng.slot[idxs[0]].mask || eng.slot[i].sign != 1)
                throw InternalError(std::string("daisy template mismatch: parallel run ") + what);
        return eng.slot[idxs[0]].mask;
    };

    for (int l = 1; l <= m; ++l) {
        bool odd = l % 2 == 1;
        int t = odd ? (l + 1) / 2 : l / 2;
        const LegStructure& uSide = odd ? A : B;
        const LegStructure& tSide = odd ? B : A;

        std::vector<std::size_t> u_idx = class_twists(uSide, t);
        HoleMask u_mask = check_equal_masks(u_idx, odd ? "A" : "B");
        std::size_t p = u_idx.size();

        // v: seed twist (first step uses the boundary twist of A's single
        // first-level hole, later steps the current D)
        std::size_t v_idx;
        if (l == 1) {
            auto lvl1 = level_holes(A, A.hole_levels.at(0));
            if (lvl1.size() != 1)
                throw InternalError("daisy template mismatch: A-leg first level must have one hole");
            v_idx = bd_twist.at(lvl1[0]);
        } else {
            v_idx = dcur;
        }
        HoleMask v_mask = eng.slot[v_idx].mask;

        // targets: next hole level on the opposite side
        int target_level_index = odd ? t : t + 1;
        std::vector<std::size_t> targets = level_holes(tSide, tSide.hole_levels.at(static_cast<std::size_t>(target_level_index - 1)));
        bool terminal = odd ? (P == Q && t == Q) : (P == Q + 1 && t == Q);
        std::vector<std::size_t> providers;
        for (std::size_t h : targets) providers.push_back(bd_twist.at(h));
        if (terminal) {
            if (targets.size() + 1 != p)
                throw InternalError("daisy template mismatch: terminal step expects one fewer target hole");
            // the opposite side's final singleton parallel class serves as the
            // boundary twist of its anchor
            const LegStructure& other = odd ? B : A;
            std::vector<std::size_t> fin = class_twists(other, odd ? Q : P);
            HoleMask fm = check_equal_masks(fin, "anchor class");
            std::size_t anchor_idx = view.index_of(other.anchor);
            if (fin.size() != 1 || fm != bit(anchor_idx))
                throw InternalError("daisy template mismatch: terminal anchor class");
            targets.push_back(anchor_idx);
            providers.push_back(fin[0]);
        } else if (targets.size() != p) {
            throw InternalError("daisy template mismatch: run of " + std::to_string(p) + " twists against " +
                                std::to_string(targets.size()) + " target holes at level " + std::to_string(l));
        }

        HoleMask H = 0;
        for (std::size_t h : targets) H |= bit(h);

        // w: the pusher being fed through the daisy; step 2 materializes the
        // outer pusher together with its positive shadow
        DaisyStep rec;
        rec.level = l;
        rec.side = odd ? 'A' : 'B';
        std::size_t w_idx;
        if (!odd && l == 2) {
            if ((u_mask & v_mask) != 0) throw InternalError("daisy template mismatch: u and v overlap at step 2");
            HoleMask w_mask = u_mask | v_mask;
            std::size_t debris = eng.add(+1, w_mask);
            rec.produced.push_back(eng.holes(eng.slot[debris].mask));
            w_idx = eng.add(-1, w_mask);
        } else {
            w_idx = odd ? pusherA : pusherB;
            if (!eng.alive[w_idx] || eng.slot[w_idx].sign != -1)
                throw InternalError("daisy template mismatch: missing pusher");
            if ((u_mask & v_mask) != 0 || (u_mask | v_mask) != eng.slot[w_idx].mask)
                throw InternalError("daisy template mismatch: pusher is not the disjoint union of run and seed");
        }

        for (std::size_t i : u_idx) rec.consumed.push_back(eng.holes(eng.slot[i].mask));
        rec.consumed.push_back(eng.holes(v_mask));
        for (std::size_t i : providers) rec.consumed.push_back(eng.holes(eng.slot[i].mask));
        rec.consumed.push_back(eng.holes(eng.slot[w_idx].mask));

        eng.kill(w_idx, "pusher");
        for (std::size_t i : u_idx) eng.kill(i, "parallel run");
        eng.kill(v_idx, "seed");
        for (std::size_t i : providers) eng.kill(i, "target boundary twist");

        std::size_t pusher_new = eng.add(-1, eng.slot[w_idx].mask | H);
        dcur = eng.add(+1, v_mask | H);
        rec.produced.push_back(eng.holes(eng.slot[pusher_new].mask));
        rec.produced.push_back(eng.holes(eng.slot[dcur].mask));
        for (std::size_t k = 0; k < u_idx.size(); ++k) {
            std::size_t e = eng.add(+1, u_mask | bit(targets[k]));
            rec.produced.push_back(eng.holes(eng.slot[e].mask));
        }
        if (odd)
            pusherA = pusher_new;
        else
            pusherB = pusher_new;

        rec.D = eng.holes(eng.slot[dcur].mask);
        rec.N = eng.holes(eng.slot[pusherA].mask);
        if (pusherB != SIZE_MAX && eng.alive[pusherB]) rec.Nprime = eng.holes(eng.slot[pusherB].mask);
        eng.steps.push_back(rec);

        if (eng.negatives_alive() > 2)
            throw InternalError("daisy template mismatch: more than two negative twists alive");
        if (!ab_equal(eng.class_now(), before))
            throw InternalError("daisy step " + std::to_string(l) + " is not class-neutral");
    }

    // finale: cancel the two boundary-parallel pairs
    DaisyResult out;
    out.view_outer = reserved;
    HoleMask full_view = view.full_mask() & ~bit(rstar);
    std::size_t last = m % 2 == 1 ? pusherA : pusherB;
    if (eng.slot[last].mask != full_view)
        throw InternalError("daisy template mismatch: final pusher does not encircle all holes");
    std::size_t bd_reserved = bd_twist.at(rstar);
    if (eng.slot[bd_reserved].mask != full_view)
        throw InternalError("daisy template mismatch: reserved boundary twist");
    eng.kill(last, "final pusher");
    eng.kill(bd_reserved, "outer-parallel twist");
    out.cancelled.push_back(eng.holes(full_view));

    std::size_t other = m % 2 == 1 ? pusherB : pusherA;
    if (m >= 2) {
        if (other == SIZE_MAX || !eng.alive[other])
            throw InternalError("daisy template mismatch: missing second pusher at finale");
        if (eng.slot[other].mask != eng.slot[dcur].mask)
            throw InternalError("daisy template mismatch: D_m does not cancel the second pusher");
        eng.kill(other, "second pusher");
        eng.kill(dcur, "D_m");
        out.cancelled.push_back(eng.holes(eng.slot[dcur].mask));
    }

    // collect, reroot back to the original outer boundary
    OpenBook result_view;
    result_view.universe = view.universe;
    result_view.outer = view.outer;
    for (std::size_t i = 0; i < eng.slot.size(); ++i) {
        if (!eng.alive[i]) continue;
        if (eng.slot[i].sign != 1) throw InternalError("daisy left a negative twist after the finale");
        result_view.twists.push_back(eng.slot[i]);
    }
    OpenBook rebased = reroot(result_view, Hole{HoleKind::Outer, 0, 0, 0});
    out.positive = rebased.twists;
    std::sort(out.positive.begin(), out.positive.end(),
              [](const OpenBook::Twist& a, const OpenBook::Twist& b) {
                  return a.mask != b.mask ? a.mask < b.mask : a.sign < b.sign;
              });
    out.schedule = eng.steps;

    if (!verify_certificate(book, out.positive))
        throw InternalError("daisy output failed the abelianized certificate gate");
    return out;
}

} // namespace

DaisyResult daisy_rewrite(const Leg& positive_leg, const Leg& negative_leg) {
    auto counts_pos = stab_counts(positive_leg);
    auto counts_neg = stab_counts(negative_leg);
    for (auto [lam, rho] : counts_pos)
        if (rho != 0) throw ValidationError("positive sublink leg carries a negative stabilization");
    for (auto [lam, rho] : counts_neg)
        if (lam != 0) throw ValidationError("negative sublink leg carries a positive stabilization");
    return run_engine({positive_leg, negative_leg}, 1);
}

DaisyResult daisy_rewrite(const OpenBook& sublink_book) {
    // Reconstruct the two legs from the hole inventory, resolving the trailing
    // -2 ambiguity against the twist multiset.
    std::map<int, std::map<int, int>> counts; // leg -> level -> holes
    std::map<int, HoleKind> kind;
    for (const Hole& h : sublink_book.universe) {
        if (h.kind != HoleKind::Lambda && h.kind != HoleKind::Rho) continue;
        auto it = kind.find(h.leg);
        if (it == kind.end())
            kind[h.leg] = h.kind;
        else if (it->second != h.kind)
            throw ValidationError("sublink book leg " + std::to_string(h.leg) + " mixes hole kinds");
        counts[h.leg][h.level] += 1;
    }
    if (counts.size() != 2 || !counts.count(1) || !counts.count(2))
        throw ValidationError("sublink book must carry exactly legs 1 and 2");
    if (kind[1] == kind[2]) throw ValidationError("sublink book needs one positive and one negative leg");

    int stab_total = 0, base1 = 0, base2 = 0;
    for (auto& [lvl, c] : counts[1]) {
        stab_total += c;
        base1 = std::max(base1, lvl);
    }
    for (auto& [lvl, c] : counts[2]) {
        stab_total += c;
        base2 = std::max(base2, lvl);
    }
    int total_unknots = static_cast<int>(sublink_book.twists.size()) - 1 - stab_total;
    int spare = total_unknots - base1 - base2;
    if (spare < 0) throw ValidationError("sublink book twist count does not match a translated presentation");

    auto build_leg = [&](int leg, int n) {
        Leg out;
        for (int j = 1; j <= n; ++j) {
            int c = counts[leg].count(j) ? counts[leg][j] : 0;
            out.coefficients.push_back(j == 1 ? -(c + 1) : -(c + 2));
            out.rotations.push_back(kind[leg] == HoleKind::Lambda ? c : -c);
        }
        return out;
    };
    auto key = [](const OpenBook& b) {
        std::vector<std::pair<int, HoleMask>> k;
        for (const auto& t : b.twists) k.emplace_back(t.sign, t.mask);
        std::sort(k.begin(), k.end());
        return k;
    };

    auto want = key(sublink_book);
    for (int extra1 = 0; extra1 <= spare; ++extra1) {
        std::vector<Leg> legs{build_leg(1, base1 + extra1), build_leg(2, base2 + spare - extra1)};
        OpenBook candidate = translate(legs).book;
        if (candidate.universe == sublink_book.universe && key(candidate) == want)
            return run_engine(legs, kind[1] == HoleKind::Lambda ? 1 : 2);
    }
    throw ValidationError("book is not the translation of a one-sided two-leg presentation");
}

bool verify_certificate(const OpenBook& book, const std::vector<OpenBook::Twist>& candidate) {
    HoleMask allowed = book.full_mask() & ~book.hole_bit(book.outer);
    for (const auto& t : candidate) {
        if (t.sign != 1) throw ValidationError("certificate twists must all be positive");
        if (t.mask == 0 || (t.mask & ~allowed) != 0)
            throw ValidationError("certificate twist outside the book's universe");
    }
    return ab_equal(ab_class(book), ab_class_of_twists(book.universe, book.outer, candidate));
}

} // namespace fill
