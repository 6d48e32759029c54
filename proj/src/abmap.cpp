#include "fill/abmap.hpp"

#include <algorithm>
#include <bit>

namespace fill {

std::size_t AbClass::pair_index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    // upper triangle row-major: (i,j), i < j
    return i * (2 * n() - i - 1) / 2 + (j - i - 1);
}

int AbClass::pair_at(std::size_t i, std::size_t j) const { return pair[pair_index(i, j)]; }

AbClass ab_class_of_twists(const std::vector<Hole>& universe, std::size_t outer,
                           const std::vector<OpenBook::Twist>& twists) {
    AbClass out;
    out.universe = universe;
    out.outer = outer;
    std::size_t n = universe.size();
    out.single.assign(n, 0);
    out.pair.assign(n * (n - 1) / 2, 0);
    for (const auto& t : twists) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!(t.mask & (HoleMask{1} << i))) continue;
            out.single[i] += t.sign;
            for (std::size_t j = i + 1; j < n; ++j)
                if (t.mask & (HoleMask{1} << j)) out.pair[out.pair_index(i, j)] += t.sign;
        }
    }
    return out;
}

AbClass ab_class(const OpenBook& b) { return ab_class_of_twists(b.universe, b.outer, b.twists); }

bool ab_equal(const AbClass& x, const AbClass& y) {
    if (x.universe != y.universe || x.outer != y.outer)
        throw ValidationError("ab_equal on mismatched universes");
    return x.single == y.single && x.pair == y.pair;
}

std::vector<OpenBook::Twist> lantern_decompose(const OpenBook::Twist& t) {
    int r = std::popcount(t.mask);
    if (r < 2) return {t};
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 64; ++i)
        if (t.mask & (HoleMask{1} << i)) idx.push_back(i);
    std::vector<OpenBook::Twist> out;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            out.push_back(OpenBook::Twist{t.sign, (HoleMask{1} << idx[a]) | (HoleMask{1} << idx[b])});
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (int k = 0; k < r - 2; ++k)
            out.push_back(OpenBook::Twist{-t.sign, HoleMask{1} << idx[a]});
    return out;
}

std::vector<SignedTwist> lantern_decompose(const SignedTwist& t) {
    std::vector<Hole> holes = t.holes;
    std::sort(holes.begin(), holes.end());
    int r = static_cast<int>(holes.size());
    if (r < 2) return {t};
    std::vector<SignedTwist> out;
    for (std::size_t a = 0; a < holes.size(); ++a)
        for (std::size_t b = a + 1; b < holes.size(); ++b)
            out.push_back(SignedTwist{t.sign, {holes[a], holes[b]}});
    for (const Hole& h : holes)
        for (int k = 0; k < r - 2; ++k) out.push_back(SignedTwist{-t.sign, {h}});
    return out;
}

namespace {

// Shared solver state over the non-outer holes of the target class.
struct Solver {
    std::size_t n = 0;            // hole count (compacted, outer removed)
    std::vector<std::size_t> to_class; // compact index -> class universe index
    std::vector<int> rem_single;
    std::vector<std::vector<int>> rem_pair;
    std::vector<std::pair<HoleMask, int>> chosen; // compact-index masks

    bool pairs_done(std::size_t& pi, std::size_t& pj) const {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rem_pair[i][j] > 0) {
                    pi = i;
                    pj = j;
                    return false;
                }
        return true;
    }

    // Necessary condition: every positive pair needs that many twists through
    // each of its holes, each eating one unit of the hole's single budget.
    bool bounds_ok() const {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (rem_pair[i][j] < 0) return false;
                if (rem_pair[i][j] > 0 &&
                    (rem_single[i] < rem_pair[i][j] || rem_single[j] < rem_pair[i][j]))
                    return false;
            }
        return true;
    }

    void apply(HoleMask m, int dir) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!(m & (HoleMask{1} << i))) continue;
            rem_single[i] += dir;
            for (std::size_t j = i + 1; j < n; ++j)
                if (m & (HoleMask{1} << j)) {
                    rem_pair[i][j] += dir;
                    rem_pair[j][i] += dir;
                }
        }
    }

    void record(HoleMask m) {
        if (!chosen.empty() && chosen.back().first == m)
            ++chosen.back().second;
        else
            chosen.emplace_back(m, 1);
    }
};

// Branch on the canonically first unsaturated pair: any solution contains a
// twist covering it whose holes all still have positive single and pairwise
// budgets. Enumerate candidate hole sets in descending mask order; successive
// choices for one pair are forced non-increasing to skip permutations.
bool search(Solver& s, HoleMask cursor_pair_mask, HoleMask cursor) {
    if (!s.bounds_ok()) return false;
    std::size_t pi = 0, pj = 0;
    if (s.pairs_done(pi, pj)) return true;

    HoleMask base = (HoleMask{1} << pi) | (HoleMask{1} << pj);
    if (base != cursor_pair_mask) cursor = ~HoleMask{0};

    // candidate extension holes: positive single budget and positive pair
    // budget against both pi and pj
    HoleMask ext = 0;
    for (std::size_t h = 0; h < s.n; ++h) {
        if (h == pi || h == pj) continue;
        if (s.rem_single[h] >= 1 && s.rem_pair[h][pi] >= 1 && s.rem_pair[h][pj] >= 1)
            ext |= HoleMask{1} << h;
    }

    // descending submask walk over ext, largest (numeric) subsets first
    HoleMask sub = ext;
    for (;;) {
        HoleMask cand = base | sub;
        if (cand <= cursor) {
            // all internal pairs of the extension must have budget
            bool ok = true;
            for (std::size_t a = 0; a < s.n && ok; ++a) {
                if (!(sub & (HoleMask{1} << a))) continue;
                for (std::size_t b = a + 1; b < s.n && ok; ++b)
                    if ((sub & (HoleMask{1} << b)) && s.rem_pair[a][b] < 1) ok = false;
            }
            if (ok) {
                s.apply(cand, -1);
                s.record(cand);
                if (search(s, base, cand)) return true;
                if (s.chosen.back().second == 1)
                    s.chosen.pop_back();
                else
                    --s.chosen.back().second;
                s.apply(cand, +1);
            }
        }
        if (sub == 0) break;
        sub = (sub - 1) & ext;
    }
    return false;
}

} // namespace

FeasibilityResult positive_feasible(const AbClass& target, int max_holes) {
    std::size_t holes = target.n() - 1;
    if (static_cast<int>(holes) > max_holes)
        throw ValidationError("universe has " + std::to_string(holes) + " holes, oracle guard is " +
                              std::to_string(max_holes));

    Solver s;
    for (std::size_t i = 0; i < target.n(); ++i)
        if (i != target.outer) s.to_class.push_back(i);
    s.n = s.to_class.size();
    s.rem_single.resize(s.n);
    s.rem_pair.assign(s.n, std::vector<int>(s.n, 0));
    for (std::size_t i = 0; i < s.n; ++i) {
        s.rem_single[i] = target.single[s.to_class[i]];
        for (std::size_t j = i + 1; j < s.n; ++j)
            s.rem_pair[i][j] = s.rem_pair[j][i] = target.pair_at(s.to_class[i], s.to_class[j]);
    }
    if (target.single[target.outer] != 0)
        return {Feasibility::Infeasible, {}};
    for (std::size_t i = 0; i < target.n(); ++i)
        if (i != target.outer && target.pair_at(i, target.outer) != 0)
            return {Feasibility::Infeasible, {}};
    for (int v : s.rem_single)
        if (v < 0) return {Feasibility::Infeasible, {}};

    if (!search(s, 0, ~HoleMask{0})) return {Feasibility::Infeasible, {}};

    FeasibilityResult out;
    out.status = Feasibility::Feasible;
    // leftover singles become boundary twists
    for (std::size_t i = 0; i < s.n; ++i)
        if (s.rem_single[i] > 0) s.chosen.emplace_back(HoleMask{1} << i, s.rem_single[i]);

    // re-express masks over the class universe and verify the witness replays
    std::vector<OpenBook::Twist> replay;
    for (auto& [m, count] : s.chosen) {
        HoleMask cm = 0;
        for (std::size_t i = 0; i < s.n; ++i)
            if (m & (HoleMask{1} << i)) cm |= HoleMask{1} << s.to_class[i];
        for (int k = 0; k < count; ++k) replay.push_back(OpenBook::Twist{+1, cm});
        out.witness.emplace_back(cm, count);
    }
    std::sort(out.witness.begin(), out.witness.end());
    AbClass check = ab_class_of_twists(target.universe, target.outer, replay);
    if (!ab_equal(check, target))
        throw InternalError("feasibility witness failed replay verification");
    return out;
}

namespace {

// Spec's reference search: all subsets of size >= 2 in decreasing size then
// ascending mask, x_S bounded by the remaining pair sums inside S (and single
// sums); singletons resolved by subtraction at the leaf.
bool naive_dfs(Solver& s, const std::vector<HoleMask>& subsets, std::size_t idx) {
    if (idx == subsets.size()) {
        for (std::size_t i = 0; i < s.n; ++i)
            for (std::size_t j = i + 1; j < s.n; ++j)
                if (s.rem_pair[i][j] != 0) return false;
        for (int v : s.rem_single)
            if (v < 0) return false;
        return true;
    }
    HoleMask m = subsets[idx];
    int ub = INT32_MAX;
    for (std::size_t i = 0; i < s.n; ++i) {
        if (!(m & (HoleMask{1} << i))) continue;
        ub = std::min(ub, s.rem_single[i]);
        for (std::size_t j = i + 1; j < s.n; ++j)
            if (m & (HoleMask{1} << j)) ub = std::min(ub, s.rem_pair[i][j]);
    }
    for (int x = ub; x >= 0; --x) {
        for (int k = 0; k < x; ++k) s.apply(m, -1);
        if (naive_dfs(s, subsets, idx + 1)) return true;
        for (int k = 0; k < x; ++k) s.apply(m, +1);
    }
    return false;
}

} // namespace

Feasibility naive_feasible(const AbClass& target) {
    Solver s;
    for (std::size_t i = 0; i < target.n(); ++i)
        if (i != target.outer) s.to_class.push_back(i);
    s.n = s.to_class.size();
    if (s.n > 16) throw ValidationError("naive_feasible is for small universes only");
    s.rem_single.resize(s.n);
    s.rem_pair.assign(s.n, std::vector<int>(s.n, 0));
    for (std::size_t i = 0; i < s.n; ++i) {
        s.rem_single[i] = target.single[s.to_class[i]];
        for (std::size_t j = i + 1; j < s.n; ++j)
            s.rem_pair[i][j] = s.rem_pair[j][i] = target.pair_at(s.to_class[i], s.to_class[j]);
    }
    for (int v : s.rem_single)
        if (v < 0) return Feasibility::Infeasible;
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t j = i + 1; j < s.n; ++j)
            if (s.rem_pair[i][j] < 0) return Feasibility::Infeasible;

    std::vector<HoleMask> subsets;
    for (HoleMask m = 1; m < (HoleMask{1} << s.n); ++m)
        if (std::popcount(m) >= 2) subsets.push_back(m);
    std::sort(subsets.begin(), subsets.end(), [](HoleMask a, HoleMask b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    return naive_dfs(s, subsets, 0) ? Feasibility::Feasible : Feasibility::Infeasible;
}

} // namespace fill
