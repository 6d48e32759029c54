#pragma once

#include <optional>
#include <vector>

#include "fill/openbook.hpp"

namespace fill {

// Abelianized planar mapping class: signed twist counts through each hole
// (m_alpha) and each unordered hole pair (m_alphabeta), a complete invariant.
// Indices refer to the attached universe; the outer slot stays zero.
struct AbClass {
    std::vector<Hole> universe;
    std::size_t outer = 0;
    std::vector<int> single;       // size n
    std::vector<int> pair;         // flattened upper triangle, size n*(n-1)/2

    std::size_t n() const { return universe.size(); }
    std::size_t pair_index(std::size_t i, std::size_t j) const; // i != j
    int pair_at(std::size_t i, std::size_t j) const;
};

AbClass ab_class(const OpenBook& b);
AbClass ab_class_of_twists(const std::vector<Hole>& universe, std::size_t outer,
                           const std::vector<OpenBook::Twist>& twists);

// Structural equality; throws ValidationError on mismatched universe/outer.
bool ab_equal(const AbClass& x, const AbClass& y);

// Lantern decomposition of a twist around r >= 2 holes into r(r-1)/2 pairwise
// twists and (r-2) opposite-sign boundary twists around each hole; preserves
// the abelianized class. r < 2 returns the twist unchanged.
std::vector<OpenBook::Twist> lantern_decompose(const OpenBook::Twist& t);
std::vector<SignedTwist> lantern_decompose(const SignedTwist& t);

enum class Feasibility { Feasible, Infeasible };

struct FeasibilityResult {
    Feasibility status = Feasibility::Infeasible;
    // Witness: positive twist multiset (mask, multiplicity) reproducing the
    // class exactly; masks are over the class's universe indices.
    std::vector<std::pair<HoleMask, int>> witness;
};

// Decides whether nonnegative integers x_S over nonempty hole subsets exist
// with the prescribed single and pair sums; verified witness when feasible.
// Throws ValidationError when the universe exceeds max_holes non-outer holes.
FeasibilityResult positive_feasible(const AbClass& target, int max_holes = 14);

// Reference enumerator (subsets in decreasing size, x_S bounded by remaining
// sums); exponential, for cross-checking small universes only.
Feasibility naive_feasible(const AbClass& target);

} // namespace fill
