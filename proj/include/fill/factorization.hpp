#pragma once

#include "fill/abmap.hpp"

namespace fill {

// Interleaved run-length data of a dual chain pair: b1 counts the -2's opening
// the all-negative leg, then runs alternate between the legs (even indices
// from the positive leg, odd from the negative one).
struct BPattern {
    std::vector<int> runs;
};

// Extraction per the run-counting rules; validated by re-synthesizing the
// positive leg from the runs and closing the pair arithmetically.
// Throws ValidationError on duality violation (s_pos + s_neg != 1).
BPattern extract_bpattern(const Chain& L_pos, const Chain& L_neg);

// Positive-leg chain determined by a run vector (trailing zero runs ignored).
Chain resynthesize_positive(const BPattern& b);

// One daisy application, reported in the page rooted at the reserved hole.
struct DaisyStep {
    int level = 0;              // l
    char side = 'A';            // 'A' = leg starting in -2's, 'B' = other leg
    std::vector<std::vector<Hole>> consumed;
    std::vector<std::vector<Hole>> produced;
    std::vector<Hole> D;        // D_l
    std::vector<Hole> N;        // inner pusher after this step
    std::vector<Hole> Nprime;   // outer pusher after this step (empty before step 2)
};

struct DaisyResult {
    // All-positive twist multiset over the book's universe, stored against the
    // book's original outer boundary, canonically sorted.
    std::vector<OpenBook::Twist> positive;
    std::vector<DaisyStep> schedule;
    Hole view_outer;            // reserved hole the rewrite was rooted at
    std::vector<std::vector<Hole>> cancelled; // the two boundary-parallel pairs
};

// Iterated daisy rewrite of a two-leg sublink book (one leg fully positively
// stabilized, the other fully negatively, chain values summing to 1) into an
// all-positive factorization with the same abelianized class. Every step is
// checked for class neutrality; template mismatches throw InternalError.
DaisyResult daisy_rewrite(const OpenBook& sublink_book);
DaisyResult daisy_rewrite(const Leg& positive_leg, const Leg& negative_leg);

// True iff the all-positive candidate has the book's abelianized class.
bool verify_certificate(const OpenBook& book, const std::vector<OpenBook::Twist>& candidate);

} // namespace fill
