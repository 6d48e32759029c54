#pragma once

#include <optional>

#include "fill/factorization.hpp"

namespace fill {

// A qualifying sublink: two truncated legs of opposite one-sided signs whose
// truncation values sum to exactly 1 (so the sublink surgery gives S^1 x S^2,
// tight by the one-sided rotation numbers).
struct SublinkChoice {
    int positive_leg = 0; // 1-based leg indices
    int negative_leg = 0;
    int trunc_pos = 0;    // prefix lengths
    int trunc_neg = 0;
    Rational s_pos;
    Rational s_neg;
};

// All qualifying sublinks in canonical order (positive leg, negative leg,
// prefix lengths).
std::vector<SublinkChoice> find_sublinks(const Presentation& p);

// Some pair of legs with fully, oppositely stabilized first unknots and
// q_i + q_j >= 1; first such pair (positive leg, negative leg) or absent.
std::optional<std::pair<int, int>> q_condition(const Presentation& p);

struct TraceLevel {
    int J = 0;            // focused level on the distinguished leg
    int threshold = 0;    // partitions into fewer parts than this trip case (i)
    int available = 0;    // unused parallel partitions with exactly `threshold` parts
    int needed = 0;       // lifts required at this level
    char case_tag = 'i';  // 'i', 'l' (ii), 'p' (iii) -- see case_name()
    bool crossing = false;
};

const char* trace_case_name(char tag); // "i", "ii", "iii"

enum class TraceConclusion { NoPositiveFactorization, OutsideHypotheses };

// Level walk of the positive-factorization obstruction: roles, capped
// partition counting, and the per-level classification.
struct ObstructionTrace {
    bool ran = false;     // false when the preconditions rejected the walk
    bool flipped = false; // global perspective flip (all rotations negated)
    int third_leg = 0;    // original indices; the fully-positive-start leg
    int first_leg = 0;    // larger q
    int second_leg = 0;
    int k3 = 0;
    Rational q1, q2;
    std::vector<TraceLevel> levels;
    TraceConclusion conclusion = TraceConclusion::OutsideHypotheses;
    std::string note;
};

ObstructionTrace obstruction_trace(const Presentation& p);

enum class VerdictStatus { Fillable, NotFillable };

enum class ObstructionKind { FailedOppositeCheck, NoQualifyingPair, TraceObstruction };

struct Obstruction {
    ObstructionKind kind = ObstructionKind::FailedOppositeCheck;
    std::vector<Rational> q_values;          // per leg, NoQualifyingPair
    std::optional<ObstructionTrace> trace;   // TraceObstruction
};

struct Verdict {
    VerdictStatus status = VerdictStatus::NotFillable;
    std::optional<SublinkChoice> sublink;
    // Positive factorization of the sublink book (daisy construction), over
    // the sublink book's universe.
    std::optional<DaisyResult> geometric_certificate;
    std::optional<FeasibilityResult> abelian_certificate; // full book
    std::optional<Obstruction> obstruction;
};

struct DecideOptions {
    int oracle_max_holes = 14;
    bool with_certificates = true;
};

// Fillable iff a qualifying sublink exists; certificates / strongest
// obstruction attached per the options.
Verdict decide(const Presentation& p, const DecideOptions& opts = {});

} // namespace fill
