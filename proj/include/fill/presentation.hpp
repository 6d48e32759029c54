#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "fill/cf.hpp"

namespace fill {

// One leg of the surgery presentation: a chain of Legendrian unknots with
// surgery coefficients `coefficients` and rotation numbers `rotations`.
struct Leg {
    Chain coefficients;
    std::vector<int> rotations;
};

// Stabilization budget of unknot j (1-based): -a1-1 for j = 1, -aj-2 otherwise.
int stab_count(const Leg& leg, int j);

// Throws ValidationError naming the violated invariant.
void validate_leg(const Leg& leg);

// Per unknot (|lambda|, |rho|) = ((S+rot)/2, (S-rot)/2).
std::vector<std::pair<int, int>> stab_counts(const Leg& leg);

// tb of unknot j: -1 - |lambda| - |rho| = -1 - stab_count.
int tb(const Leg& leg, int j);

enum class Sign { Negative = -1, None = 0, Positive = 1 };

// One-sided prefix data: k = length of the initial run of unknots whose
// stabilizations all share the first unknot's sign (zero-stabilization unknots
// never break the run; mixed first unknot gives k = 0), q = -1/[a1..ak].
struct PrefixData {
    int k = 0;
    Sign sign = Sign::None;
    Rational q = 0;
};

PrefixData one_sided_prefix(const Leg& leg);

bool fully_positive_start(const Leg& leg);
bool fully_negative_start(const Leg& leg);

// Exactly three legs; e0 = -1 is implicit (two +1-framed unknots).
struct Presentation {
    std::vector<Leg> legs;
};

void validate_presentation(const Presentation& p);

// Some leg starts fully positively stabilized and another fully negatively.
bool opposite_start_check(const Presentation& p);

// Every rotation assignment on the three chains, in lexicographic order over
// the flattened rotation tuple (each coordinate ranges -S..S in steps of 2).
void enumerate_structures(const std::vector<Chain>& chains,
                          const std::function<void(const Presentation&)>& visit);
std::vector<Presentation> enumerate_structures(const std::vector<Chain>& chains);

// Number of structures without enumerating: product of (stab_count + 1).
long long count_structures(const std::vector<Chain>& chains);

} // namespace fill
