#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fill/rational.hpp"

namespace fill {

// Negative continued fraction [a1,...,an] = a1 - 1/(a2 - 1/(... - 1/an)).
// Contact-leg chains have every entry <= -2; FramedChain admits arbitrary
// integers (intermediate Kirby-move states).
using Chain = std::vector<int>;
using FramedChain = std::vector<long long>;

// Throws ValidationError unless the chain is nonempty with all entries <= -2.
void validate_chain(const Chain& c);

// Unique expansion of x < -1 with all entries <= -2. Throws ValidationError if x >= -1.
Chain cf_expand(const Rational& x);

// Exact value; throws ArithmeticError if an intermediate denominator vanishes
// (possible only for framed inputs, never for entries <= -2).
Rational cf_eval_framed(const FramedChain& c);
Rational cf_eval(const Chain& c);

// s_m = -1/cf_eval([a1..am]) for m = 1..n; strictly increasing for entries <= -2.
std::vector<Rational> truncation_values(const Chain& c);

// s = -1/cf_eval(c); needs all entries <= -2.
Rational chain_value(const Chain& c);

// cf_expand(-1/(1-s)); involution with s(c) + s(dual(c)) = 1 exactly.
Chain dual_chain(const Chain& c);

// True iff iterated blow-downs of +-1-framed chain elements reduce f to [0].
// Blow-down of -1 removes the entry and increments both neighbors (mirror for +1).
bool blowdown_to_zero(const FramedChain& f);

// Lexicographically smallest pair of prefix lengths (mA, mB), 1-based, with
// truncation_values(cA)[mA] + truncation_values(cB)[mB] = 1.
std::optional<std::pair<int, int>> find_truncation_pair(const Chain& cA, const Chain& cB);

} // namespace fill
