#pragma once

#include <nlohmann/json_fwd.hpp>

#include "fill/fillability.hpp"

namespace fill {

using Json = nlohmann::json;

Json chain_to_json(const Chain& c);
Chain chain_from_json(const Json& j);

Json leg_to_json(const Leg& leg);
// Accepts {"coeffs":[...],"rot":[...]} or {"r":"p/q","rot":[...]} (coefficients
// derived by continued fraction expansion of -1/r).
Leg leg_from_json(const Json& j);

Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);
std::vector<Leg> legs_from_json(const Json& j); // two or three legs

Json book_to_json(const OpenBook& b);
Json abclass_to_json(const AbClass& a);
Json feasibility_to_json(const FeasibilityResult& r, const OpenBook& book);
Json sublink_to_json(const SublinkChoice& s);
Json trace_to_json(const ObstructionTrace& t);
Json daisy_to_json(const DaisyResult& d, const OpenBook& book);
Json verdict_to_json(const Verdict& v, const Presentation& p);

// Candidate positive multiset for verify: [["in","L1.1.1"], ...] over `book`.
std::vector<OpenBook::Twist> candidate_from_json(const Json& j, const OpenBook& book);

} // namespace fill
