#include "fill/presentation.hpp"

#include <cstdlib>
#include <string>

namespace fill {

int stab_count(const Leg& leg, int j) {
    int a = leg.coefficients.at(static_cast<std::size_t>(j - 1));
    return j == 1 ? -a - 1 : -a - 2;
}

void validate_leg(const Leg& leg) {
    validate_chain(leg.coefficients);
    if (leg.rotations.size() != leg.coefficients.size())
        throw ValidationError("leg needs one rotation number per unknot");
    for (int j = 1; j <= static_cast<int>(leg.coefficients.size()); ++j) {
        int S = stab_count(leg, j);
        int rot = leg.rotations[static_cast<std::size_t>(j - 1)];
        if (std::abs(rot) > S)
            throw ValidationError("rotation " + std::to_string(rot) + " at unknot " + std::to_string(j) +
                                  " violates |rot| <= stab_count = " + std::to_string(S));
        if ((S - rot) % 2 != 0)
            throw ValidationError("rotation " + std::to_string(rot) + " at unknot " + std::to_string(j) +
                                  " violates rot = stab_count (mod 2)");
    }
}

std::vector<std::pair<int, int>> stab_counts(const Leg& leg) {
    validate_leg(leg);
    std::vector<std::pair<int, int>> out;
    out.reserve(leg.coefficients.size());
    for (int j = 1; j <= static_cast<int>(leg.coefficients.size()); ++j) {
        int S = stab_count(leg, j);
        int rot = leg.rotations[static_cast<std::size_t>(j - 1)];
        out.emplace_back((S + rot) / 2, (S - rot) / 2);
    }
    return out;
}

int tb(const Leg& leg, int j) { return -1 - stab_count(leg, j); }

PrefixData one_sided_prefix(const Leg& leg) {
    auto counts = stab_counts(leg);
    PrefixData out;
    // First unknot always carries at least one stabilization (a1 <= -2).
    auto [lam1, rho1] = counts[0];
    if (lam1 > 0 && rho1 > 0) return out; // mixed start: k = 0, q = 0
    out.sign = lam1 > 0 ? Sign::Positive : Sign::Negative;
    int k = 1;
    while (k < static_cast<int>(counts.size())) {
        auto [lam, rho] = counts[static_cast<std::size_t>(k)];
        int opposite = out.sign == Sign::Positive ? rho : lam;
        if (opposite > 0) break;
        ++k;
    }
    out.k = k;
    Chain prefix(leg.coefficients.begin(), leg.coefficients.begin() + k);
    out.q = chain_value(prefix);
    return out;
}

bool fully_positive_start(const Leg& leg) {
    auto [lam, rho] = stab_counts(leg)[0];
    (void)lam;
    return rho == 0;
}

bool fully_negative_start(const Leg& leg) {
    auto [lam, rho] = stab_counts(leg)[0];
    (void)rho;
    return lam == 0;
}

void validate_presentation(const Presentation& p) {
    if (p.legs.size() != 3)
        throw ValidationError("presentation needs exactly three legs, got " + std::to_string(p.legs.size()));
    for (const Leg& leg : p.legs) {
        validate_leg(leg);
        Rational r = chain_value(leg.coefficients);
        if (!(r > 0 && r < 1))
            throw ValidationError("leg value r = " + rat_to_string(r) + " not in (0,1)");
    }
}

bool opposite_start_check(const Presentation& p) {
    validate_presentation(p);
    bool pos = false, neg = false;
    for (const Leg& leg : p.legs) {
        if (fully_positive_start(leg)) pos = true;
        if (fully_negative_start(leg)) neg = true;
    }
    return pos && neg;
}

void enumerate_structures(const std::vector<Chain>& chains,
                          const std::function<void(const Presentation&)>& visit) {
    if (chains.size() != 3) throw ValidationError("enumerate_structures needs exactly three chains");
    for (const Chain& c : chains) validate_chain(c);

    Presentation p;
    std::vector<int> budget; // flattened stab counts
    for (const Chain& c : chains) {
        Leg leg{c, std::vector<int>(c.size(), 0)};
        for (int j = 1; j <= static_cast<int>(c.size()); ++j)
            budget.push_back(stab_count(leg, j));
        p.legs.push_back(std::move(leg));
    }

    std::vector<int> rot(budget.size());
    for (std::size_t i = 0; i < rot.size(); ++i) rot[i] = -budget[i];
    for (;;) {
        std::size_t pos = 0;
        for (Leg& leg : p.legs)
            for (int& r : leg.rotations) r = rot[pos++];
        visit(p);
        // odometer: last coordinate fastest, values -S..S step 2
        std::size_t i = rot.size();
        while (i > 0) {
            --i;
            if (rot[i] + 2 <= budget[i]) {
                rot[i] += 2;
                for (std::size_t j = i + 1; j < rot.size(); ++j) rot[j] = -budget[j];
                break;
            }
            if (i == 0) return;
        }
    }
}

std::vector<Presentation> enumerate_structures(const std::vector<Chain>& chains) {
    std::vector<Presentation> out;
    enumerate_structures(chains, [&](const Presentation& p) { out.push_back(p); });
    return out;
}

long long count_structures(const std::vector<Chain>& chains) {
    if (chains.size() != 3) throw ValidationError("count_structures needs exactly three chains");
    long long n = 1;
    for (const Chain& c : chains) {
        validate_chain(c);
        Leg leg{c, std::vector<int>(c.size(), 0)};
        for (int j = 1; j <= static_cast<int>(c.size()); ++j)
            n *= stab_count(leg, j) + 1;
    }
    return n;
}

} // namespace fill
