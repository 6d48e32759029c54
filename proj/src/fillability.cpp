#include "fill/fillability.hpp"

#include <algorithm>

namespace fill {

std::vector<SublinkChoice> find_sublinks(const Presentation& p) {
    validate_presentation(p);
    std::vector<PrefixData> prefix;
    std::vector<std::vector<Rational>> trunc;
    for (const Leg& leg : p.legs) {
        prefix.push_back(one_sided_prefix(leg));
        trunc.push_back(truncation_values(leg.coefficients));
    }
    std::vector<SublinkChoice> out;
    for (int i = 1; i <= 3; ++i) {
        if (prefix[static_cast<std::size_t>(i - 1)].sign != Sign::Positive) continue;
        for (int j = 1; j <= 3; ++j) {
            if (j == i || prefix[static_cast<std::size_t>(j - 1)].sign != Sign::Negative) continue;
            int kp = prefix[static_cast<std::size_t>(i - 1)].k;
            int kn = prefix[static_cast<std::size_t>(j - 1)].k;
            for (int mp = 1; mp <= kp; ++mp)
                for (int mn = 1; mn <= kn; ++mn)
                    if (trunc[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(mp - 1)] +
                            trunc[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(mn - 1)] ==
                        1) {
                        SublinkChoice s;
                        s.positive_leg = i;
                        s.negative_leg = j;
                        s.trunc_pos = mp;
                        s.trunc_neg = mn;
                        s.s_pos = trunc[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(mp - 1)];
                        s.s_neg = trunc[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(mn - 1)];
                        out.push_back(s);
                    }
        }
    }
    return out;
}

std::optional<std::pair<int, int>> q_condition(const Presentation& p) {
    validate_presentation(p);
    std::vector<PrefixData> prefix;
    for (const Leg& leg : p.legs) prefix.push_back(one_sided_prefix(leg));
    for (int i = 1; i <= 3; ++i) {
        if (prefix[static_cast<std::size_t>(i - 1)].sign != Sign::Positive) continue;
        for (int j = 1; j <= 3; ++j) {
            if (j == i || prefix[static_cast<std::size_t>(j - 1)].sign != Sign::Negative) continue;
            if (prefix[static_cast<std::size_t>(i - 1)].q + prefix[static_cast<std::size_t>(j - 1)].q >= 1)
                return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

const char* trace_case_name(char tag) {
    switch (tag) {
        case 'i': return "i";
        case 'l': return "ii";
        case 'p': return "iii";
    }
    return "?";
}

namespace {

Leg negate_rotations(const Leg& leg) {
    Leg out = leg;
    for (int& r : out.rotations) r = -r;
    return out;
}

} // namespace

ObstructionTrace obstruction_trace(const Presentation& p) {
    validate_presentation(p);
    ObstructionTrace tr;

    int fully_pos = 0, fully_neg = 0;
    for (const Leg& leg : p.legs) {
        if (fully_positive_start(leg)) ++fully_pos;
        if (fully_negative_start(leg)) ++fully_neg;
    }
    Presentation work = p;
    if (fully_pos == 1 && fully_neg >= 1) {
        tr.flipped = false;
    } else if (fully_pos == 2 && fully_neg == 1) {
        tr.flipped = true;
        for (Leg& leg : work.legs) leg = negate_rotations(leg);
    } else {
        tr.note = "needs exactly one fully positively stabilized starting unknot (after at most one flip) "
                  "and a fully negatively stabilized one";
        return tr;
    }

    int third = 0;
    for (int i = 1; i <= 3; ++i)
        if (fully_positive_start(work.legs[static_cast<std::size_t>(i - 1)])) third = i;
    std::vector<int> others;
    for (int i = 1; i <= 3; ++i)
        if (i != third) others.push_back(i);
    PrefixData pa = one_sided_prefix(work.legs[static_cast<std::size_t>(others[0] - 1)]);
    PrefixData pb = one_sided_prefix(work.legs[static_cast<std::size_t>(others[1] - 1)]);
    // Remark 3 ordering: -1/q_1 > -1/q_2, i.e. the larger q (with q of a mixed
    // start counting as 0) plays the first leg.
    int first = others[0], second = others[1];
    Rational qa = pa.sign == Sign::Negative ? pa.q : Rational(0);
    Rational qb = pb.sign == Sign::Negative ? pb.q : Rational(0);
    if (qb > qa) {
        std::swap(first, second);
        std::swap(qa, qb);
    }
    tr.ran = true;
    tr.third_leg = third;
    tr.first_leg = first;
    tr.second_leg = second;
    tr.q1 = qa;
    tr.q2 = qb;

    const Leg& leg3 = work.legs[static_cast<std::size_t>(third - 1)];
    const Leg& leg1 = work.legs[static_cast<std::size_t>(first - 1)];
    PrefixData p3 = one_sided_prefix(leg3);
    tr.k3 = p3.k;

    // lambda-counts on the distinguished leg
    std::vector<int> lam;
    for (auto [l, r] : stab_counts(leg3)) {
        (void)r;
        lam.push_back(l);
    }
    int n3 = static_cast<int>(lam.size());

    // Partition part-counts from the first leg's capped factorization: the
    // main twist of unknot j (j <= k_1) plus one boundary twist per first-leg
    // Rho hole of levels <= j.
    PrefixData p1 = one_sided_prefix(leg1);
    int k1 = p1.sign == Sign::Negative ? p1.k : 0;
    std::vector<int> parts; // part count per main twist, ascending in j
    {
        auto counts1 = stab_counts(leg1);
        int rho_so_far = 0;
        for (int j = 1; j <= k1; ++j) {
            rho_so_far += counts1[static_cast<std::size_t>(j - 1)].second;
            parts.push_back(1 + rho_so_far);
        }
    }
    std::vector<bool> used(parts.size(), false);

    auto unused_below = [&](int threshold) {
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (!used[j] && parts[j] < threshold) return true;
        return false;
    };
    auto count_exact = [&](int threshold) {
        int c = 0;
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (!used[j] && parts[j] == threshold) ++c;
        return c;
    };
    auto consume_exact = [&](int threshold, int need) {
        for (std::size_t j = 0; j < parts.size() && need > 0; ++j)
            if (!used[j] && parts[j] == threshold) {
                used[j] = true;
                --need;
            }
    };

    int J = 0;
    for (;;) {
        // next level: smallest j > J with a lambda hole (strictly more than
        // one for j = 1); past n3 the outer boundary plays level n3 + 1
        int nextJ = 0;
        for (int j = J + 1; j <= n3; ++j) {
            int need_min = j == 1 ? 2 : 1;
            if (lam[static_cast<std::size_t>(j - 1)] >= need_min) {
                nextJ = j;
                break;
            }
        }
        if (nextJ == 0) nextJ = n3 + 1;

        if (nextJ > tr.k3) {
            // crossing level: at most k3 + 1 twists may extend over the
            // remaining holes
            TraceLevel lv;
            lv.J = nextJ;
            lv.threshold = tr.k3 + 1;
            lv.crossing = true;
            lv.needed = 1;
            bool open = false;
            for (std::size_t j = 0; j < parts.size(); ++j)
                if (!used[j] && parts[j] <= tr.k3 + 1) open = true;
            lv.available = open ? 1 : 0;
            lv.case_tag = open ? 'i' : 'l';
            tr.levels.push_back(lv);
            tr.conclusion = open ? TraceConclusion::OutsideHypotheses : TraceConclusion::NoPositiveFactorization;
            if (open) tr.note = "a spare partition crosses the one-sided range";
            return tr;
        }

        TraceLevel lv;
        lv.J = nextJ;
        lv.threshold = nextJ + 1;
        lv.needed = lam[static_cast<std::size_t>(nextJ - 1)] - (nextJ == 1 ? 1 : 0);
        if (unused_below(nextJ + 1)) {
            lv.case_tag = 'i';
            lv.available = count_exact(nextJ + 1);
            tr.levels.push_back(lv);
            tr.conclusion = TraceConclusion::OutsideHypotheses;
            tr.note = "an unused partition with fewer parts exists";
            return tr;
        }
        lv.available = count_exact(nextJ + 1);
        if (lv.available < lv.needed) {
            lv.case_tag = 'l';
            tr.levels.push_back(lv);
            tr.conclusion = TraceConclusion::NoPositiveFactorization;
            return tr;
        }
        lv.case_tag = 'p';
        tr.levels.push_back(lv);
        consume_exact(nextJ + 1, lv.needed);
        J = nextJ;
    }
}

Verdict decide(const Presentation& p, const DecideOptions& opts) {
    validate_presentation(p);
    Verdict v;
    auto sublinks = find_sublinks(p);
    if (!sublinks.empty()) {
        v.status = VerdictStatus::Fillable;
        v.sublink = sublinks.front();
        if (opts.with_certificates) {
            const SublinkChoice& s = *v.sublink;
            const Leg& pos = p.legs[static_cast<std::size_t>(s.positive_leg - 1)];
            const Leg& neg = p.legs[static_cast<std::size_t>(s.negative_leg - 1)];
            Leg pos_trunc{Chain(pos.coefficients.begin(), pos.coefficients.begin() + s.trunc_pos),
                          std::vector<int>(pos.rotations.begin(), pos.rotations.begin() + s.trunc_pos)};
            Leg neg_trunc{Chain(neg.coefficients.begin(), neg.coefficients.begin() + s.trunc_neg),
                          std::vector<int>(neg.rotations.begin(), neg.rotations.begin() + s.trunc_neg)};
            v.geometric_certificate = daisy_rewrite(pos_trunc, neg_trunc);

            OpenBook full = translate_book(p.legs);
            if (static_cast<int>(full.universe.size()) - 1 <= opts.oracle_max_holes)
                v.abelian_certificate = positive_feasible(ab_class(full), opts.oracle_max_holes);
        }
        return v;
    }

    v.status = VerdictStatus::NotFillable;
    Obstruction ob;
    ObstructionTrace tr = obstruction_trace(p);
    if (tr.ran && tr.conclusion == TraceConclusion::NoPositiveFactorization) {
        ob.kind = ObstructionKind::TraceObstruction;
        ob.trace = tr;
    } else if (!opposite_start_check(p)) {
        ob.kind = ObstructionKind::FailedOppositeCheck;
    } else {
        ob.kind = ObstructionKind::NoQualifyingPair;
        for (const Leg& leg : p.legs) ob.q_values.push_back(one_sided_prefix(leg).q);
        ob.trace = tr.ran ? std::optional<ObstructionTrace>(tr) : std::nullopt;
    }
    v.obstruction = ob;
    return v;
}

} // namespace fill
