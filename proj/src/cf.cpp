#include "fill/cf.hpp"

#include <algorithm>
#include <set>

namespace fill {

void validate_chain(const Chain& c) {
    if (c.empty()) throw ValidationError("chain must be nonempty");
    for (int a : c)
        if (a > -2) throw ValidationError("chain entry " + std::to_string(a) + " violates entry <= -2");
}

Chain cf_expand(const Rational& x) {
    if (x >= -1) throw ValidationError("cf_expand domain error: need x < -1, got " + rat_to_string(x));
    Chain out;
    Rational cur = x;
    for (;;) {
        BigInt fl = rat_floor(cur);
        out.push_back(static_cast<int>(fl));
        if (cur == Rational(fl)) break;
        // cur = a - 1/next with a = floor(cur), so next = 1/(a - cur) < -1.
        cur = Rational(1) / (Rational(fl) - cur);
    }
    return out;
}

Rational cf_eval_framed(const FramedChain& c) {
    if (c.empty()) throw ValidationError("cf_eval on empty chain");
    Rational v(c.back());
    for (auto it = std::next(c.rbegin()); it != c.rend(); ++it) {
        if (v == 0) throw ArithmeticError("zero intermediate denominator in continued fraction");
        v = Rational(*it) - Rational(1) / v;
    }
    return v;
}

Rational cf_eval(const Chain& c) {
    FramedChain f(c.begin(), c.end());
    return cf_eval_framed(f);
}

std::vector<Rational> truncation_values(const Chain& c) {
    validate_chain(c);
    std::vector<Rational> out;
    out.reserve(c.size());
    for (std::size_t m = 1; m <= c.size(); ++m) {
        Chain prefix(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m));
        out.push_back(Rational(-1) / cf_eval(prefix));
    }
    return out;
}

Rational chain_value(const Chain& c) {
    validate_chain(c);
    return Rational(-1) / cf_eval(c);
}

Chain dual_chain(const Chain& c) {
    Rational s = chain_value(c);
    if (!(s > 0 && s < 1)) throw ValidationError("dual_chain domain error: s = " + rat_to_string(s) + " not in (0,1)");
    return cf_expand(Rational(-1) / (Rational(1) - s));
}

namespace {

// Backtracking over which +-1 entry to blow down, memoized on visited states.
bool blowdown_search(const FramedChain& f, std::set<FramedChain>& seen) {
    if (f.size() == 1 && f[0] == 0) return true;
    if (!seen.insert(f).second) return false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] != 1 && f[i] != -1) continue;
        FramedChain g;
        g.reserve(f.size() - 1);
        for (std::size_t j = 0; j < f.size(); ++j)
            if (j != i) g.push_back(f[j]);
        // -1 blow-down increments both neighbors; +1 decrements them.
        long long delta = -f[i];
        if (i > 0) g[i - 1] += delta;
        if (i + 1 < f.size()) g[i] += delta;
        if (blowdown_search(g, seen)) return true;
    }
    return false;
}

} // namespace

bool blowdown_to_zero(const FramedChain& f) {
    std::set<FramedChain> seen;
    return blowdown_search(f, seen);
}

std::optional<std::pair<int, int>> find_truncation_pair(const Chain& cA, const Chain& cB) {
    auto tA = truncation_values(cA);
    auto tB = truncation_values(cB);
    for (std::size_t mA = 0; mA < tA.size(); ++mA)
        for (std::size_t mB = 0; mB < tB.size(); ++mB)
            if (tA[mA] + tB[mB] == 1)
                return std::make_pair(static_cast<int>(mA + 1), static_cast<int>(mB + 1));
    return std::nullopt;
}

} // namespace fill
