#include "fill/rational.hpp"

#include <cctype>

namespace fill {

BigInt rat_floor(const Rational& r) {
    BigInt num = rat_num(r);
    BigInt den = rat_den(r);
    BigInt q = num / den; // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

std::string rat_to_string(const Rational& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

Rational rat_parse(const std::string& text) {
    auto bad = [&] { throw ValidationError("malformed rational '" + text + "', expected \"p/q\""); };
    auto is_int = [&](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) bad();
            return Rational(BigInt(text));
        }
        std::string p = text.substr(0, slash);
        std::string q = text.substr(slash + 1);
        if (!is_int(p) || !is_int(q)) bad();
        BigInt den(q);
        if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
        return Rational(BigInt(p), den);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("malformed rational '") + text + "': " + e.what());
    }
}

} // namespace fill
