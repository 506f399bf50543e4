#include "ctm/rat.hpp"

#include <cctype>

namespace ctm {

Rat rat_from_string(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ArgumentError("rat_from_string: empty input");
    try {
        auto slash = t.find('/');
        if (slash == std::string::npos) return Rat(Int(t));
        Int num(t.substr(0, slash));
        Int den(t.substr(slash + 1));
        if (den == 0) throw ArgumentError("rat_from_string: zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw ArgumentError("rat_from_string: cannot parse '" + s + "'");
    }
}

std::string rat_to_string(const Rat& r) {
    std::string out = rat_num(r).str();
    if (rat_den(r) != 1) out += "/" + rat_den(r).str();
    return out;
}

std::optional<Rat> rat_sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rat(0);
    const Int n = rat_num(r), d = rat_den(r);
    const Int sn = boost::multiprecision::sqrt(n);
    const Int sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rat(sn, sd);
}

Rat rat_pow(const Rat& base, long e) {
    if (e < 0) {
        if (base == 0) throw ArgumentError("rat_pow: 0 to a negative power");
        return Rat(1) / rat_pow(base, -e);
    }
    Rat out(1), b = base;
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    k = std::min(k, n - k);
    Int out(1);
    for (long i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;
    }
    return out;
}

} // namespace ctm
