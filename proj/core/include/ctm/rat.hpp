#ifndef CTM_RAT_HPP
#define CTM_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "ctm/errors.hpp"

namespace ctm {

// Exact arbitrary-precision arithmetic. cpp_rational keeps the canonical
// form we rely on everywhere: gcd(|num|, den) = 1 and den > 0.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Parse "a", "-a", "a/b" with optional surrounding whitespace.
Rat rat_from_string(const std::string& s);

/// Canonical text form: "a" or "a/b" with b > 1.
std::string rat_to_string(const Rat& r);

/// Exact square root when r is the square of a rational, nullopt otherwise.
/// The returned root is >= 0.
std::optional<Rat> rat_sqrt_exact(const Rat& r);

inline bool rat_is_square(const Rat& r) { return rat_sqrt_exact(r).has_value(); }

Rat rat_pow(const Rat& base, long e);

/// binom(n, k) as an exact integer (0 for k < 0 or k > n).
Int binomial(long n, long k);

} // namespace ctm

#endif
