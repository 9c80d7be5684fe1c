#ifndef SCLOSURE_NUMERIC_HPP
#define SCLOSURE_NUMERIC_HPP

#include <gmpxx.h>

#include <string>

namespace sclosure {

// Exact arithmetic everywhere: exponents are Int, scale factors are Rat.
using Int = mpz_class;
using Rat = mpq_class;

// ceil(r) and floor(r) as integers.
Int rat_ceil(const Rat& r);
Int rat_floor(const Rat& r);

Int int_gcd(const Int& a, const Int& b);
Int int_lcm(const Int& a, const Int& b);

// b^e for e >= 0.
Int int_pow(const Int& base, unsigned long e);

// ceil(a / b) for b > 0.
Int int_ceil_div(const Int& a, const Int& b);

bool is_prime(const Int& p);

// True iff q == p^k for some k >= 0.
bool is_power_of(const Int& q, const Int& p);

// Parses "a" or "a/b" (b > 0 after sign normalization) exactly; no floats.
// Throws ParseError on malformed text, including decimal-point input.
Rat parse_rational(const std::string& text);

// Canonical form: "a" when the denominator is 1, else "a/b".
std::string format_rational(const Rat& r);

// Lossy cast helpers for loop bounds; throw MathDomainError("overflow", ..)
// when the value does not fit.
long to_long(const Int& v);
unsigned long to_ulong(const Int& v);

} // namespace sclosure

#endif
