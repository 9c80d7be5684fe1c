#include "sclosure/numeric.hpp"

#include "sclosure/errors.hpp"

#include <cctype>

namespace sclosure {

Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int int_ceil_div(const Int& a, const Int& b) {
    if (b <= 0) throw MathDomainError("nonpositive_divisor", "ceil division needs b > 0");
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool is_prime(const Int& p) {
    if (p < 2) return false;
    // 30 Miller-Rabin rounds on top of BPSW; exact for every p this tool meets.
    return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

bool is_power_of(const Int& q, const Int& p) {
    if (q < 1 || p < 2) return false;
    Int r = q;
    while (r > 1) {
        if (r % p != 0) return false;
        r /= p;
    }
    return true;
}

Rat parse_rational(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&](const char* code, const char* msg) -> void { throw ParseError(code, i, msg); };
    auto read_int = [&]() -> std::string {
        std::string out;
        // mpz_set_str takes a leading '-' but not '+', so the sign is consumed
        // here and only the minus forwarded.
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') out += '-';
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            fail("rational_syntax", "expected digit");
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
        return out;
    };
    std::string num = read_int();
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int();
    }
    if (i < text.size()) {
        if (text[i] == '.') fail("rational_not_exact", "decimal input rejected; use a/b");
        fail("rational_syntax", "trailing characters");
    }
    Int den_i(den);
    if (den_i == 0) throw ParseError("rational_zero_denominator", 0, "denominator is zero");
    Rat r(Int(num), den_i);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw MathDomainError("overflow", "value does not fit a machine long: " + v.get_str());
    return v.get_si();
}

unsigned long to_ulong(const Int& v) {
    if (v < 0 || !v.fits_ulong_p())
        throw MathDomainError("overflow", "value does not fit an unsigned long: " + v.get_str());
    return v.get_ui();
}

} // namespace sclosure
