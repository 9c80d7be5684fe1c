#include "sclosure/mixed_power.hpp"

#include "sclosure/errors.hpp"

namespace sclosure {

MixedPowerSpec::MixedPowerSpec(Rat s, Int p, Int q) : s_(std::move(s)), p_(std::move(p)), q_(std::move(q)) {
    s_.canonicalize();
    if (s_ < 1) throw MathDomainError("s_below_one", "mixed powers need s >= 1, got " + format_rational(s_));
    if (!is_prime(p_)) throw MathDomainError("not_prime", "characteristic must be prime, got " + p_.get_str());
    if (!is_power_of(q_, p_))
        throw MathDomainError("q_not_power_of_p", q_.get_str() + " is not a power of " + p_.get_str());
}

Int MixedPowerSpec::ceil_sq() const { return rat_ceil(s_ * Rat(q_)); }

MonomialIdeal mixed_power(const MonomialIdeal& ideal, const MixedPowerSpec& spec) {
    MonomialIdeal ordinary = ordinary_power(ideal, spec.ceil_sq());
    MonomialIdeal frobenius = frobenius_power(ideal, spec.q(), spec.p());
    return ideal_sum(ordinary, frobenius);
}

} // namespace sclosure
