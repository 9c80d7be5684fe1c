#ifndef SCLOSURE_MIXED_POWER_HPP
#define SCLOSURE_MIXED_POWER_HPP

#include "sclosure/monomial_ideal.hpp"
#include "sclosure/numeric.hpp"

namespace sclosure {

// One mixed-power instance I^ceil(s*q) + I^[q]: a rate s >= 1 together with a
// prime power q = p^k of the session characteristic.
class MixedPowerSpec {
public:
    MixedPowerSpec(Rat s, Int p, Int q);

    const Rat& s() const noexcept { return s_; }
    const Int& p() const noexcept { return p_; }
    const Int& q() const noexcept { return q_; }

    // ceil(s*q), computed exactly on rationals.
    Int ceil_sq() const;

private:
    Rat s_;
    Int p_;
    Int q_;
};

// I^ceil(s*q) + I^[q], minimalized.  s = 1 collapses to I^q since I^[q] is
// contained in it.
MonomialIdeal mixed_power(const MonomialIdeal& ideal, const MixedPowerSpec& spec);

} // namespace sclosure

#endif
