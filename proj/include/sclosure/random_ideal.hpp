#ifndef SCLOSURE_RANDOM_IDEAL_HPP
#define SCLOSURE_RANDOM_IDEAL_HPP

#include "sclosure/monomial_ideal.hpp"

#include <random>

namespace sclosure {

// Unbiased draw from [0, bound] by rejection.  The standard distribution
// adapters are implementation-defined, so seeded suites use this to stay
// byte-identical across toolchains.
unsigned long uniform_draw(std::mt19937_64& rng, unsigned long bound);

struct RandomIdealParams {
    std::size_t nvars = 2;
    std::size_t min_gens = 2;
    std::size_t max_gens = 4;
    unsigned long max_exponent = 5;
    bool force_m_primary = false;
};

// Proper nonzero random ideal: all-zero exponent draws are rejected so the
// unit ideal never appears; force_m_primary additionally adjoins a pure power
// of every variable.  Deterministic for a given rng state.
MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, const RandomIdealParams& params);

} // namespace sclosure

#endif
