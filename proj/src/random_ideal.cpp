#include "sclosure/random_ideal.hpp"

#include "sclosure/errors.hpp"

#include <cstdint>
#include <limits>

namespace sclosure {

unsigned long uniform_draw(std::mt19937_64& rng, unsigned long bound) {
    if (bound == 0) return 0;
    const std::uint64_t span = static_cast<std::uint64_t>(bound) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return static_cast<unsigned long>(draw % span);
}

MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, const RandomIdealParams& params) {
    if (params.nvars < 1)
        throw MathDomainError("bad_dimension", "need at least one variable");
    if (params.min_gens < 1 || params.min_gens > params.max_gens)
        throw MathDomainError("bad_range", "generator count range is empty");
    if (params.max_exponent < 1)
        throw MathDomainError("bad_range", "max exponent must be >= 1");

    const std::size_t count =
        params.min_gens + uniform_draw(rng, params.max_gens - params.min_gens);
    std::vector<ExponentVector> gens;
    gens.reserve(count + (params.force_m_primary ? params.nvars : 0));
    for (std::size_t g = 0; g < count; ++g) {
        std::vector<Int> entries(params.nvars);
        bool all_zero = true;
        do {
            all_zero = true;
            for (std::size_t i = 0; i < params.nvars; ++i) {
                entries[i] = uniform_draw(rng, params.max_exponent);
                if (entries[i] != 0) all_zero = false;
            }
        } while (all_zero);
        gens.emplace_back(entries);
    }
    if (params.force_m_primary) {
        for (std::size_t i = 0; i < params.nvars; ++i) {
            std::vector<Int> entries(params.nvars, Int(0));
            entries[i] = 1 + uniform_draw(rng, params.max_exponent - 1);
            gens.emplace_back(std::move(entries));
        }
    }
    return MonomialIdeal::from_generators(params.nvars, std::move(gens));
}

} // namespace sclosure
