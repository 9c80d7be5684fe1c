#ifndef SCLOSURE_MONOMIAL_IDEAL_HPP
#define SCLOSURE_MONOMIAL_IDEAL_HPP

#include "sclosure/exponent_vector.hpp"
#include "sclosure/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sclosure {

// Monomial ideal in n variables, held in canonical form: the unique minimal
// generating set (an antichain under componentwise <=), sorted lexicographically
// descending.  The zero ideal has no generators; the unit ideal's single
// generator is the zero vector.
class MonomialIdeal {
public:
    // Zero ideal over zero variables; the empty slot in report structs.
    MonomialIdeal() = default;

    // Minimalizes and sorts; duplicate and dominated generators are dropped.
    static MonomialIdeal from_generators(std::size_t nvars, std::vector<ExponentVector> gens);

    static MonomialIdeal zero(std::size_t nvars);
    static MonomialIdeal unit(std::size_t nvars);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<ExponentVector>& generators() const noexcept { return gens_; }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].is_zero(); }
    bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }

    // Number of minimal generators; 0 for the zero ideal.
    std::size_t num_generators() const noexcept { return gens_.size(); }

    bool contains(const ExponentVector& v) const;

    bool operator==(const MonomialIdeal& other) const;
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

    // Largest exponent appearing in any generator (0 for zero/unit).
    Int max_exponent() const;
    // Componentwise maxima over generators.
    std::vector<Int> coordinate_maxima() const;

    // Exponent a_i of the minimal pure power x_i^{a_i} among the generators,
    // or nullopt when variable i has none.
    std::optional<Int> pure_power(std::size_t var) const;
    // True iff every variable has a pure power among the generators.
    bool is_m_primary() const;

private:
    MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> canonical_gens);

    std::size_t nvars_ = 0;
    std::vector<ExponentVector> gens_;
};

// Reduces an arbitrary generating set to the minimal one (antichain of
// componentwise-minimal elements), sorted lexicographically ascending.
std::vector<ExponentVector> minimalize(std::size_t nvars, std::vector<ExponentVector> gens);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);

// I^n by repeated squaring with minimalization after every product.
// I^0 is the unit ideal (empty product), including for the zero ideal.
MonomialIdeal ordinary_power(const MonomialIdeal& ideal, const Int& n);

// I^[q]: every generator scaled componentwise by q.  Requires q = p^k for the
// session characteristic p (prime).
MonomialIdeal frobenius_power(const MonomialIdeal& ideal, const Int& q, const Int& p);

// a <= b as ideals (every generator of a divisible by a generator of b).
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);

} // namespace sclosure

#endif
