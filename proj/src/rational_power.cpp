#include "sclosure/rational_power.hpp"

#include "sclosure/errors.hpp"

#include <utility>
#include <vector>

namespace sclosure {
namespace {

// Minimal integer last coordinate t making (prefix, t) a member of the
// alpha-scaled polyhedron, with alpha = anum/aden.  Returns false when no t
// works, i.e. a facet not involving the last variable rejects the prefix.
bool min_last_coordinate(const NewtonPolyhedron& np, const std::vector<Int>& prefix,
                         const Int& anum, const Int& aden, Int& out) {
    const std::size_t n = np.nvars();
    Int best = 0;
    for (const Facet& f : np.facets()) {
        Int partial = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) partial += f.normal[i] * prefix[i];
        // Requirement h_n * t >= alpha * rhs - partial, cross-multiplied by aden.
        Int need = anum * f.rhs - aden * partial;
        const Int& hn = f.normal[n - 1];
        if (hn == 0) {
            if (need > 0) return false;
            continue;
        }
        if (need <= 0) continue;
        Int t = int_ceil_div(need, aden * hn);
        if (t > best) best = std::move(t);
    }
    out = std::move(best);
    return true;
}

} // namespace

MonomialIdeal rational_power(const NewtonPolyhedron& np, const Rat& alpha) {
    if (alpha < 0) throw MathDomainError("negative_scale", "scale factor must be >= 0");
    const std::size_t n = np.nvars();
    const Int anum = alpha.get_num();
    const Int aden = alpha.get_den();

    // Every minimal member fits the box prod [0, ceil(alpha * max_i)]: a point
    // of the scaled polyhedron splits as hull part + non-negative rest, the
    // hull part is bounded by alpha * max_i in coordinate i, so any overshoot
    // sits entirely in the rest and dropping one unit of it stays inside.
    // Walking every prefix of the box and completing it with the least last
    // coordinate therefore meets every minimal generator.
    std::vector<Int> hi(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i + 1 < n; ++i)
        hi[i] = rat_ceil(alpha * Rat(np.source_maxima()[i]));

    std::vector<ExponentVector> found;
    std::vector<Int> prefix(hi.size(), Int(0));
    for (;;) {
        Int last;
        if (min_last_coordinate(np, prefix, anum, aden, last)) {
            std::vector<Int> full = prefix;
            full.push_back(std::move(last));
            found.emplace_back(std::move(full));
        }
        std::size_t pos = prefix.size();
        while (pos > 0) {
            --pos;
            if (prefix[pos] < hi[pos]) {
                ++prefix[pos];
                for (std::size_t j = pos + 1; j < prefix.size(); ++j) prefix[j] = 0;
                break;
            }
            if (pos == 0) return MonomialIdeal::from_generators(n, std::move(found));
        }
        if (prefix.empty()) break;
    }
    return MonomialIdeal::from_generators(n, std::move(found));
}

MonomialIdeal rational_power(const MonomialIdeal& ideal, const Rat& alpha) {
    if (alpha < 0) throw MathDomainError("negative_scale", "scale factor must be >= 0");
    if (ideal.is_zero()) return MonomialIdeal::zero(ideal.nvars());
    return rational_power(NewtonPolyhedron::from_ideal(ideal), alpha);
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
    return rational_power(ideal, Rat(1));
}

Rat grid_snap(const NewtonPolyhedron& np, const Rat& alpha) {
    Int e = stabilization_denominator(np);
    return Rat(rat_ceil(alpha * Rat(e))) / Rat(e);
}

} // namespace sclosure
