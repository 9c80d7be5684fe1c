#include "sclosure/degree_bounds.hpp"

#include "sclosure/closure.hpp"
#include "sclosure/errors.hpp"

#include <utility>

namespace sclosure {
namespace {

// v >= s * w componentwise, exact: v_i * den >= num * w_i.
bool at_least_scaled(const ExponentVector& v, const Rat& s, const ExponentVector& w) {
    const Int& num = s.get_num();
    const Int& den = s.get_den();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] * den < num * w[i]) return false;
    return true;
}

} // namespace

DegreeBounds degree_bounds(const MonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw MathDomainError("zero_ideal", "degree bounds need a nonzero ideal");
    const std::size_t n = ideal.nvars();
    DegreeBounds b{ExponentVector(n), ExponentVector(n)};
    for (std::size_t i = 0; i < n; ++i) {
        Int lo = ideal.generators()[0][i];
        Int hi = lo;
        for (const ExponentVector& g : ideal.generators()) {
            if (g[i] < lo) lo = g[i];
            if (g[i] > hi) hi = g[i];
        }
        b.delta_min[i] = std::move(lo);
        b.delta_max[i] = std::move(hi);
    }
    return b;
}

DegreeBoundReport degree_bound_check(const MonomialIdeal& ideal, const Rat& s, bool check_upper) {
    if (ideal.is_zero())
        throw MathDomainError("zero_ideal", "degree bounds need a nonzero ideal");
    if (s < 1) throw MathDomainError("s_below_one", "closure parameter must be >= 1");
    if (check_upper && !ideal.is_m_primary())
        throw MathDomainError("not_m_primary",
                              "the upper bound needs a pure power of every variable");

    DegreeBoundReport rep;
    rep.bounds = degree_bounds(ideal);
    ClosureReport closure = weak_s_closure(ideal, s);

    for (const ExponentVector& g : closure.new_generators) {
        if (!at_least_scaled(g, s, rep.bounds.delta_min)) {
            rep.lower_holds = false;
            rep.lower_violations.push_back(g);
        }
    }

    if (check_upper) {
        rep.upper_checked = true;
        const std::size_t n = ideal.nvars();
        std::vector<Int> hi(n);
        for (std::size_t i = 0; i < n; ++i)
            hi[i] = rat_ceil(s * Rat(rep.bounds.delta_max[i])) + 2;
        ExponentVector v(n);
        for (;;) {
            if (!v.is_zero() && at_least_scaled(v, s, rep.bounds.delta_max) &&
                !closure.result.contains(v)) {
                rep.upper_holds = false;
                rep.upper_violations.push_back(v);
            }
            std::size_t pos = n;
            bool done = false;
            while (pos > 0) {
                --pos;
                if (v[pos] < hi[pos]) {
                    ++v[pos];
                    for (std::size_t j = pos + 1; j < n; ++j) v[j] = 0;
                    break;
                }
                if (pos == 0) done = true;
            }
            if (done) break;
        }
    }
    return rep;
}

} // namespace sclosure
