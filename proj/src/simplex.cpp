#include "sclosure/simplex.hpp"

#include "sclosure/errors.hpp"

#include <limits>

namespace sclosure {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau; columns: structural vars, then slack/surplus, then
// artificials, last column rhs.  Rows are the constraints.
struct Tableau {
    std::vector<std::vector<Rat>> t;
    std::vector<std::size_t> basis;   // basic column per row
    std::size_t ncols = 0;            // without rhs
    std::size_t art_begin = 0;        // first artificial column

    Rat& at(std::size_t r, std::size_t c) { return t[r][c]; }
    Rat& rhs(std::size_t r) { return t[r][ncols]; }

    void pivot(std::size_t prow, std::size_t pcol) {
        std::vector<Rat>& row = t[prow];
        Rat inv = row[pcol];
        for (Rat& v : row) v /= inv;
        for (std::size_t r = 0; r < t.size(); ++r) {
            if (r == prow || t[r][pcol] == 0) continue;
            Rat f = t[r][pcol];
            for (std::size_t c = 0; c <= ncols; ++c) t[r][c] -= f * row[c];
        }
        basis[prow] = pcol;
    }

    // Bland: entering = lowest-index column with negative reduced cost,
    // leaving = lowest basic column among the ratio-test minima.
    LpStatus optimize(const std::vector<Rat>& cost, std::size_t col_limit) {
        for (;;) {
            std::size_t enter = kNone;
            for (std::size_t j = 0; j < col_limit; ++j) {
                Rat r = cost[j];
                for (std::size_t i = 0; i < t.size(); ++i) {
                    if (t[i][j] != 0) r -= cost[basis[i]] * t[i][j];
                }
                if (r < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == kNone) return LpStatus::Optimal;
            std::size_t leave = kNone;
            Rat best;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i][enter] <= 0) continue;
                Rat ratio = rhs(i) / t[i][enter];
                if (leave == kNone || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == kNone) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
    }
};

} // namespace

LpResult lp_minimize(const std::vector<Rat>& c, const std::vector<LpConstraint>& rows) {
    const std::size_t n = c.size();
    const std::size_t m = rows.size();
    for (const LpConstraint& row : rows)
        if (row.a.size() != n)
            throw MathDomainError("length_mismatch", "constraint width does not match variable count");

    std::size_t nslack = 0;
    for (const LpConstraint& row : rows)
        if (row.rel != Rel::Eq) ++nslack;

    Tableau tab;
    tab.art_begin = n + nslack;
    tab.ncols = tab.art_begin + m;       // one artificial per row, unused ones stay zero
    tab.t.assign(m, std::vector<Rat>(tab.ncols + 1, Rat(0)));
    tab.basis.assign(m, kNone);

    std::size_t slack_at = n;
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = rows[i].b < 0;       // normalize to rhs >= 0
        Rel rel = rows[i].rel;
        if (flip && rel != Rel::Eq) rel = (rel == Rel::Le) ? Rel::Ge : Rel::Le;
        for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = flip ? -rows[i].a[j] : rows[i].a[j];
        tab.rhs(i) = flip ? -rows[i].b : rows[i].b;
        if (rows[i].rel != Rel::Eq) {
            tab.at(i, slack_at) = (rel == Rel::Le) ? 1 : -1;
            if (rel == Rel::Le) tab.basis[i] = slack_at;
            ++slack_at;
        }
        if (tab.basis[i] == kNone) {
            tab.at(i, tab.art_begin + i) = 1;
            tab.basis[i] = tab.art_begin + i;
        }
    }

    // Phase 1: minimize the artificial total.
    std::vector<Rat> phase1(tab.ncols, Rat(0));
    for (std::size_t j = tab.art_begin; j < tab.ncols; ++j) phase1[j] = 1;
    LpStatus st = tab.optimize(phase1, tab.ncols);
    if (st == LpStatus::Unbounded)
        throw MathDomainError("lp_internal", "phase 1 cannot be unbounded");
    Rat art_total = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis[i] >= tab.art_begin) art_total += tab.rhs(i);
    if (art_total != 0) return {LpStatus::Infeasible, Rat(0), {}};

    // Drive leftover (degenerate) artificials out of the basis.
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < tab.art_begin) continue;
        std::size_t pcol = kNone;
        for (std::size_t j = 0; j < tab.art_begin; ++j) {
            if (tab.at(i, j) != 0) {
                pcol = j;
                break;
            }
        }
        if (pcol != kNone) tab.pivot(i, pcol);
        // else: the row is all-zero over real columns, a redundant constraint;
        // the artificial stays basic at value 0 and never re-enters below.
    }

    // Phase 2 over real columns only.
    std::vector<Rat> phase2(tab.ncols, Rat(0));
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    st = tab.optimize(phase2, tab.art_begin);
    if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, Rat(0), {}};

    LpResult out;
    out.status = LpStatus::Optimal;
    out.x.assign(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis[i] < n) out.x[tab.basis[i]] = tab.rhs(i);
    out.objective = 0;
    for (std::size_t j = 0; j < n; ++j) out.objective += c[j] * out.x[j];
    return out;
}

bool lp_feasible(std::size_t nvars, const std::vector<LpConstraint>& rows) {
    std::vector<Rat> c(nvars, Rat(0));
    return lp_minimize(c, rows).status == LpStatus::Optimal;
}

} // namespace sclosure
