#include "sclosure/newton_polyhedron.hpp"

#include "sclosure/errors.hpp"
#include "sclosure/fourier_motzkin.hpp"
#include "sclosure/simplex.hpp"

#include <algorithm>

namespace sclosure {

namespace {

// Feasibility of {lambda >= 0, sum lambda = 1, alpha * sum lambda_i g_i <= v}.
bool cover_feasible(const std::vector<ExponentVector>& gens, const ExponentVector& v, const Rat& alpha) {
    const std::size_t m = gens.size();
    if (m == 0) return false;
    const std::size_t n = v.size();
    std::vector<LpConstraint> rows;
    rows.reserve(n + 1);
    {
        LpConstraint sum_one{std::vector<Rat>(m, Rat(1)), Rel::Eq, Rat(1)};
        rows.push_back(std::move(sum_one));
    }
    for (std::size_t i = 0; i < n; ++i) {
        LpConstraint row{std::vector<Rat>(m), Rel::Le, Rat(v[i])};
        for (std::size_t j = 0; j < m; ++j) row.a[j] = alpha * Rat(gens[j][i]);
        rows.push_back(std::move(row));
    }
    return lp_feasible(m, rows);
}

// Generators that are convex combinations of the rest plus an orthant shift
// contribute nothing to the hull; what survives is exactly the vertex set.
std::vector<ExponentVector> vertex_set(const std::vector<ExponentVector>& gens) {
    if (gens.size() <= 1) return gens;
    std::vector<ExponentVector> vertices;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        std::vector<ExponentVector> others;
        others.reserve(gens.size() - 1);
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (i != j) others.push_back(gens[i]);
        if (!cover_feasible(others, gens[j], Rat(1))) vertices.push_back(gens[j]);
    }
    return vertices;
}

// Projects the lift onto x by eliminating lambda.  lambda_k is substituted as
// 1 - sum of the others first, so the block has k-1 lambda columns.
IneqSystem project_lift(std::size_t n, const std::vector<ExponentVector>& verts) {
    const std::size_t k = verts.size();
    IneqSystem sys;
    sys.nvars = n + (k - 1);
    const ExponentVector& last = verts[k - 1];
    for (std::size_t i = 0; i < n; ++i) {
        IneqRow row{std::vector<Rat>(sys.nvars, Rat(0)), Rat(last[i])};
        row.a[i] = 1;
        for (std::size_t j = 0; j + 1 < k; ++j) row.a[n + j] = Rat(last[i]) - Rat(verts[j][i]);
        sys.rows.push_back(std::move(row));
    }
    for (std::size_t j = 0; j + 1 < k; ++j) {
        IneqRow row{std::vector<Rat>(sys.nvars, Rat(0)), Rat(0)};
        row.a[n + j] = 1;
        sys.rows.push_back(std::move(row));
    }
    {
        IneqRow row{std::vector<Rat>(sys.nvars, Rat(0)), Rat(-1)};
        for (std::size_t j = 0; j + 1 < k; ++j) row.a[n + j] = -1;
        sys.rows.push_back(std::move(row));
    }
    std::vector<std::size_t> lambda_cols;
    for (std::size_t j = 0; j + 1 < k; ++j) lambda_cols.push_back(n + j);
    return fm_eliminate(std::move(sys), std::move(lambda_cols));
}

struct RawRow {
    std::vector<Int> normal;
    Rat rhs;
};

// Minimum of normal . x over {x >= 0, other rows} — bounded below by 0
// because every normal is non-negative.
Rat row_floor(const std::vector<RawRow>& raw, std::size_t skip, std::size_t n) {
    std::vector<Rat> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = Rat(raw[skip].normal[i]);
    std::vector<LpConstraint> rows;
    for (std::size_t f = 0; f < raw.size(); ++f) {
        if (f == skip) continue;
        LpConstraint row{std::vector<Rat>(n), Rel::Ge, raw[f].rhs};
        for (std::size_t i = 0; i < n; ++i) row.a[i] = Rat(raw[f].normal[i]);
        rows.push_back(std::move(row));
    }
    LpResult res = lp_minimize(c, rows);
    if (res.status != LpStatus::Optimal)
        throw MathDomainError("lp_internal", "facet objective must have a minimum");
    return res.objective;
}

} // namespace

Int Facet::dot(const ExponentVector& v) const {
    Int acc = 0;
    for (std::size_t i = 0; i < normal.size(); ++i) acc += normal[i] * v[i];
    return acc;
}

NewtonPolyhedron NewtonPolyhedron::from_ideal(const MonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw MathDomainError("zero_ideal", "the zero ideal has no Newton polyhedron");
    const std::size_t n = ideal.nvars();

    NewtonPolyhedron np;
    np.nvars_ = n;
    np.source_maxima_ = ideal.coordinate_maxima();

    std::vector<ExponentVector> verts = vertex_set(ideal.generators());
    IneqSystem projected = project_lift(n, verts);

    // Every projected row is valid on the polyhedron, whose recession cone
    // contains the orthant, so coefficients must be non-negative; rows with
    // rhs <= 0 hold on the whole orthant and carry nothing.  Bounds stay
    // exact rationals here — rounding before the LP pass would change the
    // set the implication tests reason about.
    std::vector<RawRow> raw;
    for (const IneqRow& row : projected.rows) {
        for (std::size_t j = n; j < row.a.size(); ++j)
            if (row.a[j] != 0) throw MathDomainError("fm_internal", "lambda column survived elimination");
        RawRow r;
        r.normal.resize(n);
        bool nonneg = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (row.a[i].get_den() != 1) throw MathDomainError("fm_internal", "non-integer projected row");
            r.normal[i] = row.a[i].get_num();
            if (r.normal[i] < 0) nonneg = false;
        }
        if (!nonneg) throw MathDomainError("fm_internal", "negative facet coefficient");
        if (row.b <= 0) continue;
        r.rhs = row.b;
        raw.push_back(std::move(r));
    }

    std::sort(raw.begin(), raw.end(), [](const RawRow& a, const RawRow& b) {
        if (a.normal != b.normal) return a.normal > b.normal;
        return a.rhs > b.rhs;
    });
    raw.erase(std::unique(raw.begin(), raw.end(), [](const RawRow& a, const RawRow& b) {
                  return a.normal == b.normal && a.rhs == b.rhs;
              }),
              raw.end());

    // LP pass: drop rows implied by the rest over the orthant.  Each erase
    // keeps the feasible set unchanged, so the order of removals is free.
    for (std::size_t j = 0; j < raw.size();) {
        if (row_floor(raw, j, n) >= raw[j].rhs) {
            raw.erase(raw.begin() + j);
        } else {
            ++j;
        }
    }

    // Survivors support the hull at a vertex, and vertices sit on the
    // generator lattice, so their bounds are forced integral.
    std::vector<Facet> facets;
    facets.reserve(raw.size());
    for (const RawRow& r : raw) {
        if (r.rhs.get_den() != 1)
            throw MathDomainError("fm_internal", "irredundant facet with fractional bound");
        Facet f;
        f.normal = r.normal;
        f.rhs = r.rhs.get_num();
        facets.push_back(std::move(f));
    }

    np.facets_ = std::move(facets);
    return np;
}

bool NewtonPolyhedron::scaled_membership(const ExponentVector& v, const Rat& alpha) const {
    if (v.size() != nvars_)
        throw MathDomainError("nvars_mismatch", "monomial length does not match the polyhedron");
    if (alpha < 0) throw MathDomainError("negative_scale", "scale factor must be >= 0");
    const Int num = alpha.get_num();
    const Int den = alpha.get_den();
    for (const Facet& f : facets_) {
        // dot(v) >= alpha * rhs, cross-multiplied to stay in integers.
        if (f.dot(v) * den < num * f.rhs) return false;
    }
    return true;
}

Int stabilization_denominator(const NewtonPolyhedron& np) {
    Int e = 1;
    for (const Facet& f : np.facets()) e = int_lcm(e, f.rhs);
    return e;
}

bool lp_scaled_membership(const MonomialIdeal& ideal, const ExponentVector& v, const Rat& alpha) {
    if (ideal.is_zero())
        throw MathDomainError("zero_ideal", "the zero ideal has no Newton polyhedron");
    if (alpha < 0) throw MathDomainError("negative_scale", "scale factor must be >= 0");
    return cover_feasible(ideal.generators(), v, alpha);
}

} // namespace sclosure
