#include "sclosure/monomial_ideal.hpp"

#include "sclosure/errors.hpp"

#include <algorithm>
#include <utility>

namespace sclosure {

namespace {

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars())
        throw MathDomainError("nvars_mismatch", "ideals live in different polynomial rings");
}

// 2-D Pareto frontier over (b, c): entries sorted by b ascending, c strictly
// descending.  Supports "is (b, c) dominated by a stored point" and insertion.
class Frontier2 {
public:
    bool dominated(const Int& b, const Int& c) const {
        // Largest stored b' <= b has the minimum c' among all b' <= b.
        auto it = std::upper_bound(pts_.begin(), pts_.end(), b,
                                   [](const Int& v, const std::pair<Int, Int>& p) { return v < p.first; });
        if (it == pts_.begin()) return false;
        --it;
        return it->second <= c;
    }

    void insert(Int b, Int c) {
        auto it = std::lower_bound(pts_.begin(), pts_.end(), b,
                                   [](const std::pair<Int, Int>& p, const Int& v) { return p.first < v; });
        // Points after the insertion slot with c' >= c are dominated by (b, c).
        auto last = it;
        while (last != pts_.end() && last->second >= c) ++last;
        if (it != last) {
            *it = {std::move(b), std::move(c)};
            pts_.erase(it + 1, last);
        } else {
            pts_.insert(it, {std::move(b), std::move(c)});
        }
    }

private:
    std::vector<std::pair<Int, Int>> pts_;
};

} // namespace

std::vector<ExponentVector> minimalize(std::size_t nvars, std::vector<ExponentVector> gens) {
    for (const ExponentVector& g : gens)
        if (g.size() != nvars)
            throw MathDomainError("nvars_mismatch", "generator length does not match nvars");

    std::sort(gens.begin(), gens.end(), ExponentVector::lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.size() <= 1) return gens;

    std::vector<ExponentVector> kept;
    kept.reserve(gens.size());

    // A dominating point precedes its multiples lexicographically, so a single
    // ascending sweep that tests each candidate against already-kept minimal
    // points is exact.
    if (nvars <= 1) {
        kept.push_back(std::move(gens.front()));
    } else if (nvars == 2) {
        // Second coordinate of kept points strictly decreases along the sweep.
        for (ExponentVector& g : gens) {
            if (!kept.empty() && kept.back()[1] <= g[1]) continue;
            kept.push_back(std::move(g));
        }
    } else if (nvars == 3) {
        Frontier2 frontier;
        for (ExponentVector& g : gens) {
            if (frontier.dominated(g[1], g[2])) continue;
            frontier.insert(g[1], g[2]);
            kept.push_back(std::move(g));
        }
    } else {
        for (ExponentVector& g : gens) {
            bool dominated = false;
            for (const ExponentVector& k : kept) {
                if (k.divides(g)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) kept.push_back(std::move(g));
        }
    }
    return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> canonical_gens)
    : nvars_(nvars), gens_(std::move(canonical_gens)) {}

MonomialIdeal MonomialIdeal::from_generators(std::size_t nvars, std::vector<ExponentVector> gens) {
    std::vector<ExponentVector> minimal = minimalize(nvars, std::move(gens));
    // Canonical order is lexicographic descending (x-heavy generators first).
    std::reverse(minimal.begin(), minimal.end());
    return MonomialIdeal(nvars, std::move(minimal));
}

MonomialIdeal MonomialIdeal::zero(std::size_t nvars) { return MonomialIdeal(nvars, {}); }

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
    return MonomialIdeal(nvars, {ExponentVector(nvars)});
}

bool MonomialIdeal::contains(const ExponentVector& v) const {
    if (v.size() != nvars_)
        throw MathDomainError("nvars_mismatch", "monomial length does not match the ring");
    for (const ExponentVector& g : gens_)
        if (g.divides(v)) return true;
    return false;
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    check_same_ring(*this, other);
    return gens_ == other.gens_;
}

Int MonomialIdeal::max_exponent() const {
    Int m = 0;
    for (const ExponentVector& g : gens_)
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] > m) m = g[i];
    return m;
}

std::vector<Int> MonomialIdeal::coordinate_maxima() const {
    std::vector<Int> m(nvars_, Int(0));
    for (const ExponentVector& g : gens_)
        for (std::size_t i = 0; i < nvars_; ++i)
            if (g[i] > m[i]) m[i] = g[i];
    return m;
}

std::optional<Int> MonomialIdeal::pure_power(std::size_t var) const {
    for (const ExponentVector& g : gens_) {
        bool pure = true;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (i != var && g[i] != 0) {
                pure = false;
                break;
            }
        }
        if (pure) return g[var];
    }
    return std::nullopt;
}

bool MonomialIdeal::is_m_primary() const {
    if (is_zero()) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
        if (!pure_power(i)) return false;
    return true;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<ExponentVector> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal::from_generators(a.nvars(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<ExponentVector> gens;
    gens.reserve(a.num_generators() * b.num_generators());
    for (const ExponentVector& ga : a.generators())
        for (const ExponentVector& gb : b.generators()) gens.push_back(ga + gb);
    return MonomialIdeal::from_generators(a.nvars(), std::move(gens));
}

MonomialIdeal ordinary_power(const MonomialIdeal& ideal, const Int& n) {
    if (n < 0) throw MathDomainError("negative_exponent", "ideal power must be >= 0");
    MonomialIdeal result = MonomialIdeal::unit(ideal.nvars());
    MonomialIdeal base = ideal;
    Int e = n;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = ideal_product(result, base);
        e >>= 1;
        if (e > 0) base = ideal_product(base, base);
    }
    return result;
}

MonomialIdeal frobenius_power(const MonomialIdeal& ideal, const Int& q, const Int& p) {
    if (!is_prime(p)) throw MathDomainError("not_prime", "characteristic must be prime, got " + p.get_str());
    if (!is_power_of(q, p))
        throw MathDomainError("q_not_power_of_p", q.get_str() + " is not a power of " + p.get_str());
    std::vector<ExponentVector> gens;
    gens.reserve(ideal.num_generators());
    for (const ExponentVector& g : ideal.generators()) gens.push_back(g.scaled(q));
    return MonomialIdeal::from_generators(ideal.nvars(), std::move(gens));
}

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    for (const ExponentVector& g : a.generators())
        if (!b.contains(g)) return false;
    return true;
}

} // namespace sclosure
