#include "sclosure/fourier_motzkin.hpp"

#include "sclosure/errors.hpp"

#include <algorithm>
#include <map>

namespace sclosure {

namespace {

bool is_zero_row(const IneqRow& row) {
    for (const Rat& v : row.a)
        if (v != 0) return false;
    return true;
}

// Dedupe on coefficient vector keeping the strongest bound; drop trivially
// true rows.  Deeper redundancy is the caller's business.
std::vector<IneqRow> compress(std::vector<IneqRow> rows) {
    std::map<std::vector<Rat>, Rat> best;
    std::vector<IneqRow> out;
    for (IneqRow& row : rows) {
        row_normalize(row);
        if (is_zero_row(row)) {
            if (row.b > 0)
                throw MathDomainError("empty_projection", "derived 0 >= positive; the input set is empty");
            continue;
        }
        auto [it, fresh] = best.try_emplace(row.a, row.b);
        if (!fresh) {
            if (row.b > it->second) it->second = row.b;
            continue;
        }
    }
    for (auto& [a, b] : best) out.push_back({a, b});
    return out;
}

} // namespace

void row_normalize(IneqRow& row) {
    Int denom_lcm = 1;
    for (const Rat& v : row.a) denom_lcm = int_lcm(denom_lcm, v.get_den());
    denom_lcm = int_lcm(denom_lcm, row.b.get_den());
    Int g = 0;
    std::vector<Int> scaled(row.a.size());
    for (std::size_t i = 0; i < row.a.size(); ++i) {
        Rat s = row.a[i] * Rat(denom_lcm);
        scaled[i] = s.get_num();
        g = int_gcd(g, scaled[i]);
    }
    Rat sb = row.b * Rat(denom_lcm);
    Int b_scaled = sb.get_num();
    // gcd over coefficients only: the bound may stay fractional relative to
    // them without changing the solution set's description.
    if (g == 0) g = 1;
    for (std::size_t i = 0; i < row.a.size(); ++i) row.a[i] = Rat(scaled[i]) / Rat(g);
    row.b = Rat(b_scaled) / Rat(g);
}

IneqSystem fm_eliminate(IneqSystem sys, std::vector<std::size_t> vars) {
    std::vector<bool> todo(sys.nvars, false);
    for (std::size_t v : vars) todo[v] = true;
    sys.rows = compress(std::move(sys.rows));

    std::size_t remaining = vars.size();
    while (remaining > 0) {
        // Min-fill heuristic: eliminate the variable with the fewest
        // positive*negative combinations next.
        std::size_t pick = static_cast<std::size_t>(-1);
        std::size_t pick_cost = static_cast<std::size_t>(-1);
        for (std::size_t v = 0; v < sys.nvars; ++v) {
            if (!todo[v]) continue;
            std::size_t pos = 0, neg = 0;
            for (const IneqRow& row : sys.rows) {
                if (row.a[v] > 0) ++pos;
                else if (row.a[v] < 0) ++neg;
            }
            std::size_t cost = pos * neg;
            if (cost < pick_cost) {
                pick_cost = cost;
                pick = v;
            }
        }

        std::vector<IneqRow> pos, neg, zero;
        for (IneqRow& row : sys.rows) {
            if (row.a[pick] > 0) pos.push_back(std::move(row));
            else if (row.a[pick] < 0) neg.push_back(std::move(row));
            else zero.push_back(std::move(row));
        }
        // p/|p_v| + n/|n_v| cancels the pivot variable; both scalings positive.
        for (const IneqRow& p : pos) {
            for (const IneqRow& n : neg) {
                IneqRow combo;
                combo.a.resize(sys.nvars);
                Rat wp = Rat(1) / p.a[pick];
                Rat wn = Rat(-1) / n.a[pick];
                for (std::size_t i = 0; i < sys.nvars; ++i) combo.a[i] = p.a[i] * wp + n.a[i] * wn;
                combo.b = p.b * wp + n.b * wn;
                combo.a[pick] = 0;
                zero.push_back(std::move(combo));
            }
        }
        sys.rows = compress(std::move(zero));
        todo[pick] = false;
        --remaining;
    }
    return sys;
}

} // namespace sclosure
