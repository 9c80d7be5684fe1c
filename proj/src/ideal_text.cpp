#include "sclosure/ideal_text.hpp"

#include "sclosure/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace sclosure {

namespace {

const char* kDefaultShort[4] = {"x", "y", "z", "w"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
};

std::string read_identifier(Cursor& c) {
    std::size_t start = c.pos;
    if (c.done() || !ident_start(c.peek()))
        throw ParseError("syntax", c.pos, "expected a variable name");
    while (!c.done() && ident_char(c.peek())) ++c.pos;
    return c.text.substr(start, c.pos - start);
}

Int read_natural(Cursor& c) {
    if (!c.done() && c.peek() == '-')
        throw ParseError("negative_exponent", c.pos, "exponents must be natural numbers");
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        throw ParseError("syntax", c.pos, "expected a natural number");
    std::size_t start = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    return Int(c.text.substr(start, c.pos - start));
}

ExponentVector read_monomial(Cursor& c, const VarTable& vars) {
    ExponentVector m(vars.nvars());
    c.skip_ws();
    if (!c.done() && c.peek() == '1') {
        ++c.pos;
        return m;
    }
    for (;;) {
        c.skip_ws();
        std::size_t at = c.pos;
        std::string name = read_identifier(c);
        std::size_t idx = vars.index_of(name);
        if (idx == VarTable::npos)
            throw ParseError("unknown_variable", at, "unknown variable '" + name + "'");
        Int e = 1;
        c.skip_ws();
        if (!c.done() && c.peek() == '^') {
            ++c.pos;
            c.skip_ws();
            e = read_natural(c);
        }
        m[idx] += e;
        c.skip_ws();
        if (c.done() || c.peek() != '*') break;
        ++c.pos;
    }
    return m;
}

} // namespace

VarTable::VarTable(std::size_t nvars) {
    names_.reserve(nvars);
    if (nvars <= 4) {
        for (std::size_t i = 0; i < nvars; ++i) names_.emplace_back(kDefaultShort[i]);
    } else {
        for (std::size_t i = 0; i < nvars; ++i) names_.push_back("x" + std::to_string(i + 1));
    }
}

VarTable::VarTable(std::size_t nvars, std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() != nvars)
        throw MathDomainError("nvars_mismatch", "variable list length does not match nvars");
    std::set<std::string> seen;
    for (const std::string& n : names_) {
        if (n.empty() || !ident_start(n[0]) || !std::all_of(n.begin() + 1, n.end(), ident_char))
            throw MathDomainError("bad_variable_name", "'" + n + "' is not a valid identifier");
        if (!seen.insert(n).second)
            throw MathDomainError("duplicate_variable", "variable '" + n + "' repeats");
    }
}

std::size_t VarTable::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return npos;
}

MonomialIdeal parse_ideal(const std::string& text, const VarTable& vars) {
    Cursor c{text};
    c.skip_ws();
    if (c.done()) return MonomialIdeal::zero(vars.nvars());
    std::vector<ExponentVector> gens;
    for (;;) {
        gens.push_back(read_monomial(c, vars));
        c.skip_ws();
        if (c.done()) break;
        if (c.peek() != ',')
            throw ParseError("syntax", c.pos, "expected ',' between monomials");
        ++c.pos;
    }
    return MonomialIdeal::from_generators(vars.nvars(), std::move(gens));
}

ExponentVector parse_monomial(const std::string& text, const VarTable& vars) {
    Cursor c{text};
    c.skip_ws();
    if (c.done()) throw ParseError("syntax", 0, "empty monomial");
    ExponentVector m = read_monomial(c, vars);
    c.skip_ws();
    if (!c.done()) throw ParseError("syntax", c.pos, "trailing characters after monomial");
    return m;
}

std::string format_monomial(const ExponentVector& m, const VarTable& vars) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars.name(i);
        if (m[i] != 1) out += "^" + m[i].get_str();
    }
    return out.empty() ? "1" : out;
}

std::string format_ideal(const MonomialIdeal& ideal, const VarTable& vars) {
    std::string out;
    for (const ExponentVector& g : ideal.generators()) {
        if (!out.empty()) out += ", ";
        out += format_monomial(g, vars);
    }
    return out;
}

std::size_t infer_nvars(const std::string& text) {
    Cursor c{text};
    std::size_t best = 1;
    bool short_scheme = false, indexed_scheme = false;
    while (!c.done()) {
        if (ident_start(c.peek())) {
            std::size_t at = c.pos;
            std::string name = read_identifier(c);
            std::size_t need = 0;
            for (std::size_t i = 0; i < 4; ++i)
                if (name == kDefaultShort[i]) need = i + 1;
            if (need > 0) {
                short_scheme = true;
            } else if (name.size() >= 2 && name[0] == 'x' &&
                       std::all_of(name.begin() + 1, name.end(),
                                   [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
                need = std::stoul(name.substr(1));
                if (need == 0) throw ParseError("unknown_variable", at, "variable indices start at 1");
                indexed_scheme = true;
            } else {
                throw ParseError("unknown_variable", at,
                                 "cannot infer the ring from '" + name + "'; pass --nvars or --vars");
            }
            best = std::max(best, need);
        } else {
            ++c.pos;
        }
    }
    if (short_scheme && indexed_scheme)
        throw ParseError("unknown_variable", 0, "mixed default naming schemes; pass --nvars or --vars");
    // Indexed names are only the default past 4 variables.
    if (indexed_scheme && best <= 4) best = 5;
    return best;
}

} // namespace sclosure
