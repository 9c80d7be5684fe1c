#ifndef SCLOSURE_IDEAL_TEXT_HPP
#define SCLOSURE_IDEAL_TEXT_HPP

#include "sclosure/monomial_ideal.hpp"

#include <string>
#include <vector>

namespace sclosure {

// Variable-name table for one polynomial ring.  Defaults: x, y, z, w when
// nvars <= 4, else x1..xn.  Custom names must be distinct identifiers.
class VarTable {
public:
    explicit VarTable(std::size_t nvars);
    VarTable(std::size_t nvars, std::vector<std::string> names);

    std::size_t nvars() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    // Index for a name, or npos when unknown.
    std::size_t index_of(const std::string& name) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::string> names_;
};

// Grammar (whitespace insignificant):
//   ideal    := (monomial (',' monomial)*)?          empty text -> zero ideal
//   monomial := '1' | term ('*' term)*
//   term     := var ('^' natural)?
// Repeated variables inside one monomial accumulate.  Throws ParseError with
// a byte position on malformed input, unknown variables, negative exponents.
MonomialIdeal parse_ideal(const std::string& text, const VarTable& vars);
ExponentVector parse_monomial(const std::string& text, const VarTable& vars);

// Canonical text: generators in canonical order joined by ", "; "^1" omitted;
// the exponent-zero monomial prints as "1"; the zero ideal as "".
// parse_ideal(format_ideal(I)) == I.
std::string format_ideal(const MonomialIdeal& ideal, const VarTable& vars);
std::string format_monomial(const ExponentVector& m, const VarTable& vars);

// Smallest default ring that covers every variable mentioned in the text:
// x,y,z,w give 1..4, x<N> names give N.  Throws ParseError when the text uses
// names outside both schemes.
std::size_t infer_nvars(const std::string& text);

} // namespace sclosure

#endif
