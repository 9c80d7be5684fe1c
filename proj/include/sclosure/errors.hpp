#ifndef SCLOSURE_ERRORS_HPP
#define SCLOSURE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sclosure {

// Violated mathematical precondition (zero ideal where a nonzero one is
// required, s < 1, q not a power of p, ...).  The code is a stable
// machine-readable tag; the CLI maps this exception family to exit code 2.
class MathDomainError : public std::domain_error {
public:
    MathDomainError(std::string code, const std::string& what_arg)
        : std::domain_error("[" + code + "] " + what_arg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Ideal/monomial text that does not match the grammar.  position is a
// 0-based byte offset into the input.  Maps to CLI exit code 1.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string code, std::size_t position, const std::string& what_arg)
        : std::runtime_error("[" + code + "] at position " + std::to_string(position) + ": " + what_arg),
          code_(std::move(code)),
          position_(position) {}

    const std::string& code() const noexcept { return code_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string code_;
    std::size_t position_;
};

} // namespace sclosure

#endif
