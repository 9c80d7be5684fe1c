#ifndef SCLOSURE_VERIFY_HPP
#define SCLOSURE_VERIFY_HPP

#include "sclosure/monomial_ideal.hpp"

#include <string>
#include <vector>

namespace sclosure {

struct SuiteResult {
    std::string name;
    unsigned long checks = 0;
    std::vector<std::string> failures;
    bool ok() const noexcept { return failures.empty(); }
};

// Deterministic batch of proper nonzero ideals in 1..3 variables with
// exponents bounded by max_exponent; the shared raw material of every
// randomized suite below.
std::vector<MonomialIdeal> random_ideal_suite(unsigned long seed, std::size_t count,
                                              unsigned long max_exponent, bool m_primary);

// Property suites, one per library layer.  Each runs a fixed battery of
// identities and containments on seeded random inputs and returns every
// failed check as a message; green means the batch ran to completion with
// zero failures.
SuiteResult verify_monomial_core(unsigned long seed);
SuiteResult verify_newton_geometry(unsigned long seed);
SuiteResult verify_closure_engine(unsigned long seed);
SuiteResult verify_multiplicity(unsigned long seed);

// which: one suite name ("monomial-core", "newton-geometry", "closure-engine",
// "multiplicity") or "all".
std::vector<SuiteResult> run_suites(const std::string& which, unsigned long seed);

} // namespace sclosure

#endif
