#ifndef SCLOSURE_EXPONENT_VECTOR_HPP
#define SCLOSURE_EXPONENT_VECTOR_HPP

#include "sclosure/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace sclosure {

// Exponent vector of a monomial: fixed length, non-negative entries.
// The vector is the monomial; all ideal arithmetic works on these.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t nvars);              // all-zero vector
    ExponentVector(std::initializer_list<long> entries);     // test convenience
    explicit ExponentVector(std::vector<Int> entries);

    std::size_t size() const noexcept { return e_.size(); }
    const Int& operator[](std::size_t i) const { return e_[i]; }
    Int& operator[](std::size_t i) { return e_[i]; }

    bool is_zero() const;
    Int total_degree() const;

    // Componentwise <=, i.e. the monomial divides the other one.
    bool divides(const ExponentVector& other) const;

    // Monomial product.
    ExponentVector operator+(const ExponentVector& other) const;

    // Componentwise scaling; the Frobenius image for integer q.
    ExponentVector scaled(const Int& q) const;

    bool operator==(const ExponentVector& other) const { return e_ == other.e_; }
    bool operator!=(const ExponentVector& other) const { return e_ != other.e_; }

    // Lexicographic order on entries; the canonical generator order sorts
    // descending under this.
    static bool lex_less(const ExponentVector& a, const ExponentVector& b);

    const std::vector<Int>& entries() const noexcept { return e_; }

private:
    std::vector<Int> e_;
};

} // namespace sclosure

#endif
