#include "sclosure/exponent_vector.hpp"

#include "sclosure/errors.hpp"

namespace sclosure {

ExponentVector::ExponentVector(std::size_t nvars) : e_(nvars, Int(0)) {}

ExponentVector::ExponentVector(std::initializer_list<long> entries) {
    e_.reserve(entries.size());
    for (long v : entries) {
        if (v < 0) throw MathDomainError("negative_exponent", "exponent entries must be >= 0");
        e_.emplace_back(v);
    }
}

ExponentVector::ExponentVector(std::vector<Int> entries) : e_(std::move(entries)) {
    for (const Int& v : e_)
        if (v < 0) throw MathDomainError("negative_exponent", "exponent entries must be >= 0");
}

bool ExponentVector::is_zero() const {
    for (const Int& v : e_)
        if (v != 0) return false;
    return true;
}

Int ExponentVector::total_degree() const {
    Int d = 0;
    for (const Int& v : e_) d += v;
    return d;
}

bool ExponentVector::divides(const ExponentVector& other) const {
    if (size() != other.size())
        throw MathDomainError("nvars_mismatch", "exponent vectors of different lengths");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
    if (size() != other.size())
        throw MathDomainError("nvars_mismatch", "exponent vectors of different lengths");
    std::vector<Int> out(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) out[i] = e_[i] + other.e_[i];
    return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::scaled(const Int& q) const {
    if (q < 0) throw MathDomainError("negative_exponent", "scaling factor must be >= 0");
    std::vector<Int> out(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) out[i] = e_[i] * q;
    return ExponentVector(std::move(out));
}

bool ExponentVector::lex_less(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

} // namespace sclosure
