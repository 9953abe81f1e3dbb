#ifndef K3CI_CHOW_RING_HPP
#define K3CI_CHOW_RING_HPP

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "k3ci/errors.hpp"

namespace k3ci {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A product of projective spaces P^{m_1} x ... x P^{m_k}, given by its
// factor dimensions. Fixes the presentation of the Chow ring
// Z[h_1,...,h_k]/(h_1^{m_1+1},...,h_k^{m_k+1}).
class AmbientSpace {
public:
    explicit AmbientSpace(std::vector<int> dims);

    const std::vector<int>& dims() const { return dims_; }
    int factor_count() const { return static_cast<int>(dims_.size()); }
    int factor_dim(int i) const { return dims_.at(static_cast<std::size_t>(i)); }
    int total_dim() const;

    bool operator==(const AmbientSpace&) const = default;

private:
    std::vector<int> dims_;
};

// Monomial exponents, one slot per ambient factor. Stored monomials always
// satisfy e_i <= m_i; anything beyond the truncation bound is zero in the
// ring and is never stored.
using ExponentVector = std::vector<int>;

// A graded, truncated polynomial in the hyperplane generators with exact
// rational coefficients, kept in canonical sparse form: no zero
// coefficients, no truncated monomials, terms ordered lexicographically.
// Values are immutable once built; all operations are pure.
class ChowClass {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    // The zero class.
    explicit ChowClass(AmbientSpace ambient);

    static ChowClass constant(const AmbientSpace& ambient, const Rational& c);
    static ChowClass unit(const AmbientSpace& ambient);

    // The degree-1 class h_i of factor i.
    static ChowClass generator(const AmbientSpace& ambient, int i);

    // Builds a class from arbitrary (exponent, coefficient) pairs,
    // canonicalizing as it goes.
    static ChowClass from_terms(const AmbientSpace& ambient,
                                const std::vector<std::pair<ExponentVector, Rational>>& terms);

    const AmbientSpace& ambient() const { return ambient_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Coefficient of a monomial, zero if absent or out of truncation range.
    Rational coefficient(const ExponentVector& e) const;

    // Coefficient of the top monomial h_1^{m_1}...h_k^{m_k}.
    Rational integrate() const;

    // Sum of terms of total degree d.
    ChowClass grade_component(int d) const;

    ChowClass operator+(const ChowClass& other) const;
    ChowClass operator-(const ChowClass& other) const;
    ChowClass operator*(const ChowClass& other) const;
    ChowClass operator-() const;
    ChowClass scaled(const Rational& c) const;

    bool operator==(const ChowClass& other) const = default;

    // Canonical text form "c * h1^e1*h2^e2 + ...", lexicographic term order.
    std::string to_string() const;

private:
    void add_term(const ExponentVector& e, const Rational& c);
    void require_same_ambient(const ChowClass& other) const;

    AmbientSpace ambient_;
    TermMap terms_;
};

inline ChowClass operator*(const Rational& c, const ChowClass& x) { return x.scaled(c); }

} // namespace k3ci

#endif
