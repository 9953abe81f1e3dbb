#ifndef K3CI_CHAR_CLASSES_HPP
#define K3CI_CHAR_CLASSES_HPP

#include <string>
#include <vector>

#include "k3ci/chow_ring.hpp"

namespace k3ci {

// The line bundle O_P(d_1,...,d_k), one integer per ambient factor.
struct Multidegree {
    std::vector<int> degs;

    bool operator==(const Multidegree&) const = default;
    auto operator<=>(const Multidegree&) const = default;

    bool is_zero() const;
    bool componentwise_nonnegative() const;

    // Serialized as "d1,d2,..." (CLI flag format).
    std::string to_string() const;
    static Multidegree parse(const std::string& s);
};

// A direct sum of line bundles, given by the list of summand multidegrees.
struct SplitBundle {
    std::vector<Multidegree> summands;

    int rank() const { return static_cast<int>(summands.size()); }
    bool operator==(const SplitBundle&) const = default;

    // Serialized as "d11,d12;d21,d22;..." (CLI flag format).
    std::string to_string() const;
    static SplitBundle parse(const std::string& s);
};

void require_on_ambient(const AmbientSpace& ambient, const Multidegree& deg);
void require_on_ambient(const AmbientSpace& ambient, const SplitBundle& bundle);

// c1(O(d_1,...,d_k)) = sum d_i h_i.
ChowClass c1(const AmbientSpace& ambient, const Multidegree& deg);

// Total Chern class: product over summands of (1 + c1), truncated.
ChowClass total_chern(const AmbientSpace& ambient, const SplitBundle& bundle);

// Top Chern class: product of the summands' first Chern classes. For the
// defining bundle of a complete intersection this is the fundamental class
// of the zero locus.
ChowClass top_chern(const AmbientSpace& ambient, const SplitBundle& bundle);

// Componentwise sum of the summand multidegrees.
Multidegree det_bundle(const SplitBundle& bundle);

// exp of a class with vanishing degree-0 part, as the finite sum
// sum_{d<=dim P} c^d/d!. Errors on a nonzero constant term.
ChowClass exp_class(const ChowClass& c);

// ch(E) = sum over summands of exp(c1(L_i)).
ChowClass chern_character(const AmbientSpace& ambient, const SplitBundle& bundle);

// Todd class of the ambient tangent bundle: prod_i Q(h_i)^{m_i+1} with
// Q(x) = x/(1-e^{-x}), expanded to degree dim P.
ChowClass todd_ambient(const AmbientSpace& ambient);

// Coefficients q_0..q_n of the series Q(x) = x/(1-e^{-x}), generated from
// the recurrence sum_{j=0}^d (-1)^j q_{d-j}/(j+1)! = [d=0].
std::vector<Rational> todd_series_coefficients(int n);

} // namespace k3ci

#endif
