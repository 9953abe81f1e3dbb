#ifndef K3CI_RIEMANN_ROCH_HPP
#define K3CI_RIEMANN_ROCH_HPP

#include "k3ci/char_classes.hpp"
#include "k3ci/chow_ring.hpp"

namespace k3ci {

// The zero locus of a general section of a split bundle; a surface when
// rank = dim - 2 but usable at any codimension < dim.
struct CompleteIntersection {
    AmbientSpace ambient;
    SplitBundle bundle;

    CompleteIntersection(AmbientSpace a, SplitBundle b);
};

// Symmetric matrix of pairings h_i . h_j . [S] of the ambient divisor
// classes restricted to a complete intersection surface.
struct RestrictedPairing {
    AmbientSpace ambient;
    ChowClass fundamental_class;
    std::vector<std::vector<Integer>> matrix;

    // D_S . D'_S for multidegrees D, D' via the pairing matrix.
    Integer pair(const Multidegree& a, const Multidegree& b) const;
    Integer self_intersection(const Multidegree& d) const { return pair(d, d); }
};

// chi(P, O(D)) via ch . td integration. Asserts integrality of the result.
Integer euler_char_ambient(const AmbientSpace& ambient, const Multidegree& deg);

// chi(P, O(D)) via the closed-form product of binomial polynomials
// prod_i prod_{j=1..m_i} (d_i + j) / m_i!. Independent of the Todd path.
Integer euler_char_ambient_closed(const AmbientSpace& ambient, const Multidegree& deg);

// chi(S, O_S(D)) as the Koszul alternating sum over all subsets of the
// defining bundle's summands, each term via the closed-form ambient chi.
Integer euler_char_ci(const CompleteIntersection& ci, const Multidegree& deg);

// The K3 surface count 2 + D_S^2/2 from the restricted pairing. Errors on
// odd self-intersection. Valid only once the K3 condition holds upstream;
// equals h^0 under the usual vanishing assumption for effective D != 0.
Integer k3_riemann_roch_h0(const CompleteIntersection& ci, const Multidegree& deg,
                           const RestrictedPairing& pairing);

// chi with its cohomological reading attached: whether the value may be
// quoted as h^0 (D componentwise >= 0 and nonzero), always under an
// explicitly recorded vanishing assumption.
struct ChiValue {
    Integer chi;
    bool reported_as_h0 = false;
    bool vanishing_assumed = false;
};

ChiValue euler_char_ci_labeled(const CompleteIntersection& ci, const Multidegree& deg);

} // namespace k3ci

#endif
