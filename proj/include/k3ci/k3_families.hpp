#ifndef K3CI_K3_FAMILIES_HPP
#define K3CI_K3_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "k3ci/riemann_roch.hpp"

namespace k3ci {

enum class CaseLabel { I, II, III, Other };

std::string case_label_name(CaseLabel label);

// One complete-intersection K3 family: ambient, defining bundle, and the
// polarization twist O_P(a,1) restricted to the surface.
struct FamilySpec {
    AmbientSpace ambient;
    SplitBundle bundle;
    Multidegree polarization;
    CaseLabel label = CaseLabel::Other;
    std::string description;

    bool operator==(const FamilySpec& other) const {
        return ambient == other.ambient && bundle == other.bundle &&
               polarization == other.polarization;
    }
};

struct CheckResult {
    bool pass = false;
    std::vector<std::string> reasons; // violated conditions, empty on pass
};

// Machine-checked hypotheses for the Franchetta property of the family
// cut out by sections of the bundle, plus the standing assumptions the
// engine cannot verify.
struct Certificate {
    CheckResult k3_condition;
    CheckResult global_generation;
    CheckResult mp_surjective;
    std::vector<std::string> mp_factorizations; // one per degree-2 basis monomial
    std::vector<std::string> assumptions;       // always non-empty

    bool pass() const {
        return k3_condition.pass && global_generation.pass && mp_surjective.pass;
    }
};

struct Discrepancy {
    Integer paper_value;
    Integer computed_value;
    std::string location;
};

struct H0Normal {
    Integer total = 0;
    std::vector<std::pair<Multidegree, ChiValue>> summands;
};

// Everything computed about one family, with pass/fail of each hypothesis.
struct VerificationReport {
    FamilySpec family;
    Integer genus = 0;
    Integer degree = 0; // 2g - 2
    RestrictedPairing pairing;
    std::vector<std::vector<Integer>> picard_lattice; // 2x2 for P^1 x P^n
    H0Normal h0_normal;
    Integer h0_tangent = 0;
    Integer moduli_dim = 0;
    Certificate certificate;
    std::vector<Discrepancy> discrepancies;
};

// Anticanonical multidegree (m_1+1, ..., m_k+1).
Multidegree anticanonical(const AmbientSpace& ambient);

// The K3 condition: rank = dim - 2, det = anticanonical, and every summand
// componentwise >= 0 and nonzero (so a general section is available and
// Bertini applies). Failures are data, not errors.
CheckResult check_k3(const AmbientSpace& ambient, const SplitBundle& bundle);

// Pairing matrix integrate(h_i . h_j . [S]) for the surface cut out by the
// bundle. Requires rank = dim - 2.
RestrictedPairing restricted_pairing(const AmbientSpace& ambient, const SplitBundle& bundle);

// g from 2g-2 = (a p + h)^2 . [S]. Errors if the degree comes out odd.
Integer genus_of(const AmbientSpace& ambient, const SplitBundle& bundle, int a);

// h^0 of the ambient tangent bundle restricted to the surface:
// sum_i m_i(m_i + 2), no sections lost on restriction.
Integer h0_tangent_restricted(const AmbientSpace& ambient);

// h^0 of the normal bundle = sum over summands of chi(S, O_S(d_i)), each
// term carrying its vanishing-assumed flag.
H0Normal h0_normal(const CompleteIntersection& ci);

// h^0(N_{S/P}) - h^0(T_P|S), the family's contribution to first-order
// deformations; 18 for all the genus constructions here.
Integer moduli_dimension(const CompleteIntersection& ci);

Certificate franchetta_certificate(const AmbientSpace& ambient, const SplitBundle& bundle);

// The construction covering genus g >= 8: one case per residue of g mod 3.
FamilySpec family_for_genus(int g);

// Exhaustive search for families on P^1 x P^n (2 <= n <= max_n) with
// summand degrees in [0, max_deg] and some twist (a,1), a in [1, max_deg],
// of genus g. Canonically sorted, deduplicated under summand reordering.
std::vector<FamilySpec> search_families(int g, int max_n, int max_deg);

// Serial reference for the OpenMP search path; must produce identical output.
std::vector<FamilySpec> search_families_serial(int g, int max_n, int max_deg);

VerificationReport verify_family(const FamilySpec& family);

// Reports for the three fixed constructions (n = 2, 3, 4), evaluated at
// a = 2, with the known printed-value discrepancy recorded on the second.
std::vector<VerificationReport> verify_paper();

} // namespace k3ci

#endif
