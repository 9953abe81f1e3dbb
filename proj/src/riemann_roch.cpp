#include "k3ci/riemann_roch.hpp"

#include <map>
#include <mutex>

#include <boost/multiprecision/cpp_int.hpp>

namespace k3ci {

CompleteIntersection::CompleteIntersection(AmbientSpace a, SplitBundle b)
    : ambient(std::move(a)), bundle(std::move(b)) {
    require_on_ambient(ambient, bundle);
    if (bundle.rank() >= ambient.total_dim())
        throw invalid_rank_error("complete intersection needs rank < dim, got rank " +
                                 std::to_string(bundle.rank()) + " on dim " +
                                 std::to_string(ambient.total_dim()));
    for (const auto& s : bundle.summands)
        if (!s.componentwise_nonnegative() || s.is_zero())
            throw std::invalid_argument("summand " + s.to_string() +
                                        " is not componentwise >= 0 and nonzero");
}

Integer RestrictedPairing::pair(const Multidegree& a, const Multidegree& b) const {
    require_on_ambient(ambient, a);
    require_on_ambient(ambient, b);
    Integer out = 0;
    const std::size_t k = matrix.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            out += Integer(a.degs[i]) * b.degs[j] * matrix[i][j];
    return out;
}

namespace {

// The Todd class depends only on the ambient shape; sweeps over many
// multidegrees on the same ambient reuse it.
const ChowClass& cached_todd(const AmbientSpace& ambient) {
    static std::map<std::vector<int>, ChowClass> cache;
    static std::mutex mutex;
    const std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(ambient.dims());
    if (it == cache.end())
        it = cache.emplace(ambient.dims(), todd_ambient(ambient)).first;
    return it->second;
}

// Coefficient of the top monomial in a*b, without forming the product:
// pair each term of a with its complementary monomial in b.
Rational integrate_product(const ChowClass& a, const ChowClass& b) {
    const auto& dims = a.ambient().dims();
    Rational out = 0;
    ExponentVector complement(dims.size());
    for (const auto& [e, c] : a.terms()) {
        for (std::size_t i = 0; i < dims.size(); ++i) complement[i] = dims[i] - e[i];
        out += c * b.coefficient(complement);
    }
    return out;
}

Integer rational_to_integer(const Rational& r, const char* what) {
    if (boost::multiprecision::denominator(r) != 1)
        throw internal_consistency_error(std::string(what) + " is not an integer: got " +
                                         r.str());
    return boost::multiprecision::numerator(r);
}

} // namespace

Integer euler_char_ambient(const AmbientSpace& ambient, const Multidegree& deg) {
    require_on_ambient(ambient, deg);
    const Rational chi = integrate_product(exp_class(c1(ambient, deg)), cached_todd(ambient));
    return rational_to_integer(chi, "chi(P, O(D))");
}

Integer euler_char_ambient_closed(const AmbientSpace& ambient, const Multidegree& deg) {
    require_on_ambient(ambient, deg);
    Rational out = 1;
    for (int i = 0; i < ambient.factor_count(); ++i) {
        const int m = ambient.factor_dim(i);
        const int d = deg.degs[static_cast<std::size_t>(i)];
        Rational factor = 1;
        for (int j = 1; j <= m; ++j) factor *= d + j;
        Rational m_factorial = 1;
        for (int j = 2; j <= m; ++j) m_factorial *= j;
        out *= factor / m_factorial;
    }
    return rational_to_integer(out, "binomial product chi");
}

Integer euler_char_ci(const CompleteIntersection& ci, const Multidegree& deg) {
    require_on_ambient(ci.ambient, deg);
    const int r = ci.bundle.rank();
    const int k = ci.ambient.factor_count();
    Integer out = 0;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        Multidegree twisted = deg;
        int sign = 1;
        for (int i = 0; i < r; ++i) {
            if (!(mask & (1u << i))) continue;
            sign = -sign;
            for (int j = 0; j < k; ++j)
                twisted.degs[static_cast<std::size_t>(j)] -=
                    ci.bundle.summands[static_cast<std::size_t>(i)].degs[static_cast<std::size_t>(j)];
        }
        out += sign * euler_char_ambient_closed(ci.ambient, twisted);
    }
    return out;
}

Integer k3_riemann_roch_h0(const CompleteIntersection& ci, const Multidegree& deg,
                           const RestrictedPairing& pairing) {
    if (!(pairing.ambient == ci.ambient))
        throw ambient_mismatch_error("pairing and complete intersection ambients differ");
    const Integer self = pairing.self_intersection(deg);
    if (self % 2 != 0)
        throw parity_error("self-intersection " + self.str() +
                           " is odd; not a K3 pairing");
    return 2 + self / 2;
}

ChiValue euler_char_ci_labeled(const CompleteIntersection& ci, const Multidegree& deg) {
    ChiValue out;
    out.chi = euler_char_ci(ci, deg);
    if (deg.componentwise_nonnegative() && !deg.is_zero()) {
        out.reported_as_h0 = true;
        out.vanishing_assumed = true;
    }
    return out;
}

} // namespace k3ci
