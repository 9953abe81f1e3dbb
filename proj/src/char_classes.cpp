#include "k3ci/char_classes.hpp"

#include <algorithm>
#include <sstream>

namespace k3ci {

bool Multidegree::is_zero() const {
    return std::all_of(degs.begin(), degs.end(), [](int d) { return d == 0; });
}

bool Multidegree::componentwise_nonnegative() const {
    return std::all_of(degs.begin(), degs.end(), [](int d) { return d >= 0; });
}

std::string Multidegree::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < degs.size(); ++i) {
        if (i) os << ",";
        os << degs[i];
    }
    return os.str();
}

Multidegree Multidegree::parse(const std::string& s) {
    Multidegree out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument("bad multidegree token '" + tok + "'");
        out.degs.push_back(v);
    }
    if (out.degs.empty())
        throw std::invalid_argument("empty multidegree '" + s + "'");
    return out;
}

std::string SplitBundle::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        if (i) os << ";";
        os << summands[i].to_string();
    }
    return os.str();
}

SplitBundle SplitBundle::parse(const std::string& s) {
    SplitBundle out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ';')) out.summands.push_back(Multidegree::parse(tok));
    if (out.summands.empty())
        throw std::invalid_argument("empty bundle spec '" + s + "'");
    return out;
}

void require_on_ambient(const AmbientSpace& ambient, const Multidegree& deg) {
    if (static_cast<int>(deg.degs.size()) != ambient.factor_count())
        throw ambient_mismatch_error("multidegree has " + std::to_string(deg.degs.size()) +
                                     " entries for an ambient with " +
                                     std::to_string(ambient.factor_count()) + " factors");
}

void require_on_ambient(const AmbientSpace& ambient, const SplitBundle& bundle) {
    if (bundle.summands.empty())
        throw std::invalid_argument("bundle must have at least one summand");
    for (const auto& d : bundle.summands) require_on_ambient(ambient, d);
}

ChowClass c1(const AmbientSpace& ambient, const Multidegree& deg) {
    require_on_ambient(ambient, deg);
    ChowClass out(ambient);
    for (int i = 0; i < ambient.factor_count(); ++i)
        out = out + ChowClass::generator(ambient, i).scaled(deg.degs[static_cast<std::size_t>(i)]);
    return out;
}

ChowClass total_chern(const AmbientSpace& ambient, const SplitBundle& bundle) {
    require_on_ambient(ambient, bundle);
    ChowClass out = ChowClass::unit(ambient);
    for (const auto& d : bundle.summands)
        out = out * (ChowClass::unit(ambient) + c1(ambient, d));
    return out;
}

ChowClass top_chern(const AmbientSpace& ambient, const SplitBundle& bundle) {
    require_on_ambient(ambient, bundle);
    if (bundle.rank() > ambient.total_dim())
        throw invalid_rank_error("bundle rank " + std::to_string(bundle.rank()) +
                                 " exceeds ambient dimension " +
                                 std::to_string(ambient.total_dim()));
    ChowClass out = ChowClass::unit(ambient);
    for (const auto& d : bundle.summands) out = out * c1(ambient, d);
    return out;
}

Multidegree det_bundle(const SplitBundle& bundle) {
    if (bundle.summands.empty())
        throw std::invalid_argument("bundle must have at least one summand");
    Multidegree out = bundle.summands.front();
    for (std::size_t i = 1; i < bundle.summands.size(); ++i) {
        const auto& s = bundle.summands[i];
        if (s.degs.size() != out.degs.size())
            throw ambient_mismatch_error("summands have differing factor counts");
        for (std::size_t j = 0; j < out.degs.size(); ++j) out.degs[j] += s.degs[j];
    }
    return out;
}

ChowClass exp_class(const ChowClass& c) {
    if (c.grade_component(0) != ChowClass(c.ambient()))
        throw std::invalid_argument("exp requires a class with zero degree-0 part");
    const int dim = c.ambient().total_dim();
    ChowClass out = ChowClass::unit(c.ambient());
    ChowClass power = ChowClass::unit(c.ambient());
    Rational factorial = 1;
    for (int d = 1; d <= dim; ++d) {
        power = power * c;
        factorial *= d;
        out = out + power.scaled(Rational(1) / factorial);
    }
    return out;
}

ChowClass chern_character(const AmbientSpace& ambient, const SplitBundle& bundle) {
    require_on_ambient(ambient, bundle);
    ChowClass out(ambient);
    for (const auto& d : bundle.summands) out = out + exp_class(c1(ambient, d));
    return out;
}

std::vector<Rational> todd_series_coefficients(int n) {
    // (1-e^{-x})/x = sum_j (-1)^j x^j/(j+1)!; invert the product term by term.
    std::vector<Rational> inv(static_cast<std::size_t>(n) + 1);
    Rational factorial = 1;
    for (int j = 0; j <= n; ++j) {
        factorial *= j + 1;
        inv[static_cast<std::size_t>(j)] = Rational(j % 2 == 0 ? 1 : -1) / factorial;
    }
    std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
    q[0] = 1;
    for (int d = 1; d <= n; ++d) {
        Rational acc = 0;
        for (int j = 1; j <= d; ++j)
            acc += inv[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(d - j)];
        q[static_cast<std::size_t>(d)] = -acc;
    }
    return q;
}

ChowClass todd_ambient(const AmbientSpace& ambient) {
    const int dim = ambient.total_dim();
    const auto q = todd_series_coefficients(dim);
    ChowClass out = ChowClass::unit(ambient);
    for (int i = 0; i < ambient.factor_count(); ++i) {
        const int m = ambient.factor_dim(i);
        // Q(h_i) truncated at h_i^m.
        ChowClass series(ambient);
        for (int d = 0; d <= m; ++d) {
            ExponentVector e(static_cast<std::size_t>(ambient.factor_count()), 0);
            e[static_cast<std::size_t>(i)] = d;
            series = series + ChowClass::from_terms(ambient, {{e, q[static_cast<std::size_t>(d)]}});
        }
        for (int rep = 0; rep < m + 1; ++rep) out = out * series;
    }
    return out;
}

} // namespace k3ci
