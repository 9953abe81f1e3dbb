#include "k3ci/chow_ring.hpp"

#include <numeric>
#include <sstream>

namespace k3ci {

AmbientSpace::AmbientSpace(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty())
        throw invalid_ambient_error("ambient needs at least one factor");
    for (int m : dims_)
        if (m < 1)
            throw invalid_ambient_error("factor dimension must be >= 1, got " +
                                        std::to_string(m));
}

int AmbientSpace::total_dim() const {
    return std::accumulate(dims_.begin(), dims_.end(), 0);
}

ChowClass::ChowClass(AmbientSpace ambient) : ambient_(std::move(ambient)) {}

ChowClass ChowClass::constant(const AmbientSpace& ambient, const Rational& c) {
    ChowClass x(ambient);
    x.add_term(ExponentVector(static_cast<std::size_t>(ambient.factor_count()), 0), c);
    return x;
}

ChowClass ChowClass::unit(const AmbientSpace& ambient) {
    return constant(ambient, 1);
}

ChowClass ChowClass::generator(const AmbientSpace& ambient, int i) {
    if (i < 0 || i >= ambient.factor_count())
        throw index_error("generator index " + std::to_string(i) + " out of range for " +
                          std::to_string(ambient.factor_count()) + " factors");
    ExponentVector e(static_cast<std::size_t>(ambient.factor_count()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    ChowClass x(ambient);
    x.add_term(e, 1);
    return x;
}

ChowClass ChowClass::from_terms(const AmbientSpace& ambient,
                                const std::vector<std::pair<ExponentVector, Rational>>& terms) {
    ChowClass x(ambient);
    for (const auto& [e, c] : terms) x.add_term(e, c);
    return x;
}

void ChowClass::add_term(const ExponentVector& e, const Rational& c) {
    if (static_cast<int>(e.size()) != ambient_.factor_count())
        throw ambient_mismatch_error("exponent vector length does not match ambient");
    if (c == 0) return;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0)
            throw index_error("negative exponent");
        if (e[i] > ambient_.dims()[i]) return; // truncated monomial, zero in the ring
    }
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void ChowClass::require_same_ambient(const ChowClass& other) const {
    if (!(ambient_ == other.ambient_))
        throw ambient_mismatch_error("classes live on different ambients");
}

Rational ChowClass::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational ChowClass::integrate() const {
    ExponentVector top(ambient_.dims().begin(), ambient_.dims().end());
    return coefficient(top);
}

ChowClass ChowClass::grade_component(int d) const {
    ChowClass out(ambient_);
    for (const auto& [e, c] : terms_) {
        int total = std::accumulate(e.begin(), e.end(), 0);
        if (total == d) out.add_term(e, c);
    }
    return out;
}

ChowClass ChowClass::operator+(const ChowClass& other) const {
    require_same_ambient(other);
    ChowClass out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

ChowClass ChowClass::operator-(const ChowClass& other) const {
    require_same_ambient(other);
    ChowClass out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
    return out;
}

ChowClass ChowClass::operator-() const {
    return scaled(-1);
}

ChowClass ChowClass::scaled(const Rational& c) const {
    ChowClass out(ambient_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
    return out;
}

ChowClass ChowClass::operator*(const ChowClass& other) const {
    require_same_ambient(other);
    ChowClass out(ambient_);
    ExponentVector sum(static_cast<std::size_t>(ambient_.factor_count()), 0);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : other.terms_) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = e1[i] + e2[i];
            out.add_term(sum, c1 * c2);
        }
    }
    return out;
}

std::string ChowClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << (any ? "*" : " * ") << "h" << (i + 1) << "^" << e[i];
            any = true;
        }
    }
    return os.str();
}

} // namespace k3ci
