#include "gvk/novikov.hpp"

#include <stdexcept>

#include "gvk/errors.hpp"

namespace gvk {

NovikovSeries::NovikovSeries(Truncation trunc)
    : trunc_(std::move(trunc)), constant_(0) {}

NovikovSeries NovikovSeries::constant(const Rat& c, Truncation trunc) {
    NovikovSeries s(std::move(trunc));
    s.constant_ = c;
    return s;
}

NovikovSeries NovikovSeries::monomial(const Rat& c, const CurveClass& beta,
                                      Truncation trunc) {
    NovikovSeries s(std::move(trunc));
    if (!s.trunc_.admits(beta))
        throw OutOfTruncation("monomial: class " + beta.to_string() +
                              " lies beyond the truncation cutoff");
    if (c != 0) s.terms_.emplace(beta, c);
    return s;
}

Rat NovikovSeries::coeff(const CurveClass& beta) const {
    if (!trunc_.admits(beta))
        throw OutOfTruncation("coeff: class " + beta.to_string() +
                              " lies beyond the truncation cutoff (unknown, not zero)");
    const auto it = terms_.find(beta);
    return it == terms_.end() ? Rat(0) : it->second;
}

void NovikovSeries::accumulate(const CurveClass& beta, const Rat& c) {
    const auto it = terms_.find(beta);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(beta, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void NovikovSeries::require_same_truncation(const NovikovSeries& other) const {
    if (!(trunc_ == other.trunc_))
        throw TruncationMismatch("series carry different truncation data");
}

NovikovSeries NovikovSeries::operator+(const NovikovSeries& other) const {
    require_same_truncation(other);
    NovikovSeries out = *this;
    out.constant_ += other.constant_;
    for (const auto& [beta, c] : other.terms_) out.accumulate(beta, c);
    return out;
}

NovikovSeries NovikovSeries::operator-() const {
    NovikovSeries out(trunc_);
    out.constant_ = -constant_;
    for (const auto& [beta, c] : terms_) out.terms_.emplace(beta, -c);
    return out;
}

NovikovSeries NovikovSeries::operator-(const NovikovSeries& other) const {
    return *this + (-other);
}

NovikovSeries NovikovSeries::operator*(const NovikovSeries& other) const {
    require_same_truncation(other);
    NovikovSeries out(trunc_);
    out.constant_ = constant_ * other.constant_;
    if (constant_ != 0)
        for (const auto& [beta, c] : other.terms_)
            out.accumulate(beta, constant_ * c);
    if (other.constant_ != 0)
        for (const auto& [beta, c] : terms_)
            out.accumulate(beta, other.constant_ * c);
    for (const auto& [b1, c1] : terms_) {
        for (const auto& [b2, c2] : other.terms_) {
            const CurveClass sum = b1 + b2;
            if (!trunc_.admits(sum)) continue;
            out.accumulate(sum, c1 * c2);
        }
    }
    return out;
}

NovikovSeries NovikovSeries::adams(const Int& r) const {
    if (r < 1) throw std::invalid_argument("adams: order must be >= 1");
    NovikovSeries out(trunc_);
    out.constant_ = constant_;
    for (const auto& [beta, c] : terms_) {
        const CurveClass scaled = beta.scaled(r);
        if (!trunc_.admits(scaled)) continue;
        out.terms_.emplace(scaled, c);
    }
    return out;
}

}  // namespace gvk
