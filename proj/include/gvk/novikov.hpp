#pragma once

#include <map>

#include "gvk/curve_lattice.hpp"
#include "gvk/numeric.hpp"

namespace gvk {

/// Truncated formal sum c_0 + sum_beta c_beta Q^beta over the curve-class
/// monoid, exact rational coefficients. Stored in normalized form: no zero
/// coefficients, every key within the truncation. Asking for a coefficient
/// beyond the cutoff is an error (OutOfTruncation), never a silent zero.
class NovikovSeries {
public:
    explicit NovikovSeries(Truncation trunc);

    static NovikovSeries constant(const Rat& c, Truncation trunc);
    /// c * Q^beta; throws OutOfTruncation if beta lies beyond the cutoff.
    static NovikovSeries monomial(const Rat& c, const CurveClass& beta,
                                  Truncation trunc);

    const Truncation& truncation() const { return trunc_; }
    const Rat& constant_term() const { return constant_; }
    const std::map<CurveClass, Rat>& terms() const { return terms_; }
    bool is_zero() const { return constant_ == 0 && terms_.empty(); }

    /// Stored coefficient of Q^beta, or 0; OutOfTruncation beyond the cutoff.
    Rat coeff(const CurveClass& beta) const;

    NovikovSeries operator+(const NovikovSeries& other) const;
    NovikovSeries operator-() const;
    NovikovSeries operator-(const NovikovSeries& other) const;
    /// Cauchy product over the monoid; terms beyond the cutoff are discarded.
    NovikovSeries operator*(const NovikovSeries& other) const;

    /// Adams operation on the Novikov variables: Q^beta -> Q^{r beta},
    /// coefficients unchanged; terms escaping the cutoff are discarded.
    NovikovSeries adams(const Int& r) const;

    friend bool operator==(const NovikovSeries& a, const NovikovSeries& b) {
        return a.trunc_ == b.trunc_ && a.constant_ == b.constant_ &&
               a.terms_ == b.terms_;
    }

private:
    void accumulate(const CurveClass& beta, const Rat& c);
    void require_same_truncation(const NovikovSeries& other) const;

    Truncation trunc_;
    Rat constant_;
    std::map<CurveClass, Rat> terms_;
};

}  // namespace gvk
