#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gvk/numeric.hpp"

namespace gvk {

/// An effective curve class: a lattice vector with non-negative
/// coordinates, not all zero, in a fixed basis of the effective cone.
class CurveClass {
public:
    explicit CurveClass(std::vector<Int> coords);

    const std::vector<Int>& coords() const { return coords_; }
    int rank() const { return static_cast<int>(coords_.size()); }

    /// Largest k such that the class divided by k stays in the lattice;
    /// the gcd of the coordinates.
    Int index() const;

    CurveClass operator+(const CurveClass& other) const;
    CurveClass scaled(const Int& r) const;  // r >= 1

    std::string to_string() const;  // "(a,b,...)"

    friend bool operator==(const CurveClass& a, const CurveClass& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator<(const CurveClass& a, const CurveClass& b);

private:
    std::vector<Int> coords_;
};

/// Componentwise quotient; throws NotDivisible unless r divides index(beta).
CurveClass divide(const CurveClass& beta, const Int& r);

/// A positive-integer-weighted degree functional with a cutoff. Every
/// truncated object names one of these; classes beyond the cutoff are
/// "unknown", never implicitly zero.
class Truncation {
public:
    Truncation(std::vector<Int> weights, Int cutoff);

    const std::vector<Int>& weights() const { return weights_; }
    const Int& cutoff() const { return cutoff_; }
    int rank() const { return static_cast<int>(weights_.size()); }

    Int degree(const CurveClass& beta) const;  // RankMismatch
    bool admits(const CurveClass& beta) const { return degree(beta) <= cutoff_; }

    friend bool operator==(const Truncation& a, const Truncation& b) {
        return a.weights_ == b.weights_ && a.cutoff_ == b.cutoff_;
    }

private:
    std::vector<Int> weights_;
    Int cutoff_;
};

/// The ambient geometry seen by the transforms: complex dimension and the
/// canonical pairing vector. Construction enforces semi-positivity
/// (canonical degree <= 0 on every basis direction, hence on every
/// effective class); the divisor-sum branch logic relies on it.
class GeometryModel {
public:
    GeometryModel(std::string label, int rank, int dim,
                  std::vector<Int> canonical_pairing);

    const std::string& label() const { return label_; }
    int rank() const { return rank_; }
    int dim() const { return dim_; }
    const std::vector<Int>& canonical_pairing() const { return pairing_; }

    friend bool operator==(const GeometryModel& a, const GeometryModel& b) {
        return a.rank_ == b.rank_ && a.dim_ == b.dim_ && a.pairing_ == b.pairing_;
    }

private:
    std::string label_;
    int rank_;
    int dim_;
    std::vector<Int> pairing_;
};

/// Canonical degree K_X . beta; never positive under semi-positivity.
Int canonical_degree(const GeometryModel& geom, const CurveClass& beta);

/// All multiples r*beta, r = 1, 2, ..., whose degree stays within the
/// truncation cutoff, ascending in r.
std::vector<CurveClass> multiples_up_to(const CurveClass& beta,
                                        const Truncation& trunc);

}  // namespace gvk
