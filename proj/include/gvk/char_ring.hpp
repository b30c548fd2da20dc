#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gvk/numeric.hpp"

namespace gvk {

/// Element of a GradedRingModel: coordinates in the model's basis.
using RingElem = std::vector<Rat>;

struct BasisClass {
    std::string name;
    int degree;  // complex degree, 0..m
};

/// A finite graded rational cohomology model: named basis classes with
/// complex degrees, exact structure constants, an integration functional
/// (coefficient of a designated top class), and the Chern classes of the
/// tangent bundle. Construction checks grading, commutativity,
/// associativity on all basis triples, and the unit.
class GradedRingModel {
public:
    /// products[i][j] is the coordinate vector of basis_i * basis_j.
    /// tangent_chern holds c_1..c_m (index k-1 has degree k); pass zero
    /// vectors for vanishing classes.
    static GradedRingModel make(std::string label, std::vector<BasisClass> basis,
                                std::vector<std::vector<RingElem>> products,
                                int top_index,
                                std::vector<RingElem> tangent_chern);

    const std::string& label() const { return label_; }
    const std::vector<BasisClass>& basis() const { return basis_; }
    int size() const { return static_cast<int>(basis_.size()); }
    /// Complex dimension m = degree of the designated top class.
    int dimension() const { return dim_; }
    int top_index() const { return top_index_; }
    int unit_index() const { return unit_index_; }
    const std::vector<RingElem>& tangent_chern() const { return chern_; }

    RingElem zero() const { return RingElem(basis_.size(), Rat(0)); }
    RingElem unit() const;
    RingElem basis_element(int i) const;

    RingElem add(const RingElem& a, const RingElem& b) const;
    RingElem sub(const RingElem& a, const RingElem& b) const;
    RingElem scale(const Rat& c, const RingElem& a) const;
    RingElem mul(const RingElem& a, const RingElem& b) const;

    bool is_zero(const RingElem& a) const;
    /// Coordinates of a restricted to one complex degree.
    RingElem component(const RingElem& a, int degree) const;
    /// Smallest degree with a nonzero component, or -1 for the zero element.
    int leading_degree(const RingElem& a) const;
    /// Coefficient of the designated top class; vanishes off top degree.
    Rat integrate(const RingElem& a) const;

    void check_element(const RingElem& a) const;

private:
    GradedRingModel() = default;

    std::string label_;
    std::vector<BasisClass> basis_;
    std::vector<std::vector<RingElem>> table_;
    int top_index_ = 0;
    int unit_index_ = 0;
    int dim_ = 0;
    std::vector<RingElem> chern_;
};

/// Taylor coefficients of x / (1 - e^{-x}) through x^order.
std::vector<Rat> td_series(int order);
/// Taylor coefficients of -x / (1 - e^{x}) through x^order.
std::vector<Rat> td_dual_series(int order);

/// Taylor coefficients of 1 / (1 - lambda e^{-x}); exact path for rational
/// lambda != 1 (PoleAtOne otherwise).
std::vector<Rat> td_lambda_series(const Rat& lambda, int order);
/// Taylor coefficients of 1 / (1 - lambda e^{x}), exact rational lambda.
std::vector<Rat> td_dual_lambda_series(const Rat& lambda, int order);
/// Float path for roots of unity; validation-only (1e-9 scale accuracy).
std::vector<std::complex<double>> td_lambda_series(std::complex<double> lambda,
                                                   int order);
std::vector<std::complex<double>> td_dual_lambda_series(
    std::complex<double> lambda, int order);

/// Multiplicative Todd class of the tangent bundle, computed from the
/// universal polynomials in c_1..c_m (splitting principle: power sums via
/// Newton's identities, then exp of the logarithmic series).
RingElem todd_class(const GradedRingModel& ring);

/// Chern character of a line bundle with first Chern class d (degree 1):
/// sum d^i / i! truncated at the ring dimension.
RingElem ch_exp(const GradedRingModel& ring, const RingElem& divisor_class);

/// K-theoretic intersection pairing: integrate(todd * a * b).
Rat k_pairing(const GradedRingModel& ring, const RingElem& a, const RingElem& b);

struct DualBasisPair {
    std::vector<RingElem> primal;  // the model basis itself
    std::vector<RingElem> dual;    // k_pairing(primal[a], dual[b]) = delta_ab
};

/// Dual basis with respect to the K-pairing; SingularPairing if the Gram
/// matrix is degenerate.
DualBasisPair dual_basis(const GradedRingModel& ring);

struct KClass {
    std::string name;
    RingElem ch;  // full Chern character in the ring
};

/// An integral basis of K-classes recorded by their Chern characters.
struct KClassModel {
    std::string label;
    std::vector<KClass> classes;
};

/// Integer coordinates n_j with ch(sum n_j B_j) matching gamma through
/// complex degree lead_degree (higher degrees unconstrained). gamma must
/// vanish below lead_degree. Solved by integer row echelon on the ch
/// matrix, columns ordered by degree; NoIntegralLift when elimination
/// forces a non-integer or no match exists.
std::vector<Int> integral_ch_inverse(const GradedRingModel& ring,
                                     const RingElem& gamma, int lead_degree,
                                     const KClassModel& kmodel);

/// Built-in models: complex projective space of dimension n (basis
/// 1, H, ..., H^n) and its line-bundle K-basis O, O(1), ..., O(n).
GradedRingModel projective_space_ring(int n);
KClassModel projective_space_line_bundles(const GradedRingModel& ring);

/// Built-in Calabi-Yau-threefold-shaped ring: basis 1, H, H^2, H^3 with
/// integral(H^3) = triple_degree, c_1 = 0, c_2 = c2_coeff * H^2,
/// c_3 = c3_coeff * H^3.
GradedRingModel cy3_ring(const Int& triple_degree, const Int& c2_coeff,
                         const Int& c3_coeff);

/// Exact inverse of a square rational matrix; nullopt when singular.
std::optional<std::vector<std::vector<Rat>>> invert_matrix(
    const std::vector<std::vector<Rat>>& m);

}  // namespace gvk
