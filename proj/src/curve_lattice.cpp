#include "gvk/curve_lattice.hpp"

#include <sstream>
#include <stdexcept>

#include "gvk/errors.hpp"

namespace gvk {

CurveClass::CurveClass(std::vector<Int> coords) : coords_(std::move(coords)) {
    if (coords_.empty())
        throw std::invalid_argument("CurveClass: empty coordinate vector");
    bool positive = false;
    for (const Int& c : coords_) {
        if (c < 0)
            throw std::invalid_argument("CurveClass: negative coordinate " + c.get_str());
        if (c > 0) positive = true;
    }
    if (!positive)
        throw std::invalid_argument("CurveClass: zero class is not effective");
}

Int CurveClass::index() const {
    Int g = 0;
    for (const Int& c : coords_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

CurveClass CurveClass::operator+(const CurveClass& other) const {
    if (rank() != other.rank())
        throw RankMismatch("CurveClass addition: rank " + std::to_string(rank()) +
                           " vs " + std::to_string(other.rank()));
    std::vector<Int> out(coords_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.coords_[i];
    return CurveClass(std::move(out));
}

CurveClass CurveClass::scaled(const Int& r) const {
    if (r < 1)
        throw std::invalid_argument("CurveClass::scaled: factor must be >= 1");
    std::vector<Int> out(coords_);
    for (Int& c : out) c *= r;
    return CurveClass(std::move(out));
}

std::string CurveClass::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ',';
        os << coords_[i].get_str();
    }
    os << ')';
    return os.str();
}

bool operator<(const CurveClass& a, const CurveClass& b) {
    if (a.coords_.size() != b.coords_.size())
        return a.coords_.size() < b.coords_.size();
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        const int c = cmp(a.coords_[i], b.coords_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

CurveClass divide(const CurveClass& beta, const Int& r) {
    if (r < 1) throw std::invalid_argument("divide: divisor must be >= 1");
    if (r == 1) return beta;
    if (beta.index() % r != 0)
        throw NotDivisible("divide: " + r.get_str() + " does not divide index of " +
                           beta.to_string());
    std::vector<Int> out(beta.coords());
    for (Int& c : out) c /= r;
    return CurveClass(std::move(out));
}

Truncation::Truncation(std::vector<Int> weights, Int cutoff)
    : weights_(std::move(weights)), cutoff_(std::move(cutoff)) {
    if (weights_.empty())
        throw std::invalid_argument("Truncation: empty weight vector");
    for (const Int& w : weights_)
        if (w < 1)
            throw std::invalid_argument("Truncation: weights must be positive");
    if (cutoff_ < 0)
        throw std::invalid_argument("Truncation: cutoff must be non-negative");
}

Int Truncation::degree(const CurveClass& beta) const {
    if (beta.rank() != rank())
        throw RankMismatch("Truncation::degree: class rank " +
                           std::to_string(beta.rank()) + " vs lattice rank " +
                           std::to_string(rank()));
    Int d = 0;
    for (int i = 0; i < rank(); ++i) d += weights_[i] * beta.coords()[i];
    return d;
}

GeometryModel::GeometryModel(std::string label, int rank, int dim,
                             std::vector<Int> canonical_pairing)
    : label_(std::move(label)),
      rank_(rank),
      dim_(dim),
      pairing_(std::move(canonical_pairing)) {
    if (rank_ < 1) throw std::invalid_argument("GeometryModel: rank must be >= 1");
    if (dim_ < 3)
        throw std::invalid_argument(
            "GeometryModel: complex dimension must be >= 3, got " +
            std::to_string(dim_));
    if (static_cast<int>(pairing_.size()) != rank_)
        throw RankMismatch("GeometryModel: canonical pairing length " +
                           std::to_string(pairing_.size()) + " vs rank " +
                           std::to_string(rank_));
    for (const Int& k : pairing_)
        if (k > 0)
            throw std::invalid_argument(
                "GeometryModel: semi-positivity violated, canonical pairing entry " +
                k.get_str() + " is positive");
}

Int canonical_degree(const GeometryModel& geom, const CurveClass& beta) {
    if (beta.rank() != geom.rank())
        throw RankMismatch("canonical_degree: class rank " +
                           std::to_string(beta.rank()) + " vs geometry rank " +
                           std::to_string(geom.rank()));
    Int d = 0;
    for (int i = 0; i < geom.rank(); ++i)
        d += geom.canonical_pairing()[i] * beta.coords()[i];
    return d;
}

std::vector<CurveClass> multiples_up_to(const CurveClass& beta,
                                        const Truncation& trunc) {
    const Int base = trunc.degree(beta);  // >= 1 since weights positive
    std::vector<CurveClass> out;
    for (Int r = 1; r * base <= trunc.cutoff(); ++r) out.push_back(beta.scaled(r));
    return out;
}

}  // namespace gvk
