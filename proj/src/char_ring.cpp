#include "gvk/char_ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "gvk/errors.hpp"

namespace gvk {

GradedRingModel GradedRingModel::make(std::string label,
                                      std::vector<BasisClass> basis,
                                      std::vector<std::vector<RingElem>> products,
                                      int top_index,
                                      std::vector<RingElem> tangent_chern) {
    GradedRingModel m;
    m.label_ = std::move(label);
    m.basis_ = std::move(basis);
    m.table_ = std::move(products);
    m.top_index_ = top_index;

    const int s = m.size();
    if (s == 0) throw std::invalid_argument("GradedRingModel: empty basis");
    if (top_index < 0 || top_index >= s)
        throw std::invalid_argument("GradedRingModel: top index out of range");
    int max_degree = 0;
    for (const auto& b : m.basis_) {
        if (b.degree < 0)
            throw std::invalid_argument("GradedRingModel: negative degree for " + b.name);
        max_degree = std::max(max_degree, b.degree);
    }
    m.dim_ = m.basis_[top_index].degree;
    if (m.dim_ != max_degree)
        throw std::invalid_argument(
            "GradedRingModel: designated top class does not have maximal degree");

    if (static_cast<int>(m.table_.size()) != s)
        throw std::invalid_argument("GradedRingModel: product table has wrong shape");
    for (const auto& row : m.table_) {
        if (static_cast<int>(row.size()) != s)
            throw std::invalid_argument("GradedRingModel: product table has wrong shape");
        for (const auto& e : row)
            if (static_cast<int>(e.size()) != s)
                throw std::invalid_argument(
                    "GradedRingModel: product vector has wrong length");
    }

    // Grading: basis_i * basis_j lives in degree deg_i + deg_j.
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            const int d = m.basis_[i].degree + m.basis_[j].degree;
            for (int k = 0; k < s; ++k) {
                if (m.table_[i][j][k] != 0 && m.basis_[k].degree != d)
                    throw std::invalid_argument(
                        "GradedRingModel: product " + m.basis_[i].name + "*" +
                        m.basis_[j].name + " has a component off degree " +
                        std::to_string(d));
            }
            if (m.table_[i][j] != m.table_[j][i])
                throw std::invalid_argument("GradedRingModel: product table is not commutative");
        }
    }

    // Unit: the unique degree-0 basis class, acting as identity.
    int unit = -1;
    for (int i = 0; i < s; ++i) {
        if (m.basis_[i].degree != 0) continue;
        if (unit != -1)
            throw std::invalid_argument("GradedRingModel: more than one degree-0 class");
        unit = i;
    }
    if (unit == -1)
        throw std::invalid_argument("GradedRingModel: no degree-0 class");
    m.unit_index_ = unit;
    for (int j = 0; j < s; ++j) {
        RingElem expected(s, Rat(0));
        expected[j] = 1;
        if (m.table_[unit][j] != expected)
            throw std::invalid_argument("GradedRingModel: degree-0 class is not a unit");
    }

    // Associativity on all basis triples.
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            for (int k = 0; k < s; ++k) {
                const RingElem left = m.mul(m.table_[i][j], m.basis_element(k));
                const RingElem right = m.mul(m.basis_element(i), m.table_[j][k]);
                if (left != right)
                    throw std::invalid_argument(
                        "GradedRingModel: product table is not associative at (" +
                        m.basis_[i].name + "," + m.basis_[j].name + "," +
                        m.basis_[k].name + ")");
            }

    if (static_cast<int>(tangent_chern.size()) != m.dim_)
        throw std::invalid_argument(
            "GradedRingModel: expected " + std::to_string(m.dim_) +
            " tangent Chern classes, got " + std::to_string(tangent_chern.size()));
    for (int k = 0; k < m.dim_; ++k) {
        const RingElem& c = tangent_chern[k];
        if (static_cast<int>(c.size()) != s)
            throw std::invalid_argument("GradedRingModel: Chern class has wrong length");
        for (int idx = 0; idx < s; ++idx)
            if (c[idx] != 0 && m.basis_[idx].degree != k + 1)
                throw std::invalid_argument("GradedRingModel: c_" + std::to_string(k + 1) +
                                            " has a component off degree " +
                                            std::to_string(k + 1));
    }
    m.chern_ = std::move(tangent_chern);
    return m;
}

RingElem GradedRingModel::unit() const { return basis_element(unit_index_); }

RingElem GradedRingModel::basis_element(int i) const {
    RingElem e = zero();
    e.at(i) = 1;
    return e;
}

void GradedRingModel::check_element(const RingElem& a) const {
    if (static_cast<int>(a.size()) != size())
        throw std::invalid_argument("ring element has wrong coordinate length");
}

RingElem GradedRingModel::add(const RingElem& a, const RingElem& b) const {
    check_element(a);
    check_element(b);
    RingElem out(a);
    for (int i = 0; i < size(); ++i) out[i] += b[i];
    return out;
}

RingElem GradedRingModel::sub(const RingElem& a, const RingElem& b) const {
    check_element(a);
    check_element(b);
    RingElem out(a);
    for (int i = 0; i < size(); ++i) out[i] -= b[i];
    return out;
}

RingElem GradedRingModel::scale(const Rat& c, const RingElem& a) const {
    check_element(a);
    RingElem out(a);
    for (Rat& x : out) x *= c;
    return out;
}

RingElem GradedRingModel::mul(const RingElem& a, const RingElem& b) const {
    check_element(a);
    check_element(b);
    RingElem out = zero();
    for (int i = 0; i < size(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < size(); ++j) {
            if (b[j] == 0) continue;
            const Rat c = a[i] * b[j];
            const RingElem& prod = table_[i][j];
            for (int k = 0; k < size(); ++k)
                if (prod[k] != 0) out[k] += c * prod[k];
        }
    }
    return out;
}

bool GradedRingModel::is_zero(const RingElem& a) const {
    check_element(a);
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

RingElem GradedRingModel::component(const RingElem& a, int degree) const {
    check_element(a);
    RingElem out = zero();
    for (int i = 0; i < size(); ++i)
        if (basis_[i].degree == degree) out[i] = a[i];
    return out;
}

int GradedRingModel::leading_degree(const RingElem& a) const {
    check_element(a);
    int lead = -1;
    for (int i = 0; i < size(); ++i)
        if (a[i] != 0 && (lead == -1 || basis_[i].degree < lead))
            lead = basis_[i].degree;
    return lead;
}

Rat GradedRingModel::integrate(const RingElem& a) const {
    check_element(a);
    return a[top_index_];
}

namespace {

// Reciprocal of a power series with given coefficients; a[0] != 0.
template <typename Scalar>
std::vector<Scalar> invert_series(const std::vector<Scalar>& a) {
    std::vector<Scalar> b(a.size());
    b[0] = Scalar(1) / a[0];
    for (std::size_t n = 1; n < a.size(); ++n) {
        Scalar acc = Scalar(0);
        for (std::size_t k = 1; k <= n; ++k) acc += a[k] * b[n - k];
        b[n] = -b[0] * acc;
    }
    return b;
}

std::vector<Rat> factorials(int order) {
    std::vector<Rat> f(order + 1);
    Int acc = 1;
    f[0] = 1;
    for (int i = 1; i <= order; ++i) {
        acc *= i;
        f[i] = Rat(acc);
    }
    return f;
}

void require_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
}

}  // namespace

std::vector<Rat> td_series(int order) {
    require_order(order);
    const auto fact = factorials(order + 1);
    // (1 - e^{-x}) / x has coefficients (-1)^i / (i+1)!
    std::vector<Rat> a(order + 1);
    for (int i = 0; i <= order; ++i)
        a[i] = Rat(i % 2 == 0 ? 1 : -1) / fact[i + 1];
    return invert_series(a);
}

std::vector<Rat> td_dual_series(int order) {
    require_order(order);
    const auto fact = factorials(order + 1);
    // -(1 - e^{x}) / x = (e^x - 1)/x has coefficients 1 / (i+1)!
    std::vector<Rat> a(order + 1);
    for (int i = 0; i <= order; ++i) a[i] = Rat(1) / fact[i + 1];
    return invert_series(a);
}

namespace {

template <typename Scalar>
std::vector<Scalar> lambda_denominator(const Scalar& lambda, int order, int sign) {
    // 1 - lambda e^{sign x}: constant 1 - lambda, then -lambda sign^i / i!.
    std::vector<Scalar> a(order + 1);
    a[0] = Scalar(1) - lambda;
    Scalar fact = Scalar(1);
    Scalar sgn = Scalar(1);
    for (int i = 1; i <= order; ++i) {
        fact *= Scalar(i);
        sgn *= Scalar(sign);
        a[i] = -lambda * sgn / fact;
    }
    return a;
}

}  // namespace

std::vector<Rat> td_lambda_series(const Rat& lambda, int order) {
    require_order(order);
    if (lambda == 1)
        throw PoleAtOne("td_lambda_series: pole at lambda = 1");
    return invert_series(lambda_denominator<Rat>(lambda, order, -1));
}

std::vector<Rat> td_dual_lambda_series(const Rat& lambda, int order) {
    require_order(order);
    if (lambda == 1)
        throw PoleAtOne("td_dual_lambda_series: pole at lambda = 1");
    return invert_series(lambda_denominator<Rat>(lambda, order, +1));
}

std::vector<std::complex<double>> td_lambda_series(std::complex<double> lambda,
                                                   int order) {
    require_order(order);
    if (lambda == std::complex<double>(1.0, 0.0))
        throw PoleAtOne("td_lambda_series: pole at lambda = 1");
    return invert_series(lambda_denominator<std::complex<double>>(lambda, order, -1));
}

std::vector<std::complex<double>> td_dual_lambda_series(
    std::complex<double> lambda, int order) {
    require_order(order);
    if (lambda == std::complex<double>(1.0, 0.0))
        throw PoleAtOne("td_dual_lambda_series: pole at lambda = 1");
    return invert_series(lambda_denominator<std::complex<double>>(lambda, order, +1));
}

RingElem todd_class(const GradedRingModel& ring) {
    const int m = ring.dimension();
    const auto t = td_series(m);

    // Logarithm of the one-variable series: n t_n = sum_{k=1..n} k l_k t_{n-k}.
    std::vector<Rat> l(m + 1, Rat(0));
    for (int n = 1; n <= m; ++n) {
        Rat acc = 0;
        for (int k = 1; k < n; ++k) acc += Rat(k) * l[k] * t[n - k];
        l[n] = t[n] - acc / n;
    }

    // Power sums of the Chern roots via Newton's identities,
    // p_k = sum_{i<k} (-1)^{i+1} c_i p_{k-i} + (-1)^{k+1} k c_k.
    const auto& c = ring.tangent_chern();
    std::vector<RingElem> p(m + 1, ring.zero());
    for (int k = 1; k <= m; ++k) {
        RingElem acc = ring.scale(Rat(k % 2 == 1 ? k : -k), c[k - 1]);
        for (int i = 1; i < k; ++i) {
            const RingElem term = ring.mul(c[i - 1], p[k - i]);
            acc = (i % 2 == 1) ? ring.add(acc, term) : ring.sub(acc, term);
        }
        p[k] = acc;
    }

    // log td(T) = sum l_k p_k, then exponentiate (nilpotent beyond degree m).
    RingElem log_td = ring.zero();
    for (int k = 1; k <= m; ++k)
        log_td = ring.add(log_td, ring.scale(l[k], p[k]));

    RingElem result = ring.unit();
    RingElem power = ring.unit();
    Int fact = 1;
    for (int j = 1; j <= m; ++j) {
        power = ring.mul(power, log_td);
        fact *= j;
        result = ring.add(result, ring.scale(Rat(1, fact), power));
    }
    return result;
}

RingElem ch_exp(const GradedRingModel& ring, const RingElem& divisor_class) {
    ring.check_element(divisor_class);
    if (!ring.is_zero(divisor_class)) {
        const int lead = ring.leading_degree(divisor_class);
        if (lead != 1 || ring.component(divisor_class, 1) != divisor_class)
            throw DegreeMismatch("ch_exp: input must be concentrated in degree 1");
    }
    RingElem result = ring.unit();
    RingElem power = ring.unit();
    Int fact = 1;
    for (int j = 1; j <= ring.dimension(); ++j) {
        power = ring.mul(power, divisor_class);
        fact *= j;
        result = ring.add(result, ring.scale(Rat(1, fact), power));
    }
    return result;
}

Rat k_pairing(const GradedRingModel& ring, const RingElem& a, const RingElem& b) {
    return ring.integrate(ring.mul(todd_class(ring), ring.mul(a, b)));
}

std::optional<std::vector<std::vector<Rat>>> invert_matrix(
    const std::vector<std::vector<Rat>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rat>> a(m);
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != n)
            throw std::invalid_argument("invert_matrix: not square");
        inv[i][i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot == -1) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rat lead = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= lead;
            inv[col][j] /= lead;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rat f = a[row][col];
            for (int j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

DualBasisPair dual_basis(const GradedRingModel& ring) {
    const int s = ring.size();
    const RingElem todd = todd_class(ring);
    std::vector<std::vector<Rat>> gram(s, std::vector<Rat>(s));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            gram[i][j] = ring.integrate(
                ring.mul(todd, ring.mul(ring.basis_element(i), ring.basis_element(j))));
    const auto inv = invert_matrix(gram);
    if (!inv)
        throw SingularPairing("dual_basis: K-pairing Gram matrix is singular");
    DualBasisPair out;
    for (int i = 0; i < s; ++i) out.primal.push_back(ring.basis_element(i));
    for (int b = 0; b < s; ++b) {
        RingElem d = ring.zero();
        for (int k = 0; k < s; ++k)
            d = ring.add(d, ring.scale((*inv)[b][k], ring.basis_element(k)));
        out.dual.push_back(std::move(d));
    }
    return out;
}

namespace {

struct EchelonRow {
    std::vector<Rat> ch;     // coordinates, columns ordered by (degree, index)
    std::vector<Int> coord;  // integer coordinates in the original K-basis
};

}  // namespace

std::vector<Int> integral_ch_inverse(const GradedRingModel& ring,
                                     const RingElem& gamma, int lead_degree,
                                     const KClassModel& kmodel) {
    ring.check_element(gamma);
    if (lead_degree < 0 || lead_degree > ring.dimension())
        throw std::invalid_argument("integral_ch_inverse: lead degree out of range");
    const int s = ring.size();
    const int nclasses = static_cast<int>(kmodel.classes.size());
    if (nclasses == 0)
        throw std::invalid_argument("integral_ch_inverse: empty K-basis");

    // Column order: ring basis indices sorted by (degree, index).
    std::vector<int> cols(s);
    for (int i = 0; i < s; ++i) cols[i] = i;
    std::stable_sort(cols.begin(), cols.end(), [&](int a, int b) {
        return ring.basis()[a].degree < ring.basis()[b].degree;
    });

    const int gamma_lead = ring.leading_degree(gamma);
    if (gamma_lead != -1 && gamma_lead < lead_degree)
        throw std::invalid_argument(
            "integral_ch_inverse: gamma has components below its stated leading degree");

    auto reorder = [&](const RingElem& e) {
        std::vector<Rat> v(s);
        for (int c = 0; c < s; ++c) v[c] = e[cols[c]];
        return v;
    };

    std::vector<EchelonRow> rows(nclasses);
    for (int j = 0; j < nclasses; ++j) {
        ring.check_element(kmodel.classes[j].ch);
        rows[j].ch = reorder(kmodel.classes[j].ch);
        rows[j].coord.assign(nclasses, 0);
        rows[j].coord[j] = 1;
    }

    // Integer row echelon via Euclidean reduction. The entries live in a
    // finitely generated subgroup of Q, so the gcd loop terminates.
    std::vector<EchelonRow> pivots;       // ordered by pivot column
    std::vector<int> pivot_cols;
    std::vector<EchelonRow*> active;
    for (auto& r : rows) active.push_back(&r);
    for (int col = 0; col < s; ++col) {
        std::vector<EchelonRow*> hit;
        for (auto* r : active)
            if (r->ch[col] != 0) hit.push_back(r);
        if (hit.empty()) continue;
        while (hit.size() > 1) {
            std::sort(hit.begin(), hit.end(), [&](EchelonRow* a, EchelonRow* b) {
                return abs(a->ch[col]) < abs(b->ch[col]);
            });
            EchelonRow* base = hit.front();
            for (std::size_t i = 1; i < hit.size(); ++i) {
                const Int q = floor_div(hit[i]->ch[col], base->ch[col]);
                if (q == 0) continue;
                const Rat qr(q);
                for (int c = 0; c < s; ++c) hit[i]->ch[c] -= qr * base->ch[c];
                for (int j = 0; j < nclasses; ++j)
                    hit[i]->coord[j] -= q * base->coord[j];
            }
            std::vector<EchelonRow*> still;
            for (auto* r : hit)
                if (r->ch[col] != 0) still.push_back(r);
            hit = std::move(still);
        }
        EchelonRow* piv = hit.front();
        pivots.push_back(*piv);
        pivot_cols.push_back(col);
        active.erase(std::find(active.begin(), active.end(), piv));
        if (active.empty()) break;
    }

    // Forward substitution through degree lead_degree.
    std::vector<Rat> residual = reorder(gamma);
    std::vector<Int> result(nclasses, 0);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
        const int col = pivot_cols[pi];
        if (ring.basis()[cols[col]].degree > lead_degree) break;
        if (residual[col] == 0) continue;
        const Rat q = residual[col] / pivots[pi].ch[col];
        if (!is_integer(q))
            throw NoIntegralLift("integral_ch_inverse: elimination forces coefficient " +
                                 rat_to_string(q) + " at column of degree " +
                                 std::to_string(ring.basis()[cols[col]].degree));
        const Int qi = q.get_num();
        for (int c = 0; c < s; ++c) residual[c] -= q * pivots[pi].ch[c];
        for (int j = 0; j < nclasses; ++j) result[j] += qi * pivots[pi].coord[j];
    }
    for (int c = 0; c < s; ++c) {
        if (ring.basis()[cols[c]].degree > lead_degree) break;
        if (residual[c] != 0)
            throw NoIntegralLift(
                "integral_ch_inverse: no K-class combination matches the target "
                "through degree " +
                std::to_string(lead_degree));
    }
    return result;
}

GradedRingModel projective_space_ring(int n) {
    if (n < 1)
        throw std::invalid_argument("projective_space_ring: dimension must be >= 1");
    const int s = n + 1;
    std::vector<BasisClass> basis;
    for (int i = 0; i <= n; ++i) {
        std::string name = i == 0 ? "1" : (i == 1 ? "H" : "H^" + std::to_string(i));
        basis.push_back({std::move(name), i});
    }
    std::vector<std::vector<RingElem>> products(
        s, std::vector<RingElem>(s, RingElem(s, Rat(0))));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i + j <= n) products[i][j][i + j] = 1;
    std::vector<RingElem> chern(n, RingElem(s, Rat(0)));
    for (int k = 1; k <= n; ++k) chern[k - 1][k] = Rat(binomial(Int(n + 1), k));
    return GradedRingModel::make("P" + std::to_string(n), std::move(basis),
                                 std::move(products), n, std::move(chern));
}

KClassModel projective_space_line_bundles(const GradedRingModel& ring) {
    const int n = ring.dimension();
    KClassModel out;
    out.label = "line bundles on " + ring.label();
    for (int k = 0; k <= n; ++k) {
        RingElem d = ring.zero();
        d[1] = k;  // k * H
        out.classes.push_back({"O(" + std::to_string(k) + ")", ch_exp(ring, d)});
    }
    return out;
}

GradedRingModel cy3_ring(const Int& triple_degree, const Int& c2_coeff,
                         const Int& c3_coeff) {
    if (triple_degree < 1)
        throw std::invalid_argument("cy3_ring: triple intersection must be >= 1");
    // Basis 1, H, H^2, pt with H * H^2 = d * pt, so integral(H^3) = d while
    // the designated top class pt integrates to 1.
    const int s = 4;
    std::vector<BasisClass> basis = {{"1", 0}, {"H", 1}, {"H^2", 2}, {"pt", 3}};
    std::vector<std::vector<RingElem>> products(
        s, std::vector<RingElem>(s, RingElem(s, Rat(0))));
    const Rat d(triple_degree);
    products[0][0][0] = 1;
    for (int j = 1; j < s; ++j) {
        products[0][j][j] = 1;
        products[j][0][j] = 1;
    }
    products[1][1][2] = 1;       // H * H = H^2
    products[1][2][3] = d;       // H * H^2 = d * pt
    products[2][1][3] = d;
    std::vector<RingElem> chern(3, RingElem(s, Rat(0)));
    chern[1][2] = Rat(c2_coeff);              // c_2 = c2_coeff * H^2
    chern[2][3] = Rat(c3_coeff) * d;          // c_3 = c3_coeff * H^3 = c3_coeff * d * pt
    return GradedRingModel::make("CY3(d=" + triple_degree.get_str() + ")",
                                 std::move(basis), std::move(products), 3,
                                 std::move(chern));
}

}  // namespace gvk
