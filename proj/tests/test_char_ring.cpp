#include <doctest.h>

#include <cmath>
#include <complex>

#include "gvk/char_ring.hpp"
#include "gvk/errors.hpp"
#include "support/oracles.hpp"

using gvk::GradedRingModel;
using gvk::Int;
using gvk::Rat;
using gvk::RingElem;

TEST_CASE("td series matches the Bernoulli closed form") {
    const auto got = gvk::td_series(10);
    const auto want = oracle::td_coefficients(10);
    for (int i = 0; i <= 10; ++i) CHECK(got[i] == want[i]);
    CHECK(got[0] == 1);
    CHECK(got[1] == Rat(1, 2));
    CHECK(got[2] == Rat(1, 12));
    CHECK(got[3] == 0);
    CHECK(got[4] == Rat(-1, 720));
    CHECK(gvk::td_series(0) == std::vector<Rat>{Rat(1)});
}

TEST_CASE("td dual series: sign flip in odd orders") {
    const auto got = gvk::td_dual_series(10);
    const auto want = oracle::td_dual_coefficients(10);
    const auto td = gvk::td_series(10);
    for (int i = 0; i <= 10; ++i) {
        CHECK(got[i] == want[i]);
        CHECK(got[i] == (i % 2 == 0 ? td[i] : -td[i]));
    }
    CHECK(got[1] == Rat(-1, 2));
    CHECK(got[2] == Rat(1, 12));
}

TEST_CASE("td lambda series at lambda = -1 is the logistic expansion") {
    const auto got = gvk::td_lambda_series(Rat(-1), 7);
    const auto want = oracle::logistic_coefficients(7);
    for (int i = 0; i <= 7; ++i) CHECK(got[i] == want[i]);
    CHECK(got[0] == Rat(1, 2));
    CHECK(got[1] == Rat(1, 4));
    // dual variant replaces e^{-x} by e^{x}: coefficients of 1/(1+e^x)
    const auto dual = gvk::td_dual_lambda_series(Rat(-1), 7);
    for (int i = 0; i <= 7; ++i)
        CHECK(dual[i] == (i % 2 == 0 ? want[i] : -want[i]));
    CHECK(dual[0] == Rat(1, 2));
    CHECK(dual[1] == Rat(-1, 4));
}

TEST_CASE("td lambda series rejects the pole at 1") {
    CHECK_THROWS_AS(gvk::td_lambda_series(Rat(1), 3), gvk::PoleAtOne);
    CHECK_THROWS_AS(gvk::td_dual_lambda_series(Rat(1), 3), gvk::PoleAtOne);
    CHECK_THROWS_AS(gvk::td_lambda_series(std::complex<double>(1.0, 0.0), 3),
                    gvk::PoleAtOne);
}

TEST_CASE("complex td lambda series evaluates back to the function") {
    // Fourth root of unity; compare the truncated series at a small point
    // against a direct evaluation.
    const std::complex<double> lambda(0.0, 1.0);
    const auto coeffs = gvk::td_lambda_series(lambda, 16);
    const double x = 0.05;
    std::complex<double> series(0.0, 0.0);
    double power = 1.0;
    for (const auto& c : coeffs) {
        series += c * power;
        power *= x;
    }
    const std::complex<double> direct =
        1.0 / (1.0 - lambda * std::exp(std::complex<double>(-x, 0.0)));
    CHECK(std::abs(series - direct) < 1e-12);
}

TEST_CASE("todd class of the built-in models") {
    const auto p1 = gvk::projective_space_ring(1);
    CHECK(gvk::todd_class(p1) == RingElem{Rat(1), Rat(1)});
    const auto p2 = gvk::projective_space_ring(2);
    CHECK(gvk::todd_class(p2) == RingElem{Rat(1), Rat(3, 2), Rat(1)});
    const auto p3 = gvk::projective_space_ring(3);
    CHECK(gvk::todd_class(p3) == RingElem{Rat(1), Rat(2), Rat(11, 6), Rat(1)});
    // chi(O) = integral of the Todd class = 1 on every P^n
    for (int n = 1; n <= 4; ++n) {
        const auto ring = gvk::projective_space_ring(n);
        CHECK(ring.integrate(gvk::todd_class(ring)) == 1);
        CHECK(gvk::todd_class(ring)[0] == 1);  // leading coefficient
    }
    // trivial tangent data gives the unit
    const auto flat = gvk::cy3_ring(1, 0, 0);
    CHECK(gvk::todd_class(flat) == flat.unit());
    // CY3: td = 1 + c2/12, so chi(O) = 0
    const auto quintic = gvk::cy3_ring(5, 10, -40);
    CHECK(quintic.integrate(gvk::todd_class(quintic)) == 0);
}

TEST_CASE("ch of a line bundle") {
    const auto p1 = gvk::projective_space_ring(1);
    CHECK(gvk::ch_exp(p1, p1.basis_element(1)) == RingElem{Rat(1), Rat(1)});
    const auto p2 = gvk::projective_space_ring(2);
    CHECK(gvk::ch_exp(p2, p2.basis_element(1)) ==
          RingElem{Rat(1), Rat(1), Rat(1, 2)});
    CHECK(gvk::ch_exp(p2, p2.zero()) == p2.unit());
    CHECK_THROWS_AS(gvk::ch_exp(p2, p2.basis_element(2)), gvk::DegreeMismatch);
}

TEST_CASE("k pairing on the built-in models") {
    const auto p1 = gvk::projective_space_ring(1);
    CHECK(gvk::k_pairing(p1, p1.unit(), p1.unit()) == 1);
    RingElem minus_h = p1.zero();
    minus_h[1] = -1;
    CHECK(gvk::k_pairing(p1, gvk::ch_exp(p1, minus_h), p1.unit()) == 0);
    const auto p2 = gvk::projective_space_ring(2);
    CHECK(gvk::k_pairing(p2, gvk::ch_exp(p2, p2.basis_element(1)), p2.unit()) == 3);
}

TEST_CASE("Euler characteristics of O(k) match the binomial values") {
    for (int n = 1; n <= 4; ++n) {
        const auto ring = gvk::projective_space_ring(n);
        for (long k = -n - 2; k <= 5; ++k) {
            RingElem divisor = ring.zero();
            divisor[1] = k;
            const Rat chi =
                gvk::k_pairing(ring, gvk::ch_exp(ring, divisor), ring.unit());
            CHECK(chi == Rat(gvk::binomial(Int(n + k), n)));
        }
    }
}

TEST_CASE("dual basis satisfies the delta identity") {
    for (const auto& ring :
         {gvk::projective_space_ring(1), gvk::projective_space_ring(2),
          gvk::cy3_ring(5, 10, -40)}) {
        const auto pair = gvk::dual_basis(ring);
        REQUIRE(pair.primal.size() == pair.dual.size());
        for (std::size_t a = 0; a < pair.primal.size(); ++a)
            for (std::size_t b = 0; b < pair.dual.size(); ++b)
                CHECK(gvk::k_pairing(ring, pair.primal[a], pair.dual[b]) ==
                      (a == b ? 1 : 0));
    }
}

namespace {

// A valid graded ring whose Poincare pairing is degenerate: the degree-1
// class pairs to zero with everything.
GradedRingModel degenerate_ring() {
    std::vector<gvk::BasisClass> basis = {{"1", 0}, {"A", 1}, {"T", 2}};
    std::vector<std::vector<RingElem>> products(
        3, std::vector<RingElem>(3, RingElem(3, Rat(0))));
    products[0][0][0] = 1;
    products[0][1][1] = 1;
    products[1][0][1] = 1;
    products[0][2][2] = 1;
    products[2][0][2] = 1;
    // A*A = 0, A*T = 0, T*T = 0
    std::vector<RingElem> chern(2, RingElem(3, Rat(0)));
    return GradedRingModel::make("degenerate", std::move(basis), std::move(products),
                                 2, std::move(chern));
}

}  // namespace

TEST_CASE("degenerate multiplication table yields SingularPairing") {
    const auto ring = degenerate_ring();
    CHECK_THROWS_AS(gvk::dual_basis(ring), gvk::SingularPairing);
}

TEST_CASE("model validation rejects broken tables") {
    std::vector<gvk::BasisClass> basis = {{"1", 0}, {"H", 1}};
    std::vector<std::vector<RingElem>> products(
        2, std::vector<RingElem>(2, RingElem(2, Rat(0))));
    products[0][0][0] = 1;
    products[0][1][1] = 1;
    products[1][0][0] = 1;  // H*1 = 1: breaks both grading and the unit law
    std::vector<RingElem> chern(1, RingElem(2, Rat(0)));
    CHECK_THROWS_AS(GradedRingModel::make("bad", basis, products, 1, chern),
                    std::invalid_argument);
}

TEST_CASE("integral ch inverse on projective space") {
    const auto p2 = gvk::projective_space_ring(2);
    const auto bundles = gvk::projective_space_line_bundles(p2);

    // gamma = H lifts to O(1) - O
    const auto lift = gvk::integral_ch_inverse(p2, p2.basis_element(1), 1, bundles);
    CHECK(lift == std::vector<Int>{-1, 1, 0});

    // gamma = 1 lifts to O
    CHECK(gvk::integral_ch_inverse(p2, p2.unit(), 0, bundles) ==
          std::vector<Int>{1, 0, 0});

    // gamma = 0 lifts to the zero vector
    CHECK(gvk::integral_ch_inverse(p2, p2.zero(), 1, bundles) ==
          std::vector<Int>{0, 0, 0});
}

TEST_CASE("integral ch inverse reproduces gamma through the leading degree") {
    for (int n = 1; n <= 4; ++n) {
        const auto ring = gvk::projective_space_ring(n);
        const auto bundles = gvk::projective_space_line_bundles(ring);
        for (int i = 0; i <= n; ++i) {
            const RingElem gamma = ring.basis_element(i);
            const auto lift = gvk::integral_ch_inverse(ring, gamma, i, bundles);
            RingElem ch = ring.zero();
            for (std::size_t j = 0; j < lift.size(); ++j)
                ch = ring.add(ch, ring.scale(Rat(lift[j]), bundles.classes[j].ch));
            for (int d = 0; d <= i; ++d)
                CHECK(ring.component(ch, d) == ring.component(gamma, d));
        }
    }
}

TEST_CASE("no integral lift when the K-basis is too sparse") {
    const auto p1 = gvk::projective_space_ring(1);
    gvk::KClassModel sparse;
    sparse.label = "O and O(2) only";
    RingElem two_h = p1.zero();
    two_h[1] = 2;
    sparse.classes.push_back({"O", p1.unit()});
    sparse.classes.push_back({"O(2)", gvk::ch_exp(p1, two_h)});
    // ch(O(2) - O) = 2H: the coefficient of H would need to be 1/2.
    CHECK_THROWS_AS(gvk::integral_ch_inverse(p1, p1.basis_element(1), 1, sparse),
                    gvk::NoIntegralLift);
}
