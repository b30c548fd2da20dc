#include <doctest.h>

#include <complex>
#include <random>

#include "gvk/arith.hpp"
#include "support/oracles.hpp"

using gvk::Int;
using gvk::Rat;

TEST_CASE("mobius examples and oracle") {
    CHECK(gvk::mobius(1) == 1);
    CHECK(gvk::mobius(4) == 0);   // 4 = 2^2
    CHECK(gvk::mobius(6) == 1);   // mu(2) mu(3) = (-1)(-1)
    for (unsigned long r = 1; r <= 500; ++r)
        CHECK(gvk::mobius(r) == oracle::mu_direct(r));
}

TEST_CASE("euler_phi examples and oracle") {
    CHECK(gvk::euler_phi(1) == 1);
    CHECK(gvk::euler_phi(6) == 2);    // {1, 5}
    CHECK(gvk::euler_phi(12) == 4);   // {1, 5, 7, 11}
    for (unsigned long r = 1; r <= 500; ++r)
        CHECK(gvk::euler_phi(r) == oracle::phi_direct(r));
}

TEST_CASE("divisors are ascending and complete") {
    CHECK(gvk::divisors(1) == std::vector<Int>{1});
    CHECK(gvk::divisors(6) == std::vector<Int>{1, 2, 3, 6});
    CHECK(gvk::divisors(9) == std::vector<Int>{1, 3, 9});
    for (unsigned long r = 1; r <= 300; ++r) {
        const auto got = gvk::divisors(r);
        const auto want = oracle::divisors_direct(r);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
    }
}

TEST_CASE("arguments below 1 are rejected") {
    CHECK_THROWS_AS(gvk::mobius(0), std::invalid_argument);
    CHECK_THROWS_AS(gvk::euler_phi(0), std::invalid_argument);
    CHECK_THROWS_AS(gvk::divisors(-3), std::invalid_argument);
    CHECK_THROWS_AS(gvk::cyclotomic_norm_product(1), std::invalid_argument);
}

TEST_CASE("divisor-sum identities hold exactly") {
    for (unsigned long r = 1; r <= 2000; ++r) {
        Int phi_sum = 0;
        Int mu_sum = 0;
        Rat phi_over_r = 0;
        for (const Int& k : gvk::divisors(r)) {
            phi_sum += gvk::euler_phi(k);
            mu_sum += gvk::mobius(k);
            phi_over_r += Rat(gvk::euler_phi(k)) / Rat(static_cast<long>(r));
        }
        CHECK(phi_sum == r);
        CHECK(mu_sum == (r == 1 ? 1 : 0));
        CHECK(phi_over_r == 1);
    }
}

TEST_CASE("primitive root sums match mu and phi") {
    using std::abs;
    CHECK(abs(gvk::primitive_root_sum(4, 1) - std::complex<double>(0, 0)) < 1e-9);
    CHECK(abs(gvk::primitive_root_sum(1, 1) - std::complex<double>(1, 0)) < 1e-9);
    CHECK(abs(gvk::primitive_root_sum(6, 0) - std::complex<double>(2, 0)) < 1e-9);
    for (long r = 1; r <= 200; ++r) {
        const double mu = gvk::mobius(r);
        const double phi = gvk::euler_phi(r).get_d();
        CHECK(abs(gvk::primitive_root_sum(r, 1) - std::complex<double>(mu, 0)) < 1e-9);
        CHECK(abs(gvk::primitive_root_sum(r, -1) - std::complex<double>(mu, 0)) < 1e-9);
        CHECK(abs(gvk::primitive_root_sum(r, 0) - std::complex<double>(phi, 0)) < 1e-9);
    }
}

TEST_CASE("cyclotomic norm product equals r") {
    using std::abs;
    CHECK(abs(gvk::cyclotomic_norm_product(2) - std::complex<double>(2, 0)) < 1e-9);
    CHECK(abs(gvk::cyclotomic_norm_product(3) - std::complex<double>(3, 0)) < 1e-9);
    CHECK(abs(gvk::cyclotomic_norm_product(5) - std::complex<double>(5, 0)) < 1e-9);
    for (long r = 2; r <= 200; ++r) {
        const auto prod = gvk::cyclotomic_norm_product(r);
        CHECK(abs(prod - std::complex<double>(r, 0)) / r < 1e-9);
    }
}

TEST_CASE("mobius and phi are multiplicative on coprime pairs") {
    std::mt19937_64 rng(20260809);
    std::uniform_int_distribution<unsigned long> dist(1, 400);
    int done = 0;
    while (done < 200) {
        const unsigned long a = dist(rng);
        const unsigned long b = dist(rng);
        if (std::gcd(a, b) != 1) continue;
        ++done;
        CHECK(gvk::mobius(Int(a) * Int(b)) == gvk::mobius(a) * gvk::mobius(b));
        CHECK(gvk::euler_phi(Int(a) * Int(b)) ==
              gvk::euler_phi(a) * gvk::euler_phi(b));
    }
}
