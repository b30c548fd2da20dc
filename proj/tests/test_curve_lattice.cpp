#include <doctest.h>

#include <random>

#include "gvk/curve_lattice.hpp"
#include "gvk/errors.hpp"

using gvk::CurveClass;
using gvk::GeometryModel;
using gvk::Int;
using gvk::Truncation;

namespace {
CurveClass cc(std::vector<long> v) {
    std::vector<Int> coords(v.begin(), v.end());
    return CurveClass(std::move(coords));
}
}  // namespace

TEST_CASE("effectivity is enforced at construction") {
    CHECK_THROWS_AS(cc({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(cc({1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(CurveClass(std::vector<Int>{}), std::invalid_argument);
    CHECK_NOTHROW(cc({0, 1}));
}

TEST_CASE("index is the coordinate gcd") {
    CHECK(cc({1, 0}).index() == 1);
    CHECK(cc({2, 4}).index() == 2);
    CHECK(cc({6, 9}).index() == 3);
}

TEST_CASE("divide") {
    CHECK(gvk::divide(cc({2, 4}), 2) == cc({1, 2}));
    CHECK(gvk::divide(cc({3, 3}), 1) == cc({3, 3}));
    CHECK_THROWS_AS(gvk::divide(cc({2, 3}), 2), gvk::NotDivisible);
}

TEST_CASE("index and divide interact as expected") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(0, 30);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Int> coords(3);
        bool nonzero = false;
        for (auto& c : coords) {
            const long v = dist(rng);
            c = v;
            nonzero |= v > 0;
        }
        if (!nonzero) continue;
        const CurveClass beta{coords};
        const Int g = beta.index();
        for (Int r = 1; r <= g; ++r) {
            if (g % r != 0) continue;
            const CurveClass part = gvk::divide(beta, r);
            CHECK(part.index() * r == g);
        }
        CHECK(gvk::divide(beta, g).index() == 1);  // primitive quotient
    }
}

TEST_CASE("canonical degree") {
    const GeometryModel cy("cy", 2, 3, {Int(0), Int(0)});
    CHECK(gvk::canonical_degree(cy, cc({5, 7})) == 0);
    const GeometryModel fano("fano", 1, 3, {Int(-4)});
    CHECK(gvk::canonical_degree(fano, cc({2})) == -8);
    const GeometryModel mixed("mixed", 2, 3, {Int(0), Int(-1)});
    CHECK(gvk::canonical_degree(mixed, cc({3, 2})) == -2);
    CHECK_THROWS_AS(gvk::canonical_degree(fano, cc({1, 1})), gvk::RankMismatch);
}

TEST_CASE("canonical degree is linear") {
    const GeometryModel geom("g", 3, 4, {Int(0), Int(-1), Int(-2)});
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(0, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> a(3), b(3);
        bool na = false, nb = false;
        for (auto& c : a) { const long v = dist(rng); c = v; na |= v > 0; }
        for (auto& c : b) { const long v = dist(rng); c = v; nb |= v > 0; }
        if (!na || !nb) continue;
        const CurveClass x{a}, y{b};
        CHECK(gvk::canonical_degree(geom, x + y) ==
              gvk::canonical_degree(geom, x) + gvk::canonical_degree(geom, y));
        CHECK(gvk::canonical_degree(geom, x) <= 0);  // semi-positivity
    }
}

TEST_CASE("semi-positivity and dimension are enforced") {
    CHECK_THROWS_AS(GeometryModel("bad", 2, 3, {Int(0), Int(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(GeometryModel("flat", 1, 2, {Int(0)}), std::invalid_argument);
    CHECK_THROWS_AS(GeometryModel("short", 2, 3, {Int(0)}), gvk::RankMismatch);
}

TEST_CASE("multiples_up_to enumerates within the cutoff") {
    const Truncation t({Int(1), Int(1)}, 3);
    const auto ms = gvk::multiples_up_to(cc({1, 0}), t);
    REQUIRE(ms.size() == 3);
    CHECK(ms[0] == cc({1, 0}));
    CHECK(ms[1] == cc({2, 0}));
    CHECK(ms[2] == cc({3, 0}));
    CHECK(gvk::multiples_up_to(cc({2, 0}), t) ==
          std::vector<CurveClass>{cc({2, 0})});
    CHECK(gvk::multiples_up_to(cc({1, 1}), Truncation({Int(1), Int(1)}, 1)).empty());
}

TEST_CASE("truncation validates its inputs") {
    CHECK_THROWS_AS(Truncation({Int(0)}, 5), std::invalid_argument);
    CHECK_THROWS_AS(Truncation({Int(1)}, -1), std::invalid_argument);
    const Truncation t({Int(2), Int(3)}, 10);
    CHECK(t.degree(cc({1, 2})) == 8);
    CHECK(t.admits(cc({1, 2})));
    CHECK(!t.admits(cc({10, 0})));
    CHECK_THROWS_AS(t.degree(cc({1})), gvk::RankMismatch);
}
