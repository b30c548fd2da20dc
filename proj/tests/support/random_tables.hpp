#pragma once

// Deterministic random divisor-closed integer tables shared by the unit
// and acceptance suites.

#include <random>
#include <vector>

#include "gvk/arith.hpp"
#include "gvk/transforms.hpp"

namespace testgen {

enum class PairingType { CalabiYau, Fano, Mixed };

inline gvk::InvariantTable random_table(std::mt19937_64& rng, gvk::TableKind kind,
                                        int n, PairingType ptype) {
    using gvk::CurveClass;
    using gvk::Int;
    using gvk::Rat;

    std::uniform_int_distribution<int> rank_dist(1, 3);
    std::uniform_int_distribution<int> cutoff_dist(6, 12);
    std::uniform_int_distribution<int> dim_dist(3, 5);
    std::uniform_int_distribution<long> value_dist(-9, 9);
    const int rank = rank_dist(rng);
    const int cutoff = cutoff_dist(rng);
    const int m = dim_dist(rng);

    std::vector<Int> pairing(rank, 0);
    if (ptype == PairingType::Fano) {
        std::uniform_int_distribution<long> f(1, 2);
        for (auto& k : pairing) k = -f(rng);
    } else if (ptype == PairingType::Mixed) {
        std::uniform_int_distribution<int> coin(0, 1);
        bool any_zero = false;
        for (auto& k : pairing) {
            if (coin(rng))
                k = -1;
            else
                any_zero = true;
        }
        if (!any_zero) pairing[0] = 0;
    }
    gvk::GeometryModel geom("seed", rank, m, pairing);
    gvk::Truncation trunc(std::vector<Int>(rank, 1), cutoff);

    // Insertion degrees that satisfy the one/two-insertion hypotheses on
    // canonical-degree-zero keys (where they bind).
    std::vector<int> degrees;
    if (n == 1) {
        degrees = {m - 2};
    } else if (n == 2) {
        std::uniform_int_distribution<int> j(0, m - 1);
        const int a = j(rng);
        degrees = {a, m - 1 - a};
    } else {
        std::uniform_int_distribution<int> d(0, m);
        for (int i = 0; i < n; ++i) degrees.push_back(d(rng));
    }

    gvk::InvariantTable table{kind, n, degrees, geom, trunc, {}};
    std::uniform_int_distribution<int> count_dist(1, 6);
    std::uniform_int_distribution<long> coord_dist(0, 4);
    const int want = count_dist(rng);
    for (int guard = 0; static_cast<int>(table.entries.size()) < want && guard < 64;
         ++guard) {
        std::vector<Int> coords(rank);
        bool nonzero = false;
        for (auto& c : coords) {
            const long v = coord_dist(rng);
            c = v;
            nonzero |= v > 0;
        }
        if (!nonzero) continue;
        CurveClass beta(std::move(coords));
        if (!trunc.admits(beta)) continue;
        table.entries.emplace(beta, Rat(value_dist(rng)));
        if (gvk::canonical_degree(geom, beta) == 0)
            for (const Int& r : gvk::divisors(beta.index())) {
                if (r == 1) continue;
                const CurveClass part = gvk::divide(beta, r);
                if (!table.entries.contains(part))
                    table.entries.emplace(part, Rat(value_dist(rng)));
            }
    }
    if (table.entries.empty())
        table.entries.emplace(CurveClass(std::vector<Int>(rank, 1)), Rat(1));
    table.validate();
    return table;
}

inline PairingType pairing_cycle(int i) {
    switch (i % 3) {
        case 0: return PairingType::CalabiYau;
        case 1: return PairingType::Fano;
        default: return PairingType::Mixed;
    }
}

}  // namespace testgen
