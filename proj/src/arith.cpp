#include "gvk/arith.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace gvk {

namespace {

void require_positive(const Int& r, const char* fn) {
    if (r < 1)
        throw std::invalid_argument(std::string(fn) + ": argument must be >= 1, got " +
                                    r.get_str());
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factorize(const Int& r) {
    require_positive(r, "factorize");
    std::vector<std::pair<Int, unsigned>> out;
    Int n = r;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        do {
            n /= p;
            ++e;
        } while (n % p == 0);
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int mobius(const Int& r) {
    require_positive(r, "mobius");
    const auto factors = factorize(r);
    for (const auto& [p, e] : factors)
        if (e > 1) return 0;
    return factors.size() % 2 == 0 ? 1 : -1;
}

Int euler_phi(const Int& r) {
    require_positive(r, "euler_phi");
    Int phi = 1;
    for (const auto& [p, e] : factorize(r)) {
        Int power = 1;
        for (unsigned i = 1; i < e; ++i) power *= p;
        phi *= power * (p - 1);
    }
    return phi;
}

std::vector<Int> divisors(const Int& r) {
    require_positive(r, "divisors");
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= r; ++d) {
        if (r % d != 0) continue;
        small.push_back(d);
        if (d * d != r) large.push_back(r / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

unsigned long as_ulong(const Int& r, const char* fn) {
    if (!r.fits_ulong_p())
        throw std::invalid_argument(std::string(fn) +
                                    ": argument too large for numeric evaluation");
    return r.get_ui();
}

}  // namespace

std::complex<double> primitive_root_sum(const Int& r, long power) {
    require_positive(r, "primitive_root_sum");
    const unsigned long m = as_ulong(r, "primitive_root_sum");
    std::complex<double> acc{0.0, 0.0};
    for (unsigned long k = 1; k <= m; ++k) {
        if (std::gcd(k, m) != 1) continue;
        // Reduce the exponent exactly before touching floats.
        Int e = (Int(k) * power) % static_cast<long>(m);
        if (e < 0) e += static_cast<long>(m);
        const double angle =
            2.0 * std::numbers::pi * e.get_d() / static_cast<double>(m);
        acc += std::polar(1.0, angle);
    }
    return acc;
}

std::complex<double> cyclotomic_norm_product(const Int& r) {
    if (r < 2)
        throw std::invalid_argument("cyclotomic_norm_product: argument must be >= 2");
    const unsigned long m = as_ulong(r, "cyclotomic_norm_product");
    std::complex<double> acc{1.0, 0.0};
    for (unsigned long k = 1; k < m; ++k) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
        acc *= std::complex<double>{1.0, 0.0} - std::polar(1.0, angle);
    }
    return acc;
}

}  // namespace gvk
