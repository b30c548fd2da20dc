#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "gvk/numeric.hpp"

namespace gvk {

/// Prime factorization by deterministic trial division, ascending primes.
std::vector<std::pair<Int, unsigned>> factorize(const Int& r);

/// Mobius function: 0 if r has a squared prime factor, else (-1)^(#primes).
int mobius(const Int& r);

/// Euler totient: count of integers in [1, r] coprime to r.
Int euler_phi(const Int& r);

/// All positive divisors of r, ascending.
std::vector<Int> divisors(const Int& r);

/// Numerically evaluates the sum of zeta^power over the primitive r-th
/// roots of unity zeta. Agrees with the Ramanujan-sum values: mu(r) for
/// power = +/-1 and phi(r) for power = 0. Validation-only float path.
std::complex<double> primitive_root_sum(const Int& r, long power);

/// Numerically evaluates prod_{k=1}^{r-1} (1 - zeta^k) for the primitive
/// root zeta = e^{2 pi i / r}; equals r. Requires r >= 2. Validation-only.
std::complex<double> cyclotomic_norm_product(const Int& r);

}  // namespace gvk
