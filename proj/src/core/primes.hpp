#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "core/ints.hpp"

namespace artin3 {

// Miller-Rabin with the 12 smallest prime witnesses; deterministic for
// n < 3.3e24, which covers every value handled here.
bool is_prime(const Int& n);

// Prime factorization of n >= 1: trial division up to 65537, then
// Brent-cycle rho splitting on the rough cofactor. Deterministic.
std::map<Int, int> factorize(Int n);

// Primes <= n in increasing order.
std::vector<uint32_t> primes_up_to(uint32_t n);

}  // namespace artin3
