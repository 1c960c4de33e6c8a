#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace skewspec {

// Primality test. Deterministic Miller-Rabin base set for n < 2^64; 40
// pseudo-random witness rounds (fixed seed) beyond that.
bool is_prime(const mpz_class& n);

// Sign and multiset of prime factors of an integer. factors is empty for
// 0 and +/-1; sign 0 only for the zero integer.
struct FactoredInteger {
    int sign = 0;
    std::map<mpz_class, unsigned> factors;

    bool is_zero() const { return sign == 0; }
    mpz_class reconstruct() const;
    bool square_free() const;
    std::vector<mpz_class> odd_primes() const;
    // e.g. "(-1) * 2^3 * 7 * 257"
    std::string to_string() const;
};

// Complete factorization: trial division up to 10^6, then Brent-cycle rho
// with a deterministic parameter schedule, splitting recursively until every
// cofactor passes is_prime.
FactoredInteger factorize(const mpz_class& x);

}  // namespace skewspec
