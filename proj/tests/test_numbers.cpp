#include <doctest.h>

#include "skewspec/numbers.hpp"

using namespace skewspec;

TEST_CASE("primality") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(-7));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(191));
    CHECK(is_prime(257));
    CHECK(is_prime(1799) == false);  // 7 * 257
    CHECK_FALSE(is_prime(561));      // Carmichael
    CHECK_FALSE(is_prime(341));      // Fermat pseudoprime base 2
    CHECK(is_prime(mpz_class("1000000007")));
    CHECK(is_prime(mpz_class("18446744073709551557")));  // largest prime < 2^64
    // Beyond 64 bits: 2^89 - 1 is a Mersenne prime; 2^87 - 1 is composite.
    mpz_class m89 = (mpz_class(1) << 89) - 1;
    CHECK(is_prime(m89));
    mpz_class m87 = (mpz_class(1) << 87) - 1;
    CHECK_FALSE(is_prime(m87));
}

TEST_CASE("factorization fixed values") {
    FactoredInteger f = factorize(-14392);
    CHECK(f.sign == -1);
    CHECK(f.factors == std::map<mpz_class, unsigned>{{2, 3}, {7, 1}, {257, 1}});
    CHECK(f.to_string() == "(-1) * 2^3 * 7 * 257");
    CHECK(f.reconstruct() == -14392);
    CHECK_FALSE(f.square_free());  // 2^3 divides it
    CHECK(factorize(-1799).square_free());
    CHECK(f.odd_primes() == std::vector<mpz_class>{7, 257});

    FactoredInteger g = factorize(1528);
    CHECK(g.sign == 1);
    CHECK(g.factors == std::map<mpz_class, unsigned>{{2, 3}, {191, 1}});
    CHECK(g.to_string() == "2^3 * 191");

    CHECK(factorize(0).is_zero());
    CHECK(factorize(0).to_string() == "0");
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(1).sign == 1);
    CHECK(factorize(1).to_string() == "1");
    CHECK(factorize(-1).sign == -1);
    CHECK(factorize(-1).reconstruct() == -1);

    FactoredInteger sq = factorize(360);  // 2^3 * 3^2 * 5
    CHECK_FALSE(sq.square_free());
    CHECK(sq.factors == std::map<mpz_class, unsigned>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("factorization needs the rho stage for large semiprimes") {
    mpz_class p("1000000007"), q("1000000009");
    FactoredInteger f = factorize(p * q);
    CHECK(f.factors == std::map<mpz_class, unsigned>{{p, 1}, {q, 1}});
    CHECK(f.reconstruct() == p * q);

    // Prime square: exercises the perfect-power path.
    FactoredInteger s = factorize(p * p);
    CHECK(s.factors == std::map<mpz_class, unsigned>{{p, 2}});
    CHECK_FALSE(s.square_free());
}

TEST_CASE("factorization round trip on a range") {
    for (long x = -300; x <= 300; ++x) {
        FactoredInteger f = factorize(x);
        CHECK(f.reconstruct() == x);
        for (const auto& [prime, exp] : f.factors) {
            CHECK(is_prime(prime));
            CHECK(exp >= 1);
        }
    }
}
