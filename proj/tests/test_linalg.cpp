#include <doctest.h>

#include "oracles.hpp"
#include "skewspec/errors.hpp"
#include "skewspec/linalg.hpp"

using namespace skewspec;

TEST_CASE("determinant basics") {
    CHECK(det_bareiss(IntMatrix::identity(4)) == 1);
    CHECK(det_bareiss(IntMatrix(3, 3)) == 0);
    CHECK(det_bareiss(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(det_bareiss(IntMatrix::from_rows({{2, 0}, {0, 3}})) == 6);
    // Zero leading pivot forces the row-swap path.
    CHECK(det_bareiss(IntMatrix::from_rows({{0, 2, 1}, {1, 0, 0}, {3, 1, 1}})) == -1);
    CHECK_THROWS_AS(det_bareiss(IntMatrix(2, 3)), InputError);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 2000; ++trial) {
        std::size_t n = 1 + trial % 5;
        IntMatrix m = oracle::random_matrix(rng, n, -4, 4);
        CHECK(det_bareiss(m) == oracle::det_cofactor(m));
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a = oracle::random_matrix(rng, 4, -3, 3);
        IntMatrix b = oracle::random_matrix(rng, 4, -3, 3);
        CHECK(det_bareiss(a * b) == det_bareiss(a) * det_bareiss(b));
    }
}

TEST_CASE("char poly on fixed cases") {
    // 3-cycle: x^3 + 3x.
    IntMatrix c3 = IntMatrix::from_rows({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
    CHECK(char_poly(c3) == IntPolynomial{0, 3, 0, 1});
    CHECK(char_poly(c3).to_string() == "x^3 + 3*x");

    CHECK(char_poly(IntMatrix(3, 3)) == IntPolynomial{0, 0, 0, 1});
    CHECK(char_poly(IntMatrix::identity(2)) == IntPolynomial{1, -2, 1});
    // J_2: x^2 - 2x.
    CHECK(char_poly(IntMatrix::all_ones(2)) == IntPolynomial{0, -2, 1});
    CHECK_THROWS_AS(char_poly(IntMatrix(2, 3)), InputError);
}

TEST_CASE("char poly properties on random matrices") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + trial % 6;
        IntMatrix m = oracle::random_matrix(rng, n, -3, 3);
        IntPolynomial p = char_poly(m);

        CHECK(p.degree() == static_cast<long>(n));
        CHECK(p.is_monic());
        // Constant term (-1)^n det, next coefficient -trace.
        mpz_class expected_const = oracle::det_cofactor(m);
        if (n % 2 == 1) expected_const = -expected_const;
        CHECK(p.coeff(0) == expected_const);
        CHECK(p.coeff(n - 1) == -m.trace());

        // Cayley-Hamilton: p(M) = 0.
        IntMatrix acc(n, n);
        IntMatrix power = IntMatrix::identity(n);
        for (std::size_t k = 0; k <= static_cast<std::size_t>(p.degree()); ++k) {
            acc = acc + p.coeff(k) * power;
            if (k < static_cast<std::size_t>(p.degree())) power = power * m;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("rational inverse") {
    std::mt19937_64 rng(999);
    int verified = 0;
    while (verified < 100) {
        IntMatrix m = oracle::random_matrix(rng, 4, -5, 5);
        if (oracle::det_cofactor(m) == 0) continue;
        RatMatrix inv = rat_inverse(m);
        CHECK((RatMatrix(m) * inv).is_identity());
        CHECK((inv * RatMatrix(m)).is_identity());
        ++verified;
    }
    CHECK_THROWS_AS(rat_inverse(IntMatrix(3, 3)), SingularMatrixError);
    CHECK_THROWS_AS(rat_inverse(IntMatrix(2, 3)), InputError);
    // Singular but not obviously so: rank 1.
    CHECK_THROWS_AS(rat_inverse(IntMatrix::all_ones(3)), SingularMatrixError);
}

TEST_CASE("rank mod p") {
    CHECK(rank_mod_p(IntMatrix::identity(5), 2) == 5);
    CHECK(rank_mod_p(IntMatrix(4, 4), 3) == 0);
    CHECK(rank_mod_p(IntMatrix::all_ones(3), 5) == 1);
    // diag(2, 1) over F_2 has rank 1.
    CHECK(rank_mod_p(IntMatrix::from_rows({{2, 0}, {0, 1}}), 2) == 1);
    CHECK_THROWS_AS(rank_mod_p(IntMatrix::identity(2), 4), InputError);
    CHECK_THROWS_AS(rank_mod_p(IntMatrix::identity(2), 1), InputError);
}

TEST_CASE("rank mod p agrees with rational rank for prime-free determinants") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m = oracle::random_matrix(rng, 4, -4, 4);
        mpz_class det = oracle::det_cofactor(m);
        // If p does not divide det, reduction mod p preserves full rank.
        for (long p : {2, 3, 5, 7}) {
            if (det != 0 && det % p != 0) CHECK(rank_mod_p(m, p) == 4);
        }
    }
}
