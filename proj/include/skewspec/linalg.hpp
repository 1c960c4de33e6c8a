#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "skewspec/int_matrix.hpp"
#include "skewspec/polynomial.hpp"
#include "skewspec/rat_matrix.hpp"

namespace skewspec {

// Exact determinant by Bareiss fraction-free elimination with row pivoting.
// Every internal division is checked to be exact; a remainder indicates a
// broken invariant and raises logic_error rather than returning garbage.
mpz_class det_bareiss(const IntMatrix& m);

// Characteristic polynomial det(xI - M) via the division-free Berkowitz
// recurrence, returned with ascending coefficients. Always monic of degree n.
IntPolynomial char_poly(const IntMatrix& m);

// Exact inverse over the rationals. Throws SingularMatrixError if det = 0.
RatMatrix rat_inverse(const IntMatrix& m);
RatMatrix rat_inverse(const RatMatrix& m);

// Rank of m reduced mod p. p must be prime (checked).
std::size_t rank_mod_p(const IntMatrix& m, const mpz_class& p);

// Smith normal form decomposition m = u * diag(d) * v of a nonsingular
// square integer matrix, with u, v unimodular, d_i >= 0 and d_i | d_{i+1}.
struct SnfDecomposition {
    IntMatrix u;
    std::vector<mpz_class> diag;
    IntMatrix v;

    IntMatrix diag_matrix() const;
    IntMatrix reconstruct() const;  // u * diag * v
};

// Pivot policy is deterministic: smallest absolute value in the working
// submatrix, ties broken by (row, col). The returned decomposition is
// re-verified internally (reconstruction, unimodularity, divisibility chain).
SnfDecomposition smith_normal_form(const IntMatrix& m);

}  // namespace skewspec
