#include "skewspec/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "skewspec/errors.hpp"
#include "skewspec/numbers.hpp"

namespace skewspec {

namespace {

mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("bareiss: division was not exact");
    return q;
}

}  // namespace

mpz_class det_bareiss(const IntMatrix& m) {
    if (!m.is_square()) throw InputError("det_bareiss: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    // Work on a copy; a[i][j] holds the Bareiss-condensed entries.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntPolynomial char_poly(const IntMatrix& m) {
    if (!m.is_square()) throw InputError("char_poly: matrix must be square");
    const std::size_t n = m.rows();

    // Berkowitz: grow the leading principal block one row/column at a time.
    // p holds the charpoly of the current block, highest degree first.
    std::vector<mpz_class> p{1};
    for (std::size_t k = 1; k <= n; ++k) {
        // Toeplitz column for block k: 1, -a_kk, -(R v), -(R A v), ... where
        // R is the new row, v starts as the new column, A the previous block.
        std::vector<mpz_class> t(k + 1);
        t[0] = 1;
        t[1] = -m(k - 1, k - 1);
        std::vector<mpz_class> v(k - 1);
        for (std::size_t i = 0; i + 1 < k; ++i) v[i] = m(i, k - 1);
        for (std::size_t j = 2; j <= k; ++j) {
            mpz_class dot = 0;
            for (std::size_t i = 0; i + 1 < k; ++i) dot += m(k - 1, i) * v[i];
            t[j] = -dot;
            if (j < k) {
                std::vector<mpz_class> w(k - 1);
                for (std::size_t r = 0; r + 1 < k; ++r) {
                    mpz_class acc = 0;
                    for (std::size_t c = 0; c + 1 < k; ++c) acc += m(r, c) * v[c];
                    w[r] = acc;
                }
                v = std::move(w);
            }
        }
        // p <- T * p with T the lower-triangular Toeplitz matrix built from t.
        std::vector<mpz_class> q(k + 1);
        for (std::size_t i = 0; i <= k; ++i) {
            mpz_class acc = 0;
            const std::size_t jmax = std::min(i, p.size() - 1);
            for (std::size_t j = 0; j <= jmax; ++j) acc += t[i - j] * p[j];
            q[i] = acc;
        }
        p = std::move(q);
    }

    std::reverse(p.begin(), p.end());
    return IntPolynomial(std::move(p));
}

RatMatrix rat_inverse(const IntMatrix& m) { return rat_inverse(RatMatrix(m)); }

RatMatrix rat_inverse(const RatMatrix& m) {
    if (!m.is_square()) throw InputError("rat_inverse: matrix must be square");
    const std::size_t n = m.rows();

    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        inv[i][i] = 1;
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw SingularMatrixError("rat_inverse: matrix is singular");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);

        mpq_class scale = 1 / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }

    RatMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, inv[i][j]);
    return out;
}

std::size_t rank_mod_p(const IntMatrix& m, const mpz_class& p) {
    if (p < 2 || !is_prime(p)) throw InputError("rank_mod_p: modulus must be prime");
    const std::size_t rows = m.rows(), cols = m.cols();

    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class r;
            mpz_mod(r.get_mpz_t(), m(i, j).get_mpz_t(), p.get_mpz_t());
            a[i][j] = r;
        }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);

        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), a[rank][col].get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::logic_error("rank_mod_p: pivot not invertible mod p");
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            mpz_class f = a[r][col] * inv % p;
            for (std::size_t j = col; j < cols; ++j) {
                a[r][j] = (a[r][j] - f * a[rank][j]) % p;
                if (a[r][j] < 0) a[r][j] += p;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace skewspec
