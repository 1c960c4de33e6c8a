#include <algorithm>
#include <stdexcept>

#include "skewspec/errors.hpp"
#include "skewspec/linalg.hpp"

namespace skewspec {

namespace {

struct Worker {
    std::size_t n;
    IntMatrix b, u, v;  // invariant maintained throughout: input == u * b * v

    explicit Worker(const IntMatrix& m)
        : n(m.rows()), b(m), u(IntMatrix::identity(n)), v(IntMatrix::identity(n)) {}

    // Row operations on b pair with inverse column operations on u,
    // column operations on b with inverse row operations on v.
    void swap_rows(std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(b(r1, j), b(r2, j));
            std::swap(u(j, r1), u(j, r2));
        }
    }
    void swap_cols(std::size_t c1, std::size_t c2) {
        if (c1 == c2) return;
        for (std::size_t i = 0; i < n; ++i) {
            std::swap(b(i, c1), b(i, c2));
            std::swap(v(c1, i), v(c2, i));
        }
    }
    // b: row r -= q * row k   =>   u: col k += q * col r
    void row_sub(std::size_t r, const mpz_class& q, std::size_t k) {
        for (std::size_t j = 0; j < n; ++j) b(r, j) -= q * b(k, j);
        for (std::size_t i = 0; i < n; ++i) u(i, k) += q * u(i, r);
    }
    // b: col c -= q * col k   =>   v: row k += q * row c
    void col_sub(std::size_t c, const mpz_class& q, std::size_t k) {
        for (std::size_t i = 0; i < n; ++i) b(i, c) -= q * b(i, k);
        for (std::size_t j = 0; j < n; ++j) v(k, j) += q * v(c, j);
    }
    // b: row k += row r        =>   u: col r -= col k
    void row_add(std::size_t k, std::size_t r) {
        for (std::size_t j = 0; j < n; ++j) b(k, j) += b(r, j);
        for (std::size_t i = 0; i < n; ++i) u(i, r) -= u(i, k);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < n; ++j) b(r, j) = -b(r, j);
        for (std::size_t i = 0; i < n; ++i) u(i, r) = -u(i, r);
    }

    // Smallest |entry| in the submatrix at (k,k), ties by (row, col).
    bool find_pivot(std::size_t k, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        mpz_class best;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j) {
                if (b(i, j) == 0) continue;
                mpz_class mag = abs(b(i, j));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }
};

}  // namespace

IntMatrix SnfDecomposition::diag_matrix() const {
    IntMatrix d(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
    return d;
}

IntMatrix SnfDecomposition::reconstruct() const { return u * diag_matrix() * v; }

SnfDecomposition smith_normal_form(const IntMatrix& m) {
    if (!m.is_square()) throw UnsupportedError("smith_normal_form: matrix must be square");
    if (det_bareiss(m) == 0)
        throw UnsupportedError("smith_normal_form: singular matrices are not supported");

    const std::size_t n = m.rows();
    Worker w(m);

    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            std::size_t pi = k, pj = k;
            if (!w.find_pivot(k, pi, pj))
                throw std::logic_error("smith_normal_form: zero submatrix in nonsingular input");
            w.swap_rows(k, pi);
            w.swap_cols(k, pj);

            // Reduce the pivot row and column; truncated quotients leave
            // remainders strictly smaller than the pivot.
            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (w.b(i, k) == 0) continue;
                mpz_class q = w.b(i, k) / w.b(k, k);
                if (q != 0) w.row_sub(i, q, k);
                if (w.b(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (w.b(k, j) == 0) continue;
                mpz_class q = w.b(k, j) / w.b(k, k);
                if (q != 0) w.col_sub(j, q, k);
                if (w.b(k, j) != 0) clean = false;
            }
            if (!clean) continue;  // smaller residues appeared; re-pick the pivot

            // Pivot must divide every remaining entry for the chain property;
            // if not, fold the offending row in and keep reducing.
            bool divides = true;
            for (std::size_t i = k + 1; i < n && divides; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (w.b(i, j) % w.b(k, k) != 0) {
                        w.row_add(k, i);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (w.b(k, k) < 0) w.negate_row(k);
    }

    SnfDecomposition out;
    out.u = std::move(w.u);
    out.v = std::move(w.v);
    out.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.diag[i] = w.b(i, i);

    // The decomposition is cheap to verify and load-bearing; check it always.
    if (out.reconstruct() != m)
        throw std::logic_error("smith_normal_form: reconstruction mismatch");
    mpz_class du = det_bareiss(out.u), dv = det_bareiss(out.v);
    if (abs(du) != 1 || abs(dv) != 1)
        throw std::logic_error("smith_normal_form: transforms are not unimodular");
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (out.diag[i] < 0 || out.diag[i + 1] % out.diag[i] != 0)
            throw std::logic_error("smith_normal_form: invariant factor chain broken");
    }
    return out;
}

}  // namespace skewspec
