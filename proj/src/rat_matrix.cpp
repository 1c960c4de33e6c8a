#include "skewspec/rat_matrix.hpp"

#include <sstream>

#include "skewspec/errors.hpp"

namespace skewspec {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = m(i, j);
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void RatMatrix::set(std::size_t i, std::size_t j, mpq_class v) {
    // mpq_class built from a numerator/denominator pair is not reduced
    // automatically; normalize here so stored entries are always canonical.
    v.canonicalize();
    at(i, j) = std::move(v);
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = (*this)(i, j);
    return t;
}

bool RatMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool RatMatrix::is_integral() const {
    for (const auto& x : a_)
        if (x.get_den() != 1) return false;
    return true;
}

bool RatMatrix::is_permutation() const {
    if (!is_square()) return false;
    std::vector<int> col_ones(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        int row_ones = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            const mpq_class& x = (*this)(i, j);
            if (x == 1) {
                ++row_ones;
                ++col_ones[j];
            } else if (x != 0) {
                return false;
            }
        }
        if (row_ones != 1) return false;
    }
    for (int c : col_ones)
        if (c != 1) return false;
    return true;
}

mpz_class RatMatrix::denominator_lcm() const {
    mpz_class l = 1;
    for (const auto& x : a_) {
        mpz_class d = x.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

IntMatrix RatMatrix::scaled_integral(const mpz_class& s) const {
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            mpq_class v = s * (*this)(i, j);
            v.canonicalize();
            if (v.get_den() != 1)
                throw InputError("scaled_integral: scale does not clear denominators");
            m(i, j) = v.get_num();
        }
    return m;
}

std::vector<mpq_class> RatMatrix::mul_vector(const std::vector<mpq_class>& v) const {
    if (v.size() != cols_) throw InputError("mul_vector: dimension mismatch");
    std::vector<mpq_class> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        mpq_class acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product: dimension mismatch");
    RatMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const mpq_class& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b(k, j);
        }
    return m;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << (*this)(i, j).get_str();
        }
        os << "]\n";
    }
    return os.str();
}

}  // namespace skewspec
