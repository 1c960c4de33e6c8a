#include "skewspec/int_matrix.hpp"

#include <sstream>

#include "skewspec/errors.hpp"

namespace skewspec {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::all_ones(std::size_t n) {
    IntMatrix m(n, n);
    for (auto& x : m.a_) x = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw InputError("from_rows: ragged row lengths");
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_skew_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

mpz_class IntMatrix::trace() const {
    if (!is_square()) throw InputError("trace: matrix must be square");
    mpz_class t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

std::vector<mpz_class> IntMatrix::mul_vector(const std::vector<mpz_class>& v) const {
    if (v.size() != cols_) throw InputError("mul_vector: dimension mismatch");
    std::vector<mpz_class> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        mpz_class acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw InputError("matrix addition: dimension mismatch");
    IntMatrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = a.a_[k] + b.a_[k];
    return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw InputError("matrix subtraction: dimension mismatch");
    IntMatrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = a.a_[k] - b.a_[k];
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product: dimension mismatch");
    IntMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const mpz_class& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
        }
    return m;
}

IntMatrix operator*(const mpz_class& s, const IntMatrix& a) {
    IntMatrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = s * a.a_[k];
    return m;
}

std::string IntMatrix::to_string() const {
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
