#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace skewspec {

// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix all_ones(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const mpz_class& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }
    mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    IntMatrix transposed() const;
    bool is_zero() const;
    bool is_skew_symmetric() const;
    mpz_class trace() const;

    std::vector<mpz_class> mul_vector(const std::vector<mpz_class>& v) const;

    IntMatrix operator-() const;
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const mpz_class& s, const IntMatrix& a);

    bool operator==(const IntMatrix& o) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> a_;
};

}  // namespace skewspec
