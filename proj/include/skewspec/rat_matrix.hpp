#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "skewspec/int_matrix.hpp"

namespace skewspec {

// Dense matrix over exact rationals. Every stored entry is kept in lowest
// terms with a positive denominator (GMP's canonical form); mutation goes
// through set() so the invariant cannot be bypassed by accident.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    explicit RatMatrix(const IntMatrix& m);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const mpq_class& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }
    void set(std::size_t i, std::size_t j, mpq_class v);

    RatMatrix transposed() const;
    bool is_identity() const;
    bool is_integral() const;
    // Entries in {0,1}, exactly one 1 per row and per column.
    bool is_permutation() const;

    // lcm of the entry denominators; 1 for the empty matrix. Since entries are
    // canonical this is the least positive integer x with x * M integral.
    mpz_class denominator_lcm() const;
    // s * M with the result asserted integral.
    IntMatrix scaled_integral(const mpz_class& s) const;

    std::vector<mpq_class> mul_vector(const std::vector<mpq_class>& v) const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    bool operator==(const RatMatrix& o) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> a_;

    mpq_class& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
};

}  // namespace skewspec
