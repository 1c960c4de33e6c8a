#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace skewspec {

// Polynomial over the integers. Coefficients are stored ascending by degree
// and trimmed of trailing zeros, so equality of representations is equality
// of polynomials.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    const std::vector<mpz_class>& coeffs() const { return c_; }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const mpz_class& coeff(std::size_t k) const;
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    mpz_class evaluate(const mpz_class& x) const;

    bool operator==(const IntPolynomial& o) const = default;

    // Human-readable form, highest degree first, e.g. "x^3 + 3*x".
    std::string to_string() const;
    // Compact machine form: ascending coefficients joined by commas.
    std::string coeff_string() const;

private:
    std::vector<mpz_class> c_;
};

}  // namespace skewspec
