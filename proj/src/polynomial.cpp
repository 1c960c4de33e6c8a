#include "skewspec/polynomial.hpp"

#include <sstream>

namespace skewspec {

namespace {
const mpz_class kZero = 0;

void trim(std::vector<mpz_class>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    trim(c_);
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    c_.assign(coeffs.begin(), coeffs.end());
    trim(c_);
}

const mpz_class& IntPolynomial::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long d = degree(); d >= 0; --d) {
        const mpz_class& a = c_[d];
        if (a == 0) continue;
        mpz_class mag = abs(a);
        if (first) {
            if (a < 0) os << '-';
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (mag != 1 || d == 0) {
            os << mag.get_str();
            if (d > 0) os << '*';
        }
        if (d > 0) {
            os << 'x';
            if (d > 1) os << '^' << d;
        }
    }
    return os.str();
}

std::string IntPolynomial::coeff_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k) os << ',';
        os << c_[k].get_str();
    }
    return os.str();
}

}  // namespace skewspec
