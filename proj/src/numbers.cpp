#include "skewspec/numbers.hpp"

#include <sstream>
#include <stdexcept>

#include "skewspec/errors.hpp"

namespace skewspec {

namespace {

// One Miller-Rabin round: returns false iff a witnesses that n is composite.
// n must be odd and > 2; d, s satisfy n - 1 = d * 2^s with d odd.
bool mr_round(const mpz_class& n, const mpz_class& a, const mpz_class& d, unsigned long s) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

bool miller_rabin(const mpz_class& n) {
    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // This base set is a proven deterministic witness set below 2^64.
        static const long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
        for (long b : bases) {
            mpz_class a = b;
            if (a % n == 0) continue;
            if (!mr_round(n, a, d, s)) return false;
        }
        return true;
    }

    gmp_randstate_t st;
    gmp_randinit_mt(st);
    gmp_randseed_ui(st, 0x5eed5eedUL);
    mpz_class a;
    for (int round = 0; round < 40; ++round) {
        mpz_class span = n - 3;
        mpz_urandomm(a.get_mpz_t(), st, span.get_mpz_t());
        a += 2;  // a in [2, n-2]
        if (!mr_round(n, a, d, s)) {
            gmp_randclear(st);
            return false;
        }
    }
    gmp_randclear(st);
    return true;
}

}  // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    if (n < 4) return true;  // 2, 3
    if (mpz_even_p(n.get_mpz_t())) return false;
    for (long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    return miller_rabin(n);
}

mpz_class FactoredInteger::reconstruct() const {
    if (sign == 0) return 0;
    mpz_class v = sign;
    for (const auto& [p, e] : factors) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

bool FactoredInteger::square_free() const {
    for (const auto& [p, e] : factors)
        if (e > 1) return false;
    return true;
}

std::vector<mpz_class> FactoredInteger::odd_primes() const {
    std::vector<mpz_class> out;
    for (const auto& [p, e] : factors)
        if (p != 2) out.push_back(p);
    return out;
}

std::string FactoredInteger::to_string() const {
    if (sign == 0) return "0";
    std::ostringstream os;
    bool first = true;
    if (sign < 0) {
        os << "(-1)";
        first = false;
    }
    for (const auto& [p, e] : factors) {
        if (!first) os << " * ";
        os << p.get_str();
        if (e > 1) os << '^' << e;
        first = false;
    }
    if (first) os << '1';
    return os.str();
}

namespace {

mpz_class brent_rho(const mpz_class& n) {
    // Brent's cycle variant of Pollard rho, x^2 + c, deterministic restarts.
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1, ys, q = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                const unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    mpz_class diff = x - y;
                    q = q * abs(diff) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            // Backtrack one step at a time to find the actual factor.
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                mpz_class diff = x - ys;
                diff = abs(diff);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != n) return d;
        // Cycle collapsed for this c; retry with the next polynomial.
    }
}

void split(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    // Perfect powers would stall rho on a prime square; peel them first.
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        split(r, out);
        split(r, out);
        return;
    }
    mpz_class d = brent_rho(n);
    split(d, out);
    split(n / d, out);
}

}  // namespace

FactoredInteger factorize(const mpz_class& x) {
    FactoredInteger f;
    if (x == 0) return f;
    f.sign = x < 0 ? -1 : 1;
    mpz_class n = abs(x);

    while (mpz_even_p(n.get_mpz_t())) {
        ++f.factors[2];
        n /= 2;
    }
    for (mpz_class d = 3; d <= 1000000 && d * d <= n; d += 2) {
        while (n % d == 0) {
            ++f.factors[d];
            n /= d;
        }
    }
    if (n > 1) split(n, f.factors);
    return f;
}

}  // namespace skewspec
