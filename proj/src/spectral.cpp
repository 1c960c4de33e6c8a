#include "skewspec/spectral.hpp"

#include <openssl/evp.h>

#include <stdexcept>

#include "skewspec/errors.hpp"
#include "skewspec/linalg.hpp"

namespace skewspec {

IntMatrix skew_adjacency(const OrientedGraph& d) {
    const int n = d.order();
    IntMatrix s(n, n);
    for (const auto& [u, v] : d.arcs()) {
        s(u, v) = 1;
        s(v, u) = -1;
    }
    return s;
}

OrientedGraph graph_from_skew(const IntMatrix& s) {
    if (!s.is_square()) throw InputError("graph_from_skew: matrix must be square");
    const std::size_t n = s.rows();
    if (n < 1 || n > 10) throw InputError("graph_from_skew: order must be between 1 and 10");
    if (!s.is_skew_symmetric()) throw InputError("graph_from_skew: matrix is not skew-symmetric");
    std::vector<std::pair<int, int>> arcs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const mpz_class& x = s(i, j);
            if (x == 1) arcs.emplace_back(static_cast<int>(i), static_cast<int>(j));
            else if (x == -1) arcs.emplace_back(static_cast<int>(j), static_cast<int>(i));
            else if (x != 0) throw InputError("graph_from_skew: entries must be -1, 0 or 1");
        }
    return OrientedGraph(static_cast<int>(n), arcs);
}

IntMatrix walk_matrix(const OrientedGraph& d) {
    const int n = d.order();
    IntMatrix s = skew_adjacency(d);
    IntMatrix w(n, n);
    std::vector<mpz_class> col(n, 1);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) w(i, j) = col[i];
        if (j + 1 < n) col = s.mul_vector(col);
    }
    return w;
}

bool is_controllable(const OrientedGraph& d) { return det_bareiss(walk_matrix(d)) != 0; }

std::string SpectralFingerprint::serialize() const {
    return "s:" + p_skew.coeff_string() + ";js:" + p_ones_skew.coeff_string();
}

std::string SpectralFingerprint::digest_hex() const {
    const std::string data = serialize();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1 || len < 16)
        throw std::runtime_error("sha-256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(32);
    for (int i = 0; i < 16; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

SpectralFingerprint fingerprint(const OrientedGraph& d) {
    IntMatrix s = skew_adjacency(d);
    IntMatrix js = IntMatrix::all_ones(d.order()) - s;
    return SpectralFingerprint{char_poly(s), char_poly(js)};
}

bool generalized_cospectral(const OrientedGraph& a, const OrientedGraph& b) {
    if (a.order() != b.order()) return false;
    return fingerprint(a) == fingerprint(b);
}

QCertificate recover_q(const OrientedGraph& source, const OrientedGraph& target) {
    if (source.order() != target.order())
        throw InputError("recover_q: graphs must have the same order");

    IntMatrix ws = walk_matrix(source);
    IntMatrix wt = walk_matrix(target);
    if (det_bareiss(ws) == 0)
        throw NotControllableError("recover_q: source graph is not controllable");

    RatMatrix wt_inv;
    try {
        wt_inv = rat_inverse(wt);
    } catch (const SingularMatrixError&) {
        throw NotControllableError("recover_q: target graph is not controllable");
    }
    if (!generalized_cospectral(source, target))
        throw InputError("recover_q: graphs are not generalized cospectral");

    QCertificate cert{RatMatrix(ws) * wt_inv, 0, source, target};
    cert.level = cert.q.denominator_lcm();
    if (!verify_gamma_membership(cert))
        throw MateVerificationError(
            "recover_q: W(D) W(C)^-1 failed the exact conjugation identities");
    return cert;
}

bool verify_gamma_membership(const QCertificate& cert) {
    const RatMatrix& q = cert.q;
    if (!q.is_square() || q.rows() != static_cast<std::size_t>(cert.source.order()) ||
        cert.source.order() != cert.target.order())
        return false;
    const std::size_t n = q.rows();

    if (!(q.transposed() * q).is_identity()) return false;

    // Q e = e: every row sums to 1.
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class sum = 0;
        for (std::size_t j = 0; j < n; ++j) sum += q(i, j);
        if (sum != 1) return false;
    }

    RatMatrix lhs = q.transposed() * RatMatrix(skew_adjacency(cert.source)) * q;
    return lhs == RatMatrix(skew_adjacency(cert.target));
}

}  // namespace skewspec
