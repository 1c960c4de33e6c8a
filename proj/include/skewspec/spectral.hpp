#pragma once

#include <string>

#include "skewspec/int_matrix.hpp"
#include "skewspec/oriented_graph.hpp"
#include "skewspec/polynomial.hpp"
#include "skewspec/rat_matrix.hpp"

namespace skewspec {

// Skew adjacency matrix: S(u,v) = 1 and S(v,u) = -1 for each arc u->v.
IntMatrix skew_adjacency(const OrientedGraph& d);
// Inverse of skew_adjacency; validates skew symmetry and {-1,0,1} entries.
OrientedGraph graph_from_skew(const IntMatrix& s);

// Walk matrix [e, Se, S^2 e, ..., S^(n-1) e] with e the all-ones vector.
IntMatrix walk_matrix(const OrientedGraph& d);
// det W != 0.
bool is_controllable(const OrientedGraph& d);

// The pair of characteristic polynomials (of S and of J - S) that two graphs
// must share to count as generalized cospectral.
struct SpectralFingerprint {
    IntPolynomial p_skew;       // char poly of S
    IntPolynomial p_ones_skew;  // char poly of J - S

    bool operator==(const SpectralFingerprint& o) const = default;

    // Stable machine form fed to the digest.
    std::string serialize() const;
    // 128-bit truncation of SHA-256 over serialize(), as 32 hex chars. Used
    // for census bucketing; candidate buckets are reconfirmed exactly.
    std::string digest_hex() const;
};

SpectralFingerprint fingerprint(const OrientedGraph& d);
bool generalized_cospectral(const OrientedGraph& a, const OrientedGraph& b);

// A rational orthogonal conjugation witness between two graphs: Q^T Q = I,
// Q e = e, Q^T S(source) Q = S(target). level is the lcm of the lowest-term
// entry denominators.
struct QCertificate {
    RatMatrix q;
    mpz_class level;
    OrientedGraph source;
    OrientedGraph target;
};

// Q = W(source) * W(target)^-1 for a controllable generalized-cospectral pair.
// The returned certificate has been verified against the exact identities.
QCertificate recover_q(const OrientedGraph& source, const OrientedGraph& target);

// Exact check of the three conjugation identities; no side effects.
bool verify_gamma_membership(const QCertificate& cert);

}  // namespace skewspec
