#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewspec/numbers.hpp"
#include "skewspec/oriented_graph.hpp"
#include "skewspec/spectral.hpp"

namespace skewspec {

// Membership report for the family F_n: graphs whose walk determinant equals
// 2^floor(n/2) times an odd square-free integer.
struct FnReport {
    int order = 0;
    mpz_class det_walk;
    bool reduced_integral = false;  // 2^floor(n/2) divides det_walk
    mpz_class reduced;              // det_walk / 2^floor(n/2) when integral
    bool is_member = false;
    FactoredInteger det_factors;
    std::vector<mpz_class> odd_primes;  // distinct odd primes of det_walk
    unsigned k = 0;                     // |odd_primes|
    std::uint64_t bound = 0;            // 2^k - 1
    mpz_class b;                        // |reduced| for members, else 0
};

FnReport fn_membership(const OrientedGraph& d);

// The 2^k - 1 cap on the number of pairwise non-isomorphic cospectral mate
// classes. Only meaningful inside F_n; throws InapplicableError otherwise.
std::uint64_t mate_bound(const FnReport& r);

// Sufficient criterion for the transpose being the only possible mate:
// the graph is not isomorphic to its own transpose and the reduced walk
// determinant is (up to sign) an odd prime.
struct WdgssVerdict {
    bool self_transpose = false;
    bool reduced_is_odd_prime = false;
    bool applicable = false;  // criterion fires
    std::string verdict;      // "wdgss_by_criterion" or "not_applicable"
};

WdgssVerdict wdgss_criterion(const OrientedGraph& d);

// For members of F_n the walk matrix must have invariant factors
// (1,...,1, 2,...,2, 2b) with ceil(n/2) ones, floor(n/2)-1 twos and b the
// odd square-free part; equivalently rank of W mod 2 is ceil(n/2). Checks
// both W and W^T. Throws InapplicableError outside F_n.
bool snf_structure_check(const OrientedGraph& d);

// Last invariant factor d_n of the walk matrix (computed for W^T and W,
// asserted equal).
mpz_class last_invariant_factor(const OrientedGraph& d);

struct AuditCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AuditResult {
    std::vector<AuditCheck> checks;
    bool all_passed() const;
    void add(std::string name, bool pass, std::string detail = "");
};

// Structural facts every orthogonal certificate of an F_n member must satisfy:
// odd level dividing the last invariant factor of both endpoints, and for each
// odd prime p | level, rank_p(d_n Q) = 1 with (d_n Q)^T (d_n Q) = 0 mod p^2.
AuditResult certificate_lemma_audit(const QCertificate& cert, const FnReport& source_report);

// Facts about a pair of certificates out of the same F_n source: shared odd
// primes of the two levels cannot divide the level of Q1^T Q2, and equal
// levels force Q1^T Q2 to be a permutation (i.e. isomorphic targets).
AuditResult pairwise_level_audit(const QCertificate& a, const QCertificate& b);

}  // namespace skewspec
