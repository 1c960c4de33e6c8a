#include "skewspec/verification.hpp"

#include <algorithm>
#include <sstream>

#include "skewspec/builtin_examples.hpp"
#include "skewspec/census.hpp"
#include "skewspec/characterization.hpp"
#include "skewspec/linalg.hpp"
#include "skewspec/numbers.hpp"
#include "skewspec/spectral.hpp"

namespace skewspec {

bool VerificationReport::all_passed() const {
    return std::all_of(lines.begin(), lines.end(),
                       [](const VerificationLine& l) { return l.pass; });
}

namespace {

void expect(VerificationReport& rep, const std::string& name, const std::string& expected,
            const std::string& actual) {
    rep.lines.push_back({name, expected, actual, expected == actual});
}

void expect_bool(VerificationReport& rep, const std::string& name, bool expected, bool actual) {
    expect(rep, name, expected ? "true" : "false", actual ? "true" : "false");
}

std::string diag_string(const std::vector<mpz_class>& d) {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) os << ',';
        os << d[i].get_str();
    }
    return os.str();
}

std::string levels_string(const std::vector<mpz_class>& levels) {
    std::vector<mpz_class> s = levels;
    std::sort(s.begin(), s.end());
    return diag_string(s);
}

}  // namespace

VerificationReport verify_builtin_examples() {
    VerificationReport rep;

    // ---- Example 1: the 7-vertex pair ----
    const OrientedGraph& d1 = builtin::example1_d();
    const OrientedGraph& c1 = builtin::example1_c();

    expect(rep, "ex1: arcs of D", "10", std::to_string(d1.arc_count()));
    expect(rep, "ex1: trace of S(D)^2", "-20",
           (skew_adjacency(d1) * skew_adjacency(d1)).trace().get_str());

    FnReport fn1 = fn_membership(d1);
    expect(rep, "ex1: det W(D)", "-14392", fn1.det_walk.get_str());
    expect(rep, "ex1: det factorization", "(-1) * 2^3 * 7 * 257", fn1.det_factors.to_string());
    expect(rep, "ex1: det W(C)", "-14392",
           det_bareiss(walk_matrix(c1)).get_str());
    expect_bool(rep, "ex1: D in F_7", true, fn1.is_member);
    expect(rep, "ex1: reduced determinant", "-1799", fn1.reduced.get_str());
    expect(rep, "ex1: distinct odd primes k", "2", std::to_string(fn1.k));
    expect(rep, "ex1: mate bound 2^k - 1", "3", std::to_string(fn1.bound));

    SpectralFingerprint fp1 = fingerprint(d1);
    expect(rep, "ex1: char poly of S", "x^7 + 10*x^5 + 28*x^3 + 15*x",
           fp1.p_skew.to_string());
    expect(rep, "ex1: char poly of J - S",
           "x^7 - 7*x^6 + 10*x^5 - 52*x^4 + 28*x^3 - 88*x^2 + 15*x - 1",
           fp1.p_ones_skew.to_string());
    expect_bool(rep, "ex1: C generalized cospectral with D", true,
                generalized_cospectral(d1, c1));
    expect_bool(rep, "ex1: C isomorphic to D", false, is_isomorphic(d1, c1).has_value());
    expect_bool(rep, "ex1: D self-transpose", false,
                is_isomorphic(d1, d1.transposed()).has_value());
    expect_bool(rep, "ex1: C self-transpose", false,
                is_isomorphic(c1, c1.transposed()).has_value());

    MateClassReport mates1 = verify_candidate_mate(d1, c1);
    expect(rep, "ex1: mate classes {C, D^T, C^T}", "3", std::to_string(mates1.members.size()));
    expect_bool(rep, "ex1: mate count within bound", true,
                mates1.members.size() <= fn1.bound);
    std::vector<mpz_class> levels;
    for (const auto& cert : mates1.certificates) levels.push_back(cert.level);
    expect(rep, "ex1: certificate levels", "7,257,1799", levels_string(levels));
    expect(rep, "ex1: level of Q(D -> C)", "7", recover_q(d1, c1).level.get_str());
    expect(rep, "ex1: level of Q(D -> D^T)", "1799",
           recover_q(d1, d1.transposed()).level.get_str());
    expect(rep, "ex1: level of Q(D -> C^T)", "257",
           recover_q(d1, c1.transposed()).level.get_str());

    bool certs_ok = true;
    for (const auto& cert : mates1.certificates) certs_ok &= verify_gamma_membership(cert);
    expect_bool(rep, "ex1: certificates verify exactly", true, certs_ok);

    expect(rep, "ex1: invariant factors of W^T", "1,1,1,1,2,2,3598",
           diag_string(smith_normal_form(walk_matrix(d1).transposed()).diag));
    expect(rep, "ex1: rank of W mod 2", "4",
           std::to_string(rank_mod_p(walk_matrix(d1), 2)));
    expect_bool(rep, "ex1: invariant factor structure", true, snf_structure_check(d1));

    bool audits1 = !mates1.certificate_audits.empty();
    for (const auto& a : mates1.certificate_audits) audits1 &= a.all_passed();
    expect_bool(rep, "ex1: certificate audits pass", true, audits1);
    bool pair1 = !mates1.pairwise_audits.empty();
    for (const auto& a : mates1.pairwise_audits) pair1 &= a.all_passed();
    expect_bool(rep, "ex1: pairwise level audits pass", true, pair1);

    WdgssVerdict w1 = wdgss_criterion(d1);
    expect(rep, "ex1: transpose criterion", "not_applicable", w1.verdict);

    // ---- Example 2: the 6-vertex graph with a prime reduced part ----
    const OrientedGraph& d2 = builtin::example2_d();

    expect(rep, "ex2: arcs of D", "7", std::to_string(d2.arc_count()));
    FnReport fn2 = fn_membership(d2);
    expect(rep, "ex2: det W(D)", "1528", fn2.det_walk.get_str());
    expect(rep, "ex2: det factorization", "2^3 * 191", fn2.det_factors.to_string());
    expect_bool(rep, "ex2: D in F_6", true, fn2.is_member);
    expect(rep, "ex2: reduced determinant", "191", fn2.reduced.get_str());
    expect_bool(rep, "ex2: reduced part is an odd prime", true, is_prime(fn2.reduced));
    expect(rep, "ex2: distinct odd primes k", "1", std::to_string(fn2.k));
    expect(rep, "ex2: mate bound 2^k - 1", "1", std::to_string(fn2.bound));
    expect_bool(rep, "ex2: D self-transpose", false,
                is_isomorphic(d2, d2.transposed()).has_value());

    WdgssVerdict w2 = wdgss_criterion(d2);
    expect(rep, "ex2: transpose criterion", "wdgss_by_criterion", w2.verdict);

    MateClassReport mates2 = verify_candidate_mate(d2, d2.transposed());
    expect(rep, "ex2: transpose mate classes", "1", std::to_string(mates2.members.size()));
    expect(rep, "ex2: level of Q(D -> D^T)", "191",
           recover_q(d2, d2.transposed()).level.get_str());

    expect(rep, "ex2: invariant factors of W^T", "1,1,1,2,2,382",
           diag_string(smith_normal_form(walk_matrix(d2).transposed()).diag));
    expect_bool(rep, "ex2: invariant factor structure", true, snf_structure_check(d2));

    bool audits2 = !mates2.certificate_audits.empty();
    for (const auto& a : mates2.certificate_audits) audits2 &= a.all_passed();
    expect_bool(rep, "ex2: certificate audits pass", true, audits2);

    return rep;
}

}  // namespace skewspec
