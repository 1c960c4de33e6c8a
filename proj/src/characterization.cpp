#include "skewspec/characterization.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "skewspec/errors.hpp"
#include "skewspec/linalg.hpp"

namespace skewspec {

FnReport fn_membership(const OrientedGraph& d) {
    FnReport r;
    r.order = d.order();
    r.det_walk = det_bareiss(walk_matrix(d));
    r.det_factors = factorize(r.det_walk);

    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(r.order / 2));
    if (r.det_walk != 0 && r.det_walk % pow2 == 0) {
        r.reduced_integral = true;
        r.reduced = r.det_walk / pow2;
        if (mpz_odd_p(r.reduced.get_mpz_t())) {
            FactoredInteger rf = factorize(r.reduced);
            r.is_member = rf.square_free();
            // The odd prime support of det and of the reduced part must agree.
            if (rf.odd_primes() != r.det_factors.odd_primes())
                throw std::logic_error("fn_membership: odd prime support mismatch");
        }
    }

    r.odd_primes = r.det_factors.odd_primes();
    r.k = static_cast<unsigned>(r.odd_primes.size());
    if (r.k >= 63) throw std::logic_error("fn_membership: mate bound overflows");
    r.bound = (std::uint64_t{1} << r.k) - 1;
    if (r.is_member) r.b = abs(r.reduced);
    return r;
}

std::uint64_t mate_bound(const FnReport& r) {
    if (!r.is_member)
        throw InapplicableError("mate_bound: graph is not in F_n, the bound does not apply");
    return r.bound;
}

WdgssVerdict wdgss_criterion(const OrientedGraph& d) {
    WdgssVerdict v;
    v.self_transpose = is_isomorphic(d, d.transposed()).has_value();
    FnReport r = fn_membership(d);
    v.reduced_is_odd_prime =
        r.reduced_integral && mpz_odd_p(r.reduced.get_mpz_t()) && is_prime(abs(r.reduced));
    v.applicable = !v.self_transpose && v.reduced_is_odd_prime;
    v.verdict = v.applicable ? "wdgss_by_criterion" : "not_applicable";
    return v;
}

namespace {

std::vector<mpz_class> walk_invariant_factors(const IntMatrix& w) {
    return smith_normal_form(w).diag;
}

}  // namespace

mpz_class last_invariant_factor(const OrientedGraph& d) {
    IntMatrix w = walk_matrix(d);
    std::vector<mpz_class> ft = walk_invariant_factors(w.transposed());
    std::vector<mpz_class> f = walk_invariant_factors(w);
    if (ft.back() != f.back())
        throw std::logic_error("last_invariant_factor: W and W^T disagree");
    return ft.back();
}

bool snf_structure_check(const OrientedGraph& d) {
    FnReport r = fn_membership(d);
    if (!r.is_member)
        throw InapplicableError("snf_structure_check: graph is not in F_n");

    const int n = r.order;
    const int ones = (n + 1) / 2;
    const int twos = n / 2 - 1;

    IntMatrix w = walk_matrix(d);
    auto check_diag = [&](const std::vector<mpz_class>& diag) {
        int idx = 0;
        for (int i = 0; i < ones; ++i)
            if (diag[idx++] != 1) return false;
        for (int i = 0; i < twos; ++i)
            if (diag[idx++] != 2) return false;
        if (idx < n) {
            if (diag[idx] != 2 * r.b) return false;
            ++idx;
        }
        return idx == n;
    };
    if (!check_diag(walk_invariant_factors(w.transposed()))) return false;
    if (!check_diag(walk_invariant_factors(w))) return false;
    return rank_mod_p(w, 2) == static_cast<std::size_t>(ones);
}

bool AuditResult::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AuditCheck& c) { return c.pass; });
}

void AuditResult::add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

AuditResult certificate_lemma_audit(const QCertificate& cert, const FnReport& source_report) {
    if (!source_report.is_member)
        throw InapplicableError("certificate_lemma_audit: source graph is not in F_n");

    AuditResult res;
    const mpz_class& level = cert.level;

    res.add("level_odd", mpz_odd_p(level.get_mpz_t()),
            "level = " + level.get_str());

    const mpz_class dn_source = last_invariant_factor(cert.source);
    const mpz_class dn_target = last_invariant_factor(cert.target);
    res.add("level_divides_dn_source", dn_source % level == 0,
            level.get_str() + " | " + dn_source.get_str());
    res.add("level_divides_dn_target", dn_target % level == 0,
            level.get_str() + " | " + dn_target.get_str());

    // Scaled certificate d_n Q is integral because level | d_n.
    bool scalable = true;
    IntMatrix qbar;
    try {
        qbar = cert.q.scaled_integral(dn_source);
    } catch (const InputError&) {
        scalable = false;
    }
    res.add("dn_scaling_integral", scalable, "d_n = " + dn_source.get_str());

    for (const mpz_class& p : factorize(level).odd_primes()) {
        const std::string tag = " [p=" + p.get_str() + "]";
        if (!scalable) {
            res.add("rank_p_of_scaled_q_is_1" + tag, false, "scaling failed");
            res.add("scaled_q_gram_zero_mod_p2" + tag, false, "scaling failed");
            continue;
        }
        res.add("rank_p_of_scaled_q_is_1" + tag, rank_mod_p(qbar, p) == 1);

        IntMatrix gram = qbar.transposed() * qbar;
        const mpz_class p2 = p * p;
        bool zero = true;
        for (std::size_t i = 0; i < gram.rows() && zero; ++i)
            for (std::size_t j = 0; j < gram.cols(); ++j)
                if (gram(i, j) % p2 != 0) {
                    zero = false;
                    break;
                }
        res.add("scaled_q_gram_zero_mod_p2" + tag, zero);
    }
    return res;
}

AuditResult pairwise_level_audit(const QCertificate& a, const QCertificate& b) {
    if (!(a.source == b.source))
        throw InputError("pairwise_level_audit: certificates must share their source graph");
    FnReport r = fn_membership(a.source);
    if (!r.is_member)
        throw InapplicableError("pairwise_level_audit: source graph is not in F_n");

    AuditResult res;
    RatMatrix prod = a.q.transposed() * b.q;
    const mpz_class prod_level = prod.denominator_lcm();

    std::vector<mpz_class> pa = factorize(a.level).odd_primes();
    std::vector<mpz_class> pb = factorize(b.level).odd_primes();
    std::vector<mpz_class> shared;
    std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                          std::back_inserter(shared));
    for (const mpz_class& p : shared) {
        res.add("shared_prime_excluded_from_product [p=" + p.get_str() + "]",
                prod_level % p != 0,
                "level(Q1^T Q2) = " + prod_level.get_str());
    }

    if (a.level == b.level) {
        res.add("equal_levels_force_permutation", prod.is_permutation(),
                "level = " + a.level.get_str());
    }
    return res;
}

}  // namespace skewspec
