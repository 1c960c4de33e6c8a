#include "skewspec/census.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "skewspec/errors.hpp"
#include "skewspec/linalg.hpp"

namespace skewspec {

namespace {

std::string compact_prefix(int n) { return "o" + std::to_string(n) + ":"; }

// Shared phase-1 inner loop: canonical form of every graph from the
// enumerator's current position to the end of its shard. The sink sees a
// PairEntry for first-seen classes, nullopt otherwise, plus the counter value.
template <typename Sink>
void phase1_scan(int n, GraphEnumerator& en, std::unordered_set<std::string>& seen,
                 Sink&& sink) {
    std::vector<std::int8_t> dir(static_cast<std::size_t>(n) * n);
    std::string canon;
    const std::string prefix = compact_prefix(n);

    while (!en.done()) {
        const std::uint8_t* dg = en.digits();
        std::fill(dir.begin(), dir.end(), 0);
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++idx) {
                if (dg[idx] == 1) {
                    dir[static_cast<std::size_t>(i) * n + j] = 1;
                    dir[static_cast<std::size_t>(j) * n + i] = -1;
                } else if (dg[idx] == 2) {
                    dir[static_cast<std::size_t>(j) * n + i] = 1;
                    dir[static_cast<std::size_t>(i) * n + j] = -1;
                }
            }
        detail::canonical_digits(n, dir.data(), canon);
        if (seen.insert(canon).second) {
            const std::string full = prefix + canon;
            OrientedGraph rep = OrientedGraph::from_compact(full);
            sink(PairEntry{fingerprint(rep).digest_hex(), full}, en.position());
        } else {
            sink(std::nullopt, en.position());
        }
        en.advance();
    }
}

}  // namespace

std::vector<PairEntry> census_phase1(int n, std::uint64_t shards, std::uint64_t shard_index) {
    GraphEnumerator en(n, shards, shard_index);
    std::unordered_set<std::string> seen;
    std::vector<PairEntry> out;
    phase1_scan(n, en, seen, [&](std::optional<PairEntry> e, std::uint64_t) {
        if (e) out.push_back(std::move(*e));
    });
    return out;
}

namespace {

struct Checkpoint {
    int n = 0;
    std::uint64_t shards = 0, shard_index = 0;
    long long last_completed = 0;
};

bool read_checkpoint(const std::filesystem::path& p, Checkpoint& c) {
    std::ifstream in(p);
    if (!in) return false;
    std::string tag;
    if (!(in >> tag >> c.n >> c.shards >> c.shard_index >> c.last_completed)) return false;
    return tag == "shard-checkpoint";
}

void write_checkpoint(const std::filesystem::path& p, const Checkpoint& c) {
    const std::filesystem::path tmp = p.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << "shard-checkpoint " << c.n << ' ' << c.shards << ' ' << c.shard_index << ' '
            << c.last_completed << '\n';
        if (!out) throw InputError("cannot write checkpoint file " + tmp.string());
    }
    std::filesystem::rename(tmp, p);
}

}  // namespace

bool shard_complete(int n, std::uint64_t shards, std::uint64_t shard_index,
                    const std::filesystem::path& ckpt_path) {
    Checkpoint c;
    if (!read_checkpoint(ckpt_path, c)) return false;
    if (c.n != n || c.shards != shards || c.shard_index != shard_index) return false;
    GraphEnumerator en(n, shards, shard_index);
    return c.last_completed + 1 >= static_cast<long long>(en.end_position());
}

void census_phase1_file(int n, std::uint64_t shards, std::uint64_t shard_index,
                        const std::filesystem::path& pairs_path,
                        const std::filesystem::path& ckpt_path, bool resume,
                        std::uint64_t checkpoint_interval) {
    if (checkpoint_interval == 0) checkpoint_interval = 1;
    GraphEnumerator en(n, shards, shard_index);
    std::unordered_set<std::string> seen;
    const std::size_t prefix_len = compact_prefix(n).size();

    Checkpoint ck{n, shards, shard_index, static_cast<long long>(en.begin_position()) - 1};
    bool fresh = true;
    if (resume) {
        Checkpoint prev;
        if (read_checkpoint(ckpt_path, prev)) {
            if (prev.n != n || prev.shards != shards || prev.shard_index != shard_index)
                throw InputError("checkpoint file belongs to a different shard geometry");
            // Entries past the checkpoint may exist if the writer died between
            // flushing pairs and the checkpoint; reloading them keeps the
            // dedup set consistent so nothing is emitted twice.
            for (const PairEntry& e : load_pairs_file(pairs_path))
                seen.insert(e.canon.substr(prefix_len));
            ck = prev;
            fresh = false;
        }
    }
    if (fresh) {
        std::ofstream truncate(pairs_path, std::ios::trunc);
        if (!truncate) throw InputError("cannot write pairs file " + pairs_path.string());
    }

    std::ofstream out(pairs_path, std::ios::app);
    if (!out) throw InputError("cannot open pairs file " + pairs_path.string());

    en.seek(static_cast<std::uint64_t>(ck.last_completed + 1));
    std::uint64_t since_flush = 0;
    phase1_scan(n, en, seen, [&](std::optional<PairEntry> e, std::uint64_t pos) {
        if (e) out << e->digest << ' ' << e->canon << '\n';
        if (++since_flush >= checkpoint_interval) {
            out.flush();
            if (!out) throw InputError("short write on pairs file " + pairs_path.string());
            ck.last_completed = static_cast<long long>(pos);
            write_checkpoint(ckpt_path, ck);
            since_flush = 0;
        }
    });

    out.flush();
    if (!out) throw InputError("short write on pairs file " + pairs_path.string());
    ck.last_completed = static_cast<long long>(en.end_position()) - 1;
    write_checkpoint(ckpt_path, ck);
}

std::vector<PairEntry> load_pairs_file(const std::filesystem::path& pairs_path) {
    std::ifstream in(pairs_path);
    if (!in) throw InputError("cannot read pairs file " + pairs_path.string());
    std::vector<PairEntry> out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const std::size_t sp = line.find(' ');
        if (sp == std::string::npos || sp == 0 || sp + 1 >= line.size())
            throw ParseError("pairs line must be '<digest> <canon>'", lineno);
        out.push_back({line.substr(0, sp), line.substr(sp + 1)});
    }
    return out;
}

namespace {

// Everything census_merge needs per class, computed once.
struct ClassInfo {
    OrientedGraph graph;
    std::string canon;
    std::string transpose_canon;
    SpectralFingerprint fp;
    FnReport fn;
    bool controllable = false;
    bool self_transpose = false;
    bool wdgss = false;
};

}  // namespace

CensusResult census_merge(int n, std::vector<PairEntry> pairs) {
    CensusResult res;
    res.stats.n = n;
    res.stats.labeled_graphs = GraphEnumerator::total(n);

    // Global dedup; identical canons must carry identical digests.
    std::map<std::string, std::string> canon_digest;
    for (auto& e : pairs) {
        auto [it, fresh] = canon_digest.emplace(e.canon, e.digest);
        if (!fresh && it->second != e.digest)
            throw std::logic_error("census_merge: conflicting digests for one class");
    }

    // Bucket by digest, then confirm by exact fingerprint comparison. The
    // final mate buckets never rely on the truncated hash alone.
    std::map<std::string, std::vector<std::string>> by_digest;
    for (const auto& [canon, digest] : canon_digest) by_digest[digest].push_back(canon);

    std::map<std::string, ClassInfo> classes;
    for (const auto& [canon, digest] : canon_digest) {
        OrientedGraph g = OrientedGraph::from_compact(canon);
        ClassInfo info{g, canon, canonical_form(g.transposed()), fingerprint(g),
                       fn_membership(g), false, false, false};
        if (info.fp.digest_hex() != digest)
            throw std::logic_error("census_merge: stored digest does not match fingerprint");
        info.controllable = info.fn.det_walk != 0;
        info.self_transpose = info.transpose_canon == canon;
        info.wdgss = !info.self_transpose && info.fn.reduced_integral &&
                     mpz_odd_p(info.fn.reduced.get_mpz_t()) && is_prime(abs(info.fn.reduced));
        classes.emplace(canon, std::move(info));
    }

    // Exact-fingerprint mate map: canon -> sorted mate canons.
    std::map<std::string, std::vector<std::string>> mates_of;
    for (const auto& [digest, members] : by_digest) {
        // Split hash bucket by true fingerprint (defends against collisions).
        std::map<std::string, std::vector<std::string>> exact;
        for (const auto& canon : members)
            exact[classes.at(canon).fp.serialize()].push_back(canon);
        if (exact.size() > 1)
            res.findings.push_back({"digest_collision", members.front(),
                                    "distinct fingerprints shared a digest"});
        for (auto& [fp, group] : exact) {
            std::sort(group.begin(), group.end());
            if (group.size() > 1) ++res.stats.multi_class_buckets;
            for (const auto& canon : group) {
                auto& m = mates_of[canon];
                for (const auto& other : group)
                    if (other != canon) m.push_back(other);
            }
        }
    }

    for (auto& [canon, info] : classes) {
        CensusRecord rec;
        rec.canon = canon;
        rec.n = n;
        rec.controllable = info.controllable;
        rec.det_walk = info.fn.det_walk;
        rec.reduced_integral = info.fn.reduced_integral;
        rec.reduced = info.fn.reduced;
        rec.in_fn = info.fn.is_member;
        rec.odd_primes = info.fn.odd_primes;
        rec.k = info.fn.k;
        rec.bound = info.fn.bound;
        rec.fingerprint_digest = canon_digest.at(canon);
        rec.self_transpose = info.self_transpose;
        rec.wdgss_by_criterion = info.wdgss;
        rec.mates_resolved = true;
        rec.mates = mates_of.count(canon) ? mates_of.at(canon) : std::vector<std::string>{};

        // The transpose is generalized cospectral with the original, so its
        // class must sit in the same bucket: a strong completeness check on
        // the enumeration and merge.
        if (info.self_transpose) {
            if (std::find(rec.mates.begin(), rec.mates.end(), canon) != rec.mates.end())
                res.findings.push_back({"self_listed_as_mate", canon, ""});
        } else if (std::find(rec.mates.begin(), rec.mates.end(), info.transpose_canon) ==
                   rec.mates.end()) {
            res.findings.push_back(
                {"transpose_class_missing", canon,
                 "expected mate " + info.transpose_canon + " not in bucket"});
        }

        // Certificates: controllability is fingerprint-invariant, so either
        // every class in a bucket is controllable or none is.
        std::vector<QCertificate> certs;
        if (info.controllable) {
            for (const auto& mate : rec.mates) {
                try {
                    certs.push_back(recover_q(info.graph, classes.at(mate).graph));
                    rec.mate_levels.push_back(certs.back().level);
                } catch (const std::exception& e) {
                    res.findings.push_back({"certificate_failure", canon,
                                            "mate " + mate + ": " + e.what()});
                }
            }
            std::sort(rec.mate_levels.begin(), rec.mate_levels.end());
            res.stats.certificates += certs.size();
        }

        if (info.fn.is_member) {
            for (const auto& cert : certs) {
                AuditResult audit = certificate_lemma_audit(cert, info.fn);
                res.stats.audit_checks += audit.checks.size();
                for (const auto& c : audit.checks)
                    if (!c.pass) {
                        ++res.stats.audit_failures;
                        res.findings.push_back({"audit_failure", canon,
                                                c.name + (c.detail.empty() ? "" : ": " + c.detail)});
                    }
            }
            for (std::size_t i = 0; i < certs.size(); ++i)
                for (std::size_t j = i + 1; j < certs.size(); ++j) {
                    AuditResult audit = pairwise_level_audit(certs[i], certs[j]);
                    res.stats.audit_checks += audit.checks.size();
                    for (const auto& c : audit.checks)
                        if (!c.pass) {
                            ++res.stats.audit_failures;
                            res.findings.push_back(
                                {"audit_failure", canon,
                                 c.name + (c.detail.empty() ? "" : ": " + c.detail)});
                        }
                }
            // Distinct mates of one F_n source must come with distinct levels.
            for (std::size_t i = 0; i + 1 < rec.mate_levels.size(); ++i)
                if (rec.mate_levels[i] == rec.mate_levels[i + 1]) {
                    ++res.stats.audit_failures;
                    res.findings.push_back({"audit_failure", canon,
                                            "duplicate certificate level " +
                                                rec.mate_levels[i].get_str()});
                    break;
                }

            if (rec.mates.size() > rec.bound) {
                rec.bound_violation = true;
                ++res.stats.bound_violations;
                res.findings.push_back(
                    {"bound_violation", canon,
                     std::to_string(rec.mates.size()) + " mates exceed bound " +
                         std::to_string(rec.bound)});
            }
        }

        if (info.wdgss) {
            const bool consistent =
                rec.mates.size() == 1 && rec.mates.front() == info.transpose_canon;
            if (!consistent)
                res.findings.push_back({"wdgss_inconsistent", canon,
                                        "criterion predicts the transpose as the only mate"});
        }

        ++res.stats.classes;
        if (rec.controllable) ++res.stats.controllable_classes;
        if (rec.in_fn) ++res.stats.fn_classes;
        if (rec.self_transpose) ++res.stats.self_transpose_classes;
        if (rec.wdgss_by_criterion) ++res.stats.wdgss_classes;
        ++res.stats.mate_histogram[rec.mates.size()];

        res.records.push_back(std::move(rec));
    }
    // classes is a std::map keyed by canon, so records are already sorted.
    return res;
}

CensusResult run_census(int n, int threads, std::uint64_t shards) {
    if (threads < 1) threads = 1;
    if (shards == 0) shards = static_cast<std::uint64_t>(threads);

    std::vector<std::vector<PairEntry>> parts(shards);
    if (threads == 1) {
        for (std::uint64_t s = 0; s < shards; ++s) parts[s] = census_phase1(n, shards, s);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::uint64_t s = t; s < shards; s += threads)
                        parts[s] = census_phase1(n, shards, s);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    std::vector<PairEntry> all;
    for (auto& p : parts)
        for (auto& e : p) all.push_back(std::move(e));
    return census_merge(n, std::move(all));
}

namespace {

// Shared by find_mates and verify_candidate_mate once the mate canons are
// known: recover certificates and run the structural audits.
MateClassReport build_report(const OrientedGraph& d, std::vector<std::string> member_canons) {
    MateClassReport rep;
    rep.representative = canonical_form(d);
    std::sort(member_canons.begin(), member_canons.end());
    rep.members = std::move(member_canons);

    const OrientedGraph source = OrientedGraph::from_compact(rep.representative);
    rep.certificates_available = is_controllable(source);
    if (!rep.certificates_available) return rep;

    FnReport fn = fn_membership(source);
    for (const auto& canon : rep.members) {
        rep.certificates.push_back(recover_q(source, OrientedGraph::from_compact(canon)));
        if (fn.is_member)
            rep.certificate_audits.push_back(
                certificate_lemma_audit(rep.certificates.back(), fn));
    }
    if (fn.is_member) {
        for (std::size_t i = 0; i < rep.certificates.size(); ++i)
            for (std::size_t j = i + 1; j < rep.certificates.size(); ++j)
                rep.pairwise_audits.push_back(
                    pairwise_level_audit(rep.certificates[i], rep.certificates[j]));
    }
    return rep;
}

}  // namespace

MateClassReport find_mates(const OrientedGraph& d, int threads) {
    const int n = d.order();
    const std::string own = canonical_form(d);
    const SpectralFingerprint target = fingerprint(d);
    const std::size_t arc_count = d.arc_count();
    if (threads < 1) threads = 1;

    const std::uint64_t shards = static_cast<std::uint64_t>(threads);
    std::vector<std::set<std::string>> found(shards);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(shards);

    auto scan = [&](std::uint64_t s) {
        GraphEnumerator en(n, shards, s);
        std::unordered_set<std::string> seen;
        const std::string prefix = compact_prefix(n);
        while (!en.done()) {
            // Arc count is spectrum-determined, so filter on it before paying
            // for a canonical form or characteristic polynomial.
            std::size_t arcs = 0;
            const std::uint8_t* dg = en.digits();
            for (int i = 0; i < en.digit_count(); ++i) arcs += dg[i] != 0;
            if (arcs != arc_count) {
                en.advance();
                continue;
            }
            OrientedGraph g = en.current_graph();
            std::string canon = canonical_form(g);
            if (seen.insert(canon).second && canon != own) {
                if (fingerprint(OrientedGraph::from_compact(canon)) == target)
                    found[s].insert(canon);
            }
            en.advance();
        }
    };

    if (threads == 1) {
        scan(0);
    } else {
        for (std::uint64_t s = 0; s < shards; ++s)
            pool.emplace_back([&, s] {
                try {
                    scan(s);
                } catch (...) {
                    errors[s] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    std::set<std::string> all;
    for (auto& f : found) all.insert(f.begin(), f.end());
    return build_report(d, std::vector<std::string>(all.begin(), all.end()));
}

MateClassReport verify_candidate_mate(const OrientedGraph& d, const OrientedGraph& candidate) {
    if (d.order() != candidate.order())
        throw InputError("verify_candidate_mate: graphs must have the same order");
    if (!generalized_cospectral(d, candidate))
        throw InputError("verify_candidate_mate: candidate is not generalized cospectral");
    if (is_isomorphic(d, candidate))
        throw InputError("verify_candidate_mate: candidate is isomorphic to the graph");

    const std::string own = canonical_form(d);
    std::set<std::string> members;
    members.insert(canonical_form(candidate));
    members.insert(canonical_form(d.transposed()));
    members.insert(canonical_form(candidate.transposed()));
    members.erase(own);
    return build_report(d, std::vector<std::string>(members.begin(), members.end()));
}

}  // namespace skewspec
