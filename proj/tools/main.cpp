#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "skewspec/census.hpp"
#include "skewspec/characterization.hpp"
#include "skewspec/errors.hpp"
#include "skewspec/linalg.hpp"
#include "skewspec/verification.hpp"

namespace {

using skewspec::OrientedGraph;
using ordered_json = nlohmann::ordered_json;

// Graph arguments accept an inline compact form, a file path, or "-" (stdin).
OrientedGraph load_graph(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return OrientedGraph::parse(buf.str());
    }
    if (!arg.empty() && arg[0] == 'o' && arg.find(':') != std::string::npos &&
        !std::filesystem::exists(arg))
        return OrientedGraph::from_compact(arg);
    std::ifstream in(arg);
    if (!in) throw skewspec::InputError("cannot open graph file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return OrientedGraph::parse(buf.str());
}

skewspec::CensusRecord single_graph_record(const OrientedGraph& g) {
    skewspec::CensusRecord rec;
    rec.canon = skewspec::canonical_form(g);
    rec.n = g.order();
    skewspec::FnReport fn = skewspec::fn_membership(g);
    rec.controllable = fn.det_walk != 0;
    rec.det_walk = fn.det_walk;
    rec.reduced_integral = fn.reduced_integral;
    rec.reduced = fn.reduced;
    rec.in_fn = fn.is_member;
    rec.odd_primes = fn.odd_primes;
    rec.k = fn.k;
    rec.bound = fn.bound;
    rec.fingerprint_digest = skewspec::fingerprint(g).digest_hex();
    skewspec::WdgssVerdict w = skewspec::wdgss_criterion(g);
    rec.self_transpose = w.self_transpose;
    rec.wdgss_by_criterion = w.applicable;
    rec.mates_resolved = false;
    return rec;
}

int cmd_analyze(const std::string& graph_arg, bool structured) {
    OrientedGraph g = load_graph(graph_arg);
    skewspec::FnReport fn = skewspec::fn_membership(g);

    if (structured) {
        std::cout << skewspec::record_to_json_line(single_graph_record(g)) << '\n';
        return 0;
    }

    std::cout << "graph: " << g.to_compact() << '\n';
    std::cout << "canonical: " << skewspec::canonical_form(g) << '\n';
    std::cout << "order " << g.order() << ", arcs " << g.arc_count() << '\n';

    skewspec::SpectralFingerprint fp = skewspec::fingerprint(g);
    std::cout << "char poly S:     " << fp.p_skew.to_string() << '\n';
    std::cout << "char poly J - S: " << fp.p_ones_skew.to_string() << '\n';
    std::cout << "fingerprint digest: " << fp.digest_hex() << '\n';
    std::cout << "det W = " << fn.det_walk.get_str() << " = "
              << fn.det_factors.to_string() << '\n';

    if (fn.det_walk == 0) {
        std::cout << "not controllable; family membership, bound and invariant-factor "
                     "criteria are inapplicable\n";
        skewspec::WdgssVerdict w = skewspec::wdgss_criterion(g);
        std::cout << "self-transpose: " << (w.self_transpose ? "yes" : "no") << '\n';
        std::cout << "transpose criterion: " << w.verdict << '\n';
        return 0;
    }

    std::cout << "controllable: yes\n";
    std::cout << "family F_" << g.order() << ": "
              << (fn.is_member ? "member" : "not a member");
    if (fn.reduced_integral)
        std::cout << " (reduced part " << fn.reduced.get_str() << ")";
    std::cout << '\n';
    std::cout << "distinct odd primes: k = " << fn.k << ", mate bound 2^k - 1 = "
              << fn.bound << '\n';

    skewspec::WdgssVerdict w = skewspec::wdgss_criterion(g);
    std::cout << "self-transpose: " << (w.self_transpose ? "yes" : "no") << '\n';
    std::cout << "transpose criterion: " << w.verdict << '\n';

    auto snf = skewspec::smith_normal_form(skewspec::walk_matrix(g).transposed());
    std::cout << "invariant factors of W^T:";
    for (const auto& d : snf.diag) std::cout << ' ' << d.get_str();
    std::cout << '\n';
    std::cout << "rank of W mod 2: "
              << skewspec::rank_mod_p(skewspec::walk_matrix(g), 2) << '\n';
    if (fn.is_member)
        std::cout << "invariant factor structure: "
                  << (skewspec::snf_structure_check(g) ? "pass" : "FAIL") << '\n';
    return 0;
}

int audit_exit(const skewspec::MateClassReport& rep, std::uint64_t bound, bool in_fn) {
    bool ok = true;
    for (const auto& a : rep.certificate_audits) ok &= a.all_passed();
    for (const auto& a : rep.pairwise_audits) ok &= a.all_passed();
    if (in_fn && rep.members.size() > bound) ok = false;
    return ok ? 0 : 1;
}

void print_mate_report(const skewspec::MateClassReport& rep) {
    std::cout << "class: " << rep.representative << '\n';
    std::cout << "mate classes: " << rep.members.size() << '\n';
    for (std::size_t i = 0; i < rep.members.size(); ++i) {
        std::cout << "  " << rep.members[i];
        if (i < rep.certificates.size())
            std::cout << "  level " << rep.certificates[i].level.get_str();
        if (i < rep.certificate_audits.size())
            std::cout << "  audits "
                      << (rep.certificate_audits[i].all_passed() ? "pass" : "FAIL");
        std::cout << '\n';
    }
    if (!rep.certificates_available)
        std::cout << "  (not controllable: no certificates)\n";
    for (const auto& a : rep.pairwise_audits)
        for (const auto& c : a.checks)
            if (!c.pass) std::cout << "  pairwise FAIL: " << c.name << ' ' << c.detail << '\n';
    if (!rep.pairwise_audits.empty()) {
        bool all = true;
        for (const auto& a : rep.pairwise_audits) all &= a.all_passed();
        if (all) std::cout << "pairwise level audits: pass\n";
    }
}

int cmd_mates(const std::string& graph_arg, bool structured, int threads) {
    OrientedGraph g = load_graph(graph_arg);
    skewspec::MateClassReport rep = skewspec::find_mates(g, threads);
    skewspec::FnReport fn = skewspec::fn_membership(g);

    if (structured) {
        skewspec::CensusRecord rec = single_graph_record(g);
        rec.mates_resolved = true;
        rec.mates = rep.members;
        for (const auto& cert : rep.certificates) rec.mate_levels.push_back(cert.level);
        std::sort(rec.mate_levels.begin(), rec.mate_levels.end());
        rec.bound_violation = fn.is_member && rep.members.size() > fn.bound;
        std::cout << skewspec::record_to_json_line(rec) << '\n';
    } else {
        print_mate_report(rep);
        if (fn.is_member)
            std::cout << "bound check: " << rep.members.size() << " <= " << fn.bound
                      << (rep.members.size() <= fn.bound ? " (pass)" : " (VIOLATION)") << '\n';
    }
    return audit_exit(rep, fn.bound, fn.is_member);
}

int cmd_qmat(const std::string& d_arg, const std::string& c_arg, bool structured) {
    OrientedGraph d = load_graph(d_arg);
    OrientedGraph c = load_graph(c_arg);
    skewspec::QCertificate cert = skewspec::recover_q(d, c);

    if (structured) {
        ordered_json j;
        j["level"] = cert.level.get_str();
        j["verified"] = true;  // recover_q refuses to return unverified certificates
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < cert.q.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t k = 0; k < cert.q.cols(); ++k)
                row.push_back(cert.q(i, k).get_str());
            rows.push_back(std::move(row));
        }
        j["q"] = std::move(rows);
        std::cout << j.dump() << '\n';
        return 0;
    }

    std::cout << "Q = W(D) W(C)^-1, level " << cert.level.get_str() << '\n';
    std::cout << cert.q.to_string();
    std::cout << "identities Q^T Q = I, Q e = e, Q^T S(D) Q = S(C): verified\n";
    return 0;
}

int cmd_iso(const std::string& a_arg, const std::string& b_arg, bool structured) {
    OrientedGraph a = load_graph(a_arg);
    OrientedGraph b = load_graph(b_arg);
    auto witness = skewspec::is_isomorphic(a, b);

    if (structured) {
        ordered_json j;
        j["isomorphic"] = witness.has_value();
        if (witness) j["witness"] = witness->images();
        else j["witness"] = nullptr;
        std::cout << j.dump() << '\n';
        return 0;
    }
    if (witness) {
        std::cout << "isomorphic: yes\nwitness:";
        for (int x : witness->images()) std::cout << ' ' << x;
        std::cout << '\n';
    } else {
        std::cout << "isomorphic: no\n";
    }
    return 0;
}

int cmd_canon(const std::string& graph_arg) {
    std::cout << skewspec::canonical_form(load_graph(graph_arg)) << '\n';
    return 0;
}

std::filesystem::path shard_pairs_path(const std::filesystem::path& work, int n,
                                       std::uint64_t shards, std::uint64_t shard) {
    return work / ("n" + std::to_string(n) + "_shard" + std::to_string(shard) + "of" +
                   std::to_string(shards) + ".pairs");
}

std::filesystem::path shard_ckpt_path(const std::filesystem::path& work, int n,
                                      std::uint64_t shards, std::uint64_t shard) {
    std::filesystem::path p = shard_pairs_path(work, n, shards, shard);
    p += ".ckpt";
    return p;
}

int cmd_census(int n, std::uint64_t shards, long long shard, const std::string& out,
               int threads, bool resume, bool structured) {
    if (shards == 0) throw skewspec::InputError("--shards must be at least 1");

    // Single-shard worker mode: phase 1 only, results land in the work
    // directory next to --out for a later merge run.
    if (shard >= 0) {
        if (out.empty())
            throw skewspec::InputError("--shard requires --out to locate the work directory");
        if (static_cast<std::uint64_t>(shard) >= shards)
            throw skewspec::InputError("--shard must be smaller than --shards");
        std::filesystem::path work = out + ".work";
        std::filesystem::create_directories(work);
        skewspec::census_phase1_file(n, shards, static_cast<std::uint64_t>(shard),
                                     shard_pairs_path(work, n, shards, shard),
                                     shard_ckpt_path(work, n, shards, shard), resume);
        std::cerr << "shard " << shard << "/" << shards << " complete\n";
        return 0;
    }

    skewspec::CensusResult result;
    if (resume) {
        if (out.empty())
            throw skewspec::InputError("--resume requires --out to locate the work directory");
        std::filesystem::path work = out + ".work";
        std::filesystem::create_directories(work);
        std::vector<std::uint64_t> pending;
        for (std::uint64_t s = 0; s < shards; ++s)
            if (!skewspec::shard_complete(n, shards, s,
                                          shard_ckpt_path(work, n, shards, s)))
                pending.push_back(s);
        // Run unfinished shards (resuming partial ones), then merge all files.
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(std::max(threads, 1));
        auto worker = [&](int t) {
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= pending.size()) return;
                    std::uint64_t s = pending[i];
                    skewspec::census_phase1_file(n, shards, s,
                                                 shard_pairs_path(work, n, shards, s),
                                                 shard_ckpt_path(work, n, shards, s), true);
                    if (!structured) std::cerr << "shard " << s << "/" << shards << " done\n";
                }
            } catch (...) {
                errs[t] = std::current_exception();
            }
        };
        if (threads <= 1) {
            worker(0);
        } else {
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
            for (auto& th : pool) th.join();
        }
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);

        std::vector<skewspec::PairEntry> pairs;
        for (std::uint64_t s = 0; s < shards; ++s) {
            auto part = skewspec::load_pairs_file(shard_pairs_path(work, n, shards, s));
            pairs.insert(pairs.end(), part.begin(), part.end());
        }
        result = skewspec::census_merge(n, std::move(pairs));
    } else {
        result = skewspec::run_census(n, threads, shards);
    }

    if (!out.empty()) {
        std::ofstream f(out, std::ios::trunc);
        if (!f) throw skewspec::InputError("cannot write output file: " + out);
        skewspec::export_records(result.records, f);
    } else {
        skewspec::export_records(result.records, std::cout);
    }

    std::ostream& sum = out.empty() ? std::cerr : std::cout;
    if (structured) {
        ordered_json j;
        j["n"] = result.stats.n;
        j["labeled_graphs"] = result.stats.labeled_graphs;
        j["classes"] = result.stats.classes;
        j["controllable_classes"] = result.stats.controllable_classes;
        j["fn_classes"] = result.stats.fn_classes;
        j["self_transpose_classes"] = result.stats.self_transpose_classes;
        j["wdgss_classes"] = result.stats.wdgss_classes;
        j["multi_class_buckets"] = result.stats.multi_class_buckets;
        j["certificates"] = result.stats.certificates;
        j["audit_checks"] = result.stats.audit_checks;
        j["audit_failures"] = result.stats.audit_failures;
        j["bound_violations"] = result.stats.bound_violations;
        ordered_json hist = ordered_json::object();
        for (const auto& [mates, count] : result.stats.mate_histogram)
            hist[std::to_string(mates)] = count;
        j["mate_histogram"] = std::move(hist);
        j["findings"] = result.findings.size();
        sum << j.dump() << '\n';
    } else {
        sum << "census n=" << result.stats.n << ": " << result.stats.classes
            << " classes from " << result.stats.labeled_graphs << " labeled graphs\n";
        sum << "  controllable " << result.stats.controllable_classes << ", in F_n "
            << result.stats.fn_classes << ", self-transpose "
            << result.stats.self_transpose_classes << ", transpose-criterion "
            << result.stats.wdgss_classes << '\n';
        sum << "  buckets with mates " << result.stats.multi_class_buckets
            << ", certificates " << result.stats.certificates << ", audit checks "
            << result.stats.audit_checks << " (failures " << result.stats.audit_failures
            << ")\n";
        sum << "  bound violations: " << result.stats.bound_violations << '\n';
        sum << "  mate histogram:";
        for (const auto& [mates, count] : result.stats.mate_histogram)
            sum << ' ' << mates << ':' << count;
        sum << '\n';
        for (const auto& f : result.findings)
            sum << "  finding [" << f.kind << "] " << f.canon << ' ' << f.detail << '\n';
    }
    return result.findings.empty() ? 0 : 1;
}

int cmd_verify_paper(bool structured) {
    skewspec::VerificationReport rep = skewspec::verify_builtin_examples();
    if (structured) {
        for (const auto& l : rep.lines) {
            ordered_json j;
            j["name"] = l.name;
            j["expected"] = l.expected;
            j["actual"] = l.actual;
            j["pass"] = l.pass;
            std::cout << j.dump() << '\n';
        }
    } else {
        for (const auto& l : rep.lines) {
            std::cout << (l.pass ? "[PASS] " : "[FAIL] ") << l.name;
            if (!l.pass)
                std::cout << "  expected " << l.expected << ", got " << l.actual;
            std::cout << '\n';
        }
        std::cout << (rep.all_passed() ? "all reference values reproduced\n"
                                       : "REFERENCE MISMATCH\n");
    }
    return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact spectral characterization toolkit for small oriented graphs: walk "
        "matrices, cospectral mate search, orthogonal certificates and census runs, "
        "all in exact arithmetic."};
    app.require_subcommand(1);

    std::string graph_arg, second_arg, out;
    bool structured = false, resume = false;
    int threads = 1;
    int census_n = 0;
    std::uint64_t shards = 1;
    long long shard = -1;

    auto* analyze = app.add_subcommand("analyze", "Full exact report for one graph");
    analyze->add_option("graph", graph_arg, "graph file, compact form, or - for stdin")
        ->required();
    analyze->add_flag("--structured", structured, "emit a JSON record");

    auto* mates = app.add_subcommand("mates", "Find all cospectral mate classes by scan");
    mates->add_option("graph", graph_arg)->required();
    mates->add_flag("--structured", structured);
    mates->add_option("--threads", threads, "worker threads");

    auto* qmat = app.add_subcommand("qmat", "Recover and verify Q = W(D) W(C)^-1");
    qmat->add_option("d", graph_arg)->required();
    qmat->add_option("c", second_arg)->required();
    qmat->add_flag("--structured", structured);

    auto* iso = app.add_subcommand("iso", "Isomorphism test with witness");
    iso->add_option("a", graph_arg)->required();
    iso->add_option("b", second_arg)->required();
    iso->add_flag("--structured", structured);

    auto* canon = app.add_subcommand("canon", "Canonical form of a graph");
    canon->add_option("graph", graph_arg)->required();

    auto* census = app.add_subcommand("census", "Classify every graph of one order");
    census->add_option("--n", census_n, "graph order")->required();
    census->add_option("--shards", shards, "number of enumeration slices");
    census->add_option("--shard", shard, "run only this slice (phase 1)");
    census->add_option("--out", out, "records file (JSONL)");
    census->add_option("--threads", threads, "worker threads");
    census->add_flag("--resume", resume, "reuse/continue checkpointed shard files");
    census->add_flag("--structured", structured, "JSON summary");

    auto* verify = app.add_subcommand("verify-paper",
                                      "Recompute all built-in reference values");
    verify->add_flag("--structured", structured);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(graph_arg, structured);
        if (app.got_subcommand(mates)) return cmd_mates(graph_arg, structured, threads);
        if (app.got_subcommand(qmat)) return cmd_qmat(graph_arg, second_arg, structured);
        if (app.got_subcommand(iso)) return cmd_iso(graph_arg, second_arg, structured);
        if (app.got_subcommand(canon)) return cmd_canon(graph_arg);
        if (app.got_subcommand(census))
            return cmd_census(census_n, shards, shard, out, threads, resume, structured);
        if (app.got_subcommand(verify)) return cmd_verify_paper(structured);
    } catch (const skewspec::MateVerificationError& e) {
        std::cerr << "finding: " << e.what() << '\n';
        return 1;
    } catch (const skewspec::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
