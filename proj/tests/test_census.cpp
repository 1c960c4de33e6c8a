#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "skewspec/builtin_examples.hpp"
#include "skewspec/census.hpp"
#include "skewspec/errors.hpp"

using namespace skewspec;
namespace fs = std::filesystem;

namespace {

const CensusRecord* find_record(const CensusResult& res, const std::string& canon) {
    for (const auto& r : res.records)
        if (r.canon == canon) return &r;
    return nullptr;
}

std::string serialize_all(const std::vector<CensusRecord>& records) {
    std::ostringstream os;
    export_records(records, os);
    return os.str();
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Reference for the file-backed phase 1: entries a scan emits while the
// counter runs from 0 through limit_inclusive.
std::vector<PairEntry> entries_up_to(int n, std::uint64_t limit_inclusive) {
    GraphEnumerator en(n);
    std::set<std::string> seen;
    std::vector<PairEntry> out;
    while (!en.done() && en.position() <= limit_inclusive) {
        std::string canon = canonical_form(en.current_graph());
        if (seen.insert(canon).second) {
            OrientedGraph rep = OrientedGraph::from_compact(canon);
            out.push_back({fingerprint(rep).digest_hex(), canon});
        }
        en.advance();
    }
    return out;
}

void write_pairs(const fs::path& p, const std::vector<PairEntry>& entries) {
    std::ofstream out(p, std::ios::trunc);
    for (const auto& e : entries) out << e.digest << ' ' << e.canon << '\n';
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "skewspec-census-test") {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("census at order 1 and 2") {
    CensusResult r1 = run_census(1);
    CHECK(r1.stats.labeled_graphs == 1);
    CHECK(r1.stats.classes == 1);
    CHECK(r1.stats.fn_classes == 1);
    CHECK(r1.findings.empty());

    CensusResult r2 = run_census(2);
    CHECK(r2.stats.labeled_graphs == 3);
    CHECK(r2.stats.classes == 2);
    CHECK(r2.stats.controllable_classes == 1);
    CHECK(r2.stats.fn_classes == 1);
    CHECK(r2.stats.self_transpose_classes == 2);
    CHECK(r2.stats.wdgss_classes == 0);
    CHECK(r2.stats.multi_class_buckets == 0);
    CHECK(r2.stats.bound_violations == 0);
    CHECK(r2.stats.mate_histogram == std::map<std::uint64_t, std::uint64_t>{{0, 2}});
    CHECK(r2.findings.empty());

    REQUIRE(r2.records.size() == 2);
    CHECK(r2.records[0].canon == "o2:0");
    CHECK(r2.records[1].canon == "o2:1");
    const CensusRecord& arc = r2.records[1];
    CHECK(arc.controllable);
    CHECK(arc.det_walk == -2);
    CHECK(arc.reduced_integral);
    CHECK(arc.reduced == -1);
    CHECK(arc.in_fn);
    CHECK(arc.odd_primes.empty());
    CHECK(arc.k == 0);
    CHECK(arc.bound == 0);
    CHECK(arc.self_transpose);
    CHECK_FALSE(arc.wdgss_by_criterion);
    CHECK(arc.mates_resolved);
    CHECK(arc.mates.empty());
    CHECK(arc.mate_levels.empty());
    CHECK_FALSE(arc.bound_violation);
}

TEST_CASE("census at order 3") {
    CensusResult res = run_census(3);
    CHECK(res.stats.labeled_graphs == 27);
    CHECK(res.stats.classes == 7);
    CHECK(res.stats.controllable_classes == 3);
    CHECK(res.stats.fn_classes == 1);
    CHECK(res.stats.self_transpose_classes == 5);
    CHECK(res.stats.wdgss_classes == 0);
    CHECK(res.stats.multi_class_buckets == 1);
    CHECK(res.stats.bound_violations == 0);
    CHECK(res.stats.mate_histogram ==
          std::map<std::uint64_t, std::uint64_t>{{0, 5}, {1, 2}});
    CHECK(res.findings.empty());

    // The one cospectral pair is the in-star and out-star, each other's
    // transpose; neither is controllable so no certificates exist for them.
    const CensusRecord* in_star = find_record(res, "o3:011");
    const CensusRecord* out_star = find_record(res, "o3:022");
    REQUIRE(in_star != nullptr);
    REQUIRE(out_star != nullptr);
    CHECK_FALSE(in_star->controllable);
    CHECK(in_star->mates == std::vector<std::string>{"o3:022"});
    CHECK(out_star->mates == std::vector<std::string>{"o3:011"});
    CHECK(in_star->mate_levels.empty());
    CHECK_FALSE(in_star->self_transpose);
}

TEST_CASE("census at order 4") {
    CensusResult res = run_census(4);
    CHECK(res.stats.labeled_graphs == 729);
    CHECK(res.stats.classes == 42);
    CHECK(res.stats.controllable_classes == 18);
    CHECK(res.stats.fn_classes == 12);
    CHECK(res.stats.self_transpose_classes == 18);
    CHECK(res.stats.wdgss_classes == 10);
    CHECK(res.stats.multi_class_buckets == 13);
    CHECK(res.stats.bound_violations == 0);
    CHECK(res.stats.audit_failures == 0);
    CHECK(res.stats.audit_checks > 0);
    CHECK(res.stats.certificates > 0);
    CHECK(res.stats.mate_histogram ==
          std::map<std::uint64_t, std::uint64_t>{{0, 15}, {1, 24}, {2, 3}});
    CHECK(res.findings.empty());

    // Every class with the transpose criterion also resolved to exactly the
    // transpose as mate, and the record invariants hold line by line.
    for (const auto& rec : res.records) {
        CHECK(rec.mates_resolved);
        CHECK(rec.n == 4);
        CHECK_FALSE(rec.bound_violation);
        if (rec.wdgss_by_criterion) {
            CHECK(rec.mates.size() == 1);
            CHECK_FALSE(rec.self_transpose);
        }
        if (rec.in_fn) CHECK(rec.mates.size() <= rec.bound);
        if (!rec.controllable) CHECK(rec.mate_levels.empty());
        if (rec.controllable) CHECK(rec.mate_levels.size() == rec.mates.size());
        CHECK(std::is_sorted(rec.mates.begin(), rec.mates.end()));
        CHECK(std::is_sorted(rec.mate_levels.begin(), rec.mate_levels.end()));
    }
}

TEST_CASE("census is shard- and thread-invariant") {
    const std::string reference = serialize_all(run_census(3, 1, 1).records);
    for (std::uint64_t shards : {2, 3, 9}) {
        std::vector<PairEntry> all;
        for (std::uint64_t s = 0; s < shards; ++s) {
            auto part = census_phase1(3, shards, s);
            all.insert(all.end(), part.begin(), part.end());
        }
        CHECK(serialize_all(census_merge(3, std::move(all)).records) == reference);
    }
    CHECK(serialize_all(run_census(3, 4).records) == reference);
    CHECK(serialize_all(run_census(3, 2, 5).records) == reference);
}

TEST_CASE("merge rejects inconsistent pair lists") {
    const std::string good = fingerprint(OrientedGraph::from_compact("o2:1")).digest_hex();
    CHECK_THROWS_AS(census_merge(2, {{good, "o2:1"}, {std::string(32, '0'), "o2:1"}}),
                    std::logic_error);
    CHECK_THROWS_AS(census_merge(2, {{std::string(32, '0'), "o2:1"}}), std::logic_error);
}

TEST_CASE("file-backed phase 1 with checkpoint resume") {
    TempDir tmp;
    const fs::path ref_pairs = tmp.path / "ref.pairs";
    const fs::path ref_ckpt = tmp.path / "ref.ckpt";

    CHECK_FALSE(shard_complete(3, 1, 0, ref_ckpt));  // no checkpoint yet
    census_phase1_file(3, 1, 0, ref_pairs, ref_ckpt, false, 1);
    CHECK(shard_complete(3, 1, 0, ref_ckpt));
    const std::string reference = read_file(ref_pairs);

    // The file agrees with the in-memory scan.
    CHECK(load_pairs_file(ref_pairs) == census_phase1(3, 1, 0));

    // Resuming a completed shard is a no-op.
    census_phase1_file(3, 1, 0, ref_pairs, ref_ckpt, true, 1);
    CHECK(read_file(ref_pairs) == reference);

    // Resume from every possible interruption point: checkpoint says the scan
    // finished counter m, pairs file holds exactly the entries emitted so far.
    // (m = 26 would already be a complete shard, covered above.)
    for (std::uint64_t m = 0; m < 26; ++m) {
        const fs::path pairs = tmp.path / "part.pairs";
        const fs::path ckpt = tmp.path / "part.ckpt";
        write_pairs(pairs, entries_up_to(3, m));
        {
            std::ofstream out(ckpt, std::ios::trunc);
            out << "shard-checkpoint 3 1 0 " << m << '\n';
        }
        CHECK_FALSE(shard_complete(3, 1, 0, ckpt));
        census_phase1_file(3, 1, 0, pairs, ckpt, true, 1);
        CHECK(shard_complete(3, 1, 0, ckpt));
        CHECK(read_file(pairs) == reference);
    }

    // A writer can die after flushing pairs but before the checkpoint: the
    // file is then ahead of the checkpoint. Resume must not duplicate lines.
    {
        const fs::path pairs = tmp.path / "ahead.pairs";
        const fs::path ckpt = tmp.path / "ahead.ckpt";
        write_pairs(pairs, entries_up_to(3, 20));
        {
            std::ofstream out(ckpt, std::ios::trunc);
            out << "shard-checkpoint 3 1 0 5\n";
        }
        census_phase1_file(3, 1, 0, pairs, ckpt, true, 1);
        CHECK(read_file(pairs) == reference);
    }

    // Geometry mismatches are refused rather than silently merged.
    CHECK_THROWS_AS(census_phase1_file(3, 2, 0, ref_pairs, ref_ckpt, true, 1), InputError);
    CHECK_THROWS_AS(census_phase1_file(4, 1, 0, ref_pairs, ref_ckpt, true, 1), InputError);
    CHECK_FALSE(shard_complete(3, 2, 0, ref_ckpt));

    // resume=true without an existing checkpoint behaves like a fresh run.
    const fs::path fresh_pairs = tmp.path / "fresh.pairs";
    const fs::path fresh_ckpt = tmp.path / "fresh.ckpt";
    census_phase1_file(3, 1, 0, fresh_pairs, fresh_ckpt, true, 8);
    CHECK(read_file(fresh_pairs) == reference);

    // Sharded files merge to the same census as the in-memory run.
    std::vector<PairEntry> all;
    for (std::uint64_t s = 0; s < 4; ++s) {
        const fs::path p = tmp.path / ("s" + std::to_string(s) + ".pairs");
        const fs::path c = tmp.path / ("s" + std::to_string(s) + ".ckpt");
        census_phase1_file(3, 4, s, p, c, false, 3);
        CHECK(shard_complete(3, 4, s, c));
        auto part = load_pairs_file(p);
        all.insert(all.end(), part.begin(), part.end());
    }
    CHECK(serialize_all(census_merge(3, std::move(all)).records) ==
          serialize_all(run_census(3).records));

    CHECK_THROWS_AS(load_pairs_file(tmp.path / "missing.pairs"), InputError);
}

TEST_CASE("record serialization round trip") {
    CensusResult res = run_census(3);
    std::ostringstream os;
    export_records(res.records, os);
    std::istringstream in(os.str());
    std::vector<CensusRecord> back = import_records(in);
    REQUIRE(back.size() == res.records.size());
    CHECK(serialize_all(back) == os.str());

    // Unresolved mate fields serialize as nulls and survive the trip.
    CensusRecord single;
    single.canon = "o6:000000000000000";
    single.n = 6;
    single.det_walk = mpz_class("-123456789012345678901234567890");
    single.fingerprint_digest = std::string(32, 'a');
    single.mates_resolved = false;
    single.bound_violation = true;
    std::string line = record_to_json_line(single);
    CensusRecord parsed = record_from_json_line(line);
    CHECK(parsed.det_walk == single.det_walk);
    CHECK_FALSE(parsed.mates_resolved);
    CHECK_FALSE(parsed.reduced_integral);
    CHECK(parsed.bound_violation);
    CHECK(record_to_json_line(parsed) == line);
}

TEST_CASE("record parsing errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            import_records(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1L;
    };
    const std::string good = record_to_json_line(run_census(2).records[0]);
    CHECK(line_of(good + "\nnot json\n") == 2);
    CHECK(line_of("[]\n") == 1);
    CHECK(line_of("{\"canon\": \"o2:0\"}\n") == 1);
    CHECK(line_of(good + "\n" + good + "\n{\"canon\": 3}\n") == 3);

    CHECK_THROWS_AS(record_from_json_line("{}"), ParseError);
    // det_walk must be a decimal string, not a number.
    std::string bad_det = good;
    bad_det.replace(bad_det.find("\"det_walk\":\"0\""), 14, "\"det_walk\":0");
    REQUIRE(bad_det != good);
    CHECK_THROWS_AS(record_from_json_line(bad_det), ParseError);
    // Mate fields must be all null or all present.
    std::string half_null = good;
    half_null.replace(half_null.find("\"mates\":[]"), 10, "\"mates\":null");
    CHECK_THROWS_AS(record_from_json_line(half_null), ParseError);
    // mate_class_count must agree with the mates array.
    std::string bad_count = good;
    bad_count.replace(bad_count.find("\"mate_class_count\":0"), 20, "\"mate_class_count\":2");
    CHECK_THROWS_AS(record_from_json_line(bad_count), ParseError);
}

TEST_CASE("find_mates agrees with the census") {
    CensusResult res = run_census(4);
    int spot_checked = 0;
    for (const auto& rec : res.records) {
        if (!rec.in_fn || rec.mates.empty() || spot_checked >= 3) continue;
        ++spot_checked;
        OrientedGraph g = OrientedGraph::from_compact(rec.canon);
        MateClassReport rep = find_mates(g);
        CHECK(rep.representative == rec.canon);
        CHECK(rep.members == rec.mates);
        REQUIRE(rep.certificates_available);
        std::vector<mpz_class> levels;
        for (const auto& cert : rep.certificates) {
            CHECK(verify_gamma_membership(cert));
            levels.push_back(cert.level);
        }
        std::sort(levels.begin(), levels.end());
        CHECK(levels == rec.mate_levels);
        for (const auto& audit : rep.certificate_audits) CHECK(audit.all_passed());
        for (const auto& audit : rep.pairwise_audits) CHECK(audit.all_passed());
    }
    CHECK(spot_checked == 3);

    // Multi-threaded search returns the same report.
    OrientedGraph g = OrientedGraph::from_compact(res.records[0].canon);
    CHECK(find_mates(g, 4).members == find_mates(g, 1).members);

    // Non-controllable class: mates found, no certificates.
    MateClassReport star = find_mates(OrientedGraph::from_compact("o3:011"));
    CHECK(star.members == std::vector<std::string>{"o3:022"});
    CHECK_FALSE(star.certificates_available);
    CHECK(star.certificates.empty());

    // A relabeled input reports the same class data.
    OrientedGraph relabeled = apply_permutation(g, Permutation({3, 1, 0, 2}));
    CHECK(find_mates(relabeled).representative == res.records[0].canon);
}

TEST_CASE("verify_candidate_mate on the reference pairs") {
    const OrientedGraph& d1 = builtin::example1_d();
    const OrientedGraph& c1 = builtin::example1_c();

    MateClassReport rep = verify_candidate_mate(d1, c1);
    CHECK(rep.representative == canonical_form(d1));
    REQUIRE(rep.members.size() == 3);
    CHECK(std::is_sorted(rep.members.begin(), rep.members.end()));
    REQUIRE(rep.certificates_available);
    REQUIRE(rep.certificates.size() == 3);

    std::vector<mpz_class> levels;
    for (const auto& cert : rep.certificates) {
        CHECK(verify_gamma_membership(cert));
        levels.push_back(cert.level);
    }
    std::sort(levels.begin(), levels.end());
    CHECK(levels == std::vector<mpz_class>{7, 257, 1799});

    REQUIRE(rep.certificate_audits.size() == 3);
    for (const auto& audit : rep.certificate_audits) CHECK(audit.all_passed());
    REQUIRE(rep.pairwise_audits.size() == 3);
    for (const auto& audit : rep.pairwise_audits) CHECK(audit.all_passed());

    const OrientedGraph& d2 = builtin::example2_d();
    MateClassReport rep2 = verify_candidate_mate(d2, d2.transposed());
    REQUIRE(rep2.members.size() == 1);
    CHECK(rep2.members.front() == canonical_form(d2.transposed()));
    REQUIRE(rep2.certificates.size() == 1);
    CHECK(rep2.certificates.front().level == 191);
}

TEST_CASE("verify_candidate_mate rejections") {
    const OrientedGraph& d1 = builtin::example1_d();
    const OrientedGraph& d2 = builtin::example2_d();
    CHECK_THROWS_AS(verify_candidate_mate(d1, d2), InputError);            // order
    CHECK_THROWS_AS(verify_candidate_mate(d2, OrientedGraph(6)), InputError);  // spectrum
    OrientedGraph relabeled = apply_permutation(d2, Permutation({5, 4, 3, 2, 1, 0}));
    CHECK_THROWS_AS(verify_candidate_mate(d2, relabeled), InputError);     // isomorphic
}
