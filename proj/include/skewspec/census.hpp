#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "skewspec/characterization.hpp"
#include "skewspec/oriented_graph.hpp"
#include "skewspec/spectral.hpp"

namespace skewspec {

// One isomorphism class per line of a census: everything needed to audit the
// mate bound without recomputing the census.
struct CensusRecord {
    std::string canon;
    int n = 0;
    bool controllable = false;
    mpz_class det_walk;
    bool reduced_integral = false;
    mpz_class reduced;
    bool in_fn = false;
    std::vector<mpz_class> odd_primes;
    unsigned k = 0;
    std::uint64_t bound = 0;
    std::string fingerprint_digest;
    bool self_transpose = false;
    bool wdgss_by_criterion = false;
    // False when the record comes from single-graph analysis and the mate
    // fields are therefore unknown (serialized as null).
    bool mates_resolved = false;
    std::vector<std::string> mates;        // canonical forms, sorted
    std::vector<mpz_class> mate_levels;    // sorted; empty when not controllable
    bool bound_violation = false;
};

// Phase-1 output: one entry per isomorphism class first seen in a shard.
struct PairEntry {
    std::string digest;
    std::string canon;
    bool operator==(const PairEntry& o) const = default;
};

struct CensusFinding {
    std::string kind;   // bound_violation | audit_failure | wdgss_inconsistent | ...
    std::string canon;
    std::string detail;
};

struct CensusStats {
    int n = 0;
    std::uint64_t labeled_graphs = 0;
    std::uint64_t classes = 0;
    std::uint64_t controllable_classes = 0;
    std::uint64_t fn_classes = 0;
    std::uint64_t self_transpose_classes = 0;
    std::uint64_t wdgss_classes = 0;
    std::uint64_t multi_class_buckets = 0;
    std::uint64_t certificates = 0;
    std::uint64_t audit_checks = 0;
    std::uint64_t audit_failures = 0;
    std::uint64_t bound_violations = 0;
    std::map<std::uint64_t, std::uint64_t> mate_histogram;  // mate count -> classes
};

struct CensusResult {
    CensusStats stats;
    std::vector<CensusRecord> records;   // sorted by canon
    std::vector<CensusFinding> findings;
};

// Phase 1: enumerate one shard of the labeled-graph counter range, reduce each
// graph to its canonical form, and emit one (fingerprint digest, canon) entry
// per class in first-seen order.
std::vector<PairEntry> census_phase1(int n, std::uint64_t shards, std::uint64_t shard_index);

// File-backed variant used for long runs: appends entries to pairs_path and
// records progress in ckpt_path so an interrupted shard can be resumed. The
// checkpoint stores the shard geometry plus the last completed counter value.
void census_phase1_file(int n, std::uint64_t shards, std::uint64_t shard_index,
                        const std::filesystem::path& pairs_path,
                        const std::filesystem::path& ckpt_path, bool resume,
                        std::uint64_t checkpoint_interval = 65536);

// True when ckpt_path records full completion of the given shard.
bool shard_complete(int n, std::uint64_t shards, std::uint64_t shard_index,
                    const std::filesystem::path& ckpt_path);

std::vector<PairEntry> load_pairs_file(const std::filesystem::path& pairs_path);

// Phase 2 (single-threaded, deterministic): global dedup, exact-fingerprint
// bucketing, mate assignment, certificate recovery, structural audits and the
// 2^k - 1 bound check. `pairs` must jointly cover every shard exactly once.
CensusResult census_merge(int n, std::vector<PairEntry> pairs);

// Both phases in-process. shards = 0 means one shard per worker thread.
CensusResult run_census(int n, int threads = 1, std::uint64_t shards = 0);

// Mate search for a single graph by scanning the full enumeration of its
// order. Certificates and audits are attached when the class is controllable
// (and in F_n, respectively).
struct MateClassReport {
    std::string representative;             // canonical form of the input class
    std::vector<std::string> members;       // mate classes, sorted by canon
    bool certificates_available = false;
    std::vector<QCertificate> certificates;      // parallel to members
    std::vector<AuditResult> certificate_audits; // parallel; empty outside F_n
    std::vector<AuditResult> pairwise_audits;
};

MateClassReport find_mates(const OrientedGraph& d, int threads = 1);

// Checks one proposed mate instead of searching: candidate must be
// generalized cospectral with and non-isomorphic to d. The returned report
// covers the classes of {candidate, d^T, candidate^T} minus d's own class.
MateClassReport verify_candidate_mate(const OrientedGraph& d, const OrientedGraph& candidate);

// JSONL serialization. Lines are self-contained JSON objects; big integers
// travel as decimal strings.
std::string record_to_json_line(const CensusRecord& r);
CensusRecord record_from_json_line(const std::string& line, long lineno = 1);
void export_records(const std::vector<CensusRecord>& records, std::ostream& out);
std::vector<CensusRecord> import_records(std::istream& in);

}  // namespace skewspec
