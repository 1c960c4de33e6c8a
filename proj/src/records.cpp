#include <istream>
#include <ostream>

#include <json.hpp>

#include "skewspec/census.hpp"
#include "skewspec/errors.hpp"

namespace skewspec {

namespace {

using ordered_json = nlohmann::ordered_json;

mpz_class mpz_from_field(const ordered_json& j, const char* key, long lineno) {
    const auto& v = j.at(key);
    if (!v.is_string()) throw ParseError(std::string(key) + " must be a decimal string", lineno);
    try {
        return mpz_class(v.get<std::string>());
    } catch (const std::invalid_argument&) {
        throw ParseError(std::string(key) + " is not a valid integer", lineno);
    }
}

}  // namespace

std::string record_to_json_line(const CensusRecord& r) {
    ordered_json j;
    j["canon"] = r.canon;
    j["n"] = r.n;
    j["controllable"] = r.controllable;
    j["det_walk"] = r.det_walk.get_str();
    if (r.reduced_integral) j["reduced"] = r.reduced.get_str();
    else j["reduced"] = nullptr;
    j["in_fn"] = r.in_fn;
    ordered_json primes = ordered_json::array();
    for (const auto& p : r.odd_primes) primes.push_back(p.get_str());
    j["odd_primes"] = std::move(primes);
    j["k"] = r.k;
    j["bound"] = r.bound;
    j["fingerprint_digest"] = r.fingerprint_digest;
    j["self_transpose"] = r.self_transpose;
    j["wdgss_by_criterion"] = r.wdgss_by_criterion;
    if (r.mates_resolved) {
        j["mate_class_count"] = r.mates.size();
        j["mates"] = r.mates;
        ordered_json levels = ordered_json::array();
        for (const auto& l : r.mate_levels) levels.push_back(l.get_str());
        j["mate_levels"] = std::move(levels);
    } else {
        j["mate_class_count"] = nullptr;
        j["mates"] = nullptr;
        j["mate_levels"] = nullptr;
    }
    j["bound_violation"] = r.bound_violation;
    return j.dump();
}

CensusRecord record_from_json_line(const std::string& line, long lineno) {
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), lineno);
    }
    if (!j.is_object()) throw ParseError("record line must be a JSON object", lineno);

    CensusRecord r;
    try {
        r.canon = j.at("canon").get<std::string>();
        r.n = j.at("n").get<int>();
        r.controllable = j.at("controllable").get<bool>();
        r.det_walk = mpz_from_field(j, "det_walk", lineno);
        if (j.at("reduced").is_null()) {
            r.reduced_integral = false;
        } else {
            r.reduced_integral = true;
            r.reduced = mpz_from_field(j, "reduced", lineno);
        }
        r.in_fn = j.at("in_fn").get<bool>();
        for (const auto& p : j.at("odd_primes")) {
            if (!p.is_string()) throw ParseError("odd_primes entries must be strings", lineno);
            r.odd_primes.emplace_back(p.get<std::string>());
        }
        r.k = j.at("k").get<unsigned>();
        r.bound = j.at("bound").get<std::uint64_t>();
        r.fingerprint_digest = j.at("fingerprint_digest").get<std::string>();
        r.self_transpose = j.at("self_transpose").get<bool>();
        r.wdgss_by_criterion = j.at("wdgss_by_criterion").get<bool>();
        if (j.at("mates").is_null()) {
            r.mates_resolved = false;
            if (!j.at("mate_class_count").is_null() || !j.at("mate_levels").is_null())
                throw ParseError("mate fields must be all null or all present", lineno);
        } else {
            r.mates_resolved = true;
            r.mates = j.at("mates").get<std::vector<std::string>>();
            if (j.at("mate_class_count").get<std::uint64_t>() != r.mates.size())
                throw ParseError("mate_class_count disagrees with mates", lineno);
            for (const auto& l : j.at("mate_levels")) {
                if (!l.is_string()) throw ParseError("mate_levels entries must be strings", lineno);
                r.mate_levels.emplace_back(l.get<std::string>());
            }
        }
        r.bound_violation = j.at("bound_violation").get<bool>();
    } catch (const ParseError&) {
        throw;
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("bad record field: ") + e.what(), lineno);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad record field: ") + e.what(), lineno);
    }
    return r;
}

void export_records(const std::vector<CensusRecord>& records, std::ostream& out) {
    for (const auto& r : records) out << record_to_json_line(r) << '\n';
}

std::vector<CensusRecord> import_records(std::istream& in) {
    std::vector<CensusRecord> out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        out.push_back(record_from_json_line(line, lineno));
    }
    return out;
}

}  // namespace skewspec
