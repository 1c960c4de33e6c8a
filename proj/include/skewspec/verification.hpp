#pragma once

#include <string>
#include <vector>

namespace skewspec {

struct VerificationLine {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerificationReport {
    std::vector<VerificationLine> lines;
    bool all_passed() const;
};

// Recomputes every frozen reference value of the two built-in examples from
// scratch: determinants, factorizations, family membership, both
// characteristic polynomials, mate classes, certificate levels, invariant
// factors, mod-2 rank, the transpose criterion and all structural audits.
VerificationReport verify_builtin_examples();

}  // namespace skewspec
