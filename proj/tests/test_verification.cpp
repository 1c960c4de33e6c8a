#include <doctest.h>

#include <set>

#include "skewspec/verification.hpp"

using namespace skewspec;

TEST_CASE("built-in reference values all reproduce") {
    VerificationReport rep = verify_builtin_examples();
    CHECK(rep.all_passed());
    for (const auto& line : rep.lines) {
        INFO(line.name, ": expected ", line.expected, ", got ", line.actual);
        CHECK(line.pass);
        CHECK(line.expected == line.actual);
        CHECK_FALSE(line.name.empty());
    }
    // A real recomputation, not a stub: it covers both examples and the
    // headline quantities.
    CHECK(rep.lines.size() >= 30);
    std::set<std::string> names;
    for (const auto& line : rep.lines) names.insert(line.name);
    CHECK(names.size() == rep.lines.size());  // no duplicated check names
}
