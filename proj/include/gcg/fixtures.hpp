#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gcg {

// One named instance with machine-checkable expectations.  Empty `subset`
// means the fixture only checks the enumeration count for its alpha.
struct Fixture {
    std::string id;
    std::string group_expr;
    std::string alpha_spec;
    std::string subset;
    bool expect_valid = true;
    std::string invalid_error;  // expected error class name when !expect_valid
    std::optional<bool> connected;
    std::optional<bool> bipartite;
    std::optional<bool> integral;
    std::optional<std::string> branch;  // expected connectivity branch
    std::optional<int> cubic_count;     // expected |enumerate_gcs(G, alpha, 3)|
    std::optional<int> resolved_size;   // expected |S| after name resolution
    std::string note;
};

const std::vector<Fixture>& fixture_registry();

struct FixtureResult {
    std::string id;
    bool passed;
    std::string detail;  // "ok" or the first mismatch
};

// Evaluates every fixture: resolves the group, map and subset, checks
// validity or the expected rejection, and compares every stated expectation
// against both the algebraic criteria and the graph oracles (which must also
// agree with each other).
std::vector<FixtureResult> run_fixtures();

}  // namespace gcg
