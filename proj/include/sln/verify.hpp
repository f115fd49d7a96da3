#pragma once

#include <json.hpp>

namespace sln {

// One named check with its parameters and outcome; `ok` is the conjunction.
struct SuiteResult {
    bool ok = true;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();

    void record(const std::string& name, bool passed, nlohmann::ordered_json detail = {});
};

// Hook/tableau identities for all shapes of r <= 6.
SuiteResult verify_partitions();

// Essential-idempotent constants for every standard tableau of size <= min(k, 5),
// associativity and sign-homomorphism spot checks.
SuiteResult verify_young(int k);

// Diagram counts, associativity, commuting contractions, b^2 = b,
// forbidden-pair kills, flip bijectivity, sandwich rank (k <= 2).
SuiteResult verify_brauer(int n, int k);

// Operator identities on every basis vector, rank of e, kernel identity,
// commutation with the Lie algebra action, and (for n >= 2k) the
// maximal-vector tallies against the closed-form multiplicities.
SuiteResult verify_tensor(int n, int k);

SuiteResult verify_all(int n, int k);

}  // namespace sln
