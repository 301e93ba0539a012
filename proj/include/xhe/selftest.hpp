#pragma once

#include <string>
#include <vector>

#include "xhe/mceliece.hpp"

namespace xhe::selftest {

struct Check {
    std::string name;
    bool passed;
    std::string detail; // empty when passed
};

struct Report {
    std::vector<Check> checks;

    bool all_passed() const;
    /// First failing check, or nullptr when everything passed.
    const Check* first_failure() const;
};

/// Replays the known-answer pipeline end to end on the built-in fixture
/// key, then runs the exhaustive (7,4) roundtrips: all 16 plaintexts in
/// homomorphic mode, and all 16 x 7 single-error cases plus the 16
/// error-free cases in classic mode. Checks run in pipeline order, so
/// first_failure() names the earliest diverging stage.
Report run();

/// Same checks against caller-supplied key material; lets tests verify
/// that an injected fault is caught at the right stage.
Report run_with(const BitMatrix& scrambler, const HammingCode& code,
                const Permutation& permutation);

} // namespace xhe::selftest
