#pragma once

#include <cstdint>

#include "loops/cayley.hpp"
#include "loops/report.hpp"

namespace loops {

struct SuiteOptions {
    int threads = 0;
    // fast: replace every over-threshold sweep by its sampled form and
    // restrict stabilizer-chain checks to tables of order <= 128.
    bool fast = false;
    std::uint64_t seed = 20240101;
    std::uint64_t samples = 1000000;
    bool include_cc_center = true;  // the optional center-factor check
};

// Structural results that hold in every loop satisfying the defining law:
// translation/inner-mapping group facts, inverse-map identities, the
// automorphism families, and the nucleus-factor structure.
Suite theorem_suite(const CayleyTable& t, const SuiteOptions& opt = {});

// Associator-calculus identities, evaluated over nucleus-coset
// representatives (one per coset; independence of the choice is verified
// separately).
Suite calculus_suite(const CayleyTable& t, const SuiteOptions& opt = {});

}  // namespace loops
