#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace loops {

// One verification record. `tag` is the stable claim identifier used in
// the machine-readable report.
struct Record {
    std::string tag;
    std::string method;  // "exhaustive", "sampled(N,seed)", "bsgs", "set", ...
    bool passed = true;
    std::string detail;          // human-readable note or witness description
    std::vector<long> witness;   // offending tuple, when meaningful
    std::uint64_t evaluations = 0;
    std::uint64_t seed = 0;      // nonzero only for seeded methods
};

struct Suite {
    std::string name;
    std::string input;
    std::vector<Record> records;

    bool all_passed() const {
        for (const auto& r : records)
            if (!r.passed) return false;
        return true;
    }
    const Record* find(const std::string& tag) const {
        for (const auto& r : records)
            if (r.tag == tag) return &r;
        return nullptr;
    }
};

}  // namespace loops
