#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace loops {

// Element of a finite loop, identified by its index in [0, n).
// Index 0 is always the neutral element.
using Elem = std::uint16_t;

inline constexpr int kMaxOrder = 4096;

struct LoopError : std::runtime_error {
    explicit LoopError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IndexOutOfRange : LoopError {
    IndexOutOfRange(int idx, int n)
        : LoopError("element index " + std::to_string(idx) +
                    " out of range [0, " + std::to_string(n) + ")") {}
};

struct DegreeMismatch : LoopError {
    DegreeMismatch(int got, int want)
        : LoopError("degree mismatch: got " + std::to_string(got) +
                    ", expected " + std::to_string(want)) {}
};

}  // namespace loops
