#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "loops/cayley.hpp"
#include "loops/parallel.hpp"
#include "loops/rng.hpp"

namespace loops {

enum class Law {
    buchsteiner,
    buchsteiner_big,
    lcc,
    rcc,
    cc,
    extra,
    moufang,
    wip,
    wwip,
    m_inverse,
    flexible_law,
    left_alt_law,
    right_alt_law,
};

struct LawId {
    Law law;
    long m = 0;  // parameter of m_inverse

    std::string name() const;
    static std::optional<LawId> parse(const std::string& s);
};

int law_arity(Law law);

struct UnknownLaw : LoopError {
    explicit UnknownLaw(const std::string& s) : LoopError("unknown law '" + s + "'") {}
};

struct CheckOptions {
    enum class Mode { automatic, exhaustive, sampled };
    Mode mode = Mode::automatic;
    std::uint64_t samples = 10000000;
    std::optional<std::uint64_t> seed;  // required for sampled mode
    int threads = 0;                    // 0 = all available
    // Called occasionally from worker 0 during long exhaustive sweeps.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

// Exhaustive sweeps above this tuple count are not run silently; sampled
// mode (with an explicit seed) is the default there instead.
inline constexpr std::uint64_t kExhaustiveLimit = std::uint64_t(1) << 31;

struct CheckResult {
    std::string law;
    bool sampled = false;
    std::uint64_t samples = 0;  // when sampled
    std::uint64_t seed = 0;     // when sampled
    bool passed = true;
    std::vector<Elem> witness;  // lexicographically smallest violating tuple
    std::string detail;         // e.g. which half of cc failed
    std::uint64_t evaluations = 0;
};

CheckResult check_identity(const CayleyTable& t, LawId law, const CheckOptions& opt = {});

// Re-evaluates a witness tuple against the law; true means it violates.
bool witness_violates(const CayleyTable& t, LawId law, const std::vector<Elem>& w);

struct ElementProperties {
    bool two_sided;  // I(a) == J(a)
    bool lip, rip, flexible, left_alt, right_alt, extra, moufang;
};

ElementProperties element_properties(const CayleyTable& t, Elem a);

struct MInverseReport {
    long m = 0;
    bool is_m_inverse = false;
    std::vector<Elem> witness;    // when the m-inverse check fails
    bool neg_m_ok = false;        // also (-2m-1)-inverse
    bool ipow_aut = false;        // I^{3m+1} is an automorphism
    std::optional<long> wip_k;    // k with m = ((-2)^k - 1)/3, if any
    bool wip_next_ok = false;     // WIP^{k+1}, when wip_k is set
    bool passed = false;
};

MInverseReport minverse_suite(const CayleyTable& t, long m, int threads = 0);

// ---- generic sweep machinery (shared with the suites) ----

struct SweepOutcome {
    bool passed = true;
    int arity = 0;
    std::array<Elem, 4> w{};        // witness tuple when failed
    std::uint64_t evaluations = 0;  // rank of the witness + 1, or the full space
};

namespace detail {

template <class Pred>
SweepOutcome sweep1(int n, Pred pred) {
    SweepOutcome out;
    out.arity = 1;
    for (int x = 0; x < n; ++x)
        if (!pred((Elem)x)) {
            out.passed = false;
            out.w = {(Elem)x, 0, 0, 0};
            out.evaluations = (std::uint64_t)x + 1;
            return out;
        }
    out.evaluations = n;
    return out;
}

template <class Pred>
SweepOutcome sweep2(int n, Pred pred, int threads = 0) {
    if (threads == 0) threads = default_threads();
    std::atomic<std::uint32_t> best_x{UINT32_MAX};
    std::vector<std::array<Elem, 2>> found(threads + 1, {0, 0});
    std::vector<char> has(threads + 1, 0);
    parallel_chunks(n, threads, [&](int tid, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t x = lo; x < hi; ++x) {
            if (x > best_x.load(std::memory_order_relaxed)) break;
            for (int y = 0; y < n; ++y)
                if (!pred((Elem)x, (Elem)y)) {
                    found[tid] = {(Elem)x, (Elem)y};
                    has[tid] = 1;
                    std::uint32_t cur = best_x.load(std::memory_order_relaxed);
                    while (cur > x && !best_x.compare_exchange_weak(cur, (std::uint32_t)x)) {
                    }
                    return;
                }
        }
    });
    SweepOutcome out;
    out.arity = 2;
    for (std::size_t t = 0; t < has.size(); ++t)
        if (has[t] && (out.passed || std::make_pair(found[t][0], found[t][1]) <
                                         std::make_pair(out.w[0], out.w[1]))) {
            out.passed = false;
            out.w = {found[t][0], found[t][1], 0, 0};
        }
    out.evaluations =
        out.passed ? (std::uint64_t)n * n : (std::uint64_t)out.w[0] * n + out.w[1] + 1;
    return out;
}

template <class Pred>
SweepOutcome sweep3(int n, Pred pred, int threads = 0,
                    const std::function<void(std::uint64_t, std::uint64_t)>& progress = {}) {
    if (threads == 0) threads = default_threads();
    std::atomic<std::uint32_t> best_x{UINT32_MAX};
    std::vector<std::array<Elem, 3>> found(threads + 1, {0, 0, 0});
    std::vector<char> has(threads + 1, 0);
    const std::uint64_t total = (std::uint64_t)n * n * n;
    parallel_chunks(n, threads, [&](int tid, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t x = lo; x < hi; ++x) {
            if (x > best_x.load(std::memory_order_relaxed)) break;
            if (progress && tid == 0) progress((x - lo) * (std::uint64_t)n * n, total);
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (!pred((Elem)x, (Elem)y, (Elem)z)) {
                        found[tid] = {(Elem)x, (Elem)y, (Elem)z};
                        has[tid] = 1;
                        std::uint32_t cur = best_x.load(std::memory_order_relaxed);
                        while (cur > x && !best_x.compare_exchange_weak(cur, (std::uint32_t)x)) {
                        }
                        return;
                    }
        }
    });
    SweepOutcome out;
    out.arity = 3;
    for (std::size_t t = 0; t < has.size(); ++t)
        if (has[t] &&
            (out.passed || std::make_tuple(found[t][0], found[t][1], found[t][2]) <
                               std::make_tuple(out.w[0], out.w[1], out.w[2]))) {
            out.passed = false;
            out.w = {found[t][0], found[t][1], found[t][2], 0};
        }
    out.evaluations = out.passed
                          ? total
                          : ((std::uint64_t)out.w[0] * n + out.w[1]) * n + out.w[2] + 1;
    return out;
}

template <class Pred>
SweepOutcome sweep4(int n, Pred pred, int threads = 0) {
    if (threads == 0) threads = default_threads();
    std::atomic<std::uint32_t> best_x{UINT32_MAX};
    std::vector<std::array<Elem, 4>> found(threads + 1, {0, 0, 0, 0});
    std::vector<char> has(threads + 1, 0);
    parallel_chunks(n, threads, [&](int tid, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t x = lo; x < hi; ++x) {
            if (x > best_x.load(std::memory_order_relaxed)) break;
            for (int y = 0; y < n; ++y)
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v)
                        if (!pred((Elem)x, (Elem)y, (Elem)u, (Elem)v)) {
                            found[tid] = {(Elem)x, (Elem)y, (Elem)u, (Elem)v};
                            has[tid] = 1;
                            std::uint32_t cur = best_x.load(std::memory_order_relaxed);
                            while (cur > x &&
                                   !best_x.compare_exchange_weak(cur, (std::uint32_t)x)) {
                            }
                            return;
                        }
        }
    });
    SweepOutcome out;
    out.arity = 4;
    for (std::size_t t = 0; t < has.size(); ++t)
        if (has[t] && (out.passed ||
                       std::make_tuple(found[t][0], found[t][1], found[t][2], found[t][3]) <
                           std::make_tuple(out.w[0], out.w[1], out.w[2], out.w[3]))) {
            out.passed = false;
            out.w = found[t];
        }
    out.evaluations =
        out.passed ? (std::uint64_t)n * n * n * n
                   : (((std::uint64_t)out.w[0] * n + out.w[1]) * n + out.w[2]) * n + out.w[3] + 1;
    return out;
}

// Seeded sampling; the tuple drawn for sample k depends only on (seed, k),
// so the result is independent of the thread partition.
template <class Pred>
SweepOutcome sampled_sweep(int n, int arity, Pred pred, std::uint64_t samples, std::uint64_t seed,
                           int threads = 0) {
    if (threads == 0) threads = default_threads();
    std::atomic<std::uint64_t> best_k{UINT64_MAX};
    std::vector<std::array<Elem, 4>> found(threads + 1, {0, 0, 0, 0});
    std::vector<std::uint64_t> found_k(threads + 1, UINT64_MAX);
    parallel_chunks(samples, threads, [&](int tid, std::uint64_t lo, std::uint64_t hi) {
        std::array<Elem, 4> tup{};
        for (std::uint64_t k = lo; k < hi; ++k) {
            if (k > best_k.load(std::memory_order_relaxed)) break;
            SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ull * (k + 1)));
            for (int a = 0; a < arity; ++a) tup[a] = (Elem)g.below((std::uint32_t)n);
            bool ok;
            if (arity == 2)
                ok = pred(tup[0], tup[1], 0, 0);
            else if (arity == 3)
                ok = pred(tup[0], tup[1], tup[2], 0);
            else
                ok = pred(tup[0], tup[1], tup[2], tup[3]);
            if (!ok) {
                found[tid] = tup;
                found_k[tid] = k;
                std::uint64_t cur = best_k.load(std::memory_order_relaxed);
                while (cur > k && !best_k.compare_exchange_weak(cur, k)) {
                }
                return;
            }
        }
    });
    SweepOutcome out;
    out.arity = arity;
    std::uint64_t bk = UINT64_MAX;
    for (std::size_t t = 0; t < found_k.size(); ++t)
        if (found_k[t] < bk) {
            bk = found_k[t];
            out.w = found[t];
            out.passed = false;
        }
    out.evaluations = out.passed ? samples : bk + 1;
    return out;
}

}  // namespace detail
}  // namespace loops
