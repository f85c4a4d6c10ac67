#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loops/elem.hpp"
#include "loops/perm.hpp"

namespace loops {

struct TableError : LoopError {
    enum class Kind {
        BadShape,
        BadEntry,
        RowNotPermutation,
        ColNotPermutation,
        NoIdentity,
        IdentityNotZero,
    };
    Kind kind;
    int index;  // offending row/column/element, -1 if not applicable

    TableError(Kind k, int idx, const std::string& msg) : LoopError(msg), kind(k), index(idx) {}
};

/// A finite loop as a validated Cayley table with precomputed division
/// tables. Immutable after construction; all queries are O(1) lookups and
/// safe to run concurrently.
class CayleyTable {
  public:
    CayleyTable() = default;  // empty placeholder; use validate() to build

    int order() const { return n_; }
    const std::string& label() const { return label_; }
    void set_label(std::string s) { label_ = std::move(s); }

    Elem mul(Elem x, Elem y) const { return mul_[idx(x, y)]; }
    // x \ y: the unique z with x*z = y.
    Elem ldiv(Elem x, Elem y) const { return ldiv_[idx(x, y)]; }
    // b / a: the unique z with z*a = b.
    Elem rdiv(Elem b, Elem a) const { return rdiv_[idx(b, a)]; }

    // Row pointers for tight inner loops.
    const Elem* mul_row(Elem x) const { return &mul_[(std::size_t)x * n_]; }
    const Elem* ldiv_row(Elem x) const { return &ldiv_[(std::size_t)x * n_]; }
    // mul_col(x)[y] = y*x, rdiv_col(a)[b] = b/a (contiguous).
    const Elem* mul_col(Elem x) const { return &mul_t_[(std::size_t)x * n_]; }
    const Elem* rdiv_col(Elem a) const { return &rdiv_t_[(std::size_t)a * n_]; }

    Perm left_translation(Elem x) const;   // L_x : y -> x*y
    Perm right_translation(Elem x) const;  // R_x : y -> y*x

    Elem linv(Elem x) const { return ldiv(x, 0); }  // I(x) = x \ 1
    Elem rinv(Elem x) const { return rdiv(0, x); }  // J(x) = 1 / x

    // I^k(x); negative k applies J = I^{-1}.
    Elem ipow(Elem x, long k) const;
    Elem jpow(Elem x, long k) const { return ipow(x, -k); }

    // eta(x) = x*J(x); in general this may differ from I(x)*x.
    Elem eta(Elem x) const { return mul(x, rinv(x)); }

    void check_range(Elem x) const {
        if (x >= n_) throw IndexOutOfRange(x, n_);
    }

    const std::vector<Elem>& raw_mul() const { return mul_; }

    // Validates raw rows as a Latin square with neutral element 0 and
    // builds the division tables. With relabel=true, a table whose
    // identity sits elsewhere is conjugated so it becomes element 0.
    static CayleyTable validate(const std::vector<std::vector<Elem>>& rows,
                                std::string label = {}, bool relabel = false);
    static CayleyTable validate_flat(std::vector<Elem> mul, int n, std::string label = {},
                                     bool relabel = false);

  private:
    std::size_t idx(Elem x, Elem y) const { return (std::size_t)x * n_ + y; }
    void build_aux();

    int n_ = 0;
    std::string label_;
    std::vector<Elem> mul_, ldiv_, rdiv_;
    std::vector<Elem> mul_t_, rdiv_t_;  // transposes, for column-major sweeps
};

struct InverseMaps {
    Elem i;          // I(x)
    Elem j;          // J(x)
    Elem eta_xj;     // x * J(x)
    Elem eta_ix;     // I(x) * x
    bool eta_agree;  // eta_xj == eta_ix
};

InverseMaps inverse_maps(const CayleyTable& t, Elem x);

// Convenience builders used all over the tests.
CayleyTable cyclic_table(int n);
CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);

}  // namespace loops
