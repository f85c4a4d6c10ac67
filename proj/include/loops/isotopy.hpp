#pragma once

#include <optional>
#include <string>

#include "loops/cayley.hpp"
#include "loops/perm.hpp"

namespace loops {

struct NotBuchsteiner : LoopError {
    explicit NotBuchsteiner(const std::string& msg) : LoopError(msg) {}
};

enum class IsotopeSide { left, right };

struct IsotopeResult {
    std::string base_label;
    std::string designator;  // "left-at-e", "right-at-e", "principal(a,b)"
    CayleyTable table;
    Perm relabel;  // permutation applied to bring the identity to 0 (id for left/right)
};

// Right isotope at e: x o y = (x*(y*e))/e.  Left: x o y = e\((e*x)*y).
// In both, the original neutral element is still neutral, so no relabeling.
IsotopeResult isotope_at(const CayleyTable& t, IsotopeSide side, Elem e);

// Principal isotope x o y = (x/b)*(a\y), whose neutral element a*b is
// relabeled to index 0 (the relabeling permutation is recorded).
IsotopeResult principal_isotope(const CayleyTable& t, Elem a, Elem b);

struct WwipIsomorphism {
    Elem u;         // J^4(x)
    Perm map;       // alpha_u = L_{I(eta(u))}^{-1} I L_u R_u^{-1} J
    bool verified;  // map(y*z) = map(y) o map(z) in the isotope at x, all pairs
};

// The constructive isomorphism from a Buchsteiner loop onto its isotope at x.
// precheck=false skips re-verifying the defining law (for callers that
// already established it over the same table).
WwipIsomorphism wwip_isomorphism(const CayleyTable& t, Elem x, bool precheck = true);

// Backtracking isomorphism search with invariant pruning (identity fixed,
// left-power-order profile, nucleus membership). Intended for order <= 64.
std::optional<Perm> find_isomorphism(const CayleyTable& t1, const CayleyTable& t2);

}  // namespace loops
