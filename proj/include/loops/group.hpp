#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <optional>
#include <vector>

#include "loops/cayley.hpp"
#include "loops/perm.hpp"

namespace loops {

using BigInt = boost::multiprecision::cpp_int;

struct NotASubgroup : LoopError {
    explicit NotASubgroup(const std::string& msg) : LoopError(msg) {}
};

/// A finitely generated permutation group with a deterministic
/// base-and-strong-generating-set chain. The chain is built lazily on the
/// first order/membership query; afterwards all queries are read-only.
///
/// When the chain predicts an order <= kEnumerateLimit (and the degree is
/// small enough to afford it), the element set is also enumerated by
/// breadth-first closure, which doubles as the testing oracle.
class PermGroup {
  public:
    static constexpr std::uint64_t kEnumerateLimit = 100000;

    PermGroup(int degree, std::vector<Perm> generators);
    static PermGroup trivial(int degree);

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }

    BigInt order() const;
    bool contains(const Perm& p) const;

    // True iff h g h^{-1} stays in this group for every generator h of g
    // ... of `sup` and g of this group; i.e. "this" is normal in sup.
    // Throws NotASubgroup when some generator of this group is not in sup.
    bool is_normal_in(const PermGroup& sup) const;

    // Orbit of a point under the group (sorted).
    std::vector<Elem> orbit_of(Elem p) const;

    // Base points of the stabilizer chain, in construction order.
    std::vector<Elem> base() const;

    // The stabilizer of the first base point as a new group. Requires the
    // chain; if the group does not move `p`, returns the group itself.
    // Derived from strong generators, so no Schreier generators are stored.
    PermGroup point_stabilizer_group(Elem p) const;

    // Element set when the naive engine kicked in, else nullptr.
    const std::vector<Perm>* elements() const;

  private:
    struct Chain;
    void ensure_chain() const;

    int degree_;
    std::vector<Perm> gens_;
    mutable std::shared_ptr<Chain> chain_;  // built once, then shared/read-only
};

// Breadth-first closure oracle: all products of generators, or nullopt
// once the closure exceeds `cap`. Deterministic element order (BFS over
// the generator list, insertion order).
std::optional<std::vector<Perm>> naive_closure(int degree, const std::vector<Perm>& gens,
                                               std::uint64_t cap);

// The translation-generated groups of a loop. Generator conventions:
//   LMlt = <L_x>, RMlt = <R_x>, Mlt = <L_x, R_x>  (x ascending, duplicates
//   and identity maps dropped, first occurrence kept)
// Inner mapping generators, (x, y) ascending lexicographically:
//   T_x = R_x^{-1} L_x, L(x,y) = L_{xy}^{-1} L_x L_y, R(x,y) = R_{yx}^{-1} R_x R_y.
// For order > kExplicitInnerLimit the three inner groups are instead
// realized as point stabilizers of Mlt/LMlt/RMlt at 0 (same groups).
struct MultGroups {
    PermGroup mlt, lmlt, rmlt, inn, lmlt1, rmlt1;
};

inline constexpr int kExplicitInnerLimit = 128;

MultGroups mult_groups(const CayleyTable& t);

// The individual inner mappings as O(1)-per-point maps.
Perm inner_T(const CayleyTable& t, Elem x);
Perm inner_L(const CayleyTable& t, Elem x, Elem y);
Perm inner_R(const CayleyTable& t, Elem x, Elem y);

}  // namespace loops
