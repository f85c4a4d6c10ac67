#pragma once

#include <string>
#include <vector>

#include "loops/cayley.hpp"
#include "loops/group.hpp"

namespace loops {

struct NotNormal : LoopError {
    explicit NotNormal(const std::string& msg) : LoopError(msg) {}
};

struct ActionArgNotNuclear : LoopError {
    explicit ActionArgNotNuclear(Elem a)
        : LoopError("element " + std::to_string(a) + " is not in the nucleus") {}
};

// A subset closed under mul/ldiv/rdiv within its parent table, kept sorted.
struct SubloopSet {
    std::vector<Elem> members;
    std::string parent;

    bool contains(Elem x) const;
    std::size_t size() const { return members.size(); }
};

struct Nuclei {
    SubloopSet left, mid, right, nuc;
};

Nuclei nuclei(const CayleyTable& t, int threads = 0);

struct CommutantCenter {
    std::vector<Elem> commutant;  // {a : ax = xa for all x}; not a subloop in general
    SubloopSet center;            // nucleus intersect commutant
};

CommutantCenter commutant_center(const CayleyTable& t);

bool is_closed_subloop(const CayleyTable& t, const std::vector<Elem>& sorted_members);
bool is_normal_set(const CayleyTable& t, const std::vector<Elem>& sorted_members);

SubloopSet generate_subloop(const CayleyTable& t, const std::vector<Elem>& seed);
SubloopSet normal_closure(const CayleyTable& t, const std::vector<Elem>& seed);

// Quotient by a normal subloop. Blocks are the cosets; the block of 0 is
// relabeled 0 and the remaining blocks are ordered by minimal member.
struct QuotientMap {
    int source_order = 0;
    std::vector<Elem> proj;       // element -> block index
    std::vector<Elem> block_rep;  // block index -> minimal member
    CayleyTable table;
};

QuotientMap quotient(const CayleyTable& t, const SubloopSet& s);

// (x*yz) [x,y,z] = xy*z
Elem associator(const CayleyTable& t, Elem x, Elem y, Elem z);
// xy = yx*[x,y]
Elem commutator(const CayleyTable& t, Elem x, Elem y);
// a^x = x \ (ax); a must be nuclear for this to define an action
Elem nuclear_action(const CayleyTable& t, const SubloopSet& nuc, Elem a, Elem x);

// Normal closure of the set of all associators; also verifies that the
// quotient by it is a group.
SubloopSet associator_subloop(const CayleyTable& t, int threads = 0);

struct SpecialSubloops {
    std::vector<Elem> m;       // {a : L_a in RMlt}
    std::vector<Elem> gamma;   // {a : R_a in LMlt}
    std::vector<Elem> z_lmlt;  // {b in N_rho : R_b in LMlt}; R over this set is Z(LMlt)
    std::vector<Elem> z_rmlt;  // {a in N_lambda : L_a in RMlt}; L over this set is Z(RMlt)
};

SpecialSubloops special_subloops(const CayleyTable& t, const MultGroups& g, const Nuclei& nucs);

// Left-power order: least k >= 1 with x*(x*(...*x)) = 1 (k factors).
int left_power_order(const CayleyTable& t, Elem x);

}  // namespace loops
