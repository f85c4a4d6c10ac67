#pragma once

#include <optional>
#include <string>
#include <utility>

#include "loops/cayley.hpp"
#include "loops/perm.hpp"

namespace loops {

// An ordered triple of permutations, tested (never assumed) against
// alpha(x)*beta(y) = gamma(x*y).
struct Autotopism {
    Perm alpha, beta, gamma;
    std::string name;
};

struct AutotopismCheck {
    bool holds;
    // First violating pair in lexicographic (x, y) order when !holds.
    std::optional<std::pair<Elem, Elem>> witness;
};

AutotopismCheck is_autotopism(const CayleyTable& t, const Autotopism& a);

// The named triples, composed exactly as defined:
//   Buch(x)  = (L_x, R_x^{-1}, L_x R_x^{-1})
//   BBuch(x,y) = (L_{xy}, R_{yx}^{-1}, L_{xy} R_{yx}^{-1})
//   Ex(a)    = (L_a, R_a^{-1}, R_a^{-1} L_a)
//   Mouf(a)  = (L_a, R_a, L_a R_a)
//   Lcc(x)   = (R_x^{-1} L_x, L_x, L_x)
//   Rcc(x)   = (R_x, L_x^{-1} R_x, R_x)
//   NucL(a)  = (L_a, id, L_a)        holds iff a in the left nucleus
//   NucM(a)  = (R_a, L_a^{-1}, id)   holds iff a in the middle nucleus
//   NucR(a)  = (id, R_a, R_a)        holds iff a in the right nucleus
Autotopism buch_triple(const CayleyTable& t, Elem x);
Autotopism bbuch_triple(const CayleyTable& t, Elem x, Elem y);
Autotopism extra_triple(const CayleyTable& t, Elem a);
Autotopism moufang_triple(const CayleyTable& t, Elem a);
Autotopism lcc_triple(const CayleyTable& t, Elem x);
Autotopism rcc_triple(const CayleyTable& t, Elem x);
Autotopism nuc_left_triple(const CayleyTable& t, Elem a);
Autotopism nuc_mid_triple(const CayleyTable& t, Elem a);
Autotopism nuc_right_triple(const CayleyTable& t, Elem a);

// In an m-inverse loop, autotopisms transform into autotopisms:
//   first variant  (J^{m+1} b I^{m+1}, J^m c I^m, J^m a I^m)
//   second variant (I^m c J^m, I^{m+1} a J^{m+1}, I^m b J^m)
enum class MInvVariant { first, second };
Autotopism minverse_transform(const CayleyTable& t, long m, const Autotopism& a,
                              MInvVariant variant);

// Is p an automorphism, i.e. (p,p,p) an autotopism?
AutotopismCheck is_automorphism(const CayleyTable& t, const Perm& p);

}  // namespace loops
