#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "loops/cayley.hpp"
#include "loops/report.hpp"

namespace loops {

// The group B = <e1, e2 ; e1^4 = e2^4 = 1>, an element written
// e1^{a1 + 2a1'} e2^{a2 + 2a2'} with a1, a1', a2, a2' in {0,1}.
struct BElem {
    std::uint8_t a1 : 1, a1p : 1, a2 : 1, a2p : 1;

    static BElem one() { return {0, 0, 0, 0}; }
    static BElem from_index(int i) {
        return {(std::uint8_t)(i & 1), (std::uint8_t)((i >> 1) & 1), (std::uint8_t)((i >> 2) & 1),
                (std::uint8_t)((i >> 3) & 1)};
    }
    int index() const { return a1 | (a1p << 1) | (a2 << 2) | (a2p << 3); }

    // Exponentwise product: the new primed bits pick up the carry a_h b_h.
    friend BElem operator*(BElem x, BElem y) {
        BElem r;
        r.a1 = x.a1 ^ y.a1;
        r.a1p = x.a1p ^ y.a1p ^ (x.a1 & y.a1);
        r.a2 = x.a2 ^ y.a2;
        r.a2p = x.a2p ^ y.a2p ^ (x.a2 & y.a2);
        return r;
    }
    friend bool operator==(BElem x, BElem y) { return x.index() == y.index(); }
};

// B2: the square-free quotient, bit 0 = e1, bit 1 = e2.
using B2Elem = std::uint8_t;
inline constexpr B2Elem kB2E1 = 1, kB2E2 = 2, kB2E12 = 3;

inline B2Elem b_project(BElem x) { return (B2Elem)(x.a1 | (x.a2 << 1)); }

// The 6-dimensional space A over GF(2); bit order
// (c111, c222, c112, c121, c122, c212). Indices with k < i are read
// through the identification c_ijk = c_kji.
using AVec = std::uint8_t;

inline constexpr AVec kC111 = 1, kC222 = 2, kC112 = 4, kC121 = 8, kC122 = 16, kC212 = 32;
inline constexpr AVec kZ1 = kC112 | kC121;  // z1
inline constexpr AVec kZ2 = kC122 | kC212;  // z2

AVec basis_c(int i, int j, int k);

// Action of B on A; factors through the projection to B2.
AVec act(B2Elem b, AVec a);
inline AVec act(BElem b, AVec a) { return act(b_project(b), a); }

// The trilinear-data form C on B2^3, symmetric in its outer arguments.
AVec c_form(B2Elem a, B2Elem b, B2Elem c);

// Correction form D on B2^2 (nonzero only when an argument is e1+e2).
AVec d_corr(B2Elem u, B2Elem v);

// s_h and the associator blueprint f on B^3.
int s_form(int h, BElem x, BElem y, BElem z);
AVec f_assoc(BElem x, BElem y, BElem z);

// Element encoding of the order-1024 loop: index = 64*B-index + A-mask.
inline Elem q_index(BElem b, AVec a) { return (Elem)(b.index() * 64 + a); }
inline BElem q_bpart(Elem v) { return BElem::from_index(v >> 6); }
inline AVec q_apart(Elem v) { return (AVec)(v & 63); }

// The A-part of the product (x,a)*(y,b); g(x,y) is this with a = b = 0.
AVec product_apart(BElem x, AVec a, BElem y, AVec b);
inline AVec g_cocycle(BElem x, BElem y) { return product_apart(x, 0, y, 0); }

// Builds the order-1024 loop over B x A and validates it.
CayleyTable build_q1024();

// The action-invariant subspace V = span{c222, c122, c212} (8 masks).
std::vector<AVec> h_nuclear_span();
// The order-16 normal subloop H = {(e2^{2k}, v) : k in {0,1}, v in V}
// used for the order-64 quotient, as elements of the order-1024 loop.
// V alone is the largest piece of H inside the nucleus; the e2^2 section
// is what makes the quotient keep a non-nuclear square.
std::vector<Elem> h_subloop_elems();

// Quotient of the order-1024 loop by H (canonical block relabeling).
CayleyTable build_q64();

// Reproduces every table and identity the construction rests on.
Suite verify_construction(int threads = 0);

}  // namespace loops
