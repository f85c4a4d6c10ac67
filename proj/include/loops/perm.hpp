#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loops/elem.hpp"

namespace loops {

// A permutation of [0, n), stored as its image array.
// Composition convention throughout: (f*g)(x) = f(g(x)), g applied first.
using Perm = std::vector<Elem>;

Perm identity_perm(int n);
bool is_permutation(const Perm& p);
Perm compose(const Perm& f, const Perm& g);
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);

// Composes a chain right-to-left: compose_all({f,g,h}) = f*g*h.
Perm compose_all(std::initializer_list<const Perm*> fs);

// p raised to an integer power (negative allowed).
Perm perm_pow(const Perm& p, long k);

std::uint64_t perm_hash(const Perm& p);

// One-line serialization: space-separated images of 0..n-1.
std::string perm_to_string(const Perm& p);

struct PermHasher {
    std::size_t operator()(const Perm& p) const { return static_cast<std::size_t>(perm_hash(p)); }
};

}  // namespace loops
