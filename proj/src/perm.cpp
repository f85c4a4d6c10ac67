#include "loops/perm.hpp"

#include <sstream>

namespace loops {

Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = static_cast<Elem>(i);
    return p;
}

bool is_permutation(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    for (Elem v : p) {
        if (v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Perm compose(const Perm& f, const Perm& g) {
    if (f.size() != g.size()) throw DegreeMismatch((int)g.size(), (int)f.size());
    Perm r(f.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<Elem>(i);
    return r;
}

bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

Perm compose_all(std::initializer_list<const Perm*> fs) {
    Perm r;
    bool first = true;
    for (auto it = std::rbegin(fs); it != std::rend(fs); ++it) {
        if (first) {
            r = **it;
            first = false;
        } else {
            r = compose(**it, r);
        }
    }
    return r;
}

Perm perm_pow(const Perm& p, long k) {
    Perm base = k >= 0 ? p : inverse(p);
    if (k < 0) k = -k;
    Perm r = identity_perm(static_cast<int>(p.size()));
    while (k > 0) {
        if (k & 1) r = compose(base, r);
        base = compose(base, base);
        k >>= 1;
    }
    return r;
}

std::uint64_t perm_hash(const Perm& p) {
    std::uint64_t h = 1469598103934665603ull;
    for (Elem v : p) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

std::string perm_to_string(const Perm& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ' ';
        os << p[i];
    }
    return os.str();
}

}  // namespace loops
