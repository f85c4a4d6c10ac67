#include "loops/subloop.hpp"

#include <algorithm>
#include <atomic>

#include "loops/parallel.hpp"

namespace loops {

bool SubloopSet::contains(Elem x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

namespace {

std::vector<Elem> bits_to_sorted(const std::vector<char>& in) {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < in.size(); ++i)
        if (in[i]) out.push_back((Elem)i);
    return out;
}

}  // namespace

Nuclei nuclei(const CayleyTable& t, int threads) {
    const int n = t.order();
    std::vector<char> lf(n, 0), mf(n, 0), rf(n, 0);
    parallel_chunks(n, threads == 0 ? default_threads() : threads,
                    [&](int, std::uint64_t lo, std::uint64_t hi) {
                        for (std::uint64_t a = lo; a < hi; ++a) {
                            bool inl = true, inm = true, inr = true;
                            for (int x = 0; x < n && (inl || inm || inr); ++x) {
                                const Elem ax = t.mul((Elem)a, (Elem)x);
                                const Elem xa = t.mul((Elem)x, (Elem)a);
                                const Elem* rx = t.mul_row((Elem)x);
                                const Elem* rax = t.mul_row(ax);
                                const Elem* rxa = t.mul_row(xa);
                                const Elem* ra = t.mul_row((Elem)a);
                                for (int y = 0; y < n; ++y) {
                                    const Elem xy = rx[y];
                                    if (inl && ra[xy] != rax[y]) inl = false;
                                    if (inm && rx[t.mul((Elem)a, (Elem)y)] != rxa[y]) inm = false;
                                    if (inr && rx[t.mul((Elem)y, (Elem)a)] != t.mul(xy, (Elem)a))
                                        inr = false;
                                    if (!inl && !inm && !inr) break;
                                }
                            }
                            lf[a] = inl;
                            mf[a] = inm;
                            rf[a] = inr;
                        }
                    });
    Nuclei out;
    out.left = {bits_to_sorted(lf), t.label()};
    out.mid = {bits_to_sorted(mf), t.label()};
    out.right = {bits_to_sorted(rf), t.label()};
    std::vector<char> nf(n, 0);
    for (int a = 0; a < n; ++a) nf[a] = lf[a] && mf[a] && rf[a];
    out.nuc = {bits_to_sorted(nf), t.label()};
    return out;
}

CommutantCenter commutant_center(const CayleyTable& t) {
    const int n = t.order();
    std::vector<char> cf(n, 1);
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x)
            if (t.mul((Elem)a, (Elem)x) != t.mul((Elem)x, (Elem)a)) {
                cf[a] = 0;
                break;
            }
    Nuclei nu = nuclei(t);
    CommutantCenter out;
    out.commutant = bits_to_sorted(cf);
    std::vector<Elem> z;
    for (Elem a : out.commutant)
        if (nu.nuc.contains(a)) z.push_back(a);
    out.center = {std::move(z), t.label()};
    return out;
}

bool is_closed_subloop(const CayleyTable& t, const std::vector<Elem>& s) {
    if (s.empty() || s[0] != 0) {
        if (!std::binary_search(s.begin(), s.end(), (Elem)0)) return false;
    }
    for (Elem a : s)
        for (Elem b : s) {
            if (!std::binary_search(s.begin(), s.end(), t.mul(a, b))) return false;
            if (!std::binary_search(s.begin(), s.end(), t.ldiv(a, b))) return false;
            if (!std::binary_search(s.begin(), s.end(), t.rdiv(a, b))) return false;
        }
    return true;
}

bool is_normal_set(const CayleyTable& t, const std::vector<Elem>& s) {
    if (!is_closed_subloop(t, s)) return false;
    const int n = t.order();
    auto in = [&](Elem v) { return std::binary_search(s.begin(), s.end(), v); };
    for (Elem a : s) {
        for (int x = 0; x < n; ++x)
            if (!in(t.rdiv(t.mul((Elem)x, a), (Elem)x))) return false;  // T_x(a)
        for (int x = 0; x < n; ++x) {
            const Elem* rx = t.mul_row((Elem)x);
            for (int y = 0; y < n; ++y) {
                const Elem xy = rx[y];
                if (!in(t.ldiv(xy, t.mul((Elem)x, t.mul((Elem)y, a))))) return false;
                if (!in(t.rdiv(t.mul(t.mul(a, (Elem)y), (Elem)x), t.mul((Elem)y, (Elem)x))))
                    return false;
            }
        }
    }
    return true;
}

SubloopSet generate_subloop(const CayleyTable& t, const std::vector<Elem>& seed) {
    const int n = t.order();
    std::vector<char> in(n, 0);
    std::vector<Elem> members;
    auto add = [&](Elem v) {
        if (!in[v]) {
            in[v] = 1;
            members.push_back(v);
        }
    };
    add(0);
    for (Elem s : seed) {
        t.check_range(s);
        add(s);
    }
    // Pairwise closure; new members are combined with everything seen so far.
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Elem a = members[i], b = members[j];
            add(t.mul(a, b));
            add(t.mul(b, a));
            add(t.ldiv(a, b));
            add(t.ldiv(b, a));
            add(t.rdiv(a, b));
            add(t.rdiv(b, a));
        }
    }
    std::sort(members.begin(), members.end());
    return {std::move(members), t.label()};
}

SubloopSet normal_closure(const CayleyTable& t, const std::vector<Elem>& seed) {
    const int n = t.order();
    SubloopSet cur = generate_subloop(t, seed);
    for (;;) {
        if ((int)cur.members.size() == n) return cur;
        std::vector<char> in(n, 0);
        for (Elem v : cur.members) in[v] = 1;
        std::vector<Elem> extra;
        for (Elem a : cur.members) {
            for (int x = 0; x < n; ++x) {
                Elem v = t.rdiv(t.mul((Elem)x, a), (Elem)x);
                if (!in[v]) {
                    in[v] = 1;
                    extra.push_back(v);
                }
            }
            for (int x = 0; x < n; ++x) {
                const Elem* rx = t.mul_row((Elem)x);
                for (int y = 0; y < n; ++y) {
                    Elem xy = rx[y];
                    Elem v = t.ldiv(xy, t.mul((Elem)x, t.mul((Elem)y, a)));
                    if (!in[v]) {
                        in[v] = 1;
                        extra.push_back(v);
                    }
                    v = t.rdiv(t.mul(t.mul(a, (Elem)y), (Elem)x), t.mul((Elem)y, (Elem)x));
                    if (!in[v]) {
                        in[v] = 1;
                        extra.push_back(v);
                    }
                }
            }
        }
        if (extra.empty()) return cur;
        std::vector<Elem> next = cur.members;
        next.insert(next.end(), extra.begin(), extra.end());
        cur = generate_subloop(t, next);
    }
}

QuotientMap quotient(const CayleyTable& t, const SubloopSet& s) {
    const int n = t.order();
    if (!is_normal_set(t, s.members))
        throw NotNormal("subloop of " + t.label() + " is not normal");
    QuotientMap q;
    q.source_order = n;
    q.proj.assign(n, (Elem)n);
    for (int x = 0; x < n; ++x) {
        if (q.proj[x] != n) continue;
        Elem id = (Elem)q.block_rep.size();
        q.block_rep.push_back((Elem)x);
        for (Elem m : s.members) q.proj[t.mul((Elem)x, m)] = id;
        if (q.proj[x] != id) throw NotNormal("cosets do not partition; subloop not normal");
    }
    const int k = (int)q.block_rep.size();
    std::vector<Elem> qmul((std::size_t)k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            qmul[(std::size_t)i * k + j] = q.proj[t.mul(q.block_rep[i], q.block_rep[j])];
    // proj must be a homomorphism on every pair, not just representatives.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (q.proj[t.mul((Elem)x, (Elem)y)] !=
                qmul[(std::size_t)q.proj[x] * k + q.proj[y]])
                throw NotNormal("projection is not a homomorphism");
    q.table = CayleyTable::validate_flat(std::move(qmul), k,
                                         t.label() + "/" + std::to_string(s.size()));
    return q;
}

Elem associator(const CayleyTable& t, Elem x, Elem y, Elem z) {
    return t.ldiv(t.mul(x, t.mul(y, z)), t.mul(t.mul(x, y), z));
}

Elem commutator(const CayleyTable& t, Elem x, Elem y) {
    return t.ldiv(t.mul(y, x), t.mul(x, y));
}

Elem nuclear_action(const CayleyTable& t, const SubloopSet& nuc, Elem a, Elem x) {
    if (!nuc.contains(a)) throw ActionArgNotNuclear(a);
    return t.ldiv(x, t.mul(a, x));
}

SubloopSet associator_subloop(const CayleyTable& t, int threads) {
    const int n = t.order();
    if (threads == 0) threads = default_threads();
    std::vector<std::vector<char>> hit(threads + 1, std::vector<char>(n, 0));
    parallel_chunks(n, threads, [&](int tid, std::uint64_t lo, std::uint64_t hi) {
        auto& h = hit[tid];
        for (std::uint64_t x = lo; x < hi; ++x) {
            const Elem* mx = t.mul_row((Elem)x);
            for (int y = 0; y < n; ++y) {
                const Elem* my = t.mul_row((Elem)y);
                const Elem* mxy = t.mul_row(mx[y]);
                for (int z = 0; z < n; ++z) {
                    const Elem u = mx[my[z]];  // x*(y*z)
                    const Elem v = mxy[z];     // (x*y)*z
                    if (u != v) h[t.ldiv(u, v)] = 1;
                }
            }
        }
    });
    std::vector<Elem> gens;
    for (int v = 1; v < n; ++v)
        for (auto& h : hit)
            if (h[v]) {
                gens.push_back((Elem)v);
                break;
            }
    SubloopSet a = normal_closure(t, gens);
    QuotientMap q = quotient(t, a);
    const int k = q.table.order();
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            for (int z = 0; z < k; ++z)
                if (associator(q.table, (Elem)x, (Elem)y, (Elem)z) != 0)
                    throw LoopError("quotient by the associator subloop is not a group");
    return a;
}

SpecialSubloops special_subloops(const CayleyTable& t, const MultGroups& g, const Nuclei& nucs) {
    const int n = t.order();
    SpecialSubloops out;
    for (int a = 0; a < n; ++a) {
        if (g.rmlt.contains(t.left_translation((Elem)a))) out.m.push_back((Elem)a);
        if (g.lmlt.contains(t.right_translation((Elem)a))) out.gamma.push_back((Elem)a);
    }
    for (Elem b : nucs.right.members)
        if (g.lmlt.contains(t.right_translation(b))) out.z_lmlt.push_back(b);
    for (Elem a : nucs.left.members)
        if (g.rmlt.contains(t.left_translation(a))) out.z_rmlt.push_back(a);
    return out;
}

int left_power_order(const CayleyTable& t, Elem x) {
    Elem v = x;
    int k = 1;
    while (v != 0) {
        v = t.mul(x, v);
        ++k;
        if (k > t.order() + 1) throw LoopError("left power order diverged");
    }
    return k;
}

}  // namespace loops
