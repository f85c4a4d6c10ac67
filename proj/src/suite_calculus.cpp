#include <algorithm>
#include <functional>

#include "loops/check.hpp"
#include "loops/rng.hpp"
#include "loops/subloop.hpp"
#include "loops/suite.hpp"

namespace loops {

namespace {

// Associator-calculus evaluation helpers over a table with A(Q) <= N normal.
struct Calc {
    const CayleyTable& t;
    const SubloopSet& nuc;

    Elem mul(Elem a, Elem b) const { return t.mul(a, b); }
    Elem sq(Elem a) const { return t.mul(a, a); }
    Elem A(Elem x, Elem y, Elem z) const { return associator(t, x, y, z); }
    Elem C(Elem x, Elem y) const { return commutator(t, x, y); }
    // s^x = x \ (sx); the exponent may be any loop element.
    Elem up(Elem s, Elem x) const { return t.ldiv(x, t.mul(s, x)); }
    // Inverse inside the nucleus (two-sided there).
    Elem inv(Elem s) const { return t.linv(s); }
    // Argument inverse; I and J act identically on associators, which the
    // suite asserts separately.
    Elem ainv(Elem x) const { return t.linv(x); }
};

struct RepSweep {
    const std::vector<Elem>& reps;

    template <class P>
    bool run2(P pred, std::vector<long>& w, std::uint64_t& evals) const {
        for (Elem x : reps)
            for (Elem y : reps) {
                ++evals;
                if (!pred(x, y)) {
                    w = {(long)x, (long)y};
                    return false;
                }
            }
        return true;
    }
    template <class P>
    bool run3(P pred, std::vector<long>& w, std::uint64_t& evals) const {
        for (Elem x : reps)
            for (Elem y : reps)
                for (Elem z : reps) {
                    ++evals;
                    if (!pred(x, y, z)) {
                        w = {(long)x, (long)y, (long)z};
                        return false;
                    }
                }
        return true;
    }
    template <class P>
    bool run4(P pred, std::vector<long>& w, std::uint64_t& evals) const {
        for (Elem x : reps)
            for (Elem y : reps)
                for (Elem u : reps)
                    for (Elem v : reps) {
                        ++evals;
                        if (!pred(x, y, u, v)) {
                            w = {(long)x, (long)y, (long)u, (long)v};
                            return false;
                        }
                    }
        return true;
    }
};

void push(Suite& s, const std::string& tag, bool passed, std::uint64_t evals,
          std::vector<long> witness = {}, const std::string& detail = {},
          const std::string& method = "representatives") {
    s.records.push_back({tag, method, passed, detail, std::move(witness), evals, 0});
}

}  // namespace

Suite calculus_suite(const CayleyTable& t, const SuiteOptions& opt) {
    Suite s;
    s.name = "calculus";
    s.input = t.label() + " (order " + std::to_string(t.order()) + ")";
    const int n = t.order();

    // Preconditions: the defining law, N normal, A(Q) <= N.
    {
        CheckOptions co;
        co.threads = opt.threads;
        if ((std::uint64_t)n * n * n > kExhaustiveLimit || opt.fast) {
            co.mode = CheckOptions::Mode::sampled;
            co.samples = opt.samples;
            co.seed = opt.seed;
        }
        CheckResult buch = check_identity(t, LawId{Law::buchsteiner, 0}, co);
        if (!buch.passed) {
            push(s, "precondition", false, buch.evaluations,
                 {(long)buch.witness[0], (long)buch.witness[1], (long)buch.witness[2]},
                 "NotBuchsteiner", buch.sampled ? "sampled" : "exhaustive");
            return s;
        }
    }
    Nuclei nu = nuclei(t, opt.threads);
    if (!is_normal_set(t, nu.nuc.members)) {
        push(s, "precondition", false, 0, {}, "nucleus is not normal");
        return s;
    }
    SubloopSet aq = associator_subloop(t, opt.threads);
    {
        bool inside = std::includes(nu.nuc.members.begin(), nu.nuc.members.end(),
                                    aq.members.begin(), aq.members.end());
        push(s, "precondition", inside, 1,
             {}, "A(Q) has order " + std::to_string(aq.size()) + ", N order " +
                     std::to_string(nu.nuc.size()),
             "set");
        if (!inside) return s;
    }

    QuotientMap q = quotient(t, nu.nuc);
    const std::vector<Elem>& reps = q.block_rep;
    RepSweep R{reps};
    Calc c{t, nu.nuc};

    // Representative independence: [xa, yb, zc] = [x,y,z] for nuclear a,b,c.
    {
        bool ok = true;
        std::vector<long> w;
        std::uint64_t evals = 0;
        const std::uint64_t full = (std::uint64_t)n * n * n * nu.nuc.size() * nu.nuc.size() *
                                   nu.nuc.size();
        if (full <= kExhaustiveLimit && !opt.fast) {
            for (int x = 0; x < n && ok; ++x)
                for (int y = 0; y < n && ok; ++y)
                    for (int z = 0; z < n && ok; ++z) {
                        const Elem base = c.A((Elem)x, (Elem)y, (Elem)z);
                        for (Elem a : nu.nuc.members)
                            for (Elem b : nu.nuc.members)
                                for (Elem d : nu.nuc.members) {
                                    ++evals;
                                    if (c.A(t.mul((Elem)x, a), t.mul((Elem)y, b),
                                            t.mul((Elem)z, d)) != base) {
                                        ok = false;
                                        w = {x, y, z, (long)a, (long)b, (long)d};
                                    }
                                }
                    }
            push(s, "Lemma assoc-basics", ok, evals, w, "exhaustive perturbations",
                 "exhaustive");
        } else {
            SplitMix64 g(opt.seed);
            for (int k = 0; k < 1000 && ok; ++k) {
                Elem x = (Elem)g.below(n), y = (Elem)g.below(n), z = (Elem)g.below(n);
                Elem a = nu.nuc.members[g.below((std::uint32_t)nu.nuc.size())];
                Elem b = nu.nuc.members[g.below((std::uint32_t)nu.nuc.size())];
                Elem d = nu.nuc.members[g.below((std::uint32_t)nu.nuc.size())];
                ++evals;
                if (c.A(t.mul(x, a), t.mul(y, b), t.mul(z, d)) != c.A(x, y, z)) {
                    ok = false;
                    w = {(long)x, (long)y, (long)z, (long)a, (long)b, (long)d};
                }
            }
            push(s, "Lemma assoc-basics", ok, evals, w, "1000 seeded perturbations",
                 "sampled(1000)");
        }
    }
    // I(x) and J(x) act identically inside associator arguments.
    {
        std::vector<long> w;
        std::uint64_t evals = 0;
        bool ok = R.run3(
            [&](Elem x, Elem y, Elem z) {
                return c.A(t.linv(x), y, z) == c.A(t.rinv(x), y, z);
            },
            w, evals);
        push(s, "inverse-argument", ok, evals, w, "[I(x),y,z] = [J(x),y,z]");
    }

    std::vector<long> w;
    std::uint64_t evals;
    auto rec3 = [&](const std::string& tag, auto pred, const char* detail = "") {
        w.clear();
        evals = 0;
        bool ok = R.run3(pred, w, evals);
        push(s, tag, ok, evals, w, detail);
    };
    auto rec2 = [&](const std::string& tag, auto pred, const char* detail = "") {
        w.clear();
        evals = 0;
        bool ok = R.run2(pred, w, evals);
        push(s, tag, ok, evals, w, detail);
    };
    auto rec4 = [&](const std::string& tag, auto pred, const char* detail = "") {
        w.clear();
        evals = 0;
        bool ok = R.run4(pred, w, evals);
        push(s, tag, ok, evals, w, detail);
    };

    rec3("Prop 73", [&](Elem x, Elem y, Elem z) {
        return c.up(c.A(x, y, z), x) == c.inv(c.A(y, z, x));
    });
    rec3("Lemma 74", [&](Elem x, Elem y, Elem z) {
        return c.A(c.ainv(z), x, y) == c.A(x, y, z);
    });
    rec3("Cor 75", [&](Elem x, Elem y, Elem z) {
        const Elem base = c.A(x, y, z);
        return base == c.A(c.ainv(z), x, y) && base == c.A(c.ainv(y), c.ainv(z), x) &&
               base == c.A(c.ainv(x), c.ainv(y), c.ainv(z)) &&
               base == c.A(z, c.ainv(x), c.ainv(y)) && base == c.A(y, z, c.ainv(x));
    });
    rec3("Lemma 76", [&](Elem x, Elem y, Elem z) {
        const Elem base = c.A(x, y, z);
        return c.up(base, c.sq(x)) == base && c.up(base, c.sq(y)) == base &&
               c.up(base, c.sq(z)) == base;
    });
    rec3("Lemma 77", [&](Elem x, Elem y, Elem z) {
        const Elem yi = c.ainv(y);
        if (c.up(c.A(x, y, z), x) != c.inv(c.A(y, z, x))) return false;
        if (c.up(c.A(x, y, z), z) != c.inv(c.A(z, x, y))) return false;
        if (c.up(c.A(x, y, z), y) != c.inv(c.A(x, yi, z))) return false;
        if (c.up(c.A(x, yi, z), x) != c.inv(c.A(z, x, y))) return false;
        if (c.up(c.A(x, yi, z), y) != c.inv(c.A(x, y, z))) return false;
        if (c.up(c.A(x, yi, z), z) != c.inv(c.A(y, z, x))) return false;
        return true;
    });
    rec4("Lemma 78", [&](Elem x, Elem y, Elem u, Elem v) {
        const Elem uv = c.mul(u, v);
        if (c.A(uv, x, y) != c.mul(c.up(c.A(u, x, y), v), c.A(v, x, y))) return false;
        if (c.A(x, uv, y) != c.mul(c.up(c.A(x, u, y), v), c.A(x, v, y))) return false;
        if (c.A(x, y, uv) != c.mul(c.up(c.A(x, y, u), v), c.A(x, y, v))) return false;
        return true;
    });
    rec2("Lemma 79", [&](Elem x, Elem y) { return c.A(x, y, y) == c.A(y, y, x); });
    rec3("Prop 710", [&](Elem x, Elem y, Elem z) {
        return c.mul(c.A(y, z, x), c.A(x, y, z)) ==
               c.mul(c.A(z, x, y), c.A(x, c.ainv(y), z));
    });
    rec3("Prop 711", [&](Elem x, Elem y, Elem z) {
        const Elem x2 = c.sq(x), y2 = c.sq(y), z2 = c.sq(z);
        if (c.mul(c.A(x2, y, z), c.A(x2, y, z)) != 0) return false;
        if (c.mul(c.A(x, y2, z), c.A(x, y2, z)) != 0) return false;
        if (c.mul(c.A(x, z, y2), c.A(x, z, y2)) != 0) return false;
        if (c.A(c.sq(x2), y, z) != 0) return false;
        if (c.A(x, c.sq(y2), z) != 0) return false;
        if (c.A(x, y, c.sq(z2)) != 0) return false;
        return true;
    });
    rec3("Lemma 81", [&](Elem x, Elem y, Elem z) {
        const Elem x2 = c.sq(x);
        const Elem a = c.A(x2, y, z);
        auto sq_of = [&](Elem s) { return c.mul(s, s); };
        if (sq_of(c.A(x, y, z)) != sq_of(c.A(y, z, x)) ||
            sq_of(c.A(y, z, x)) != sq_of(c.A(z, x, y)))
            return false;
        if (a != c.A(y, z, x2) || a != c.A(z, x2, y)) return false;
        if (c.up(a, x) != a || c.up(a, y) != a || c.up(a, z) != a) return false;
        if (c.A(x2, c.sq(y), z) != 0 || c.A(x2, y, c.sq(z)) != 0 ||
            c.A(x, c.sq(y), c.sq(z)) != 0)
            return false;
        if (c.up(c.A(x, y, y), c.sq(z)) != c.A(x, y, y)) return false;
        if (c.up(c.A(y, x, y), c.sq(z)) != c.A(y, x, y)) return false;
        return true;
    });
    rec2("Lemma 82", [&](Elem x, Elem y) {
        const Elem x2 = c.sq(x), y2 = c.sq(y);
        if (c.A(x, x, y) != c.A(y, x, x)) return false;
        if (c.up(c.A(x, x, y), x) != c.inv(c.A(x, y, x))) return false;
        if (c.up(c.A(x, y, x), x) != c.inv(c.A(x, x, y))) return false;
        if (c.up(c.A(x, x, y), y) != c.inv(c.A(x, x, y))) return false;
        if (c.up(c.A(x, y, x), y) != c.inv(c.A(x, y, x))) return false;
        const Elem b = c.A(x2, y, x);
        if (b != c.A(x2, x, y) || b != c.A(x, x2, y) || b != c.A(x, y, x2) ||
            b != c.A(y, x, x2) || b != c.A(y, x2, x))
            return false;
        if (c.A(x, y, x) != c.mul(c.A(x, x, y), c.A(x2, x, y))) return false;
        if (c.A(x, y2, x) != 0 || c.A(x, x, y2) != 0 || c.A(y2, x, x) != 0) return false;
        if (c.mul(c.A(x2, x, y), c.A(x2, x, y)) != 0) return false;
        if (c.up(c.A(x, x, x), y) !=
            c.mul(c.mul(c.A(x, x, x), c.inv(c.A(x, x, y))), c.inv(c.A(x, y, x))))
            return false;
        return true;
    });
    rec4("Lemma 91", [&](Elem x, Elem y, Elem u, Elem v) {
        const Elem u2 = c.sq(u), v2 = c.sq(v);
        const Elem lhs = c.mul(c.mul(x, u2), c.mul(y, v2));
        Elem rhs = c.mul(c.mul(x, y), c.mul(u2, v2));
        rhs = c.mul(rhs, c.up(c.C(u2, y), v2));
        rhs = c.mul(rhs, c.A(x, y, v2));
        rhs = c.mul(rhs, c.up(c.mul(c.inv(c.A(x, y, u2)), c.A(y, x, u2)), v2));
        return lhs == rhs;
    });
    rec3("Lemma 92", [&](Elem x, Elem y, Elem z) {
        Elem rhs = c.up(c.C(x, z), y);
        rhs = c.mul(rhs, c.C(y, z));
        rhs = c.mul(rhs, c.inv(c.A(x, z, y)));
        rhs = c.mul(rhs, c.A(x, y, z));
        rhs = c.mul(rhs, c.A(z, x, y));
        return c.C(c.mul(x, y), z) == rhs;
    });
    rec3("Cor 93", [&](Elem x, Elem y, Elem z) {
        if (c.A(x, z, y) != c.A(y, z, x)) return true;  // hypothesis not met
        Elem rhs = c.mul(c.up(c.C(x, z), y), c.C(y, z));
        rhs = c.mul(rhs, c.A(x, c.ainv(y), z));
        return c.C(c.mul(x, y), z) == rhs;
    });

    // Lemma 94 applies when Q/N is 2-generated; find a generating pair.
    {
        const int k = q.table.order();
        int g1 = -1, g2 = -1;
        for (int a = 0; a < k && g1 < 0; ++a)
            for (int b = 0; b < k; ++b) {
                SubloopSet cl = generate_subloop(q.table, {(Elem)a, (Elem)b});
                if ((int)cl.size() == k) {
                    g1 = a;
                    g2 = b;
                    break;
                }
            }
        if (g1 >= 0) {
            w.clear();
            evals = 0;
            bool ok = R.run3(
                [&](Elem x, Elem y, Elem z) { return c.A(x, y, z) == c.A(z, y, x); }, w, evals);
            push(s, "Lemma 94", ok, evals, w, "Q/N is 2-generated: [x,y,z] = [z,y,x]");

            // Cor 96 wants commuting generator representatives with
            // exponent-2 generator associators.
            Elem e1 = 0, e2 = 0;
            bool found = false;
            for (int i = 0; i < n && !found; ++i)
                for (int j = 0; j < n && !found; ++j) {
                    if (q.proj[i] != g1 || q.proj[j] != g2) continue;
                    if (c.C((Elem)i, (Elem)j) == 0) {
                        e1 = (Elem)i;
                        e2 = (Elem)j;
                        found = true;
                    }
                }
            bool hyp = found;
            const Elem gens[2] = {e1, e2};
            if (found)
                for (int i = 0; i < 2 && hyp; ++i)
                    for (int j = 0; j < 2 && hyp; ++j)
                        for (int l = 0; l < 2 && hyp; ++l) {
                            Elem a = c.A(gens[i], gens[j], gens[l]);
                            if (c.mul(a, a) != 0) hyp = false;
                        }
            if (hyp) {
                bool ok96 = true;
                std::vector<long> w96;
                for (int mask = 0; mask < 16 && ok96; ++mask) {
                    const int a1 = mask & 1, a2 = (mask >> 1) & 1, b1 = (mask >> 2) & 1,
                              b2 = (mask >> 3) & 1;
                    Elem xx = 0;
                    if (a1) xx = c.mul(xx, c.sq(e1));
                    if (a2) xx = c.mul(xx, c.sq(e2));
                    Elem yy = 0;
                    if (b1) yy = c.mul(yy, e1);
                    if (b2) yy = c.mul(yy, e2);
                    Elem rhs = 0;
                    if (a1 & b1) rhs = c.mul(rhs, c.A(e1, e1, e1));
                    if (a1 & b2) rhs = c.mul(rhs, c.A(e1, e2, e1));
                    if (a2 & b1) rhs = c.mul(rhs, c.A(e2, e1, e2));
                    if (a2 & b2) rhs = c.mul(rhs, c.A(e2, e2, e2));
                    if (c.C(xx, yy) != rhs) {
                        ok96 = false;
                        w96 = {mask};
                    }
                }
                push(s, "Cor 96", ok96, 16, w96,
                     "generators " + std::to_string(e1) + ", " + std::to_string(e2));
            } else {
                push(s, "Cor 96", true, 0, {}, "no commuting generator pair; vacuous",
                     "vacuous");
            }
        } else {
            push(s, "Lemma 94", true, 0, {}, "Q/N not 2-generated; vacuous", "vacuous");
            push(s, "Cor 96", true, 0, {}, "Q/N not 2-generated; vacuous", "vacuous");
        }
    }

    rec2("Lemma 95", [&](Elem x, Elem y) {
        const Elem x2 = c.sq(x), y2 = c.sq(y);
        const Elem xy = c.mul(x, y), x2y2 = c.mul(x2, y2);
        // (i)
        Elem rhs = c.mul(c.mul(c.up(c.C(x, y), x), c.C(x, y)), c.A(x, y, x));
        if (c.C(x2, y) != rhs) return false;
        // (ii)
        rhs = c.mul(c.mul(c.mul(c.up(c.C(x, y), x), c.C(x, y)), c.A(x, x, x)),
                    c.inv(c.A(x, y, x)));
        if (c.C(x2, xy) != rhs) return false;
        // (iii)
        rhs = c.mul(c.mul(c.mul(c.up(c.C(x, y), c.mul(x, y2)), c.up(c.C(x, y), y2)),
                          c.A(y, y, y)),
                    c.A(x, y, x));
        if (c.C(x2y2, y) != rhs) return false;
        // (iv)
        rhs = c.mul(c.mul(c.mul(c.up(c.C(y, x), y), c.C(y, x)), c.A(x, x, x)), c.A(y, x, y));
        if (c.C(x2y2, x) != rhs) return false;
        // (v)
        rhs = c.mul(c.up(c.C(x, y), c.mul(x, y2)), c.up(c.C(y, x), y));
        rhs = c.mul(rhs, c.A(x, x, x));
        rhs = c.mul(rhs, c.A(y, y, y));
        rhs = c.mul(rhs, c.inv(c.A(x, y, x)));
        rhs = c.mul(rhs, c.inv(c.A(y, x, y)));
        if (c.C(x2y2, xy) != rhs) return false;
        return true;
    });

    return s;
}

}  // namespace loops
