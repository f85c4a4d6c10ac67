#include "loops/isotopy.hpp"

#include <algorithm>
#include <map>

#include "loops/check.hpp"
#include "loops/subloop.hpp"

namespace loops {

IsotopeResult isotope_at(const CayleyTable& t, IsotopeSide side, Elem e) {
    t.check_range(e);
    const int n = t.order();
    std::vector<Elem> mul((std::size_t)n * n);
    if (side == IsotopeSide::right) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                mul[(std::size_t)x * n + y] = t.rdiv(t.mul((Elem)x, t.mul((Elem)y, e)), e);
    } else {
        for (int x = 0; x < n; ++x) {
            const Elem ex = t.mul(e, (Elem)x);
            for (int y = 0; y < n; ++y)
                mul[(std::size_t)x * n + y] = t.ldiv(e, t.mul(ex, (Elem)y));
        }
    }
    std::string des = (side == IsotopeSide::right ? "right-at-" : "left-at-") + std::to_string(e);
    CayleyTable iso = CayleyTable::validate_flat(std::move(mul), n, t.label() + "[" + des + "]");
    return {t.label(), des, std::move(iso), identity_perm(n)};
}

IsotopeResult principal_isotope(const CayleyTable& t, Elem a, Elem b) {
    t.check_range(a);
    t.check_range(b);
    const int n = t.order();
    const Elem id = t.mul(a, b);  // neutral element of the isotope
    // Relabel with the transposition (0 id) so downstream code keeps the
    // index-0 convention.
    Perm sigma = identity_perm(n);
    std::swap(sigma[0], sigma[id]);
    std::vector<Elem> mul((std::size_t)n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Elem prod = t.mul(t.rdiv(sigma[x], b), t.ldiv(a, sigma[y]));
            mul[(std::size_t)x * n + y] = sigma[prod];
        }
    std::string des = "principal(" + std::to_string(a) + "," + std::to_string(b) + ")";
    CayleyTable iso = CayleyTable::validate_flat(std::move(mul), n, t.label() + "[" + des + "]");
    return {t.label(), des, std::move(iso), sigma};
}

WwipIsomorphism wwip_isomorphism(const CayleyTable& t, Elem x, bool precheck) {
    if (precheck) {
        CheckResult buch = check_identity(t, LawId{Law::buchsteiner, 0});
        if (!buch.passed)
            throw NotBuchsteiner(t.label() + " fails the defining law at (" +
                                 std::to_string(buch.witness[0]) + "," +
                                 std::to_string(buch.witness[1]) + "," +
                                 std::to_string(buch.witness[2]) + ")");
    }
    const int n = t.order();
    const Elem u = t.jpow(x, 4);
    // alpha_u = L_{I(eta(u))}^{-1} * I * L_u * R_u^{-1} * J
    Perm imap(n), jmap(n);
    for (int v = 0; v < n; ++v) {
        imap[v] = t.linv((Elem)v);
        jmap[v] = t.rinv((Elem)v);
    }
    Perm lu = t.left_translation(u);
    Perm rui = inverse(t.right_translation(u));
    Perm lhead_inv = inverse(t.left_translation(t.linv(t.eta(u))));
    Perm map = compose_all({&lhead_inv, &imap, &lu, &rui, &jmap});

    IsotopeResult iso = isotope_at(t, IsotopeSide::right, x);
    bool ok = true;
    for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n; ++z)
            if (map[t.mul((Elem)y, (Elem)z)] != iso.table.mul(map[y], map[z])) {
                ok = false;
                break;
            }
    return {u, std::move(map), ok};
}

namespace {

// Cheap isomorphism invariants: left-power order and nucleus membership.
std::vector<std::pair<int, int>> invariant_profile(const CayleyTable& t) {
    const int n = t.order();
    Nuclei nu = nuclei(t);
    std::vector<std::pair<int, int>> prof(n);
    for (int x = 0; x < n; ++x)
        prof[x] = {left_power_order(t, (Elem)x), nu.nuc.contains((Elem)x) ? 1 : 0};
    return prof;
}

// Greedy generating sequence: repeatedly adjoin the smallest element
// outside the closure so far.
std::vector<Elem> generating_sequence(const CayleyTable& t) {
    std::vector<Elem> gens;
    SubloopSet cl = generate_subloop(t, {});
    while ((int)cl.size() < t.order()) {
        Elem next = 0;
        for (int x = 0; x < t.order(); ++x)
            if (!cl.contains((Elem)x)) {
                next = (Elem)x;
                break;
            }
        gens.push_back(next);
        std::vector<Elem> seed = gens;
        cl = generate_subloop(t, seed);
    }
    return gens;
}

// Extends gen -> image assignments to the full generated subloop by
// multiplicative closure; fails on any conflict.
bool extend_map(const CayleyTable& t1, const CayleyTable& t2, const std::vector<Elem>& gens,
                const std::vector<Elem>& images, Perm& out) {
    const int n = t1.order();
    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    std::vector<Elem> known;
    auto assign = [&](Elem a, Elem b) {
        if (img[a] >= 0) return img[a] == (int)b;
        if (used[b]) return false;
        img[a] = b;
        used[b] = 1;
        known.push_back(a);
        return true;
    };
    if (!assign(0, 0)) return false;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!assign(gens[i], images[i])) return false;
    for (std::size_t i = 0; i < known.size(); ++i) {
        // Combine the i-th known element with every known element.
        for (std::size_t j = 0; j <= i; ++j) {
            Elem a = known[i], b = known[j];
            if (!assign(t1.mul(a, b), t2.mul((Elem)img[a], (Elem)img[b]))) return false;
            if (!assign(t1.mul(b, a), t2.mul((Elem)img[b], (Elem)img[a]))) return false;
        }
    }
    if ((int)known.size() != n) return false;  // gens must generate everything
    out.resize(n);
    for (int i = 0; i < n; ++i) out[i] = (Elem)img[i];
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (out[t1.mul((Elem)x, (Elem)y)] != t2.mul(out[x], out[y])) return false;
    return true;
}

}  // namespace

std::optional<Perm> find_isomorphism(const CayleyTable& t1, const CayleyTable& t2) {
    if (t1.order() != t2.order()) return std::nullopt;
    const int n = t1.order();
    auto prof1 = invariant_profile(t1);
    auto prof2 = invariant_profile(t2);
    {
        auto s1 = prof1, s2 = prof2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }
    std::vector<Elem> gens = generating_sequence(t1);
    if (gens.empty()) return identity_perm(n);  // order-1 loop

    // Depth-first over candidate images, filtered by the invariant profile.
    std::vector<Elem> images(gens.size(), 0);
    Perm out;
    std::vector<std::vector<Elem>> cands(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (int y = 1; y < n; ++y)
            if (prof2[y] == prof1[gens[i]]) cands[i].push_back((Elem)y);

    std::vector<std::size_t> pos(gens.size(), 0);
    std::size_t depth = 0;
    while (true) {
        if (pos[depth] >= cands[depth].size()) {
            if (depth == 0) return std::nullopt;
            pos[depth] = 0;
            --depth;
            ++pos[depth];
            continue;
        }
        images[depth] = cands[depth][pos[depth]];
        bool dup = false;
        for (std::size_t j = 0; j < depth; ++j)
            if (images[j] == images[depth]) dup = true;
        if (dup) {
            ++pos[depth];
            continue;
        }
        if (depth + 1 < gens.size()) {
            ++depth;
            pos[depth] = 0;
            continue;
        }
        if (extend_map(t1, t2, gens, images, out)) return out;
        ++pos[depth];
    }
}

}  // namespace loops
