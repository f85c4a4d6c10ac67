#include "loops/group.hpp"

#include <algorithm>
#include <unordered_set>

namespace loops {

namespace {

int min_moved(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return (int)i;
    return -1;
}

std::vector<Perm> dedup_gens(const std::vector<Perm>& in) {
    std::vector<Perm> out;
    std::unordered_set<Perm, PermHasher> seen;
    for (const auto& g : in)
        if (!is_identity(g) && seen.insert(g).second) out.push_back(g);
    return out;
}

}  // namespace

struct PermGroup::Chain {
    struct Level {
        Elem base = 0;
        std::vector<Perm> gens;
        std::vector<Elem> orbit;           // discovery order
        std::vector<int> pos;              // point -> index+1 in orbit, 0 = absent
        std::vector<Perm> trans, trans_inv;  // transversal by point
    };
    std::vector<Level> levels;
    BigInt order = 1;
    bool enumerated = false;
    std::vector<Perm> elements;

    int degree = 0;

    void recompute_orbit(int li) {
        Level& lv = levels[li];
        lv.orbit.clear();
        lv.pos.assign(degree, 0);
        lv.trans.assign(degree, {});
        lv.trans_inv.assign(degree, {});
        lv.orbit.push_back(lv.base);
        lv.pos[lv.base] = 1;
        lv.trans[lv.base] = identity_perm(degree);
        lv.trans_inv[lv.base] = lv.trans[lv.base];
        for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
            Elem p = lv.orbit[qi];
            for (const auto& s : lv.gens) {
                Elem q = s[p];
                if (!lv.pos[q]) {
                    lv.pos[q] = (int)lv.orbit.size() + 1;
                    lv.orbit.push_back(q);
                    lv.trans[q] = compose(s, lv.trans[p]);
                    lv.trans_inv[q] = inverse(lv.trans[q]);
                }
            }
        }
    }

    // Sift g through levels [from, end); returns the residue and the level
    // it stopped at (levels.size() when it passed everything).
    std::pair<Perm, int> strip(Perm g, int from) const {
        for (int i = from; i < (int)levels.size(); ++i) {
            const Level& lv = levels[i];
            Elem p = g[lv.base];
            if (p == lv.base) continue;
            if (!lv.pos[p]) return {std::move(g), i};
            g = compose(lv.trans_inv[p], g);
        }
        return {std::move(g), (int)levels.size()};
    }

    bool member(const Perm& g) const {
        auto [res, lev] = strip(g, 0);
        (void)lev;
        return is_identity(res);
    }

    // Deterministic Schreier-Sims. Base points: an optional forced first
    // base, then always the smallest point moved by the new residue.
    void build(int deg, const std::vector<Perm>& input, int forced_first_base) {
        degree = deg;
        std::vector<Perm> gens = dedup_gens(input);
        if (gens.empty()) {
            order = 1;
            enumerated = true;
            elements = {identity_perm(deg)};
            return;
        }

        auto new_level = [&](Elem beta) {
            levels.emplace_back();
            levels.back().base = beta;
        };

        int b0;
        if (forced_first_base >= 0) {
            b0 = forced_first_base;
        } else {
            b0 = deg;
            for (const auto& g : gens) b0 = std::min(b0, min_moved(g));
        }
        new_level((Elem)b0);
        levels[0].gens = gens;
        recompute_orbit(0);

        // Per-level scan cursor and set of already-verified Schreier
        // generators (everything inserted there sifts to identity).
        std::vector<std::pair<std::size_t, std::size_t>> cursor{{0, 0}};
        std::vector<std::unordered_set<Perm, PermHasher>> done(1);
        constexpr std::size_t kDedupCap = 200000;

        int i = 0;
        while (i >= 0) {
            bool descended = false;
            while (!descended) {
                Level& lv = levels[i];
                auto& cur = cursor[i];
                if (cur.first >= lv.orbit.size()) break;
                if (cur.second >= lv.gens.size()) {
                    cur.second = 0;
                    ++cur.first;
                    continue;
                }
                const Elem p = lv.orbit[cur.first];
                const Perm& s = lv.gens[cur.second];
                ++cur.second;
                const Elem q = s[p];
                // Schreier generator u_q^{-1} s u_p; fixes lv.base.
                Perm g = compose(s, lv.trans[p]);
                if (g == lv.trans[q]) continue;
                g = compose(lv.trans_inv[q], g);
                if (done[i].find(g) != done[i].end()) continue;
                auto [h, j] = strip(g, i + 1);
                if (done[i].size() < kDedupCap) done[i].insert(std::move(g));
                if (is_identity(h)) continue;
                // New strong generator for levels i+1..j. Mutating `levels`
                // below may reallocate, so no references survive this point.
                if (j == (int)levels.size()) {
                    new_level((Elem)min_moved(h));
                    cursor.emplace_back(0, 0);
                    done.emplace_back();
                }
                for (int l = i + 1; l <= j; ++l) {
                    levels[l].gens.push_back(h);
                    recompute_orbit(l);
                    cursor[l] = {0, 0};
                }
                i = j;
                descended = true;
            }
            if (!descended) --i;
        }

        order = 1;
        for (const auto& lv : levels) order *= (std::uint64_t)lv.orbit.size();

        if (order <= kEnumerateLimit &&
            order * deg <= BigInt(20000000)) {
            auto els = naive_closure(deg, gens, kEnumerateLimit);
            if (els) {
                elements = std::move(*els);
                enumerated = true;
            }
        }
    }
};

PermGroup::PermGroup(int degree, std::vector<Perm> generators) : degree_(degree) {
    for (const auto& g : generators)
        if ((int)g.size() != degree) throw DegreeMismatch((int)g.size(), degree);
    gens_ = std::move(generators);
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

void PermGroup::ensure_chain() const {
    if (chain_) return;
    auto ch = std::make_shared<Chain>();
    ch->build(degree_, gens_, -1);
    chain_ = std::move(ch);
}

BigInt PermGroup::order() const {
    ensure_chain();
    return chain_->order;
}

bool PermGroup::contains(const Perm& p) const {
    if ((int)p.size() != degree_) throw DegreeMismatch((int)p.size(), degree_);
    ensure_chain();
    return chain_->member(p);
}

bool PermGroup::is_normal_in(const PermGroup& sup) const {
    if (sup.degree() != degree_) throw DegreeMismatch(sup.degree(), degree_);
    for (const auto& h : gens_)
        if (!sup.contains(h))
            throw NotASubgroup("subgroup generator not contained in the ambient group");
    for (const auto& g : sup.generators()) {
        Perm gi = inverse(g);
        for (const auto& h : gens_) {
            if (!contains(compose_all({&g, &h, &gi}))) return false;
        }
    }
    return true;
}

std::vector<Elem> PermGroup::orbit_of(Elem p) const {
    std::vector<Elem> orbit{p};
    std::vector<char> seen(degree_, 0);
    seen[p] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const auto& g : gens_) {
            Elem q = g[orbit[i]];
            if (!seen[q]) {
                seen[q] = 1;
                orbit.push_back(q);
            }
        }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::vector<Elem> PermGroup::base() const {
    ensure_chain();
    std::vector<Elem> b;
    for (const auto& lv : chain_->levels) b.push_back(lv.base);
    return b;
}

PermGroup PermGroup::point_stabilizer_group(Elem p) const {
    ensure_chain();
    const Chain* ch = chain_.get();
    std::shared_ptr<Chain> local;
    if (!ch->levels.empty() && ch->levels[0].base != p) {
        // Rebuild with the first base forced to p.
        local = std::make_shared<Chain>();
        local->build(degree_, gens_, p);
        ch = local.get();
    }
    std::vector<Perm> sgens;
    for (std::size_t l = 1; l < ch->levels.size(); ++l)
        for (const auto& g : ch->levels[l].gens) sgens.push_back(g);
    if (ch->levels.empty() || ch->levels[0].base != p) {
        // Group does not move p at all; the stabilizer is the whole group.
        return PermGroup(degree_, gens_);
    }
    return PermGroup(degree_, dedup_gens(sgens));
}

const std::vector<Perm>* PermGroup::elements() const {
    ensure_chain();
    return chain_->enumerated ? &chain_->elements : nullptr;
}

std::optional<std::vector<Perm>> naive_closure(int degree, const std::vector<Perm>& gens,
                                               std::uint64_t cap) {
    std::vector<Perm> els{identity_perm(degree)};
    std::unordered_set<Perm, PermHasher> seen{els[0]};
    std::vector<Perm> clean = dedup_gens(gens);
    for (std::size_t i = 0; i < els.size(); ++i) {
        for (const auto& g : clean) {
            Perm p = compose(g, els[i]);
            if (seen.insert(p).second) {
                if (els.size() + 1 > cap) return std::nullopt;
                els.push_back(std::move(p));
            }
        }
    }
    return els;
}

Perm inner_T(const CayleyTable& t, Elem x) {
    const int n = t.order();
    Perm p(n);
    for (int z = 0; z < n; ++z) p[z] = t.rdiv(t.mul(x, (Elem)z), x);
    return p;
}

Perm inner_L(const CayleyTable& t, Elem x, Elem y) {
    const int n = t.order();
    const Elem xy = t.mul(x, y);
    Perm p(n);
    for (int z = 0; z < n; ++z) p[z] = t.ldiv(xy, t.mul(x, t.mul(y, (Elem)z)));
    return p;
}

Perm inner_R(const CayleyTable& t, Elem x, Elem y) {
    const int n = t.order();
    const Elem yx = t.mul(y, x);
    Perm p(n);
    for (int z = 0; z < n; ++z) p[z] = t.rdiv(t.mul(t.mul((Elem)z, y), x), yx);
    return p;
}

MultGroups mult_groups(const CayleyTable& t) {
    const int n = t.order();
    std::vector<Perm> lgens, rgens, bgens;
    lgens.reserve(n);
    rgens.reserve(n);
    for (int x = 0; x < n; ++x) {
        lgens.push_back(t.left_translation((Elem)x));
        rgens.push_back(t.right_translation((Elem)x));
    }
    bgens = lgens;
    bgens.insert(bgens.end(), rgens.begin(), rgens.end());

    PermGroup mlt(n, bgens), lmlt(n, lgens), rmlt(n, rgens);

    if (n <= kExplicitInnerLimit) {
        std::vector<Perm> tg, lg, rg;
        for (int x = 0; x < n; ++x) tg.push_back(inner_T(t, (Elem)x));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                lg.push_back(inner_L(t, (Elem)x, (Elem)y));
                rg.push_back(inner_R(t, (Elem)x, (Elem)y));
            }
        std::vector<Perm> ig = tg;
        ig.insert(ig.end(), lg.begin(), lg.end());
        ig.insert(ig.end(), rg.begin(), rg.end());
        return {std::move(mlt),
                std::move(lmlt),
                std::move(rmlt),
                PermGroup(n, dedup_gens(ig)),
                PermGroup(n, dedup_gens(lg)),
                PermGroup(n, dedup_gens(rg))};
    }
    PermGroup inn = mlt.point_stabilizer_group(0);
    PermGroup lmlt1 = lmlt.point_stabilizer_group(0);
    PermGroup rmlt1 = rmlt.point_stabilizer_group(0);
    return {std::move(mlt),  std::move(lmlt),  std::move(rmlt),
            std::move(inn), std::move(lmlt1), std::move(rmlt1)};
}

}  // namespace loops
