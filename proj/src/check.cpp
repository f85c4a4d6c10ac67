#include "loops/check.hpp"

#include <algorithm>

namespace loops {

namespace {

const char* law_basename(Law law) {
    switch (law) {
        case Law::buchsteiner: return "buchsteiner";
        case Law::buchsteiner_big: return "buchsteiner_big";
        case Law::lcc: return "lcc";
        case Law::rcc: return "rcc";
        case Law::cc: return "cc";
        case Law::extra: return "extra";
        case Law::moufang: return "moufang";
        case Law::wip: return "wip";
        case Law::wwip: return "wwip";
        case Law::m_inverse: return "m_inverse";
        case Law::flexible_law: return "flexible_law";
        case Law::left_alt_law: return "left_alt_law";
        case Law::right_alt_law: return "right_alt_law";
    }
    return "?";
}

// I^k as a full image array (k may be negative).
std::vector<Elem> ipow_map(const CayleyTable& t, long k) {
    const int n = t.order();
    std::vector<Elem> m(n);
    for (int x = 0; x < n; ++x) m[x] = (Elem)x;
    const bool fwd = k >= 0;
    long reps = fwd ? k : -k;
    for (long r = 0; r < reps; ++r)
        for (int x = 0; x < n; ++x) m[x] = fwd ? t.linv(m[x]) : t.rinv(m[x]);
    return m;
}

}  // namespace

std::string LawId::name() const {
    if (law == Law::m_inverse) return "m_inverse:" + std::to_string(m);
    return law_basename(law);
}

std::optional<LawId> LawId::parse(const std::string& s) {
    static const std::pair<const char*, Law> table[] = {
        {"buchsteiner", Law::buchsteiner},
        {"buchsteiner_big", Law::buchsteiner_big},
        {"lcc", Law::lcc},
        {"rcc", Law::rcc},
        {"cc", Law::cc},
        {"extra", Law::extra},
        {"moufang", Law::moufang},
        {"wip", Law::wip},
        {"wwip", Law::wwip},
        {"flexible_law", Law::flexible_law},
        {"flexible", Law::flexible_law},
        {"left_alt_law", Law::left_alt_law},
        {"left_alt", Law::left_alt_law},
        {"right_alt_law", Law::right_alt_law},
        {"right_alt", Law::right_alt_law},
    };
    for (auto& [name, law] : table)
        if (s == name) return LawId{law, 0};
    if (s.rfind("m_inverse:", 0) == 0) {
        try {
            return LawId{Law::m_inverse, std::stol(s.substr(10))};
        } catch (...) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

int law_arity(Law law) {
    switch (law) {
        case Law::buchsteiner:
        case Law::lcc:
        case Law::rcc:
        case Law::cc:
        case Law::extra:
        case Law::moufang: return 3;
        case Law::buchsteiner_big: return 4;
        case Law::wip:
        case Law::wwip:
        case Law::m_inverse:
        case Law::flexible_law:
        case Law::left_alt_law:
        case Law::right_alt_law: return 2;
    }
    return 0;
}

namespace {

struct LawContext {
    const CayleyTable& t;
    std::vector<Elem> im, im1;  // I^m, I^{m+1} for m_inverse-family laws

    bool eval(Law law, Elem x, Elem y, Elem z, Elem v) const {
        const CayleyTable& q = t;
        switch (law) {
            case Law::buchsteiner:
                // x \ (xy*z) = (y*zx) / x
                return q.ldiv(x, q.mul(q.mul(x, y), z)) == q.rdiv(q.mul(y, q.mul(z, x)), x);
            case Law::buchsteiner_big: {
                // (xy) \ ((xy*u)v) = (u(v*yx)) / (yx); here (z,v) = (u,v)
                const Elem xy = q.mul(x, y), yx = q.mul(y, x);
                return q.ldiv(xy, q.mul(q.mul(xy, z), v)) == q.rdiv(q.mul(z, q.mul(v, yx)), yx);
            }
            case Law::lcc:
                // x*yz = ((xy)/x)*xz
                return q.mul(x, q.mul(y, z)) == q.mul(q.rdiv(q.mul(x, y), x), q.mul(x, z));
            case Law::rcc:
                // zy*x = zx*(x\(yx))
                return q.mul(q.mul(z, y), x) == q.mul(q.mul(z, x), q.ldiv(x, q.mul(y, x)));
            case Law::cc:
                return eval(Law::lcc, x, y, z, 0) && eval(Law::rcc, x, y, z, 0);
            case Law::extra:
                // x(y*zx) = (xy*z)x
                return q.mul(x, q.mul(y, q.mul(z, x))) == q.mul(q.mul(q.mul(x, y), z), x);
            case Law::moufang:
                // x(yz*x) = xy*zx
                return q.mul(x, q.mul(q.mul(y, z), x)) == q.mul(q.mul(x, y), q.mul(z, x));
            case Law::wip:
                // x*I(yx) = I(y)
                return q.mul(x, q.linv(q.mul(y, x))) == q.linv(y);
            case Law::wwip:
                // I(xy)*I^2(x) = I(y)
                return q.mul(q.linv(q.mul(x, y)), q.linv(q.linv(x))) == q.linv(y);
            case Law::m_inverse:
                // I^m(xy)*I^{m+1}(x) = I^m(y)
                return q.mul(im[q.mul(x, y)], im1[x]) == im[y];
            case Law::flexible_law:
                return q.mul(x, q.mul(y, x)) == q.mul(q.mul(x, y), x);
            case Law::left_alt_law:
                return q.mul(x, q.mul(x, y)) == q.mul(q.mul(x, x), y);
            case Law::right_alt_law:
                return q.mul(q.mul(y, x), x) == q.mul(y, q.mul(x, x));
        }
        return true;
    }
};

}  // namespace

CheckResult check_identity(const CayleyTable& t, LawId id, const CheckOptions& opt) {
    const int n = t.order();
    const int arity = law_arity(id.law);
    const std::uint64_t space = [&] {
        std::uint64_t s = 1;
        for (int i = 0; i < arity; ++i) s *= (std::uint64_t)n;
        return s;
    }();

    bool sampled;
    switch (opt.mode) {
        case CheckOptions::Mode::exhaustive: sampled = false; break;
        case CheckOptions::Mode::sampled: sampled = true; break;
        default: sampled = space > kExhaustiveLimit; break;
    }
    if (sampled && !opt.seed)
        throw LoopError("sampled mode requires an explicit seed for reproducibility");

    LawContext ctx{t, {}, {}};
    if (id.law == Law::m_inverse) {
        ctx.im = ipow_map(t, id.m);
        ctx.im1 = ipow_map(t, id.m + 1);
    }

    CheckResult res;
    res.law = id.name();
    res.sampled = sampled;

    SweepOutcome out;
    if (!sampled) {
        auto pred2 = [&](Elem x, Elem y) { return ctx.eval(id.law, x, y, 0, 0); };
        auto pred3 = [&](Elem x, Elem y, Elem z) { return ctx.eval(id.law, x, y, z, 0); };
        auto pred4 = [&](Elem x, Elem y, Elem u, Elem v) { return ctx.eval(id.law, x, y, u, v); };
        if (arity == 2)
            out = detail::sweep2(n, pred2, opt.threads);
        else if (arity == 3)
            out = detail::sweep3(n, pred3, opt.threads, opt.progress);
        else
            out = detail::sweep4(n, pred4, opt.threads);
    } else {
        res.samples = opt.samples;
        res.seed = *opt.seed;
        out = detail::sampled_sweep(
            n, arity, [&](Elem x, Elem y, Elem z, Elem v) { return ctx.eval(id.law, x, y, z, v); },
            opt.samples, *opt.seed, opt.threads);
    }

    res.passed = out.passed;
    res.evaluations = out.evaluations;
    if (!out.passed) {
        res.witness.assign(out.w.begin(), out.w.begin() + arity);
        if (id.law == Law::cc) {
            bool lhs = ctx.eval(Law::lcc, out.w[0], out.w[1], out.w[2], 0);
            res.detail = lhs ? "rcc half failed" : "lcc half failed";
        }
    }
    return res;
}

bool witness_violates(const CayleyTable& t, LawId id, const std::vector<Elem>& w) {
    if ((int)w.size() != law_arity(id.law)) return false;
    LawContext ctx{t, {}, {}};
    if (id.law == Law::m_inverse) {
        ctx.im = ipow_map(t, id.m);
        ctx.im1 = ipow_map(t, id.m + 1);
    }
    Elem x = w[0], y = w.size() > 1 ? w[1] : 0, z = w.size() > 2 ? w[2] : 0,
         v = w.size() > 3 ? w[3] : 0;
    return !ctx.eval(id.law, x, y, z, v);
}

ElementProperties element_properties(const CayleyTable& t, Elem a) {
    t.check_range(a);
    const int n = t.order();
    ElementProperties p{};
    const Elem i = t.linv(a), j = t.rinv(a);
    p.two_sided = (i == j);

    p.lip = p.rip = p.two_sided;
    if (p.two_sided) {
        for (int x = 0; x < n && p.lip; ++x)
            if (t.mul(a, t.mul(i, (Elem)x)) != x || t.mul(i, t.mul(a, (Elem)x)) != x)
                p.lip = false;
        for (int x = 0; x < n && p.rip; ++x)
            if (t.mul(t.mul((Elem)x, a), i) != x || t.mul(t.mul((Elem)x, i), a) != x)
                p.rip = false;
    }

    p.flexible = true;
    for (int x = 0; x < n && p.flexible; ++x)
        if (t.mul(a, t.mul((Elem)x, a)) != t.mul(t.mul(a, (Elem)x), a)) p.flexible = false;

    const Elem aa = t.mul(a, a);
    p.left_alt = true;
    for (int x = 0; x < n && p.left_alt; ++x)
        if (t.mul(a, t.mul(a, (Elem)x)) != t.mul(aa, (Elem)x)) p.left_alt = false;
    p.right_alt = true;
    for (int x = 0; x < n && p.right_alt; ++x)
        if (t.mul(t.mul((Elem)x, a), a) != t.mul((Elem)x, aa)) p.right_alt = false;

    p.extra = true;
    for (int y = 0; y < n && p.extra; ++y)
        for (int z = 0; z < n && p.extra; ++z)
            if (t.mul(a, t.mul((Elem)y, t.mul((Elem)z, a))) !=
                t.mul(t.mul(t.mul(a, (Elem)y), (Elem)z), a))
                p.extra = false;

    p.moufang = true;
    for (int x = 0; x < n && p.moufang; ++x)
        for (int y = 0; y < n && p.moufang; ++y)
            if (t.mul(a, t.mul(t.mul((Elem)x, (Elem)y), a)) !=
                t.mul(t.mul(a, (Elem)x), t.mul((Elem)y, a)))
                p.moufang = false;

    return p;
}

MInverseReport minverse_suite(const CayleyTable& t, long m, int threads) {
    MInverseReport rep;
    rep.m = m;
    CheckOptions opt;
    opt.threads = threads;

    CheckResult base = check_identity(t, LawId{Law::m_inverse, m}, opt);
    rep.is_m_inverse = base.passed;
    rep.witness = base.witness;
    if (!rep.is_m_inverse) return rep;

    rep.neg_m_ok = check_identity(t, LawId{Law::m_inverse, -2 * m - 1}, opt).passed;

    const int n = t.order();
    std::vector<Elem> pw(n);
    {
        std::vector<Elem> base_map(n);
        for (int x = 0; x < n; ++x) base_map[x] = (Elem)x;
        long k = 3 * m + 1;
        const bool fwd = k >= 0;
        for (long r = 0; r < (fwd ? k : -k); ++r)
            for (int x = 0; x < n; ++x) base_map[x] = fwd ? t.linv(base_map[x]) : t.rinv(base_map[x]);
        pw = base_map;
    }
    rep.ipow_aut = detail::sweep2(n, [&](Elem x, Elem y) {
                       return t.mul(pw[x], pw[y]) == pw[t.mul(x, y)];
                   }, threads).passed;

    // m = ((-2)^k - 1)/3  <=>  3m+1 = (-2)^k
    long target = 3 * m + 1;
    long pw2 = -2;
    for (int k = 1; k <= 40; ++k) {
        if (pw2 == target) {
            rep.wip_k = k;
            break;
        }
        pw2 *= -2;
    }
    if (rep.wip_k) {
        long m_next = (-2 * m - 1);  // ((-2)^{k+1} - 1)/3
        rep.wip_next_ok = check_identity(t, LawId{Law::m_inverse, m_next}, opt).passed;
    }

    rep.passed = rep.is_m_inverse && rep.neg_m_ok && rep.ipow_aut &&
                 (!rep.wip_k || rep.wip_next_ok);
    return rep;
}

}  // namespace loops
