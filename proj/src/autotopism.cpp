#include "loops/autotopism.hpp"

namespace loops {

AutotopismCheck is_autotopism(const CayleyTable& t, const Autotopism& a) {
    const int n = t.order();
    if ((int)a.alpha.size() != n || (int)a.beta.size() != n || (int)a.gamma.size() != n)
        throw DegreeMismatch((int)a.alpha.size(), n);
    for (int x = 0; x < n; ++x) {
        const Elem ax = a.alpha[x];
        const Elem* arow = t.mul_row(ax);
        const Elem* xrow = t.mul_row((Elem)x);
        for (int y = 0; y < n; ++y) {
            if (arow[a.beta[y]] != a.gamma[xrow[y]])
                return {false, std::make_pair((Elem)x, (Elem)y)};
        }
    }
    return {true, std::nullopt};
}

AutotopismCheck is_automorphism(const CayleyTable& t, const Perm& p) {
    return is_autotopism(t, Autotopism{p, p, p, "aut"});
}

Autotopism buch_triple(const CayleyTable& t, Elem x) {
    t.check_range(x);
    Perm lx = t.left_translation(x);
    Perm rxi = inverse(t.right_translation(x));
    return {lx, rxi, compose(lx, rxi), "Buch(" + std::to_string(x) + ")"};
}

Autotopism bbuch_triple(const CayleyTable& t, Elem x, Elem y) {
    t.check_range(x);
    t.check_range(y);
    Perm lxy = t.left_translation(t.mul(x, y));
    Perm ryxi = inverse(t.right_translation(t.mul(y, x)));
    return {lxy, ryxi, compose(lxy, ryxi),
            "BBuch(" + std::to_string(x) + "," + std::to_string(y) + ")"};
}

Autotopism extra_triple(const CayleyTable& t, Elem a) {
    t.check_range(a);
    Perm la = t.left_translation(a);
    Perm rai = inverse(t.right_translation(a));
    return {la, rai, compose(rai, la), "Ex(" + std::to_string(a) + ")"};
}

Autotopism moufang_triple(const CayleyTable& t, Elem a) {
    t.check_range(a);
    Perm la = t.left_translation(a);
    Perm ra = t.right_translation(a);
    return {la, ra, compose(la, ra), "Mouf(" + std::to_string(a) + ")"};
}

Autotopism lcc_triple(const CayleyTable& t, Elem x) {
    t.check_range(x);
    Perm lx = t.left_translation(x);
    Perm rxi = inverse(t.right_translation(x));
    return {compose(rxi, lx), lx, lx, "Lcc(" + std::to_string(x) + ")"};
}

Autotopism rcc_triple(const CayleyTable& t, Elem x) {
    t.check_range(x);
    Perm rx = t.right_translation(x);
    Perm lxi = inverse(t.left_translation(x));
    return {rx, compose(lxi, rx), rx, "Rcc(" + std::to_string(x) + ")"};
}

Autotopism nuc_left_triple(const CayleyTable& t, Elem a) {
    t.check_range(a);
    Perm la = t.left_translation(a);
    return {la, identity_perm(t.order()), la, "NucL(" + std::to_string(a) + ")"};
}

Autotopism nuc_mid_triple(const CayleyTable& t, Elem a) {
    t.check_range(a);
    return {t.right_translation(a), inverse(t.left_translation(a)), identity_perm(t.order()),
            "NucM(" + std::to_string(a) + ")"};
}

Autotopism nuc_right_triple(const CayleyTable& t, Elem a) {
    t.check_range(a);
    Perm ra = t.right_translation(a);
    return {identity_perm(t.order()), ra, ra, "NucR(" + std::to_string(a) + ")"};
}

Autotopism minverse_transform(const CayleyTable& t, long m, const Autotopism& a,
                              MInvVariant variant) {
    const int n = t.order();
    // I and J as permutations of the element set.
    Perm imap(n), jmap(n);
    for (int x = 0; x < n; ++x) {
        imap[x] = t.linv((Elem)x);
        jmap[x] = t.rinv((Elem)x);
    }
    auto ip = [&](long k) { return perm_pow(imap, k); };
    auto jp = [&](long k) { return perm_pow(jmap, k); };

    if (variant == MInvVariant::first) {
        Perm jm1 = jp(m + 1), im1 = ip(m + 1), jm = jp(m), im = ip(m);
        return {compose_all({&jm1, &a.beta, &im1}), compose_all({&jm, &a.gamma, &im}),
                compose_all({&jm, &a.alpha, &im}),
                "MInv1(" + std::to_string(m) + "," + a.name + ")"};
    }
    Perm im = ip(m), jm = jp(m), im1 = ip(m + 1), jm1 = jp(m + 1);
    return {compose_all({&im, &a.gamma, &jm}), compose_all({&im1, &a.alpha, &jm1}),
            compose_all({&im, &a.beta, &jm}),
            "MInv2(" + std::to_string(m) + "," + a.name + ")"};
}

}  // namespace loops
