#include <doctest.h>

#include "loops/autotopism.hpp"
#include "loops/check.hpp"
#include "loops/subloop.hpp"
#include "support/corpus.hpp"

using namespace loops;

TEST_SUITE("check") {

TEST_CASE("groups satisfy the group-implied laws") {
    for (const CayleyTable& t : corpus::small_group_tables()) {
        for (const char* name : {"buchsteiner", "cc", "extra", "wip", "wwip", "moufang",
                                 "flexible_law", "left_alt_law", "right_alt_law"}) {
            CheckResult r = check_identity(t, *LawId::parse(name));
            CHECK_MESSAGE(r.passed, t.label(), " fails ", name);
        }
        CHECK(check_identity(t, LawId{Law::m_inverse, -1}).passed);  // WIP
    }
}

TEST_CASE("abelian groups have the cross inverse property") {
    CHECK(check_identity(cyclic_table(6), LawId{Law::m_inverse, 0}).passed);
    CHECK_FALSE(check_identity(corpus::s3_table(), LawId{Law::m_inverse, 0}).passed);
}

TEST_CASE("the order-5 loop fails buchsteiner with a re-evaluating witness") {
    CayleyTable t = corpus::nonassoc5_table();
    CheckResult r = check_identity(t, LawId{Law::buchsteiner, 0});
    REQUIRE_FALSE(r.passed);
    REQUIRE(r.witness.size() == 3);
    CHECK(witness_violates(t, LawId{Law::buchsteiner, 0}, r.witness));
    // Lexicographically smallest: no earlier triple violates.
    bool earlier = false;
    for (int x = 0; x <= r.witness[0] && !earlier; ++x)
        for (int y = 0; y < 5 && !earlier; ++y)
            for (int z = 0; z < 5 && !earlier; ++z) {
                if (std::make_tuple(x, y, z) >=
                    std::make_tuple((int)r.witness[0], (int)r.witness[1], (int)r.witness[2]))
                    break;
                if (witness_violates(t, LawId{Law::buchsteiner, 0},
                                     {(Elem)x, (Elem)y, (Elem)z}))
                    earlier = true;
            }
    CHECK_FALSE(earlier);
}

TEST_CASE("threaded and single-threaded sweeps agree on the witness") {
    CayleyTable t = corpus::nonassoc5_table();
    CheckOptions one;
    one.threads = 1;
    CheckOptions many;
    many.threads = 4;
    for (const char* name : {"buchsteiner", "lcc", "rcc", "cc", "moufang", "extra"}) {
        CheckResult a = check_identity(t, *LawId::parse(name), one);
        CheckResult b = check_identity(t, *LawId::parse(name), many);
        CHECK(a.passed == b.passed);
        CHECK(a.witness == b.witness);
        CHECK(a.evaluations == b.evaluations);
    }
}

TEST_CASE("buchsteiner equivalences: identity, autotopism triples, big identity") {
    for (const CayleyTable& t : {corpus::nonassoc5_table(), corpus::s3_table(),
                                 cyclic_table(8), corpus::quaternion8_table()}) {
        const bool direct = check_identity(t, LawId{Law::buchsteiner, 0}).passed;
        bool via_atp = true;
        for (int x = 0; x < t.order() && via_atp; ++x)
            via_atp = is_autotopism(t, buch_triple(t, (Elem)x)).holds;
        CHECK(direct == via_atp);
        const bool big = check_identity(t, LawId{Law::buchsteiner_big, 0}).passed;
        CHECK(direct == big);
        // Translation-conjugation form.
        bool via_trans = true;
        const int n = t.order();
        for (int x = 0; x < n && via_trans; ++x)
            for (int z = 0; z < n && via_trans; ++z)
                for (int u = 0; u < n; ++u)
                    if (t.ldiv((Elem)x, t.mul(t.mul((Elem)x, (Elem)u), (Elem)z)) !=
                        t.rdiv(t.mul((Elem)u, t.mul((Elem)z, (Elem)x)), (Elem)x)) {
                        via_trans = false;
                        break;
                    }
        CHECK(direct == via_trans);
    }
}

TEST_CASE("sampled mode requires a seed and is reproducible") {
    CayleyTable t = corpus::nonassoc5_table();
    CheckOptions opt;
    opt.mode = CheckOptions::Mode::sampled;
    opt.samples = 1000;
    CHECK_THROWS_AS(check_identity(t, LawId{Law::buchsteiner, 0}, opt), LoopError);
    opt.seed = 42;
    CheckResult a = check_identity(t, LawId{Law::buchsteiner, 0}, opt);
    CheckResult b = check_identity(t, LawId{Law::buchsteiner, 0}, opt);
    CHECK(a.passed == b.passed);
    CHECK(a.witness == b.witness);
    CHECK(a.evaluations == b.evaluations);
    opt.threads = 3;
    CheckResult c = check_identity(t, LawId{Law::buchsteiner, 0}, opt);
    CHECK(a.witness == c.witness);
    CHECK(a.evaluations == c.evaluations);
}

TEST_CASE("cc records the failing half") {
    CayleyTable t = corpus::nonassoc5_table();
    CheckResult r = check_identity(t, LawId{Law::cc, 0});
    if (!r.passed) CHECK((r.detail == "lcc half failed" || r.detail == "rcc half failed"));
}

TEST_CASE("element properties on groups") {
    for (const CayleyTable& t : {corpus::s3_table(), corpus::quaternion8_table()})
        for (int a = 0; a < t.order(); ++a) {
            ElementProperties p = element_properties(t, (Elem)a);
            CHECK(p.two_sided);
            CHECK(p.lip);
            CHECK(p.rip);
            CHECK(p.flexible);
            CHECK(p.left_alt);
            CHECK(p.right_alt);
            CHECK(p.extra);
            CHECK(p.moufang);
        }
}

TEST_CASE("nucleus autotopism characterizations match the computed nuclei") {
    for (const CayleyTable& t : {corpus::nonassoc5_table(), corpus::s3_table()}) {
        Nuclei nu = nuclei(t);
        for (int a = 0; a < t.order(); ++a) {
            CHECK(is_autotopism(t, nuc_left_triple(t, (Elem)a)).holds ==
                  nu.left.contains((Elem)a));
            CHECK(is_autotopism(t, nuc_mid_triple(t, (Elem)a)).holds ==
                  nu.mid.contains((Elem)a));
            CHECK(is_autotopism(t, nuc_right_triple(t, (Elem)a)).holds ==
                  nu.right.contains((Elem)a));
        }
    }
}

TEST_CASE("moufang triples hold on groups") {
    CayleyTable t = corpus::s3_table();
    for (int a = 0; a < t.order(); ++a) {
        CHECK(is_autotopism(t, moufang_triple(t, (Elem)a)).holds);
        CHECK(is_autotopism(t, extra_triple(t, (Elem)a)).holds);
        CHECK(is_autotopism(t, lcc_triple(t, (Elem)a)).holds);
        CHECK(is_autotopism(t, rcc_triple(t, (Elem)a)).holds);
    }
}

TEST_CASE("autotopism failure reports the first violating pair") {
    CayleyTable t = corpus::nonassoc5_table();
    // Find a failing Buchsteiner triple and confirm the witness order.
    for (int x = 0; x < 5; ++x) {
        AutotopismCheck c = is_autotopism(t, buch_triple(t, (Elem)x));
        if (c.holds) continue;
        REQUIRE(c.witness.has_value());
        auto [wx, wy] = *c.witness;
        Autotopism a = buch_triple(t, (Elem)x);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                bool ok = t.mul(a.alpha[i], a.beta[j]) == a.gamma[t.mul((Elem)i, (Elem)j)];
                if (std::make_pair(i, j) < std::make_pair((int)wx, (int)wy)) CHECK(ok);
                if (i == wx && j == wy) CHECK_FALSE(ok);
            }
    }
}

TEST_CASE("identity autotopism and degree mismatch") {
    CayleyTable t = cyclic_table(4);
    CHECK(is_autotopism(t, {identity_perm(4), identity_perm(4), identity_perm(4), "id"}).holds);
    CHECK_THROWS_AS(
        is_autotopism(t, {identity_perm(3), identity_perm(4), identity_perm(4), "bad"}),
        DegreeMismatch);
}

TEST_CASE("m-inverse suite on groups") {
    MInverseReport wip = minverse_suite(corpus::s3_table(), -1);
    CHECK(wip.passed);
    CHECK(wip.is_m_inverse);
    MInverseReport cross = minverse_suite(cyclic_table(6), 0);
    CHECK(cross.passed);
    MInverseReport bad = minverse_suite(corpus::nonassoc5_table(), 0);
    CHECK_FALSE(bad.passed);
    CHECK_FALSE(bad.is_m_inverse);
    CHECK(bad.witness.size() == 2);
}

TEST_CASE("unknown law parse") {
    CHECK_FALSE(LawId::parse("nonsense").has_value());
    CHECK(LawId::parse("m_inverse:-3")->m == -3);
    CHECK(LawId::parse("m_inverse:2")->name() == "m_inverse:2");
}

}  // TEST_SUITE
