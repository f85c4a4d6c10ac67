#include <doctest.h>

#include "loops/check.hpp"
#include "loops/construction.hpp"
#include "loops/subloop.hpp"
#include "loops/suite.hpp"
#include "support/corpus.hpp"

using namespace loops;

TEST_SUITE("suites") {

TEST_CASE("theorem suite stops on a non-qualifying table") {
    Suite s = theorem_suite(corpus::nonassoc5_table());
    REQUIRE(s.records.size() == 1);
    CHECK_FALSE(s.records[0].passed);
    CHECK(s.records[0].witness.size() == 3);
}

TEST_CASE("theorem suite on a group passes") {
    Suite s = theorem_suite(corpus::quaternion8_table());
    for (const auto& r : s.records) {
        CAPTURE(r.tag);
        CHECK_MESSAGE(r.passed, r.tag, ": ", r.detail);
    }
}

TEST_CASE("theorem suite on the order-64 loop passes") {
    CayleyTable q64 = build_q64();
    Suite s = theorem_suite(q64);
    for (const auto& r : s.records) {
        CAPTURE(r.tag);
        CHECK_MESSAGE(r.passed, r.tag, ": ", r.detail);
    }
    CHECK(s.all_passed());
    CHECK(s.find("Thm 26 groups"));
    CHECK(s.find("Prop M"));
    CHECK(s.find("Lemma eta-nuc"));
}

TEST_CASE("calculus suite on a group is vacuously green") {
    Suite s = calculus_suite(corpus::s3_table());
    CHECK(s.all_passed());
}

TEST_CASE("calculus suite on the order-64 loop passes") {
    CayleyTable q64 = build_q64();
    Suite s = calculus_suite(q64);
    for (const auto& r : s.records) {
        CAPTURE(r.tag);
        CHECK_MESSAGE(r.passed, r.tag, ": ", r.detail);
    }
    CHECK(s.all_passed());
    CHECK(s.find("Prop 73"));
    CHECK(s.find("Lemma 95"));
    CHECK(s.find("Cor 96"));
}

TEST_CASE("calculus suite reports the non-qualifying precondition") {
    Suite s = calculus_suite(corpus::nonassoc5_table());
    REQUIRE_FALSE(s.records.empty());
    CHECK_FALSE(s.records[0].passed);
    CHECK(s.records[0].detail == "NotBuchsteiner");
}

TEST_CASE("element property equivalences on the order-64 loop") {
    CayleyTable q64 = build_q64();
    Nuclei nu = nuclei(q64);
    int with_props = 0;
    for (int a = 0; a < 64; ++a) {
        ElementProperties p = element_properties(q64, (Elem)a);
        // The six flags coincide in this variety.
        CHECK(p.lip == p.rip);
        CHECK(p.rip == p.flexible);
        CHECK(p.flexible == p.left_alt);
        CHECK(p.left_alt == p.right_alt);
        CHECK(p.right_alt == p.extra);
        // Moufang = extra with a nuclear square.
        CHECK(p.moufang == (p.extra && nu.nuc.contains(q64.mul((Elem)a, (Elem)a))));
        if (p.extra) ++with_props;
    }
    CHECK(with_props >= 1);  // the identity at least
}

}  // TEST_SUITE
