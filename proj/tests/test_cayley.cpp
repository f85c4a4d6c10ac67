#include <doctest.h>

#include <sstream>

#include "loops/cayley.hpp"
#include "loops/table_io.hpp"
#include "support/corpus.hpp"

using namespace loops;

TEST_SUITE("cayley") {

TEST_CASE("order-2 group validates") {
    CayleyTable t = CayleyTable::validate({{0, 1}, {1, 0}}, "C2");
    CHECK(t.order() == 2);
    CHECK(t.mul(1, 1) == 0);
    CHECK(t.ldiv(1, 0) == 1);
    CHECK(t.rdiv(0, 1) == 1);
}

TEST_CASE("repeated column entry is rejected") {
    try {
        CayleyTable::validate({{0, 1}, {0, 1}});
        FAIL("expected rejection");
    } catch (const TableError& e) {
        CHECK(e.kind == TableError::Kind::ColNotPermutation);
        CHECK(e.index == 0);
    }
}

TEST_CASE("repeated row entry is rejected") {
    try {
        CayleyTable::validate({{0, 0}, {1, 1}});
        FAIL("expected rejection");
    } catch (const TableError& e) {
        CHECK(e.kind == TableError::Kind::RowNotPermutation);
    }
}

TEST_CASE("missing identity is reported") {
    // Latin square without a two-sided identity.
    try {
        CayleyTable::validate({{1, 0, 2}, {0, 2, 1}, {2, 1, 0}});
        FAIL("expected rejection");
    } catch (const TableError& e) {
        CHECK(e.kind == TableError::Kind::NoIdentity);
    }
}

TEST_CASE("identity elsewhere reports its position and relabels on request") {
    // C3 with identity at index 1.
    std::vector<std::vector<Elem>> rows{{2, 0, 1}, {0, 1, 2}, {1, 2, 0}};
    try {
        CayleyTable::validate(rows);
        FAIL("expected rejection");
    } catch (const TableError& e) {
        CHECK(e.kind == TableError::Kind::IdentityNotZero);
        CHECK(e.index == 1);
    }
    CayleyTable t = CayleyTable::validate(rows, "C3", true);
    CHECK(t.order() == 3);
    for (int x = 0; x < 3; ++x) {
        CHECK(t.mul(0, (Elem)x) == x);
        CHECK(t.mul((Elem)x, 0) == x);
    }
}

TEST_CASE("basic ops on C4") {
    CayleyTable t = cyclic_table(4);
    CHECK(t.mul(1, 3) == 0);
    CHECK(t.ldiv(1, 0) == 3);
    CHECK(t.rdiv(0, 1) == 3);
    Perm l1 = t.left_translation(1);
    CHECK(l1 == Perm{1, 2, 3, 0});
    CHECK(t.right_translation(1) == Perm{1, 2, 3, 0});
    CHECK(t.left_translation(0) == identity_perm(4));
}

TEST_CASE("division tables cancel in both directions") {
    for (const CayleyTable& t :
         {corpus::s3_table(), corpus::nonassoc5_table(), cyclic_table(6)}) {
        const int n = t.order();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                CHECK(t.mul((Elem)a, t.ldiv((Elem)a, (Elem)b)) == b);
                CHECK(t.mul(t.rdiv((Elem)b, (Elem)a), (Elem)a) == b);
                CHECK(t.ldiv((Elem)a, t.mul((Elem)a, (Elem)b)) == b);
                CHECK(t.rdiv(t.mul((Elem)a, (Elem)b), (Elem)b) == a);
            }
    }
}

TEST_CASE("inverse maps on C4 and groups") {
    CayleyTable t = cyclic_table(4);
    InverseMaps m = inverse_maps(t, 1);
    CHECK(m.i == 3);
    CHECK(m.j == 3);
    CHECK(m.eta_agree);
    for (const CayleyTable& g : {corpus::s3_table(), corpus::quaternion8_table()})
        for (int x = 0; x < g.order(); ++x) {
            InverseMaps im = inverse_maps(g, (Elem)x);
            CHECK(im.eta_xj == 0);  // x * x^{-1} = 1 in a group
            CHECK(im.eta_ix == 0);
        }
}

TEST_CASE("I and J invert each other as maps") {
    for (const CayleyTable& t : {corpus::nonassoc5_table(), corpus::s3_table()}) {
        for (int x = 0; x < t.order(); ++x) {
            CHECK(t.rinv(t.linv((Elem)x)) == x);
            CHECK(t.linv(t.rinv((Elem)x)) == x);
            CHECK(t.ipow((Elem)x, 2) == t.linv(t.linv((Elem)x)));
            CHECK(t.ipow((Elem)x, -1) == t.rinv((Elem)x));
        }
    }
}

TEST_CASE("table io round trip") {
    CayleyTable t = corpus::s3_table();
    std::ostringstream os;
    write_table(os, t, {"test comment"});
    std::istringstream is(os.str());
    CayleyTable u = read_table(is, "roundtrip");
    CHECK(u.order() == t.order());
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) CHECK(u.mul((Elem)x, (Elem)y) == t.mul((Elem)x, (Elem)y));
}

TEST_CASE("io rejects malformed input") {
    std::istringstream is("2\n0 1\n0\n");
    CHECK_THROWS_AS(read_table(is, "bad"), IoError);
    std::istringstream is2("# only comments\n");
    CHECK_THROWS_AS(read_table(is2, "empty"), IoError);
}

}  // TEST_SUITE
