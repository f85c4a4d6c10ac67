#include <doctest.h>

#include "loops/subloop.hpp"
#include "support/corpus.hpp"

using namespace loops;

TEST_SUITE("subloop") {

TEST_CASE("nuclei and center of groups are everything") {
    for (const CayleyTable& t : {corpus::s3_table(), cyclic_table(5)}) {
        Nuclei nu = nuclei(t);
        CHECK((int)nu.nuc.size() == t.order());
        CHECK(nu.left.members == nu.mid.members);
        CHECK(nu.mid.members == nu.right.members);
    }
    CommutantCenter cc = commutant_center(cyclic_table(6));
    CHECK((int)cc.center.size() == 6);
    CHECK(cc.commutant == cc.center.members);
}

TEST_CASE("s3 has trivial center") {
    CommutantCenter cc = commutant_center(corpus::s3_table());
    CHECK(cc.center.members == std::vector<Elem>{0});
}

TEST_CASE("generate and closure") {
    CayleyTable c4 = cyclic_table(4);
    CHECK(generate_subloop(c4, {}).members == std::vector<Elem>{0});
    CHECK(generate_subloop(c4, {2}).members == std::vector<Elem>{0, 2});
    CHECK(generate_subloop(c4, {1}).size() == 4);
    CHECK(is_closed_subloop(c4, {0, 2}));
    CHECK_FALSE(is_closed_subloop(c4, {0, 1}));
    CHECK(is_normal_set(c4, {0, 2}));
}

TEST_CASE("quotient C4 / {0,2} = C2") {
    CayleyTable c4 = cyclic_table(4);
    QuotientMap q = quotient(c4, {{0, 2}, "C4"});
    CHECK(q.table.order() == 2);
    CHECK(q.proj == std::vector<Elem>{0, 1, 0, 1});
    CHECK(q.block_rep == std::vector<Elem>{0, 1});
    CHECK(q.table.mul(1, 1) == 0);
}

TEST_CASE("quotient rejects non-normal subloops") {
    CayleyTable s3 = corpus::s3_table();
    // {0, 3} is a subloop (s has order 2) but not normal in S3.
    CHECK(is_closed_subloop(s3, {0, 3}));
    CHECK_FALSE(is_normal_set(s3, {0, 3}));
    CHECK_THROWS_AS(quotient(s3, {{0, 3}, "S3"}), NotNormal);
    // The rotation subgroup is normal.
    QuotientMap q = quotient(s3, {{0, 1, 2}, "S3"});
    CHECK(q.table.order() == 2);
}

TEST_CASE("quotient projection is a homomorphism") {
    CayleyTable q8 = corpus::quaternion8_table();
    QuotientMap q = quotient(q8, {{0, 1}, "Q8"});  // center {1, -1}
    CHECK(q.table.order() == 4);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
            CHECK(q.proj[q8.mul((Elem)x, (Elem)y)] == q.table.mul(q.proj[x], q.proj[y]));
    // Q8 / Z is the Klein four-group: every nontrivial block squares to 0.
    for (int b = 1; b < 4; ++b) CHECK(q.table.mul((Elem)b, (Elem)b) == 0);
}

TEST_CASE("associators and commutators vanish on groups") {
    CayleyTable t = corpus::s3_table();
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            for (int z = 0; z < 6; ++z)
                CHECK(associator(t, (Elem)x, (Elem)y, (Elem)z) == 0);
        }
    CHECK(commutator(t, 1, 3) != 0);  // nonabelian
    CHECK(associator_subloop(t).members == std::vector<Elem>{0});
}

TEST_CASE("associator subloop of the order-5 loop") {
    CayleyTable t = corpus::nonassoc5_table();
    SubloopSet a = associator_subloop(t);
    // A nonassociative loop of prime order has no proper normal subloop
    // with a group quotient except the whole loop.
    CHECK((int)a.size() == 5);
}

TEST_CASE("nuclear action guards its argument") {
    CayleyTable t = corpus::nonassoc5_table();
    Nuclei nu = nuclei(t);
    if ((int)nu.nuc.size() < t.order()) {
        Elem outside = 0;
        for (int x = 0; x < t.order(); ++x)
            if (!nu.nuc.contains((Elem)x)) {
                outside = (Elem)x;
                break;
            }
        CHECK_THROWS_AS(nuclear_action(t, nu.nuc, outside, 1), ActionArgNotNuclear);
    }
    CHECK(nuclear_action(t, nu.nuc, 0, 3) == 0);
}

TEST_CASE("left power order") {
    CayleyTable c6 = cyclic_table(6);
    CHECK(left_power_order(c6, 0) == 1);
    CHECK(left_power_order(c6, 1) == 6);
    CHECK(left_power_order(c6, 2) == 3);
    CHECK(left_power_order(c6, 3) == 2);
}

}  // TEST_SUITE
