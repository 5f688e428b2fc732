#include <doctest.h>

#include "exobasis/admissibility.hpp"
#include "exobasis/gallery.hpp"

using namespace exobasis;

TEST_SUITE("gallery") {

TEST_CASE("dyadic intervals tile [0,1) from the left") {
    CHECK(dyadic_lo(1) == 0);
    CHECK(dyadic_hi(1) == rat(1, 2));
    CHECK(dyadic_lo(2) == rat(1, 2));
    CHECK(dyadic_hi(2) == rat(3, 4));
    CHECK(dyadic_lo(3) == rat(3, 4));
    for (int j = 1; j < 30; ++j) CHECK(dyadic_hi(j) == dyadic_lo(j + 1));
}

TEST_CASE("overlap family pieces") {
    MultiTileSet s = linear_tail_family(2);
    REQUIRE(s.pieces().size() == 3);
    CHECK(s.pieces()[0].translate == LatticePoint({0}));
    CHECK(s.pieces()[0].region.same_set(UnitRegion::cube(1)));
    CHECK(s.pieces()[1].translate == LatticePoint({1}));
    CHECK(s.pieces()[1].region.same_set(UnitRegion(1, {Box({rat(0)}, {rat(1, 2)})})));
    CHECK(s.pieces()[2].translate == LatticePoint({2}));
    CHECK(s.pieces()[2].region.same_set(UnitRegion(1, {Box({rat(1, 2)}, {rat(3, 4)})})));
    CHECK_THROWS_AS(linear_tail_family(0), InputError);
}

TEST_CASE("odd-translate family pieces and histogram") {
    MultiTileSet s = odd_tail_family(1);
    REQUIRE(s.pieces().size() == 2);
    CHECK(s.pieces()[1].translate == LatticePoint({3}));
    CHECK(s.pieces()[1].region.same_set(UnitRegion(1, {Box({rat(0)}, {rat(1, 2)})})));

    for (int J : {1, 4, 9}) {
        auto hist = multiplicity_histogram(fiber_partition(linear_tail_family(J)));
        Rat tail = 1;
        for (int i = 0; i < J; ++i) tail /= 2;
        CHECK(hist.at(2) == 1 - tail);
        CHECK(hist.at(1) == tail);
    }
}

TEST_CASE("truncations are nested") {
    for (int J = 1; J <= 6; ++J) {
        MultiTileSet small = odd_tail_family(J), big = odd_tail_family(J + 1);
        for (const Piece& p : small.pieces()) {
            bool covered = false;
            for (const Piece& q : big.pieces())
                if (q.translate == p.translate && subtract(p.region, q.region).empty())
                    covered = true;
            CHECK(covered);
        }
    }
}

TEST_CASE("odd-translate family stays valid at depth 1000") {
    AdmissibilityCertificate c(2, DualVector({1}));
    CHECK(check_certificate(fiber_partition(odd_tail_family(1000)), c).valid);
}

TEST_CASE("box tile is an exact tile for every k") {
    for (int k = 1; k <= 4; ++k) {
        MultiTileSet s = box_k_tile(k, integer_lattice(1));
        CHECK(s.measure() == k);
        auto hist = multiplicity_histogram(fiber_partition(s));
        REQUIRE(hist.size() == 1);
        CHECK(hist.at(k) == 1);
    }
    MultiTileSet s2 = box_k_tile(2, integer_lattice(2));
    CHECK(tiling_level(fiber_partition(s2)) == TilingLevel{TilingLevel::Kind::ExactTile, 2});
}

TEST_CASE("phase-targeted family either builds or names the failing level") {
    // target phases of m=0 match beta=(0,0) immediately, so every translate
    // collapses to 0 and the pieces merge into the base cell
    MultiTileSet s = kronecker_tail_family(3, 1.4142135623730951, 1.7320508075688772, 0.0, 0.0,
                                       0.01, 100);
    REQUIRE(s.pieces().size() == 1);
    CHECK(s.pieces()[0].translate == LatticePoint({0}));
    CHECK(s.pieces()[0].region.same_set(UnitRegion::cube(1)));

    CHECK_THROWS_AS(kronecker_tail_family(2, 1.4142135623730951, 1.7320508075688772, 0.49, 0.51,
                                      1e-9, 10),
                    KroneckerSearchFailed);
    try {
        kronecker_tail_family(2, 1.4142135623730951, 1.7320508075688772, 0.49, 0.51, 1e-9, 10);
    } catch (const KroneckerSearchFailed& e) {
        CHECK(e.j >= 1);
    }

    MultiTileSet t = kronecker_tail_family(0, 1.5, 2.5, 0.25, 0.75, 0.1, 1000);
    REQUIRE(t.pieces().size() == 1);
    CHECK(t.pieces()[0].region.same_set(UnitRegion::cube(1)));
}

}
