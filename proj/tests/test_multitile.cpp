#include <doctest.h>

#include "exobasis/gallery.hpp"
#include "exobasis/multitile.hpp"
#include "exobasis/rng.hpp"

using namespace exobasis;

namespace {

UnitRegion interval(const Rat& lo, const Rat& hi) {
    return UnitRegion(1, {Box({lo}, {hi})});
}

LatticePoint z1(std::int64_t v) { return LatticePoint({v}); }

} // namespace

TEST_SUITE("multitile") {

TEST_CASE("construction merges pieces sharing a translate") {
    Lattice L = integer_lattice(1);
    MultiTileSet s(L, {Piece{interval(rat(0), rat(1, 2)), z1(4)},
                       Piece{interval(rat(1, 4), rat(3, 4)), z1(4)}});
    REQUIRE(s.pieces().size() == 1);
    CHECK(s.pieces()[0].region.same_set(interval(rat(0), rat(3, 4))));
    CHECK(s.measure() == rat(3, 4));
    CHECK_THROWS_AS(MultiTileSet(L, {Piece{UnitRegion(1), z1(0)}}), InputError);
    CHECK_THROWS_AS(MultiTileSet(L, {Piece{UnitRegion::cube(2), z1(0)}}), DimensionMismatch);
}

TEST_CASE("single full piece gives one singleton class") {
    MultiTileSet s(integer_lattice(1), {Piece{UnitRegion::cube(1), z1(0)}});
    FiberPartition P = fiber_partition(s);
    REQUIRE(P.classes.size() == 1);
    CHECK(P.classes[0].region.same_set(UnitRegion::cube(1)));
    CHECK(P.classes[0].points == std::vector<LatticePoint>{z1(0)});
    CHECK(P.uncovered.empty());
    CHECK(tiling_level(P) == TilingLevel{TilingLevel::Kind::ExactTile, 1});
}

TEST_CASE("truncated dyadic family splits into the expected classes") {
    FiberPartition P = fiber_partition(odd_tail_family(2));
    REQUIRE(P.classes.size() == 3);
    CHECK(P.classes[0].region.same_set(interval(rat(0), rat(1, 2))));
    CHECK(P.classes[0].points == std::vector<LatticePoint>{z1(0), z1(3)});
    CHECK(P.classes[1].region.same_set(interval(rat(1, 2), rat(3, 4))));
    CHECK(P.classes[1].points == std::vector<LatticePoint>{z1(0), z1(5)});
    CHECK(P.classes[2].region.same_set(interval(rat(3, 4), rat(1))));
    CHECK(P.classes[2].points == std::vector<LatticePoint>{z1(0)});
    CHECK(P.uncovered.empty());
}

TEST_CASE("duplicate pieces collapse to one class") {
    MultiTileSet s(integer_lattice(1), {Piece{UnitRegion::cube(1), z1(2)},
                                        Piece{UnitRegion::cube(1), z1(2)}});
    FiberPartition P = fiber_partition(s);
    REQUIRE(P.classes.size() == 1);
    CHECK(P.classes[0].points == std::vector<LatticePoint>{z1(2)});
}

TEST_CASE("empty set yields empty classes and full uncovered region") {
    MultiTileSet s(integer_lattice(2), {});
    FiberPartition P = fiber_partition(s);
    CHECK(P.classes.empty());
    CHECK(P.uncovered.same_set(UnitRegion::cube(2)));
    auto hist = multiplicity_histogram(P);
    REQUIRE(hist.size() == 1);
    CHECK(hist.at(0) == 1);
    CHECK(tiling_level(P) == TilingLevel{TilingLevel::Kind::SubTile, 0});
}

TEST_CASE("histogram of the level-3 overlap family") {
    auto hist = multiplicity_histogram(fiber_partition(linear_tail_family(3)));
    REQUIRE(hist.size() == 2);
    CHECK(hist.at(2) == rat(7, 8));
    CHECK(hist.at(1) == rat(1, 8));
}

TEST_CASE("tiling level distinguishes exact tiles from subtiles") {
    CHECK(tiling_level(fiber_partition(box_k_tile(3, integer_lattice(1)))) ==
          TilingLevel{TilingLevel::Kind::ExactTile, 3});
    for (int J : {1, 5, 20})
        CHECK(tiling_level(fiber_partition(odd_tail_family(J))) ==
              TilingLevel{TilingLevel::Kind::SubTile, 2});

    // appending the tail cell at an unused odd translate completes the tile
    MultiTileSet s = odd_tail_family(4);
    std::vector<Piece> pieces = s.pieces();
    pieces.push_back(Piece{interval(1 - rat(1, 16), rat(1)), z1(-1)});
    CHECK(tiling_level(fiber_partition(MultiTileSet(s.lattice(), pieces))) ==
          TilingLevel{TilingLevel::Kind::ExactTile, 2});
}

TEST_CASE("conservation: sum of level x measure x det equals the total measure") {
    Rng rng(60601);
    for (int trial = 0; trial < 15; ++trial) {
        RatMatrix basis(1, 1);
        basis.at(0, 0) = rat(rng.range(1, 5), rng.range(1, 3));
        Lattice L = make_lattice(basis);
        std::vector<Piece> pieces;
        const int np = 1 + static_cast<int>(rng.range(0, 3));
        for (int p = 0; p < np; ++p) {
            long a = rng.range(0, 6);
            long w = rng.range(1, 8 - a);
            pieces.push_back(Piece{interval(rat(a, 8), rat(a + w, 8)), z1(rng.range(-3, 3))});
        }
        MultiTileSet s(L, std::move(pieces));
        FiberPartition P = fiber_partition(s);
        Rat total = 0;
        for (auto& [level, m] : multiplicity_histogram(P)) total += level * m;
        CHECK(total * L.det_abs() == s.measure());

        Rat class_total = 0;
        for (const FiberClass& c : P.classes)
            class_total += static_cast<long>(c.points.size()) * c.region.measure();
        CHECK(class_total * L.det_abs() == s.measure());
    }
}

TEST_CASE("partition is stable under splitting a piece region") {
    MultiTileSet whole(integer_lattice(1), {Piece{UnitRegion::cube(1), z1(0)},
                                            Piece{interval(rat(1, 4), rat(1)), z1(2)}});
    MultiTileSet split(integer_lattice(1),
                       {Piece{interval(rat(0), rat(2, 3)), z1(0)},
                        Piece{interval(rat(2, 3), rat(1)), z1(0)},
                        Piece{interval(rat(1, 4), rat(5, 8)), z1(2)},
                        Piece{interval(rat(5, 8), rat(1)), z1(2)}});
    FiberPartition a = fiber_partition(whole), b = fiber_partition(split);
    REQUIRE(a.classes.size() == b.classes.size());
    for (size_t i = 0; i < a.classes.size(); ++i) {
        CHECK(a.classes[i].region.same_set(b.classes[i].region));
        CHECK(a.classes[i].points == b.classes[i].points);
    }
}

}
