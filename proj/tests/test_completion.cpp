#include <doctest.h>

#include "exobasis/basis.hpp"
#include "exobasis/completion.hpp"
#include "exobasis/gallery.hpp"
#include "exobasis/rng.hpp"

using namespace exobasis;

namespace {

AdmissibilityCertificate cert1(int n, std::int64_t w) {
    return AdmissibilityCertificate(n, DualVector({w}));
}

bool piecewise_contains(const MultiTileSet& big, const MultiTileSet& small) {
    for (const Piece& p : small.pieces()) {
        UnitRegion rest = p.region;
        for (const Piece& q : big.pieces())
            if (q.translate == p.translate) rest = subtract(rest, q.region);
        if (!rest.empty()) return false;
    }
    return true;
}

} // namespace

TEST_SUITE("completion") {

TEST_CASE("achievable residues form the subgroup generated by the pairing gcd") {
    CHECK(residue_class_index(cert1(4, 2)).achievable == std::vector<long>{0, 2});
    CHECK(residue_class_index(cert1(2, 1)).achievable == std::vector<long>{0, 1});
    CHECK(residue_class_index(cert1(1, 0)).achievable == std::vector<long>{0});
    CHECK(residue_class_index(cert1(6, 4)).achievable == std::vector<long>{0, 2, 4});
    CHECK(residue_class_index(AdmissibilityCertificate(6, DualVector({4, 9}))).achievable ==
          std::vector<long>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("class residues come from the pairing") {
    auto r = residue_of_class({LatticePoint({0}), LatticePoint({5})}, cert1(2, 1));
    CHECK(r == std::vector<long>{0, 1});
    auto collide = residue_of_class({LatticePoint({0}), LatticePoint({4})}, cert1(2, 1));
    CHECK(collide == std::vector<long>{0});
}

TEST_CASE("representatives minimize the max norm and respect exclusions") {
    Lattice L = integer_lattice(1);
    CHECK(representative(0, cert1(2, 1), L, {}) == LatticePoint({0}));
    // -1 comes before +1 in lexicographic shell order
    CHECK(representative(1, cert1(2, 1), L, {}) == LatticePoint({-1}));
    CHECK(representative(1, cert1(2, 1), L, {LatticePoint({-1})}) == LatticePoint({1}));
    CHECK_THROWS_AS(representative(1, cert1(4, 2), L, {}), Unachievable);

    Lattice L2 = integer_lattice(2);
    AdmissibilityCertificate c2(3, DualVector({1, 2}));
    LatticePoint rep = representative(2, c2, L2, {});
    CHECK(residue_mod(c2.v, rep, 3) == 2);
    CHECK(rep == LatticePoint({-1, 0}));
}

TEST_CASE("completing the odd family yields an exact 2-tile that keeps the certificate") {
    MultiTileSet omega = odd_tail_family(3);
    FiberPartition P = fiber_partition(omega);
    AdmissibilityCertificate c = cert1(2, 1);
    MultiTileSet delta = complete_to_tile(P, c, 2);

    FiberPartition Q = fiber_partition(delta);
    CHECK(tiling_level(Q) == TilingLevel{TilingLevel::Kind::ExactTile, 2});
    CHECK(check_certificate(Q, c).valid);
    CHECK(delta.measure() == Rat(2));
    CHECK(piecewise_contains(delta, omega));

    // the only deficient class is the tail [7/8, 1) with residue 0 in place;
    // the missing residue 1 lands on the smallest odd representative -1
    bool tail_found = false;
    for (const Piece& p : delta.pieces())
        if (p.translate == LatticePoint({-1})) {
            tail_found = true;
            CHECK(p.region.contains({rat(15, 16)}));
        }
    CHECK(tail_found);

    // idempotent: completing a tile returns it unchanged
    MultiTileSet again = complete_to_tile(Q, c, 2);
    CHECK(again.pieces().size() == delta.pieces().size());
    CHECK(piecewise_contains(again, delta));
    CHECK(piecewise_contains(delta, again));
}

TEST_CASE("completion rejects invalid inputs") {
    FiberPartition P = fiber_partition(linear_tail_family(4));
    CHECK_THROWS_AS(complete_to_tile(P, cert1(2, 1), 2), CertificateInvalid);

    FiberPartition ok = fiber_partition(odd_tail_family(2));
    CHECK_THROWS_AS(complete_to_tile(ok, cert1(2, 1), 0), InputError);
    CHECK_THROWS_AS(complete_to_tile(ok, cert1(2, 1), 1), ClassTooLarge);
    // only even residues are reachable when the pairing gcd shares a factor with n
    FiberPartition single = fiber_partition(box_k_tile(1, integer_lattice(1)));
    CHECK_THROWS_AS(complete_to_tile(single, cert1(4, 2), 3), NotEnoughResidues);
}

TEST_CASE("a 3-complete of a single cell lays out three residues") {
    Lattice L = integer_lattice(1);
    FiberPartition P = fiber_partition(box_k_tile(1, L));
    AdmissibilityCertificate c = cert1(3, 1);
    MultiTileSet delta = complete_to_tile(P, c, 3);
    CHECK(delta.measure() == Rat(3));
    FiberPartition Q = fiber_partition(delta);
    CHECK(tiling_level(Q) == TilingLevel{TilingLevel::Kind::ExactTile, 3});
    REQUIRE(Q.classes.size() == 1);
    CHECK(residue_of_class(Q.classes[0].points, c) == std::vector<long>{0, 1, 2});
    BoundsReport rep = riesz_bounds(Q, build_offsets(L, c, 3));
    CHECK(rep.kind == BoundsKind::RieszBounds);
    CHECK(rep.A == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(rep.B == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("two-dimensional completion covers the uncovered half strip") {
    // Ω = left half of the unit square plus the full square shifted by e₂
    Lattice L = integer_lattice(2);
    UnitRegion half(2, {Box({rat(0), rat(0)}, {rat(1, 2), rat(1)})});
    MultiTileSet omega(L, {Piece{half, LatticePoint({0, 0})},
                           Piece{UnitRegion::cube(2), LatticePoint({0, 1})}});
    AdmissibilityCertificate c(2, DualVector({0, 1}));
    FiberPartition P = fiber_partition(omega);
    REQUIRE(check_certificate(P, c).valid);
    MultiTileSet delta = complete_to_tile(P, c, 2);
    CHECK(delta.measure() == Rat(2));
    CHECK(tiling_level(fiber_partition(delta)) ==
          TilingLevel{TilingLevel::Kind::ExactTile, 2});
    CHECK(piecewise_contains(delta, omega));
}

TEST_CASE("random subtiles complete to exact tiles with preserved certificates") {
    Rng rng(20260816);
    Lattice L = integer_lattice(1);
    AdmissibilityCertificate c = cert1(4, 1);
    for (int trial = 0; trial < 15; ++trial) {
        // random split points: cover [0, cut) twice and leave the rest deficient
        const long num = rng.range(1, 7);
        Rat cut = rat(num, 8);
        std::vector<Piece> pieces;
        pieces.push_back(Piece{UnitRegion::cube(1), LatticePoint({0})});
        pieces.push_back(Piece{UnitRegion(1, {Box({rat(0)}, {cut})}),
                               LatticePoint({rng.range(0, 1) ? 1 : -3})});
        MultiTileSet omega(L, pieces);
        FiberPartition P = fiber_partition(omega);
        REQUIRE(check_certificate(P, c).valid);
        const int k = 2 + static_cast<int>(rng.range(0, 2));
        MultiTileSet delta = complete_to_tile(P, c, k);
        FiberPartition Q = fiber_partition(delta);
        CHECK(tiling_level(Q) == TilingLevel{TilingLevel::Kind::ExactTile, k});
        CHECK(check_certificate(Q, c).valid);
        CHECK(delta.measure() == Rat(k));
        CHECK(piecewise_contains(delta, omega));
    }
}

}
