#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "exobasis/completion.hpp"
#include "exobasis/gallery.hpp"
#include "exobasis/oracle.hpp"

using namespace exobasis;

namespace {

AdmissibilityCertificate cert1(int n, std::int64_t w) {
    return AdmissibilityCertificate(n, DualVector({w}));
}

PolyTerm term(int j, std::int64_t h, Cplx c) { return PolyTerm{j, DualVector({h}), c}; }

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("normalization merges duplicate keys and drops zeros") {
    PolySpec p;
    p.terms = {term(0, 1, {1, 0}), term(0, 1, {2, 0}), term(0, 0, {1, 0}),
               term(0, 0, {-1, 0})};
    PolySpec n = normalize_poly(p, 1, 1);
    REQUIRE(n.terms.size() == 1);
    CHECK(n.terms[0].h == DualVector({1}));
    CHECK(n.terms[0].c == Cplx(3, 0));
    CHECK(poly_l2(p, 1, 1) == doctest::Approx(9.0));

    PolySpec zero;
    zero.terms = {term(0, 2, {1, 0}), term(0, 2, {-1, 0})};
    CHECK_THROWS_AS(normalize_poly(zero, 1, 1), EmptyPoly);
    PolySpec bad;
    bad.terms = {term(3, 0, {1, 0})};
    CHECK_THROWS_AS(normalize_poly(bad, 2, 1), InputError);
    PolySpec wrongdim;
    wrongdim.terms = {PolyTerm{0, DualVector({1, 0}), Cplx(1, 0)}};
    CHECK_THROWS_AS(normalize_poly(wrongdim, 1, 1), DimensionMismatch);
}

TEST_CASE("the constant exponential integrates to the set measure") {
    MultiTileSet omega = odd_tail_family(2);
    ExponentialSystem sys = build_offsets(omega.lattice(), cert1(2, 1), 1);
    PolySpec p;
    p.terms = {term(0, 0, {1, 0})};
    QuadratureConfig q{8};
    // piece endpoints are dyadic, so the midpoint grid counts them exactly
    CHECK(poly_norm_direct(omega, sys, p, q) == doctest::Approx(1.75).epsilon(1e-12));
    CHECK(poly_norm_fiber(fiber_partition(omega), sys, p, q) ==
          doctest::Approx(1.75).epsilon(1e-12));
}

TEST_CASE("orthogonal frequencies split the norm") {
    MultiTileSet omega = box_k_tile(1, integer_lattice(1));
    ExponentialSystem sys = build_offsets(omega.lattice(), cert1(1, 0), 1);
    PolySpec p;
    p.terms = {term(0, 0, {1, 0}), term(0, 1, {1, 0})};
    CHECK(poly_norm_direct(omega, sys, p, QuadratureConfig{16}) ==
          doctest::Approx(2.0).epsilon(1e-12));
    // cross terms cancel exactly on the symmetric midpoint grid
    p.terms[1].c = Cplx(0, 3);
    CHECK(poly_norm_direct(omega, sys, p, QuadratureConfig{16}) ==
          doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("direct and fiber norms agree on a completed tile") {
    MultiTileSet omega = odd_tail_family(3);
    AdmissibilityCertificate c = cert1(2, 1);
    FiberPartition P = fiber_partition(omega);
    MultiTileSet delta = complete_to_tile(P, c, 2);
    FiberPartition Q = fiber_partition(delta);
    ExponentialSystem sys = build_offsets(delta.lattice(), c, 2);

    Rng rng(5150);
    QuadratureConfig q{32};
    for (int trial = 0; trial < 8; ++trial) {
        PolySpec p = random_poly(2, 1, 2, rng);
        const double direct = poly_norm_direct(delta, sys, p, q);
        const double fiber = poly_norm_fiber(Q, sys, p, q);
        CHECK(std::abs(direct - fiber) <= 1e-9 * std::abs(direct));
    }
}

TEST_CASE("the two routes also agree on strict subtiles") {
    MultiTileSet omega = odd_tail_family(2);
    FiberPartition P = fiber_partition(omega);
    ExponentialSystem sys = build_offsets(omega.lattice(), cert1(2, 1), 2);
    Rng rng(31337);
    QuadratureConfig q{32};
    for (int trial = 0; trial < 5; ++trial) {
        PolySpec p = random_poly(2, 1, 1, rng);
        const double direct = poly_norm_direct(omega, sys, p, q);
        const double fiber = poly_norm_fiber(P, sys, p, q);
        CHECK(std::abs(direct - fiber) <= 1e-9 * std::abs(direct));
    }
}

TEST_CASE("single-offset quotients are parseval") {
    MultiTileSet omega = box_k_tile(1, integer_lattice(1));
    FiberPartition P = fiber_partition(omega);
    ExponentialSystem sys = build_offsets(omega.lattice(), cert1(1, 0), 1);
    BoundsReport rep = riesz_bounds(P, sys);
    CHECK(rep.A == doctest::Approx(1.0));
    TrialSummary s = frame_inequality_trial(P, sys, rep, 10, 2024, QuadratureConfig{64});
    for (double v : s.quotients) CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("full residue quotients sit on the tight constant") {
    Lattice L = integer_lattice(1);
    FiberPartition P = fiber_partition(box_k_tile(2, L));
    ExponentialSystem sys = build_offsets(L, cert1(2, 1), 2);
    BoundsReport rep = riesz_bounds(P, sys);
    TrialSummary s = frame_inequality_trial(P, sys, rep, 10, 7, QuadratureConfig{64});
    CHECK(s.min_quotient == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(s.max_quotient == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("spread systems keep quotients inside the reported bounds") {
    Lattice L = integer_lattice(1);
    FiberPartition P = fiber_partition(box_k_tile(2, L));
    ExponentialSystem sys = build_offsets(L, cert1(3, 1), 2);
    BoundsReport rep = riesz_bounds(P, sys);
    TrialSummary s = frame_inequality_trial(P, sys, rep, 40, 90210, QuadratureConfig{64});
    CHECK(s.min_quotient >= rep.A - 1e-6 * rep.B);
    CHECK(s.max_quotient <= rep.B + 1e-6 * rep.B);
    // the quotients genuinely move between the extremes
    CHECK(s.max_quotient - s.min_quotient > 0.1);
}

TEST_CASE("gram of a single unit frequency is the set measure") {
    MultiTileSet omega = box_k_tile(1, integer_lattice(1));
    ExponentialSystem sys = build_offsets(omega.lattice(), cert1(1, 0), 1);
    auto [lo, hi] = gram_section(omega, sys, {{0, DualVector({0})}}, QuadratureConfig{64});
    CHECK(lo == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hi == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(gram_section(omega, sys, {}, QuadratureConfig{64}), WindowEmpty);
    CHECK_THROWS_AS(gram_section(omega, sys, {{2, DualVector({0})}}, QuadratureConfig{64}),
                    InputError);
}

TEST_CASE("characters are orthonormal over the fundamental domain") {
    MultiTileSet omega = box_k_tile(1, integer_lattice(1));
    ExponentialSystem sys = build_offsets(omega.lattice(), cert1(1, 0), 1);
    std::vector<std::pair<int, DualVector>> window;
    for (std::int64_t h = -5; h <= 5; ++h) window.push_back({0, DualVector({h})});
    auto [lo, hi] = gram_section(omega, sys, window, QuadratureConfig{64});
    CHECK(lo == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(hi == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("gram eigenvalues of a completed tile match the function-space bounds") {
    MultiTileSet omega = odd_tail_family(2);
    AdmissibilityCertificate c = cert1(2, 1);
    MultiTileSet delta = complete_to_tile(fiber_partition(omega), c, 2);
    ExponentialSystem sys = build_offsets(delta.lattice(), c, 2);
    BoundsReport rep = riesz_bounds(fiber_partition(delta), sys);
    REQUIRE(rep.kind == BoundsKind::RieszBounds);

    std::vector<std::pair<int, DualVector>> window;
    for (int j = 0; j < 2; ++j)
        for (std::int64_t h = 0; h <= 2; ++h) window.push_back({j, DualVector({h})});
    auto [lo, hi] = gram_section(delta, sys, window, QuadratureConfig{256});
    CHECK(lo >= rep.A_L2 - 1e-2);
    CHECK(hi <= rep.B_L2 + 1e-2);
    CHECK(lo == doctest::Approx(rep.A_L2).epsilon(1e-2));
    CHECK(hi == doctest::Approx(rep.B_L2).epsilon(1e-2));
}

TEST_CASE("phase search returns the smallest workable translate") {
    // the zero translate hits a zero target immediately
    auto m0 = kronecker_search({1.4142135623730951, 1.7320508075688772}, 1, {0.0, 0.0},
                               0.3, 1000);
    REQUIRE(m0);
    CHECK(*m0 == 0);

    const std::array<double, 2> a{1.4142135623730951, 1.7320508075688772};
    const std::array<double, 2> beta{0.25, 0.75};
    auto m = kronecker_search(a, 2, beta, 0.4, 200000);
    REQUIRE(m);
    auto dist = [&](long mm) {
        double s = 0;
        for (int i = 0; i < 2; ++i) {
            const double d =
                6.283185307179586 * (a[i] * 2 * static_cast<double>(mm) - beta[i]);
            s += 2.0 - 2.0 * std::cos(d);
        }
        return std::sqrt(s);
    };
    CHECK(dist(*m) < 0.4);
    // every strictly smaller magnitude fails on both signs
    for (long mm = 0; mm < std::labs(*m); ++mm) {
        CHECK(dist(mm) >= 0.4);
        if (mm > 0) CHECK(dist(-mm) >= 0.4);
    }
    if (*m < 0) CHECK(dist(-*m) >= 0.4); // a negative result means its mirror failed first

    CHECK(!kronecker_search(a, 1, beta, 1e-9, 10));
    CHECK_THROWS_AS(kronecker_search(a, 1, beta, 0.0, 10), InputError);
    CHECK_THROWS_AS(kronecker_search(a, 1, beta, 0.1, -1), InputError);
}

TEST_CASE("random phase targets verify when the search succeeds") {
    Rng rng(60601);
    const std::array<double, 2> a{1.4142135623730951, 1.7320508075688772};
    int hits = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const std::array<double, 2> beta{rng.uniform(), rng.uniform()};
        const int j = 1 + static_cast<int>(rng.range(0, 3));
        auto m = kronecker_search(a, j, beta, 0.35, 500000);
        if (!m) continue;
        ++hits;
        double s = 0;
        for (int i = 0; i < 2; ++i) {
            const double d =
                6.283185307179586 * (a[i] * j * static_cast<double>(*m) - beta[i]);
            s += 2.0 - 2.0 * std::cos(d);
        }
        CHECK(std::sqrt(s) < 0.35);
    }
    CHECK(hits == 10); // dense orbits reach every target at this tolerance
}

}
