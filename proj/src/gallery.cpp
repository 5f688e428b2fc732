#include "exobasis/gallery.hpp"

#include <cstdint>
#include <functional>
#include <string>

#include "exobasis/errors.hpp"
#include "exobasis/oracle.hpp"

namespace exobasis {

namespace {

Rat pow2_inv(int j) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(j));
    return Rat(1) / Rat(den);
}

MultiTileSet tail_family(int J, const std::function<std::int64_t(int)>& translate) {
    if (J < 0) throw InputError("truncation level must be nonnegative");
    Lattice L = integer_lattice(1);
    std::vector<Piece> pieces;
    pieces.push_back(Piece{UnitRegion::cube(1), LatticePoint({0})});
    for (int j = 1; j <= J; ++j)
        pieces.push_back(Piece{UnitRegion(1, {Box({dyadic_lo(j)}, {dyadic_hi(j)})}),
                               LatticePoint({translate(j)})});
    return MultiTileSet(std::move(L), std::move(pieces));
}

} // namespace

Lattice integer_lattice(int d) { return make_lattice(RatMatrix::identity(d)); }

Rat dyadic_lo(int j) { return 1 - 2 * pow2_inv(j); }
Rat dyadic_hi(int j) { return 1 - pow2_inv(j); }

MultiTileSet linear_tail_family(int J) {
    if (J < 1) throw InputError("truncation level must be positive");
    return tail_family(J, [](int j) { return static_cast<std::int64_t>(j); });
}

MultiTileSet odd_tail_family(int J) {
    if (J < 1) throw InputError("truncation level must be positive");
    return tail_family(J, [](int j) { return static_cast<std::int64_t>(2) * j + 1; });
}

MultiTileSet kronecker_tail_family(int J, double a1, double a2, double beta1, double beta2,
                                   double eps, long m_max) {
    return tail_family(J, [&](int j) {
        auto m = kronecker_search({a1, a2}, j, {beta1, beta2}, eps, m_max);
        if (!m)
            throw KroneckerSearchFailed(j, "no translate within " + std::to_string(m_max) +
                                               " approximates the target phases at level " +
                                               std::to_string(j));
        return static_cast<std::int64_t>(j) * *m;
    });
}

MultiTileSet box_k_tile(int k, const Lattice& L) {
    if (k < 1) throw InputError("tiling level must be positive");
    std::vector<Piece> pieces;
    for (int j = 0; j < k; ++j) {
        std::vector<std::int64_t> z(L.dim(), 0);
        z[0] = j;
        pieces.push_back(Piece{UnitRegion::cube(L.dim()), LatticePoint(std::move(z))});
    }
    return MultiTileSet(L, std::move(pieces));
}

} // namespace exobasis
