#include "exobasis/completion.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "exobasis/errors.hpp"

namespace exobasis {

ResidueClassIndex residue_class_index(const AdmissibilityCertificate& c) {
    long g = 0;
    for (std::int64_t wi : c.v.w) g = std::gcd(g, static_cast<long>(wi < 0 ? -wi : wi));
    const long step = std::gcd(g, static_cast<long>(c.n)); // g = 0 gives step = n, image {0}
    ResidueClassIndex idx{c.n, {}};
    for (long r = 0; r < c.n; r += step) idx.achievable.push_back(r);
    return idx;
}

std::vector<long> residue_of_class(const std::vector<LatticePoint>& R,
                                   const AdmissibilityCertificate& c) {
    std::set<long> rs;
    for (const LatticePoint& p : R) rs.insert(residue_mod(c.v, p, c.n));
    return std::vector<long>(rs.begin(), rs.end());
}

LatticePoint representative(long r, const AdmissibilityCertificate& c, const Lattice& L,
                            const std::vector<LatticePoint>& forbidden) {
    if (c.v.dim() != L.dim())
        throw DimensionMismatch("certificate dimension differs from the lattice");
    ResidueClassIndex idx = residue_class_index(c);
    if (!std::binary_search(idx.achievable.begin(), idx.achievable.end(),
                            ((r % c.n) + c.n) % c.n))
        throw Unachievable("residue " + std::to_string(r) + " is outside the pairing image mod " +
                           std::to_string(c.n));
    const long target = ((r % c.n) + c.n) % c.n;
    const int d = L.dim();
    std::set<LatticePoint> banned(forbidden.begin(), forbidden.end());
    // a solution exists within max-norm n; forbidden points push the shell
    // out by at most n each since translating any coordinate by n preserves
    // the residue
    const long h_cap = static_cast<long>(c.n) * (static_cast<long>(banned.size()) + 2);
    for (long h = 0; h <= h_cap; ++h) {
        std::vector<std::int64_t> z(d, -h);
        while (true) {
            bool on_shell = false;
            for (int i = 0; i < d; ++i)
                if (z[i] == h || z[i] == -h) { on_shell = true; break; }
            if (on_shell || h == 0) {
                LatticePoint p(z);
                if (residue_mod(c.v, p, c.n) == target && !banned.count(p)) return p;
            }
            int ax = d - 1;
            while (ax >= 0 && ++z[ax] > h) z[ax--] = -h;
            if (ax < 0) break;
        }
    }
    throw Unachievable("no representative found for residue " + std::to_string(r));
}

MultiTileSet complete_to_tile(const FiberPartition& P, const AdmissibilityCertificate& c, int k) {
    if (k < 1) throw InputError("target tiling level must be positive");
    CheckResult chk = check_certificate(P, c);
    if (!chk.valid)
        throw CertificateInvalid("certificate fails on the input partition; completion needs a valid one");
    for (const FiberClass& cls : P.classes)
        if (static_cast<int>(cls.points.size()) > k)
            throw ClassTooLarge("fiber class of size " + std::to_string(cls.points.size()) +
                                " exceeds the target level k = " + std::to_string(k));
    ResidueClassIndex idx = residue_class_index(c);
    if (static_cast<int>(idx.achievable.size()) < k)
        throw NotEnoughResidues("only " + std::to_string(idx.achievable.size()) +
                                " residues achievable mod " + std::to_string(c.n) +
                                ", need k = " + std::to_string(k) + "; enlarge n");

    std::vector<std::pair<UnitRegion, std::vector<LatticePoint>>> work;
    for (const FiberClass& cls : P.classes) work.emplace_back(cls.region, cls.points);
    if (!P.uncovered.empty()) work.emplace_back(P.uncovered, std::vector<LatticePoint>{});

    std::vector<Piece> pieces;
    for (auto& [region, points] : work) {
        std::vector<long> have = residue_of_class(points, c);
        std::vector<LatticePoint> current = points;
        for (long r : idx.achievable) {
            if (static_cast<int>(current.size()) >= k) break;
            if (std::binary_search(have.begin(), have.end(), r)) continue;
            current.push_back(representative(r, c, P.lattice, current));
        }
        for (const LatticePoint& z : current) pieces.push_back(Piece{region, z});
    }
    return MultiTileSet(P.lattice, std::move(pieces));
}

} // namespace exobasis
