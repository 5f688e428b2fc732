#include "exobasis/admissibility.hpp"

#include <map>
#include <string>

#include "exobasis/errors.hpp"

namespace exobasis {

AdmissibilityCertificate::AdmissibilityCertificate(int n_, DualVector v_)
    : n(n_), v(std::move(v_)) {
    if (n < 1) throw CertificateInvalid("certificate modulus must be positive");
    if (n > 1 && v.is_zero())
        throw CertificateInvalid("certificate direction must be nonzero for n > 1");
}

long residue_mod(const DualVector& v, const LatticePoint& p, int n) {
    long r = static_cast<long>(dual_pairing(v, p) % n);
    return r < 0 ? r + n : r;
}

CheckResult check_certificate(const FiberPartition& P, const AdmissibilityCertificate& c) {
    if (c.v.dim() != P.lattice.dim())
        throw DimensionMismatch("certificate direction dimension differs from the lattice");
    CheckResult out{true, {}};
    for (const FiberClass& cls : P.classes) {
        std::map<long, int> first_seen;
        for (size_t i = 0; i < cls.points.size(); ++i) {
            long r = residue_mod(c.v, cls.points[i], c.n);
            auto [it, inserted] = first_seen.emplace(r, static_cast<int>(i));
            if (!inserted) {
                out.valid = false;
                out.violations.push_back(
                    Violation{cls.region, cls.points[it->second], cls.points[i], r});
                break; // one witness per class is enough
            }
        }
    }
    return out;
}

std::optional<AdmissibilityCertificate> search_certificate(const FiberPartition& P, int n_max,
                                                           int v_height) {
    if (n_max < 1 || v_height < 1) throw InputError("search bounds must be positive");
    const int d = P.lattice.dim();
    const int per_axis = 2 * v_height + 1;
    // index 0,1,2,3,4,… ↦ coordinate 0,1,-1,2,-2,…
    auto coord = [](int idx) -> std::int64_t {
        return idx % 2 ? (idx + 1) / 2 : -(idx / 2);
    };
    for (int n = 1; n <= n_max; ++n) {
        std::vector<int> odo(d, 0);
        while (true) {
            std::vector<std::int64_t> w(d);
            for (int i = 0; i < d; ++i) w[i] = coord(odo[i]);
            DualVector v(std::move(w));
            if (n == 1 || !v.is_zero()) {
                AdmissibilityCertificate cand(n, std::move(v));
                if (check_certificate(P, cand).valid) return cand;
            }
            int ax = d - 1;
            while (ax >= 0 && ++odo[ax] >= per_axis) odo[ax--] = 0;
            if (ax < 0) break;
        }
    }
    return std::nullopt;
}

FamilyResult certify_family(const std::function<MultiTileSet(int)>& gen,
                            const AdmissibilityCertificate& c, int J_max) {
    if (J_max < 1) throw InputError("family certification needs J_max >= 1");
    std::optional<MultiTileSet> prev;
    for (int J = 1; J <= J_max; ++J) {
        MultiTileSet cur = gen(J);
        if (prev) {
            if (cur.lattice() != prev->lattice())
                throw GeneratorInconsistent("lattice changed at truncation level " +
                                            std::to_string(J));
            std::map<LatticePoint, const UnitRegion*> current;
            for (const Piece& p : cur.pieces()) current[p.translate] = &p.region;
            for (const Piece& p : prev->pieces()) {
                auto it = current.find(p.translate);
                if (it == current.end() || !subtract(p.region, *it->second).empty())
                    throw GeneratorInconsistent("truncation level " + std::to_string(J) +
                                                " does not extend level " + std::to_string(J - 1));
            }
        }
        CheckResult res = check_certificate(fiber_partition(cur), c);
        if (!res.valid) return FamilyResult{false, J, std::move(res.violations.front())};
        prev = std::move(cur);
    }
    return FamilyResult{true, J_max, std::nullopt};
}

} // namespace exobasis
