#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "exobasis/multitile.hpp"

namespace exobasis {

/// Certificate (n, v): on every fiber the residues ⟨v,λ⟩ mod n must be
/// pairwise distinct. v may be zero only for n = 1.
struct AdmissibilityCertificate {
    int n;
    DualVector v;

    AdmissibilityCertificate(int n_, DualVector v_);
};

/// A concrete distinctness failure: two fiber points of one class with the
/// same residue. Independently checkable via dual_pairing.
struct Violation {
    UnitRegion class_region;
    LatticePoint p1, p2;
    long residue; // shared value in [0, n)
};

struct CheckResult {
    bool valid;
    std::vector<Violation> violations; // first colliding pair of each bad class
};

/// ⟨v,λ⟩ mod n reduced into [0, n).
long residue_mod(const DualVector& v, const LatticePoint& p, int n);

CheckResult check_certificate(const FiberPartition& P, const AdmissibilityCertificate& c);

/// Scans n = 1…n_max; for each n, integer coordinate vectors w with
/// max-norm ≤ v_height in balanced order (each coordinate runs
/// 0, 1, -1, 2, -2, …, last coordinate fastest), skipping w = 0 unless
/// n = 1. Returns the first valid certificate, or none.
std::optional<AdmissibilityCertificate> search_certificate(const FiberPartition& P, int n_max,
                                                           int v_height);

struct FamilyResult {
    bool passed;
    int level; // J_max when passed, else the first failing level
    std::optional<Violation> violation;
};

/// Checks c on gen(1), gen(2), …, gen(J_max). Each level must extend the
/// previous one piecewise (same lattice, regions only grow); otherwise
/// GeneratorInconsistent.
FamilyResult certify_family(const std::function<MultiTileSet(int)>& gen,
                            const AdmissibilityCertificate& c, int J_max);

} // namespace exobasis
