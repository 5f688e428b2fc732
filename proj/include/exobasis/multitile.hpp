#pragma once

#include <map>
#include <vector>

#include "exobasis/lattice.hpp"
#include "exobasis/region.hpp"

namespace exobasis {

/// One translated chunk of Ω: region + z means M(region) + Mz ⊂ ℝ^d,
/// with the region given in lattice coordinates inside [0,1)^d.
struct Piece {
    UnitRegion region;
    LatticePoint translate;
};

/// A finite-measure set Ω described as finitely many pieces over the
/// fundamental domain. Pieces sharing a translate are merged on
/// construction, so the stored list has one piece per translate,
/// sorted by translate.
class MultiTileSet {
public:
    MultiTileSet(Lattice lattice, std::vector<Piece> pieces);

    const Lattice& lattice() const { return lattice_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    /// |Ω| = det_abs · Σ measure(region).
    Rat measure() const;

private:
    Lattice lattice_;
    std::vector<Piece> pieces_;
};

/// Level set of the fiber map: on `region`, the fiber Λ_ω is exactly
/// `points` (sorted, duplicate-free).
struct FiberClass {
    UnitRegion region;
    std::vector<LatticePoint> points;
};

struct FiberPartition {
    Lattice lattice;
    std::vector<FiberClass> classes; // pairwise disjoint, positive measure
    UnitRegion uncovered;            // where the fiber is empty
};

/// Partitions the fundamental domain by the fiber map ω ↦ Λ_ω.
/// Classes come out ordered by their lexicographically smallest box corner.
FiberPartition fiber_partition(const MultiTileSet& omega);

/// Measure carried by each multiplicity level. Level 0 (uncovered) appears
/// only when it has positive measure.
std::map<int, Rat> multiplicity_histogram(const FiberPartition& P);

struct TilingLevel {
    enum class Kind { ExactTile, SubTile, NotTile };
    Kind kind;
    int level;

    bool exact() const { return kind == Kind::ExactTile; }
    bool operator==(const TilingLevel& o) const { return kind == o.kind && level == o.level; }
};

/// ExactTile(k) when the whole domain sits at multiplicity k; otherwise
/// SubTile(ℓ) with ℓ the largest multiplicity of positive measure.
/// NotTile is reserved and never produced for finite descriptions.
TilingLevel tiling_level(const FiberPartition& P);

} // namespace exobasis
