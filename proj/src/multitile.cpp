#include "exobasis/multitile.hpp"

#include <algorithm>

#include "exobasis/errors.hpp"

namespace exobasis {

MultiTileSet::MultiTileSet(Lattice lattice, std::vector<Piece> pieces)
    : lattice_(std::move(lattice)) {
    std::map<LatticePoint, UnitRegion> by_translate;
    for (Piece& p : pieces) {
        if (p.translate.dim() != lattice_.dim() || p.region.dim() != lattice_.dim())
            throw DimensionMismatch("piece dimension differs from the lattice");
        if (p.region.empty()) throw InputError("piece with empty region");
        auto it = by_translate.find(p.translate);
        if (it == by_translate.end())
            by_translate.emplace(p.translate, std::move(p.region));
        else
            it->second = unite(it->second, p.region);
    }
    pieces_.reserve(by_translate.size());
    for (auto& [z, region] : by_translate)
        pieces_.push_back(Piece{std::move(region), z});
}

Rat MultiTileSet::measure() const {
    Rat sum = 0;
    for (const Piece& p : pieces_) sum += p.region.measure();
    return sum * lattice_.det_abs();
}

FiberPartition fiber_partition(const MultiTileSet& omega) {
    const int d = omega.lattice().dim();
    std::vector<UnitRegion> parts;
    parts.reserve(omega.pieces().size());
    for (const Piece& p : omega.pieces()) parts.push_back(p.region);

    std::vector<FiberClass> classes;
    std::vector<Box> covered_boxes;
    for (RefinedAtom& atom : refine_with_members(parts)) {
        std::vector<LatticePoint> points;
        points.reserve(atom.members.size());
        for (int i : atom.members) points.push_back(omega.pieces()[i].translate);
        std::sort(points.begin(), points.end());
        covered_boxes.insert(covered_boxes.end(), atom.region.boxes().begin(),
                             atom.region.boxes().end());
        classes.push_back(FiberClass{std::move(atom.region), std::move(points)});
    }
    UnitRegion uncovered = subtract(UnitRegion::cube(d), UnitRegion(d, std::move(covered_boxes)));
    return FiberPartition{omega.lattice(), std::move(classes), std::move(uncovered)};
}

std::map<int, Rat> multiplicity_histogram(const FiberPartition& P) {
    std::map<int, Rat> hist;
    for (const FiberClass& c : P.classes)
        hist[static_cast<int>(c.points.size())] += c.region.measure();
    if (!P.uncovered.empty()) hist[0] += P.uncovered.measure();
    for (auto it = hist.begin(); it != hist.end();)
        it = it->second == 0 ? hist.erase(it) : std::next(it);
    return hist;
}

TilingLevel tiling_level(const FiberPartition& P) {
    std::map<int, Rat> hist = multiplicity_histogram(P);
    if (hist.size() == 1 && hist.begin()->first >= 1 && hist.begin()->second == 1)
        return TilingLevel{TilingLevel::Kind::ExactTile, hist.begin()->first};
    int level = hist.empty() ? 0 : hist.rbegin()->first;
    return TilingLevel{TilingLevel::Kind::SubTile, level};
}

} // namespace exobasis
