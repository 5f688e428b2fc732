#pragma once

#include <vector>

#include "exobasis/rational.hpp"

namespace exobasis {

/// Half-open axis-aligned box Π [lo_i, hi_i) with rational corners.
struct Box {
    std::vector<Rat> lo, hi;

    Box() = default;
    Box(std::vector<Rat> l, std::vector<Rat> h) : lo(std::move(l)), hi(std::move(h)) {}

    int dim() const { return static_cast<int>(lo.size()); }
    Rat volume() const;
    bool contains(const std::vector<Rat>& u) const;
    bool operator==(const Box& o) const { return lo == o.lo && hi == o.hi; }
};

/// Finite union of disjoint half-open boxes inside [0,1)^d.
///
/// Construction normalizes: boxes are split along the grid of all input
/// coordinates per axis, deduplicated, merged back axis by axis and sorted
/// lexicographically by lo. Overlapping input boxes are therefore fine.
class UnitRegion {
public:
    explicit UnitRegion(int dim) : dim_(dim) {}
    UnitRegion(int dim, std::vector<Box> boxes);

    static UnitRegion cube(int dim);

    int dim() const { return dim_; }
    const std::vector<Box>& boxes() const { return boxes_; }
    bool empty() const { return boxes_.empty(); }

    Rat measure() const;
    bool contains(const std::vector<Rat>& u) const;

    /// Exact set equality (canonical forms can differ for equal sets).
    bool same_set(const UnitRegion& other) const;

private:
    int dim_ = 0;
    std::vector<Box> boxes_;
};

UnitRegion unite(const UnitRegion& a, const UnitRegion& b);
UnitRegion intersect(const UnitRegion& a, const UnitRegion& b);
UnitRegion subtract(const UnitRegion& a, const UnitRegion& b);
inline Rat measure(const UnitRegion& a) { return a.measure(); }

/// One atom of the Boolean algebra generated by the refine() inputs,
/// together with the indices of the inputs that contain it.
struct RefinedAtom {
    UnitRegion region;
    std::vector<int> members;
};

/// Atoms of the Boolean algebra generated by the inputs: pairwise disjoint,
/// every input is a union of atoms, atoms of measure zero do not occur.
/// Atoms are ordered by the lexicographically smallest box they contain.
std::vector<UnitRegion> refine(const std::vector<UnitRegion>& parts);

/// refine() plus membership signatures; the part of [0,1)^d covered by no
/// input is not reported.
std::vector<RefinedAtom> refine_with_members(const std::vector<UnitRegion>& parts);

} // namespace exobasis
