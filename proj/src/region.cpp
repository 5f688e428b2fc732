#include "exobasis/region.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "exobasis/errors.hpp"

namespace exobasis {

namespace {

void validate_box(int dim, const Box& b) {
    if (b.dim() != dim || static_cast<int>(b.hi.size()) != dim)
        throw DimensionMismatch("box dimension mismatch");
    for (int i = 0; i < dim; ++i) {
        if (b.lo[i] >= b.hi[i]) throw MalformedBox("box with lo >= hi");
        if (b.lo[i] < 0 || b.hi[i] > 1) throw MalformedBox("box outside the unit cube");
    }
}

using Grid = std::vector<std::vector<Rat>>; // per axis, sorted unique coordinates
using Cell = std::vector<int>;              // per axis, slice index into the grid

Grid build_grid(int dim, const std::vector<const std::vector<Box>*>& groups) {
    Grid grid(dim);
    for (const auto* boxes : groups)
        for (const Box& b : *boxes)
            for (int ax = 0; ax < dim; ++ax) {
                grid[ax].push_back(b.lo[ax]);
                grid[ax].push_back(b.hi[ax]);
            }
    for (auto& axis : grid) {
        std::sort(axis.begin(), axis.end());
        axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    }
    return grid;
}

int grid_index(const std::vector<Rat>& axis, const Rat& value) {
    return static_cast<int>(std::lower_bound(axis.begin(), axis.end(), value) - axis.begin());
}

void split_box(const Grid& grid, const Box& b, std::set<Cell>& out) {
    const int dim = b.dim();
    Cell lo(dim), hi(dim);
    for (int ax = 0; ax < dim; ++ax) {
        lo[ax] = grid_index(grid[ax], b.lo[ax]);
        hi[ax] = grid_index(grid[ax], b.hi[ax]);
    }
    Cell cur = lo;
    while (true) {
        out.insert(cur);
        int ax = dim - 1;
        while (ax >= 0) {
            if (++cur[ax] < hi[ax]) break;
            cur[ax] = lo[ax];
            --ax;
        }
        if (ax < 0) break;
    }
}

std::set<Cell> split_all(const Grid& grid, const std::vector<Box>& boxes) {
    std::set<Cell> cells;
    for (const Box& b : boxes) split_box(grid, b, cells);
    return cells;
}

// Merge adjacent boxes along one axis when they agree on every other
// coordinate. Returns true when something merged.
bool merge_pass(std::vector<Box>& boxes, int axis) {
    if (boxes.size() < 2) return false;
    std::sort(boxes.begin(), boxes.end(), [axis](const Box& a, const Box& b) {
        const int d = a.dim();
        for (int i = 0; i < d; ++i) {
            if (i == axis) continue;
            if (a.lo[i] != b.lo[i]) return a.lo[i] < b.lo[i];
            if (a.hi[i] != b.hi[i]) return a.hi[i] < b.hi[i];
        }
        return a.lo[axis] < b.lo[axis];
    });
    std::vector<Box> merged;
    merged.reserve(boxes.size());
    bool changed = false;
    for (Box& b : boxes) {
        if (!merged.empty()) {
            Box& prev = merged.back();
            bool same_profile = true;
            for (int i = 0; i < b.dim() && same_profile; ++i) {
                if (i == axis) continue;
                same_profile = prev.lo[i] == b.lo[i] && prev.hi[i] == b.hi[i];
            }
            if (same_profile && prev.hi[axis] == b.lo[axis]) {
                prev.hi[axis] = b.hi[axis];
                changed = true;
                continue;
            }
        }
        merged.push_back(std::move(b));
    }
    boxes = std::move(merged);
    return changed;
}

std::vector<Box> cells_to_boxes(const Grid& grid, const std::set<Cell>& cells) {
    const int dim = static_cast<int>(grid.size());
    std::vector<Box> boxes;
    boxes.reserve(cells.size());
    for (const Cell& c : cells) {
        Box b;
        b.lo.resize(dim);
        b.hi.resize(dim);
        for (int ax = 0; ax < dim; ++ax) {
            b.lo[ax] = grid[ax][c[ax]];
            b.hi[ax] = grid[ax][c[ax] + 1];
        }
        boxes.push_back(std::move(b));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int ax = dim - 1; ax >= 0; --ax)
            if (merge_pass(boxes, ax)) changed = true;
    }
    std::sort(boxes.begin(), boxes.end(),
              [](const Box& a, const Box& b) { return a.lo < b.lo; });
    return boxes;
}

void require_same_dim(const UnitRegion& a, const UnitRegion& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("region dimension mismatch");
}

} // namespace

Rat Box::volume() const {
    Rat v = 1;
    for (int i = 0; i < dim(); ++i) v *= hi[i] - lo[i];
    return v;
}

bool Box::contains(const std::vector<Rat>& u) const {
    for (int i = 0; i < dim(); ++i)
        if (u[i] < lo[i] || u[i] >= hi[i]) return false;
    return true;
}

UnitRegion::UnitRegion(int dim, std::vector<Box> boxes) : dim_(dim) {
    if (dim < 1) throw DimensionMismatch("region dimension must be positive");
    for (const Box& b : boxes) validate_box(dim, b);
    if (boxes.empty()) return;
    Grid grid = build_grid(dim, {&boxes});
    boxes_ = cells_to_boxes(grid, split_all(grid, boxes));
}

UnitRegion UnitRegion::cube(int dim) {
    Box b(std::vector<Rat>(dim, Rat(0)), std::vector<Rat>(dim, Rat(1)));
    return UnitRegion(dim, {std::move(b)});
}

Rat UnitRegion::measure() const {
    Rat total = 0;
    for (const Box& b : boxes_) total += b.volume();
    return total;
}

bool UnitRegion::contains(const std::vector<Rat>& u) const {
    if (static_cast<int>(u.size()) != dim_) throw DimensionMismatch("point dimension mismatch");
    for (const Box& b : boxes_)
        if (b.contains(u)) return true;
    return false;
}

bool UnitRegion::same_set(const UnitRegion& other) const {
    return subtract(*this, other).empty() && subtract(other, *this).empty();
}

UnitRegion unite(const UnitRegion& a, const UnitRegion& b) {
    require_same_dim(a, b);
    std::vector<Box> all = a.boxes();
    all.insert(all.end(), b.boxes().begin(), b.boxes().end());
    return UnitRegion(a.dim(), std::move(all));
}

UnitRegion intersect(const UnitRegion& a, const UnitRegion& b) {
    require_same_dim(a, b);
    Grid grid = build_grid(a.dim(), {&a.boxes(), &b.boxes()});
    std::set<Cell> ca = split_all(grid, a.boxes());
    std::set<Cell> cb = split_all(grid, b.boxes());
    std::set<Cell> both;
    for (const Cell& c : ca)
        if (cb.count(c)) both.insert(c);
    std::vector<Box> boxes = cells_to_boxes(grid, both);
    return boxes.empty() ? UnitRegion(a.dim()) : UnitRegion(a.dim(), std::move(boxes));
}

UnitRegion subtract(const UnitRegion& a, const UnitRegion& b) {
    require_same_dim(a, b);
    Grid grid = build_grid(a.dim(), {&a.boxes(), &b.boxes()});
    std::set<Cell> ca = split_all(grid, a.boxes());
    std::set<Cell> cb = split_all(grid, b.boxes());
    std::set<Cell> rest;
    for (const Cell& c : ca)
        if (!cb.count(c)) rest.insert(c);
    std::vector<Box> boxes = cells_to_boxes(grid, rest);
    return boxes.empty() ? UnitRegion(a.dim()) : UnitRegion(a.dim(), std::move(boxes));
}

std::vector<RefinedAtom> refine_with_members(const std::vector<UnitRegion>& parts) {
    if (parts.empty()) return {};
    const int dim = parts.front().dim();
    std::vector<const std::vector<Box>*> groups;
    for (const UnitRegion& p : parts) {
        if (p.dim() != dim) throw DimensionMismatch("refine inputs of mixed dimension");
        groups.push_back(&p.boxes());
    }
    Grid grid = build_grid(dim, groups);
    std::vector<std::set<Cell>> cell_sets;
    cell_sets.reserve(parts.size());
    for (const UnitRegion& p : parts) cell_sets.push_back(split_all(grid, p.boxes()));

    // Group every covered cell by the set of inputs containing it.
    std::map<std::vector<int>, std::set<Cell>> by_signature;
    std::set<Cell> universe;
    for (const auto& cs : cell_sets) universe.insert(cs.begin(), cs.end());
    for (const Cell& c : universe) {
        std::vector<int> sig;
        for (size_t i = 0; i < cell_sets.size(); ++i)
            if (cell_sets[i].count(c)) sig.push_back(static_cast<int>(i));
        by_signature[sig].insert(c);
    }

    std::vector<RefinedAtom> atoms;
    atoms.reserve(by_signature.size());
    for (auto& [sig, cells] : by_signature) {
        std::vector<Box> boxes = cells_to_boxes(grid, cells);
        atoms.push_back(RefinedAtom{UnitRegion(dim, std::move(boxes)), sig});
    }
    std::sort(atoms.begin(), atoms.end(), [](const RefinedAtom& a, const RefinedAtom& b) {
        return a.region.boxes().front().lo < b.region.boxes().front().lo;
    });
    return atoms;
}

std::vector<UnitRegion> refine(const std::vector<UnitRegion>& parts) {
    std::vector<UnitRegion> out;
    for (auto& atom : refine_with_members(parts)) out.push_back(std::move(atom.region));
    return out;
}

} // namespace exobasis
