#pragma once

#include <cstdint>
#include <vector>

#include "exobasis/rational.hpp"

namespace exobasis {

/// A lattice point Mz, stored by its integer coordinate vector z.
struct LatticePoint {
    std::vector<std::int64_t> z;

    LatticePoint() = default;
    explicit LatticePoint(std::vector<std::int64_t> coords) : z(std::move(coords)) {}

    int dim() const { return static_cast<int>(z.size()); }
    bool operator==(const LatticePoint& o) const { return z == o.z; }
    bool operator!=(const LatticePoint& o) const { return z != o.z; }
    bool operator<(const LatticePoint& o) const { return z < o.z; }
};

/// A dual lattice vector (M^t)^{-1} w, stored by its integer coordinate vector w.
struct DualVector {
    std::vector<std::int64_t> w;

    DualVector() = default;
    explicit DualVector(std::vector<std::int64_t> coords) : w(std::move(coords)) {}

    int dim() const { return static_cast<int>(w.size()); }
    bool is_zero() const;
    bool operator==(const DualVector& o) const { return w == o.w; }
    bool operator<(const DualVector& o) const { return w < o.w; }
};

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RatMatrix transpose() const;
    /// Exact determinant by fraction-free elimination. Square matrices only.
    Rat det() const;
    /// Exact inverse by Gauss-Jordan. Throws SingularMatrix.
    RatMatrix inverse() const;

    std::vector<Rat> mul(const std::vector<Rat>& x) const;

    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

/// Full lattice Mℤ^d with exact rational basis matrix M.
///
/// The dual basis (M^t)^{-1} is precomputed so that dual vectors can be
/// embedded in ℝ^d; all residue arithmetic stays on the integer
/// coordinates and never touches these embeddings.
class Lattice {
public:
    Lattice(RatMatrix basis, Rat det_abs, RatMatrix dual_basis)
        : dim_(basis.rows()), basis_(std::move(basis)), det_abs_(std::move(det_abs)),
          dual_basis_(std::move(dual_basis)) {}

    int dim() const { return dim_; }
    const RatMatrix& basis() const { return basis_; }
    /// |det M|, the measure of the fundamental domain D = M[0,1)^d.
    const Rat& det_abs() const { return det_abs_; }
    /// (M^t)^{-1}; applied to integer coordinates w it gives the dual vector v.
    const RatMatrix& dual_basis() const { return dual_basis_; }

    bool operator==(const Lattice& o) const { return basis_ == o.basis_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

private:
    int dim_;
    RatMatrix basis_;
    Rat det_abs_;
    RatMatrix dual_basis_;
};

/// Builds a lattice from a square rational basis matrix.
/// Throws SingularMatrix when det = 0.
Lattice make_lattice(const RatMatrix& basis);

/// ⟨v, λ⟩ computed as w·z in exact integer arithmetic.
/// Equals the real inner product of (M^t)^{-1}w and Mz exactly.
std::int64_t dual_pairing(const DualVector& v, const LatticePoint& p);

/// ω = M(u + z) in floating point. Quadrature geometry only.
std::vector<double> embed_point(const Lattice& L, const std::vector<double>& u, const LatticePoint& z);

/// (M^t)^{-1} w in floating point.
std::vector<double> embed_dual(const Lattice& L, const DualVector& v);

/// Lattice basis as floating point, for embedding sample points.
std::vector<std::vector<double>> basis_d(const Lattice& L);

} // namespace exobasis
