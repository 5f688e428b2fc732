#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "exobasis/admissibility.hpp"
#include "exobasis/multitile.hpp"

namespace exobasis {

using Cplx = std::complex<double>;

/// Dense complex matrix, row-major.
struct CMatrix {
    int rows = 0, cols = 0;
    std::vector<Cplx> a;

    CMatrix() = default;
    CMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Cplx& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Cplx& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

/// Frequency offsets a_1..a_k over the dual lattice H. Structured systems
/// take a_j = (s_j/n)v from a certificate, so every fiber-matrix phase is a
/// root of unity computed from exact integer residues. Free systems carry
/// plain real offset vectors in ambient coordinates.
class ExponentialSystem {
public:
    ExponentialSystem(Lattice lattice, AdmissibilityCertificate cert, std::vector<long> s,
                      bool composite_warning);
    ExponentialSystem(Lattice lattice, std::vector<std::vector<double>> free_offsets);

    int k() const { return k_; }
    bool structured() const { return structured_; }
    const Lattice& lattice() const { return lattice_; }

    /// Structured systems only.
    const AdmissibilityCertificate& certificate() const;
    const std::vector<long>& indices() const;
    /// Set when indexed offsets were built over a composite modulus, where
    /// invertibility of full classes is not guaranteed in advance.
    bool composite_warning() const { return composite_warning_; }

    /// a_j in ambient coordinates.
    const std::vector<double>& offset(int j) const { return ambient_[j]; }

private:
    Lattice lattice_;
    bool structured_;
    int k_;
    std::vector<long> s_;
    std::vector<AdmissibilityCertificate> cert_; // empty or one element
    bool composite_warning_ = false;
    std::vector<std::vector<double>> ambient_;
};

/// a_j = ((j-1)/n)·v for j = 1..k. Throws KExceedsN when k > n, since the
/// invertibility argument needs k consecutive distinct residues.
ExponentialSystem build_offsets(const Lattice& L, const AdmissibilityCertificate& c, int k);

/// a_j = (s_j/n)·v with caller-chosen indices, pairwise distinct mod n.
/// For composite n the system is built with a warning flag; downstream
/// bounds computations decide invertibility numerically.
ExponentialSystem build_offsets_indexed(const Lattice& L, const AdmissibilityCertificate& c,
                                        const std::vector<long>& s);

ExponentialSystem free_system(const Lattice& L, std::vector<std::vector<double>> offsets);

/// The matrix E_R: rows follow the sorted order of R, columns the offset
/// index. Entry (l,j) = exp(2πi a_j·λ_l), computed from exact residues for
/// structured offsets.
struct FiberMatrix {
    std::vector<LatticePoint> class_points;
    CMatrix entries;
};

FiberMatrix fiber_matrix(const std::vector<LatticePoint>& R, const ExponentialSystem& sys);

/// Extremal eigenvalues of a Hermitian matrix: closed form up to 2x2, a
/// cyclic Jacobi sweep above that. Deterministic. Throws NotHermitian when
/// the asymmetry exceeds 1e-12.
std::pair<double, double> hermitian_eigen_range(const CMatrix& G);

/// Phases diag(exp(2πi a_j·ω)) at an ambient point ω; T_ω = E_R · this.
std::vector<Cplx> unitary_phases(const ExponentialSystem& sys, const std::vector<double>& omega);

enum class BoundsKind { RieszBounds, FrameBounds, Degenerate };

struct ClassBounds {
    std::vector<LatticePoint> points;
    std::vector<long> residues; // sorted [R] for structured systems, empty for free
    double eig_min = 0, eig_max = 0;
};

struct BoundsReport {
    double A = 0, B = 0;       // fiber constants (squared-norm convention)
    double A_L2 = 0, B_L2 = 0; // |D|·A, |D|·B
    BoundsKind kind = BoundsKind::FrameBounds;
    std::vector<ClassBounds> classes;
};

const char* bounds_kind_name(BoundsKind k);

/// Per-class eigen ranges of E_R E_R*. A/B are exact over each class since
/// the unitary factor U_ω drops out of the norms; no ω-discretization
/// happens. RieszBounds requires every class at full size k and no
/// uncovered region; positive-measure uncovered or deficient classes
/// downgrade to FrameBounds; any eigen_min below 1e-9 marks Degenerate.
/// Throws ClassTooLarge when a class exceeds k points.
BoundsReport riesz_bounds(const FiberPartition& P, const ExponentialSystem& sys);

} // namespace exobasis
