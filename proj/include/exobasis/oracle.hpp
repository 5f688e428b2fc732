#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "exobasis/basis.hpp"
#include "exobasis/multitile.hpp"
#include "exobasis/rng.hpp"

namespace exobasis {

/// One coefficient of P(ω) = Σ c_{j,h} exp(2πi (a_j + h)·ω); j is the
/// 0-based offset index, h a dual vector by integer coordinates.
struct PolyTerm {
    int j;
    DualVector h;
    Cplx c;
};

struct PolySpec {
    std::vector<PolyTerm> terms;
};

/// Midpoint rule with m sample points per unit of axis length.
struct QuadratureConfig {
    int m = 64;
};

/// Merges duplicate (j,h) keys and drops zero coefficients.
/// Throws EmptyPoly when nothing remains, InputError on a bad offset index.
PolySpec normalize_poly(const PolySpec& p, int k, int dim);

/// Σ|c|² of the normalized spec.
double poly_l2(const PolySpec& p, int k, int dim);

/// ∫_Ω |P|² by midpoint quadrature directly over the embedded pieces.
/// Evaluates ambient exponentials only; shares nothing with the fiber
/// factorization except the sample grid, so the two routes cross-check
/// each other.
double poly_norm_direct(const MultiTileSet& omega, const ExponentialSystem& sys,
                        const PolySpec& p, const QuadratureConfig& q);

/// Same integral through the fiber formula: ∫_D ‖T_ω m(ω)‖² with
/// m_j(ω) = Σ_h c_{j,h} e_h(ω) and T_ω = E_R · diag(phases).
double poly_norm_fiber(const FiberPartition& P, const ExponentialSystem& sys, const PolySpec& p,
                       const QuadratureConfig& q);

/// Dense random spec: complex Gaussian coefficients on the full window
/// j ∈ [0,k), ‖h‖_∞ ≤ h_height.
PolySpec random_poly(int k, int dim, int h_height, Rng& rng);

struct TrialSummary {
    double min_quotient = 0, max_quotient = 0;
    std::vector<double> quotients;
};

/// Rayleigh quotients poly_norm_fiber / (|D|·Σ|c|²) for seeded random
/// specs; for a valid report they land in [A, B] up to quadrature rounding.
TrialSummary frame_inequality_trial(const FiberPartition& P, const ExponentialSystem& sys,
                                    const BoundsReport& report, int trials, std::uint64_t seed,
                                    const QuadratureConfig& q);

/// Eigen range of the Gram matrix of the finite subfamily indexed by
/// `window`, integrated over Ω with per-box scaled midpoints. For a Riesz
/// system the range sits inside [|D|·A, |D|·B] up to quadrature error.
std::pair<double, double> gram_section(const MultiTileSet& omega, const ExponentialSystem& sys,
                                       const std::vector<std::pair<int, DualVector>>& window,
                                       const QuadratureConfig& q);

/// Smallest |m| ≤ m_max (positive preferred on ties) with
/// ‖(e^{2πi a₁ j m}, e^{2πi a₂ j m}) − (e^{2πi β₁}, e^{2πi β₂})‖₂ < ε.
std::optional<long> kronecker_search(const std::array<double, 2>& a, int j,
                                     const std::array<double, 2>& beta, double eps, long m_max);

} // namespace exobasis
