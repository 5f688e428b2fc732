#include "exobasis/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "exobasis/errors.hpp"

namespace exobasis {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double pairwise_sum(const double* x, size_t n) {
    if (n <= 8) {
        double s = 0;
        for (size_t i = 0; i < n; ++i) s += x[i];
        return s;
    }
    const size_t h = n / 2;
    return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

double pairwise_sum(const std::vector<double>& xs) {
    return xs.empty() ? 0.0 : pairwise_sum(xs.data(), xs.size());
}

// midpoints (2i+1)/(2m) per axis, full cube, lexicographic order
std::vector<std::vector<Rat>> unit_grid(int dim, int m) {
    std::vector<Rat> axis(m);
    for (int i = 0; i < m; ++i) axis[i] = rat(2L * i + 1, 2L * m);
    std::vector<std::vector<Rat>> pts;
    pts.reserve(static_cast<size_t>(std::pow(m, dim)));
    std::vector<int> odo(dim, 0);
    while (true) {
        std::vector<Rat> u(dim);
        for (int a = 0; a < dim; ++a) u[a] = axis[odo[a]];
        pts.push_back(std::move(u));
        int ax = dim - 1;
        while (ax >= 0 && ++odo[ax] >= m) odo[ax--] = 0;
        if (ax < 0) break;
    }
    return pts;
}

std::vector<double> to_double(const std::vector<Rat>& u) {
    std::vector<double> x(u.size());
    for (size_t i = 0; i < u.size(); ++i) x[i] = rat_d(u[i]);
    return x;
}

void check_config(const QuadratureConfig& q) {
    if (q.m < 1) throw InputError("quadrature needs at least one point per axis");
}

} // namespace

PolySpec normalize_poly(const PolySpec& p, int k, int dim) {
    std::map<std::pair<int, std::vector<std::int64_t>>, Cplx> merged;
    for (const PolyTerm& t : p.terms) {
        if (t.j < 0 || t.j >= k) throw InputError("offset index out of range");
        if (t.h.dim() != dim) throw DimensionMismatch("frequency dimension differs from the lattice");
        merged[{t.j, t.h.w}] += t.c;
    }
    PolySpec out;
    for (auto& [key, c] : merged)
        if (c != 0.0) out.terms.push_back(PolyTerm{key.first, DualVector(key.second), c});
    if (out.terms.empty()) throw EmptyPoly("polynomial with no nonzero coefficients");
    return out;
}

double poly_l2(const PolySpec& p, int k, int dim) {
    PolySpec n = normalize_poly(p, k, dim);
    std::vector<double> sq;
    sq.reserve(n.terms.size());
    for (const PolyTerm& t : n.terms) sq.push_back(std::norm(t.c));
    return pairwise_sum(sq);
}

double poly_norm_direct(const MultiTileSet& omega, const ExponentialSystem& sys,
                        const PolySpec& p, const QuadratureConfig& q) {
    check_config(q);
    const int d = omega.lattice().dim();
    PolySpec spec = normalize_poly(p, sys.k(), d);

    // ambient frequency of each term: a_j + h
    std::vector<std::vector<double>> freq;
    freq.reserve(spec.terms.size());
    for (const PolyTerm& t : spec.terms) {
        std::vector<double> f = embed_dual(omega.lattice(), t.h);
        const std::vector<double>& a = sys.offset(t.j);
        for (int i = 0; i < d; ++i) f[i] += a[i];
        freq.push_back(std::move(f));
    }

    const auto grid = unit_grid(d, q.m);
    std::vector<double> cell_values;
    for (const Piece& piece : omega.pieces()) {
        for (const auto& u : grid) {
            if (!piece.region.contains(u)) continue;
            std::vector<double> w = embed_point(omega.lattice(), to_double(u), piece.translate);
            Cplx val = 0;
            for (size_t t = 0; t < spec.terms.size(); ++t) {
                double dot = 0;
                for (int i = 0; i < d; ++i) dot += freq[t][i] * w[i];
                val += spec.terms[t].c * std::polar(1.0, kTwoPi * dot);
            }
            cell_values.push_back(std::norm(val));
        }
    }
    const double cell = rat_d(omega.lattice().det_abs()) / std::pow(q.m, d);
    return cell * pairwise_sum(cell_values);
}

double poly_norm_fiber(const FiberPartition& P, const ExponentialSystem& sys, const PolySpec& p,
                       const QuadratureConfig& q) {
    check_config(q);
    const int d = P.lattice.dim();
    PolySpec spec = normalize_poly(p, sys.k(), d);
    const int k = sys.k();

    const auto grid = unit_grid(d, q.m);
    std::vector<double> cell_values;
    for (const FiberClass& cls : P.classes) {
        FiberMatrix fm = fiber_matrix(cls.points, sys);
        const int l = fm.entries.rows;
        for (const auto& u : grid) {
            if (!cls.region.contains(u)) continue;
            std::vector<double> ud = to_double(u);
            std::vector<double> omega = embed_point(P.lattice, ud, LatticePoint(std::vector<std::int64_t>(d, 0)));
            // m_j(ω) from integer frequencies against lattice coordinates
            std::vector<Cplx> mj(k, 0.0);
            for (const PolyTerm& t : spec.terms) {
                double dot = 0;
                for (int i = 0; i < d; ++i) dot += static_cast<double>(t.h.w[i]) * ud[i];
                mj[t.j] += t.c * std::polar(1.0, kTwoPi * dot);
            }
            std::vector<Cplx> phases = unitary_phases(sys, omega);
            double acc = 0;
            for (int row = 0; row < l; ++row) {
                Cplx s = 0;
                for (int j = 0; j < k; ++j) s += fm.entries.at(row, j) * phases[j] * mj[j];
                acc += std::norm(s);
            }
            cell_values.push_back(acc);
        }
    }
    const double cell = rat_d(P.lattice.det_abs()) / std::pow(q.m, d);
    return cell * pairwise_sum(cell_values);
}

PolySpec random_poly(int k, int dim, int h_height, Rng& rng) {
    if (k < 1 || h_height < 0) throw InputError("bad polynomial window");
    PolySpec p;
    const int per_axis = 2 * h_height + 1;
    for (int j = 0; j < k; ++j) {
        std::vector<int> odo(dim, 0);
        while (true) {
            std::vector<std::int64_t> w(dim);
            for (int i = 0; i < dim; ++i) w[i] = odo[i] - h_height;
            double re = rng.gauss(), im = rng.gauss();
            p.terms.push_back(PolyTerm{j, DualVector(std::move(w)), Cplx(re, im)});
            int ax = dim - 1;
            while (ax >= 0 && ++odo[ax] >= per_axis) odo[ax--] = 0;
            if (ax < 0) break;
        }
    }
    return p;
}

TrialSummary frame_inequality_trial(const FiberPartition& P, const ExponentialSystem& sys,
                                    const BoundsReport& report, int trials, std::uint64_t seed,
                                    const QuadratureConfig& q) {
    (void)report; // the caller compares against its bounds; kept for interface symmetry
    if (trials < 1) throw InputError("need at least one trial");
    Rng rng(seed);
    TrialSummary out;
    const double dvol = rat_d(P.lattice.det_abs());
    for (int t = 0; t < trials; ++t) {
        PolySpec p = random_poly(sys.k(), P.lattice.dim(), 2, rng);
        const double num = poly_norm_fiber(P, sys, p, q);
        const double den = dvol * poly_l2(p, sys.k(), P.lattice.dim());
        out.quotients.push_back(num / den);
    }
    out.min_quotient = *std::min_element(out.quotients.begin(), out.quotients.end());
    out.max_quotient = *std::max_element(out.quotients.begin(), out.quotients.end());
    return out;
}

std::pair<double, double> gram_section(const MultiTileSet& omega, const ExponentialSystem& sys,
                                       const std::vector<std::pair<int, DualVector>>& window,
                                       const QuadratureConfig& q) {
    check_config(q);
    if (window.empty()) throw WindowEmpty("gram section needs a nonempty window");
    const int d = omega.lattice().dim();
    const int nw = static_cast<int>(window.size());

    std::vector<std::vector<double>> freq;
    freq.reserve(window.size());
    for (const auto& [j, h] : window) {
        if (j < 0 || j >= sys.k()) throw InputError("offset index out of range");
        if (h.dim() != d) throw DimensionMismatch("frequency dimension differs from the lattice");
        std::vector<double> f = embed_dual(omega.lattice(), h);
        for (int i = 0; i < d; ++i) f[i] += sys.offset(j)[i];
        freq.push_back(std::move(f));
    }

    CMatrix G(nw, nw);
    const double dvol = rat_d(omega.lattice().det_abs());
    std::vector<Cplx> phase(nw);
    for (const Piece& piece : omega.pieces()) {
        for (const Box& box : piece.region.boxes()) {
            // scaled midpoints: about q.m points per unit length on each axis
            std::vector<int> counts(d);
            std::vector<double> lo(d), step(d);
            long total = 1;
            for (int a = 0; a < d; ++a) {
                const double width = rat_d(box.hi[a] - box.lo[a]);
                counts[a] = std::max(1, static_cast<int>(std::llround(q.m * width)));
                lo[a] = rat_d(box.lo[a]);
                step[a] = width / counts[a];
                total *= counts[a];
            }
            double weight = dvol;
            for (int a = 0; a < d; ++a) weight *= step[a];
            std::vector<int> odo(d, 0);
            for (long c = 0; c < total; ++c) {
                std::vector<double> u(d);
                for (int a = 0; a < d; ++a) u[a] = lo[a] + (odo[a] + 0.5) * step[a];
                std::vector<double> w = embed_point(omega.lattice(), u, piece.translate);
                for (int x = 0; x < nw; ++x) {
                    double dot = 0;
                    for (int i = 0; i < d; ++i) dot += freq[x][i] * w[i];
                    phase[x] = std::polar(1.0, kTwoPi * dot);
                }
                for (int x = 0; x < nw; ++x)
                    for (int y = x; y < nw; ++y)
                        G.at(x, y) += weight * phase[x] * std::conj(phase[y]);
                int ax = d - 1;
                while (ax >= 0 && ++odo[ax] >= counts[ax]) odo[ax--] = 0;
                if (ax < 0) break;
            }
        }
    }
    for (int x = 0; x < nw; ++x)
        for (int y = 0; y < x; ++y) G.at(x, y) = std::conj(G.at(y, x));
    return hermitian_eigen_range(G);
}

std::optional<long> kronecker_search(const std::array<double, 2>& a, int j,
                                     const std::array<double, 2>& beta, double eps, long m_max) {
    if (eps <= 0) throw InputError("tolerance must be positive");
    if (m_max < 0) throw InputError("search bound must be nonnegative");
    const double eps2 = eps * eps;
    auto dist2 = [&](long m) {
        double s = 0;
        for (int i = 0; i < 2; ++i) {
            const double diff = kTwoPi * (a[i] * j * static_cast<double>(m) - beta[i]);
            s += 2.0 - 2.0 * std::cos(diff);
        }
        return s;
    };
    for (long mag = 0; mag <= m_max; ++mag) {
        if (dist2(mag) < eps2) return mag;
        if (mag > 0 && dist2(-mag) < eps2) return -mag;
    }
    return std::nullopt;
}

} // namespace exobasis
