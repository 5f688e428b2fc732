#include "exobasis/basis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "exobasis/errors.hpp"

namespace exobasis {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::vector<double>> structured_ambient(const Lattice& L,
                                                    const AdmissibilityCertificate& c,
                                                    const std::vector<long>& s) {
    std::vector<double> vd = embed_dual(L, c.v);
    std::vector<std::vector<double>> out;
    out.reserve(s.size());
    for (long sj : s) {
        std::vector<double> a(vd.size());
        for (size_t i = 0; i < vd.size(); ++i)
            a[i] = vd[i] * (static_cast<double>(sj) / c.n);
        out.push_back(std::move(a));
    }
    return out;
}

} // namespace

ExponentialSystem::ExponentialSystem(Lattice lattice, AdmissibilityCertificate cert,
                                     std::vector<long> s, bool composite_warning)
    : lattice_(std::move(lattice)), structured_(true), k_(static_cast<int>(s.size())),
      s_(std::move(s)), composite_warning_(composite_warning) {
    if (k_ < 1) throw InputError("exponential system needs at least one offset");
    if (cert.v.dim() != lattice_.dim())
        throw DimensionMismatch("certificate dimension differs from the lattice");
    ambient_ = structured_ambient(lattice_, cert, s_);
    cert_.push_back(std::move(cert));
}

ExponentialSystem::ExponentialSystem(Lattice lattice, std::vector<std::vector<double>> free_offsets)
    : lattice_(std::move(lattice)), structured_(false),
      k_(static_cast<int>(free_offsets.size())), ambient_(std::move(free_offsets)) {
    if (k_ < 1) throw InputError("exponential system needs at least one offset");
    for (const auto& a : ambient_)
        if (static_cast<int>(a.size()) != lattice_.dim())
            throw DimensionMismatch("free offset dimension differs from the lattice");
}

const AdmissibilityCertificate& ExponentialSystem::certificate() const {
    if (!structured_) throw InputError("free system has no certificate");
    return cert_.front();
}

const std::vector<long>& ExponentialSystem::indices() const {
    if (!structured_) throw InputError("free system has no residue indices");
    return s_;
}

ExponentialSystem build_offsets(const Lattice& L, const AdmissibilityCertificate& c, int k) {
    if (k < 1) throw InputError("offset count must be positive");
    if (k > c.n)
        throw KExceedsN("k = " + std::to_string(k) + " exceeds the certificate modulus n = " +
                        std::to_string(c.n));
    std::vector<long> s(k);
    for (int j = 0; j < k; ++j) s[j] = j;
    return ExponentialSystem(L, c, std::move(s), false);
}

ExponentialSystem build_offsets_indexed(const Lattice& L, const AdmissibilityCertificate& c,
                                        const std::vector<long>& s) {
    if (s.empty()) throw InputError("offset count must be positive");
    std::set<long> seen;
    for (long sj : s) {
        long r = sj % c.n;
        if (r < 0) r += c.n;
        if (!seen.insert(r).second)
            throw DuplicateResidue("offset indices " + std::to_string(sj) +
                                   " collide mod n = " + std::to_string(c.n));
    }
    const bool warn = c.n > 1 && !is_prime(c.n);
    return ExponentialSystem(L, c, s, warn);
}

ExponentialSystem free_system(const Lattice& L, std::vector<std::vector<double>> offsets) {
    return ExponentialSystem(L, std::move(offsets));
}

FiberMatrix fiber_matrix(const std::vector<LatticePoint>& R, const ExponentialSystem& sys) {
    if (R.empty()) throw InputError("fiber matrix needs a nonempty class");
    std::vector<LatticePoint> pts = R;
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
        throw InputError("duplicate fiber point");
    const int l = static_cast<int>(pts.size());
    const int k = sys.k();
    CMatrix E(l, k);
    if (sys.structured()) {
        const AdmissibilityCertificate& c = sys.certificate();
        for (int i = 0; i < l; ++i) {
            if (pts[i].dim() != sys.lattice().dim())
                throw DimensionMismatch("fiber point dimension differs from the lattice");
            const long base = residue_mod(c.v, pts[i], c.n);
            for (int j = 0; j < k; ++j) {
                long sj = sys.indices()[j] % c.n;
                if (sj < 0) sj += c.n;
                const long res = (sj * base) % c.n; // both in [0,n), no overflow
                E.at(i, j) = std::polar(1.0, kTwoPi * static_cast<double>(res) / c.n);
            }
        }
    } else {
        for (int i = 0; i < l; ++i) {
            if (pts[i].dim() != sys.lattice().dim())
                throw DimensionMismatch("fiber point dimension differs from the lattice");
            std::vector<double> lam =
                embed_point(sys.lattice(), std::vector<double>(pts[i].dim(), 0.0), pts[i]);
            for (int j = 0; j < k; ++j) {
                double dot = 0;
                for (size_t t = 0; t < lam.size(); ++t) dot += sys.offset(j)[t] * lam[t];
                E.at(i, j) = std::polar(1.0, kTwoPi * dot);
            }
        }
    }
    return FiberMatrix{std::move(pts), std::move(E)};
}

std::pair<double, double> hermitian_eigen_range(const CMatrix& G) {
    if (G.rows != G.cols || G.rows < 1) throw InputError("eigen range needs a square matrix");
    const int l = G.rows;
    for (int i = 0; i < l; ++i)
        for (int j = i; j < l; ++j)
            if (std::abs(G.at(i, j) - std::conj(G.at(j, i))) > 1e-12)
                throw NotHermitian("matrix asymmetry at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");

    if (l == 1) return {G.at(0, 0).real(), G.at(0, 0).real()};
    if (l == 2) {
        const double a = G.at(0, 0).real(), d = G.at(1, 1).real();
        const double half = (a + d) / 2;
        const double mu = std::hypot((a - d) / 2, std::abs(G.at(0, 1)));
        return {half - mu, half + mu};
    }

    CMatrix H(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) H.at(i, j) = (G.at(i, j) + std::conj(G.at(j, i))) / 2.0;

    // cyclic Jacobi. The pivot phase is split off first so the plane
    // rotation is real with the small-angle tangent choice; its columns
    // stay orthogonal by construction even when the 2x2 block is nearly
    // degenerate, where the naive eigenvector formula loses orthogonality
    // to cancellation and stalls the sweep around sqrt(eps)
    for (int sweep = 0; sweep < 80; ++sweep) {
        double off = 0, diag = 0;
        for (int i = 0; i < l; ++i) {
            diag = std::max(diag, std::abs(H.at(i, i)));
            for (int j = i + 1; j < l; ++j) off = std::max(off, std::abs(H.at(i, j)));
        }
        if (off <= 1e-15 * (1 + diag)) break;
        for (int p = 0; p < l; ++p)
            for (int q = p + 1; q < l; ++q) {
                const Cplx b = H.at(p, q);
                const double ab = std::abs(b);
                if (ab <= 1e-18 * (1 + diag)) continue;
                const Cplx ph = b / ab;
                const double app = H.at(p, p).real(), aqq = H.at(q, q).real();
                const double tau = (aqq - app) / (2 * ab);
                const double t = tau >= 0 ? 1.0 / (tau + std::sqrt(1 + tau * tau))
                                          : 1.0 / (tau - std::sqrt(1 + tau * tau));
                const double co = 1.0 / std::sqrt(1 + t * t), si = t * co;
                const Cplx vp = co * ph, vq = si * ph;
                // V has columns (vp, -si) and (vq, co)
                for (int i = 0; i < l; ++i) { // H ← H V
                    const Cplx hp = H.at(i, p), hq = H.at(i, q);
                    H.at(i, p) = hp * vp - hq * si;
                    H.at(i, q) = hp * vq + hq * co;
                }
                for (int i = 0; i < l; ++i) { // H ← V* H
                    const Cplx hp = H.at(p, i), hq = H.at(q, i);
                    H.at(p, i) = std::conj(vp) * hp - si * hq;
                    H.at(q, i) = std::conj(vq) * hp + co * hq;
                }
                H.at(p, q) = H.at(q, p) = 0;
            }
    }
    double lo = H.at(0, 0).real(), hi = lo;
    for (int i = 1; i < l; ++i) {
        lo = std::min(lo, H.at(i, i).real());
        hi = std::max(hi, H.at(i, i).real());
    }
    return {lo, hi};
}

std::vector<Cplx> unitary_phases(const ExponentialSystem& sys, const std::vector<double>& omega) {
    if (static_cast<int>(omega.size()) != sys.lattice().dim())
        throw DimensionMismatch("ambient point dimension differs from the lattice");
    std::vector<Cplx> u(sys.k());
    for (int j = 0; j < sys.k(); ++j) {
        double dot = 0;
        for (size_t t = 0; t < omega.size(); ++t) dot += sys.offset(j)[t] * omega[t];
        u[j] = std::polar(1.0, kTwoPi * dot);
    }
    return u;
}

const char* bounds_kind_name(BoundsKind k) {
    switch (k) {
    case BoundsKind::RieszBounds: return "RieszBounds";
    case BoundsKind::FrameBounds: return "FrameBounds";
    case BoundsKind::Degenerate: return "Degenerate";
    }
    return "?";
}

BoundsReport riesz_bounds(const FiberPartition& P, const ExponentialSystem& sys) {
    if (P.lattice != sys.lattice())
        throw DimensionMismatch("partition and system use different lattices");
    const int k = sys.k();
    BoundsReport rep;
    bool first = true, all_full = true, degenerate = false;
    for (const FiberClass& cls : P.classes) {
        const int l = static_cast<int>(cls.points.size());
        if (l > k)
            throw ClassTooLarge("fiber class of size " + std::to_string(l) +
                                " exceeds k = " + std::to_string(k));
        if (l < k) all_full = false;
        FiberMatrix fm = fiber_matrix(cls.points, sys);
        CMatrix G(l, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                Cplx s = 0;
                for (int t = 0; t < k; ++t) s += fm.entries.at(i, t) * std::conj(fm.entries.at(j, t));
                G.at(i, j) = s;
            }
        auto [lo, hi] = hermitian_eigen_range(G);
        ClassBounds cb;
        cb.points = cls.points;
        if (sys.structured()) {
            const AdmissibilityCertificate& c = sys.certificate();
            for (const LatticePoint& p : cls.points)
                cb.residues.push_back(residue_mod(c.v, p, c.n));
            std::sort(cb.residues.begin(), cb.residues.end());
        }
        cb.eig_min = lo;
        cb.eig_max = hi;
        rep.classes.push_back(std::move(cb));
        if (lo < 1e-9) degenerate = true;
        rep.A = first ? lo : std::min(rep.A, lo);
        rep.B = first ? hi : std::max(rep.B, hi);
        first = false;
    }
    if (first) rep.A = rep.B = 0; // nothing covered
    const double dvol = rat_d(P.lattice.det_abs());
    rep.A_L2 = dvol * rep.A;
    rep.B_L2 = dvol * rep.B;
    if (degenerate)
        rep.kind = BoundsKind::Degenerate;
    else if (all_full && !first && P.uncovered.empty())
        rep.kind = BoundsKind::RieszBounds;
    else
        rep.kind = BoundsKind::FrameBounds;
    return rep;
}

} // namespace exobasis
