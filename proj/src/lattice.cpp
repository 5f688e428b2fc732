#include "exobasis/lattice.hpp"

#include <limits>

namespace exobasis {

bool DualVector::is_zero() const {
    for (auto c : w)
        if (c != 0) return false;
    return true;
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Rat RatMatrix::det() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
    const int n = rows_;
    RatMatrix m = *this;
    Rat d = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col) == 0) continue;
            Rat f = m.at(r, col) / m.at(col, col);
            for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return d;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
    const int n = rows_;
    RatMatrix m = *this;
    RatMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) throw SingularMatrix("matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rat p = m.at(col, col);
        for (int j = 0; j < n; ++j) {
            m.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m.at(r, col) == 0) continue;
            Rat f = m.at(r, col);
            for (int j = 0; j < n; ++j) {
                m.at(r, j) -= f * m.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<Rat> RatMatrix::mul(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<Rat> y(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rat acc = 0;
        for (int j = 0; j < cols_; ++j) acc += at(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

Lattice make_lattice(const RatMatrix& basis) {
    if (basis.rows() != basis.cols()) throw DimensionMismatch("lattice basis must be square");
    if (basis.rows() < 1) throw DimensionMismatch("lattice basis must have positive dimension");
    Rat d = basis.det();
    if (d == 0) throw SingularMatrix("lattice basis is singular");
    RatMatrix dual = basis.transpose().inverse();
    return Lattice(basis, abs(d), std::move(dual));
}

std::int64_t dual_pairing(const DualVector& v, const LatticePoint& p) {
    if (v.dim() != p.dim()) throw DimensionMismatch("dual_pairing dimension mismatch");
    __int128 acc = 0;
    for (size_t i = 0; i < v.w.size(); ++i) acc += static_cast<__int128>(v.w[i]) * p.z[i];
    if (acc > std::numeric_limits<std::int64_t>::max() || acc < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("dual_pairing overflows 64-bit range");
    return static_cast<std::int64_t>(acc);
}

std::vector<double> embed_point(const Lattice& L, const std::vector<double>& u, const LatticePoint& z) {
    const int d = L.dim();
    if (static_cast<int>(u.size()) != d || z.dim() != d)
        throw DimensionMismatch("embed_point dimension mismatch");
    std::vector<double> x(d, 0.0);
    for (int i = 0; i < d; ++i) {
        double acc = 0.0;
        for (int j = 0; j < d; ++j) acc += rat_d(L.basis().at(i, j)) * (u[j] + static_cast<double>(z.z[j]));
        x[i] = acc;
    }
    return x;
}

std::vector<double> embed_dual(const Lattice& L, const DualVector& v) {
    const int d = L.dim();
    if (v.dim() != d) throw DimensionMismatch("embed_dual dimension mismatch");
    std::vector<double> x(d, 0.0);
    for (int i = 0; i < d; ++i) {
        double acc = 0.0;
        for (int j = 0; j < d; ++j) acc += rat_d(L.dual_basis().at(i, j)) * static_cast<double>(v.w[j]);
        x[i] = acc;
    }
    return x;
}

std::vector<std::vector<double>> basis_d(const Lattice& L) {
    const int d = L.dim();
    std::vector<std::vector<double>> m(d, std::vector<double>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[i][j] = rat_d(L.basis().at(i, j));
    return m;
}

} // namespace exobasis
