#include "h3m/lie_algebra.hpp"

#include "h3m/errors.hpp"

namespace h3m {

LieAlgebra::LieAlgebra(std::size_t n, std::vector<Vec> brackets) : n_(n), brackets_(std::move(brackets)) {
    if (brackets_.size() != n * n) throw MalformedInput("structure constants: expected n*n brackets");
    for (const auto& b : brackets_)
        if (b.size() != n) throw MalformedInput("structure constants: bracket vector has wrong length");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (bracket(i, j) != Scalar(-1) * bracket(j, i))
                throw MalformedInput("structure constants are not antisymmetric");
}

LieAlgebra LieAlgebra::abelian(std::size_t n) { return LieAlgebra(n, std::vector<Vec>(n * n, Vec(n))); }

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != n_ || y.size() != n_) throw MalformedInput("bracket: vector length mismatch");
    Vec r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (sgn(y[j]) == 0) continue;
            const Vec& b = bracket(i, j);
            const Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < n_; ++k)
                if (sgn(b[k]) != 0) r[k] += c * b[k];
        }
    }
    return r;
}

Mat LieAlgebra::ad(const Vec& x) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < n_; ++j) cols.push_back(bracket(x, unit_vec(n_, j)));
    return Mat::from_columns(cols, n_);
}

bool LieAlgebra::satisfies_jacobi() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) {
                const Vec ei = unit_vec(n_, i), ej = unit_vec(n_, j), ek = unit_vec(n_, k);
                const Vec s = bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) + bracket(ek, bracket(ei, ej));
                if (!is_zero(s)) return false;
            }
    return true;
}

bool LieAlgebra::is_abelian() const {
    for (const auto& b : brackets_)
        if (!is_zero(b)) return false;
    return true;
}

std::vector<Vec> LieAlgebra::center() const {
    // x central iff Σ_i x_i [e_i, e_j] = 0 for every j.
    Mat m(n_ * n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) m(j * n_ + k, i) = bracket(i, j)[k];
    return span_basis(kernel(m), n_);
}

std::vector<Vec> LieAlgebra::derived_ideal() const { return span_basis(brackets_, n_); }

bool LieAlgebra::is_derivation(const Mat& D) const {
    if (D.rows() != n_ || D.cols() != n_) return false;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) {
            const Vec lhs = D * bracket(i, j);
            const Vec rhs = bracket(D.col(i), unit_vec(n_, j)) + bracket(unit_vec(n_, i), D.col(j));
            if (lhs != rhs) return false;
        }
    return true;
}

bool LieAlgebra::is_automorphism(const Mat& phi) const {
    if (phi.rows() != n_ || phi.cols() != n_ || rank(phi) != n_) return false;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (phi * bracket(i, j) != bracket(phi.col(i), phi.col(j))) return false;
    return true;
}

std::vector<Mat> LieAlgebra::derivations() const {
    // Unknown D(r, c) sits at index r*n + c.  For each pair (i, j) and output
    // coordinate k: Σ_r D(k,r) b_ij[r] - Σ_r D(r,i) [e_r, e_j]_k - Σ_r D(r,j) [e_i, e_r]_k = 0.
    const std::size_t N = n_ * n_;
    Mat system(n_ * n_ * n_, N);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) {
                const std::size_t row = (i * n_ + j) * n_ + k;
                for (std::size_t r = 0; r < n_; ++r) {
                    system(row, k * n_ + r) += bracket(i, j)[r];
                    system(row, r * n_ + i) -= bracket(r, j)[k];
                    system(row, r * n_ + j) -= bracket(i, r)[k];
                }
            }
    std::vector<Mat> out;
    for (const auto& v : kernel(system)) {
        Mat D(n_, n_);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) D(r, c) = v[r * n_ + c];
        out.push_back(std::move(D));
    }
    return out;
}

} // namespace h3m
