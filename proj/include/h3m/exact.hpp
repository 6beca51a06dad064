#pragma once

// Exact rational scalars and dense linear algebra over Q.
//
// Everything here is value-semantic and free of global state.  Scalars are
// GMP rationals, which are kept in canonical form (positive denominator,
// reduced) after every arithmetic operation.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace h3m {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

// Parses "a" or "a/b" with b > 0.  Throws MalformedInput otherwise.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& x);
int sign(const Scalar& x);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& a);
bool is_zero(const Vec& v);
std::string to_string(const Vec& v);

// Dense row-major matrix of Scalars.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols);
    Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols);
    static Mat diagonal(std::span<const Scalar> d);
    static Mat from_columns(std::span<const Vec> cols, std::size_t rows);
    static Mat from_rows(std::span<const Vec> rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    std::vector<Vec> columns() const;
    Mat transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;

    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Vec operator*(const Mat& a, const Vec& v);
    friend Mat operator*(const Scalar& s, const Mat& a);
    friend bool operator==(const Mat& a, const Mat& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

std::string to_string(const Mat& m);

// xᵀ G y
Scalar bilinear(const Mat& gram, const Vec& x, const Vec& y);

struct CongruenceResult {
    Mat transform;          // P, invertible
    std::vector<Scalar> diagonal;  // PᵀSP = diag(diagonal)
};

// Symmetric Gaussian elimination by congruence.  Nonzero diagonal pivots are
// used in place; a row that is already zero is skipped; when only
// off-diagonal entries remain, the pair (e_i, e_j) is replaced by
// (e_i + e_j, e_i - e_j), producing pivots ±2 s_ij.  Never takes square
// roots, so the diagonal is an arbitrary rational whose signs give the
// inertia.
CongruenceResult congruence_diagonalize(const Mat& S);

// Reduced row echelon form; `pivots` receives the pivot columns.
Mat rref(Mat m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Mat& m);
Scalar det(const Mat& m);
Mat invert(const Mat& m);

// Basis of {x | Mx = 0}.  Each vector has its first nonzero entry equal to 1.
std::vector<Vec> kernel(const Mat& m);

// A particular solution of Ax = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Canonical (RREF) basis of span(vectors); empty for the zero span.
std::vector<Vec> span_basis(std::span<const Vec> vectors, std::size_t dim);
std::size_t span_dim(std::span<const Vec> vectors, std::size_t dim);
bool in_span(std::span<const Vec> vectors, const Vec& v);

// Basis of span(a) ∩ span(b), in canonical RREF form.
std::vector<Vec> intersect(std::span<const Vec> a, std::span<const Vec> b);

} // namespace h3m
