#include "h3m/exact.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "h3m/errors.hpp"

namespace h3m {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

void require_same_length(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw MalformedInput("vector length mismatch");
}

} // namespace

Scalar parse_scalar(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || (slash != std::string_view::npos && !is_integer_literal(den, false)))
        throw MalformedInput("not a rational literal: '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    Scalar x;
    x.get_num() = mpz_class(n, 10);
    x.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (x.get_den() == 0) throw MalformedInput("zero denominator: '" + std::string(text) + "'");
    x.canonicalize();
    return x;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

int sign(const Scalar& x) { return sgn(x); }

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

Vec operator+(const Vec& a, const Vec& b) {
    require_same_length(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    require_same_length(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator*(const Scalar& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

// ---------------------------------------------------------------- Mat

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw MalformedInput("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

Mat Mat::diagonal(std::span<const Scalar> d) {
    Mat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Mat Mat::from_columns(std::span<const Vec> cols, std::size_t rows) {
    Mat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw MalformedInput("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Mat Mat::from_rows(std::span<const Vec> rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw MalformedInput("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec Mat::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Mat::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

std::vector<Vec> Mat::columns() const {
    std::vector<Vec> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
    return out;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Mat::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool Mat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MalformedInput("matrix shape mismatch");
    Mat r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MalformedInput("matrix shape mismatch");
    Mat r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw MalformedInput("matrix product shape mismatch");
    Mat r(a.rows_, b.cols_);
    Scalar t;
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (sgn(b(k, j)) == 0) continue;
                t = aik * b(k, j);
                r(i, j) += t;
            }
        }
    return r;
}

Vec operator*(const Mat& a, const Vec& v) {
    if (a.cols_ != v.size()) throw MalformedInput("matrix-vector shape mismatch");
    Vec r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) r[i] += a(i, k) * v[k];
    return r;
}

Mat operator*(const Scalar& s, const Mat& a) {
    Mat r = a;
    for (auto& x : r.data_) x *= s;
    return r;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string to_string(const Mat& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
        os << "]";
        if (i + 1 < m.rows()) os << "\n";
    }
    return os.str();
}

Scalar bilinear(const Mat& gram, const Vec& x, const Vec& y) {
    if (gram.rows() != x.size() || gram.cols() != y.size()) throw MalformedInput("bilinear form shape mismatch");
    Scalar acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        Scalar row = 0;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (sgn(y[j]) != 0 && sgn(gram(i, j)) != 0) row += gram(i, j) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

// ---------------------------------------------------------------- congruence

namespace {

// Applies the congruence e_c <- e_c + f e_k to A (rows and columns) and to
// the accumulated transform P (columns only).
void add_multiple(Mat& A, Mat& P, std::size_t c, std::size_t k, const Scalar& f) {
    const std::size_t n = A.rows();
    for (std::size_t j = 0; j < n; ++j) A(c, j) += f * A(k, j);
    for (std::size_t i = 0; i < n; ++i) A(i, c) += f * A(i, k);
    for (std::size_t i = 0; i < n; ++i) P(i, c) += f * P(i, k);
}

void swap_basis(Mat& A, Mat& P, std::size_t a, std::size_t b) {
    if (a == b) return;
    const std::size_t n = A.rows();
    for (std::size_t j = 0; j < n; ++j) std::swap(A(a, j), A(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(A(i, a), A(i, b));
    for (std::size_t i = 0; i < n; ++i) std::swap(P(i, a), P(i, b));
}

// (e_i, e_j) -> (e_i + e_j, e_i - e_j)
void hyperbolic_mix(Mat& A, Mat& P, std::size_t i, std::size_t j) {
    const std::size_t n = A.rows();
    for (std::size_t c = 0; c < n; ++c) {
        Scalar a = A(i, c), b = A(j, c);
        A(i, c) = a + b;
        A(j, c) = a - b;
    }
    for (std::size_t r = 0; r < n; ++r) {
        Scalar a = A(r, i), b = A(r, j);
        A(r, i) = a + b;
        A(r, j) = a - b;
    }
    for (std::size_t r = 0; r < n; ++r) {
        Scalar a = P(r, i), b = P(r, j);
        P(r, i) = a + b;
        P(r, j) = a - b;
    }
}

} // namespace

CongruenceResult congruence_diagonalize(const Mat& S) {
    if (!S.is_square()) throw MalformedInput("congruence_diagonalize: matrix is not square");
    if (!S.is_symmetric()) throw MalformedInput("congruence_diagonalize: matrix is not symmetric");
    const std::size_t n = S.rows();
    Mat A = S;
    Mat P = Mat::identity(n);

    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(A(k, k)) == 0) {
            std::size_t partner = n;
            for (std::size_t j = k + 1; j < n && partner == n; ++j)
                if (sgn(A(k, j)) != 0) partner = j;
            if (partner == n) continue;  // e_k already orthogonal to the rest

            std::size_t diag = n;
            for (std::size_t j = k + 1; j < n && diag == n; ++j)
                if (sgn(A(j, j)) != 0) diag = j;
            if (diag != n) {
                swap_basis(A, P, k, diag);
            } else {
                hyperbolic_mix(A, P, k, partner);
            }
        }
        const Scalar pivot = A(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (sgn(A(r, k)) == 0) continue;
            const Scalar f = -A(r, k) / pivot;
            add_multiple(A, P, r, k, f);
        }
    }

    CongruenceResult out{std::move(P), {}};
    out.diagonal.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(A(i, i));
    return out;
}

// ---------------------------------------------------------------- elimination

Mat rref(Mat m, std::vector<std::size_t>* pivots) {
    if (pivots) pivots->clear();
    std::size_t lead = 0;
    const std::size_t R = m.rows(), C = m.cols();
    for (std::size_t c = 0; c < C && lead < R; ++c) {
        std::size_t p = lead;
        while (p < R && sgn(m(p, c)) == 0) ++p;
        if (p == R) continue;
        if (p != lead)
            for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(lead, j));
        const Scalar inv = 1 / m(lead, c);
        for (std::size_t j = c; j < C; ++j) m(lead, j) *= inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == lead || sgn(m(r, c)) == 0) continue;
            const Scalar f = m(r, c);
            for (std::size_t j = c; j < C; ++j)
                if (sgn(m(lead, j)) != 0) m(r, j) -= f * m(lead, j);
        }
        if (pivots) pivots->push_back(c);
        ++lead;
    }
    return m;
}

std::size_t rank(const Mat& m) {
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

Scalar det(const Mat& m) {
    if (!m.is_square()) throw MalformedInput("det: matrix is not square");
    Mat a = m;
    const std::size_t n = a.rows();
    Scalar d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            d = -d;
        }
        d *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(a(r, c)) == 0) continue;
            const Scalar f = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return d;
}

Mat invert(const Mat& m) {
    if (!m.is_square()) throw MalformedInput("invert: matrix is not square");
    const std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    aug = rref(std::move(aug), &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix("invert: matrix is singular");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<Vec> kernel(const Mat& m) {
    std::vector<std::size_t> piv;
    const Mat r = rref(m, &piv);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        Vec v(C);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
        // leading entry to 1
        for (const auto& x : v)
            if (sgn(x) != 0) {
                const Scalar lead = x;
                if (lead != 1)
                    for (auto& y : v) y /= lead;
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    if (a.rows() != b.size()) throw MalformedInput("solve: shape mismatch");
    const std::size_t R = a.rows(), C = a.cols();
    Mat aug(R, C + 1);
    for (std::size_t i = 0; i < R; ++i) {
        for (std::size_t j = 0; j < C; ++j) aug(i, j) = a(i, j);
        aug(i, C) = b[i];
    }
    std::vector<std::size_t> piv;
    aug = rref(std::move(aug), &piv);
    if (!piv.empty() && piv.back() == C) return std::nullopt;
    Vec x(C);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, C);
    return x;
}

std::vector<Vec> span_basis(std::span<const Vec> vectors, std::size_t dim) {
    if (vectors.empty()) return {};
    const Mat r = rref(Mat::from_rows(vectors, dim));
    std::vector<Vec> out;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        Vec row = r.row(i);
        if (is_zero(row)) break;
        out.push_back(std::move(row));
    }
    return out;
}

std::size_t span_dim(std::span<const Vec> vectors, std::size_t dim) {
    if (vectors.empty()) return 0;
    return rank(Mat::from_rows(vectors, dim));
}

bool in_span(std::span<const Vec> vectors, const Vec& v) {
    if (is_zero(v)) return true;
    if (vectors.empty()) return false;
    std::vector<Vec> all(vectors.begin(), vectors.end());
    const std::size_t before = span_dim(all, v.size());
    all.push_back(v);
    return span_dim(all, v.size()) == before;
}

std::vector<Vec> intersect(std::span<const Vec> a, std::span<const Vec> b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.front().size();
    for (const auto& v : a)
        if (v.size() != n) throw MalformedInput("intersect: dimension mismatch");
    for (const auto& v : b)
        if (v.size() != n) throw MalformedInput("intersect: dimension mismatch");

    // Columns [a_1 .. a_k | -b_1 .. -b_m]; kernel coefficients give common vectors.
    Mat m(n, a.size() + b.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = a[j][i];
    for (std::size_t j = 0; j < b.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, a.size() + j) = -b[j][i];
    std::vector<Vec> common;
    for (const auto& c : kernel(m)) {
        Vec v(n);
        for (std::size_t j = 0; j < a.size(); ++j)
            if (sgn(c[j]) != 0)
                for (std::size_t i = 0; i < n; ++i) v[i] += c[j] * a[j][i];
        common.push_back(std::move(v));
    }
    return span_basis(common, n);
}

} // namespace h3m
