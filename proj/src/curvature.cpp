#include "h3m/curvature.hpp"

#include "h3m/errors.hpp"

namespace h3m {

namespace {

// Σ_m c[m] · table(m)
template <class F>
Vec combine(const Vec& c, std::size_t n, F&& table) {
    Vec out(n);
    for (std::size_t m = 0; m < c.size(); ++m) {
        if (sgn(c[m]) == 0) continue;
        const Vec& t = table(m);
        for (std::size_t k = 0; k < n; ++k)
            if (sgn(t[k]) != 0) out[k] += c[m] * t[k];
    }
    return out;
}

} // namespace

ConnectionTable levi_civita(const LieAlgebra& alg, const Mat& gram) {
    const std::size_t n = alg.dim();
    if (gram.rows() != n || gram.cols() != n) throw MalformedInput("levi_civita: Gram size does not match the algebra");
    if (!gram.is_symmetric()) throw MalformedInput("levi_civita: Gram matrix is not symmetric");
    if (sgn(det(gram)) == 0) throw PreconditionError("levi_civita: Gram matrix is degenerate");

    const Mat ginv = invert(gram);
    std::vector<Mat> adstar;
    for (std::size_t i = 0; i < n; ++i) adstar.push_back(ginv * alg.ad(unit_vec(n, i)).transpose() * gram);

    ConnectionTable t{n, std::vector<Vec>(n * n)};
    const Scalar half(1, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t.gamma[i * n + j] = half * (alg.bracket(i, j) - adstar[i].col(j) - adstar[j].col(i));
    return t;
}

RiemannTensor riemann(const ConnectionTable& conn, const LieAlgebra& alg, Exec exec) {
    const std::size_t n = conn.n;
    RiemannTensor r{n, std::vector<Vec>(n * n * n)};
    const auto pair = [&](std::size_t ij) {
        const std::size_t i = ij / n, j = ij % n;
        const auto nabla_i = [&](std::size_t m) -> const Vec& { return conn.at(i, m); };
        const auto nabla_j = [&](std::size_t m) -> const Vec& { return conn.at(j, m); };
        for (std::size_t k = 0; k < n; ++k) {
            const auto nabla_m_k = [&](std::size_t m) -> const Vec& { return conn.at(m, k); };
            r.data[ij * n + k] = combine(conn.at(j, k), n, nabla_i) - combine(conn.at(i, k), n, nabla_j) -
                                 combine(alg.bracket(i, j), n, nabla_m_k);
        }
    };
    const auto pairs = static_cast<long>(n * n);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long ij = 0; ij < pairs; ++ij) pair(static_cast<std::size_t>(ij));
    } else {
        for (long ij = 0; ij < pairs; ++ij) pair(static_cast<std::size_t>(ij));
    }
    return r;
}

bool is_flat(const RiemannTensor& r) {
    for (const auto& v : r.data)
        if (!is_zero(v)) return false;
    return true;
}

RicciData ricci(const RiemannTensor& r, const Mat& gram) {
    const std::size_t n = r.n;
    RicciData out{Mat(n, n), Mat(), Scalar(0)};
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) out.ricci(j, k) += r.at(i, j, k)[i];
    const Mat ginv = invert(gram);
    out.op = ginv * out.ricci;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out.scalar += ginv(j, k) * out.ricci(j, k);
    return out;
}

std::optional<Soliton> soliton_check(const LieAlgebra& alg, const Mat& gram, const RicciData& ric) {
    const std::size_t n = alg.dim();
    if (sgn(det(gram)) == 0) throw PreconditionError("soliton_check: Gram matrix is degenerate");
    const Mat& op = ric.op;

    bool scalar_op = true;
    for (std::size_t i = 0; i < n && scalar_op; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (op(i, j) != (i == j ? op(0, 0) : Scalar(0))) {
                scalar_op = false;
                break;
            }
    if (scalar_op) return Soliton{op(0, 0), Mat(n, n), true};

    // Unknowns (c, λ_1..λ_m):  c·Id + Σ λ_k D_k = Ric_op.
    const std::vector<Mat> der = alg.derivations();
    Mat A(n * n, der.size() + 1);
    Vec b(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            const std::size_t row = r * n + s;
            if (r == s) A(row, 0) = 1;
            for (std::size_t k = 0; k < der.size(); ++k) A(row, k + 1) = der[k](r, s);
            b[row] = op(r, s);
        }
    const auto x = solve(A, b);
    if (!x) return std::nullopt;
    const Scalar c = (*x)[0];
    return Soliton{c, op - c * Mat::identity(n), false};
}

CurvatureReport curvature_report(const LieAlgebra& alg, const Mat& gram, Exec exec) {
    CurvatureReport rep;
    rep.connection = levi_civita(alg, gram);
    rep.riemann = riemann(rep.connection, alg, exec);
    rep.ricci = ricci(rep.riemann, gram);
    rep.flat = is_flat(rep.riemann);
    rep.soliton = soliton_check(alg, gram, rep.ricci);
    return rep;
}

bool is_metric_compatible(const ConnectionTable& conn, const Mat& gram) {
    const std::size_t n = conn.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = j; k < n; ++k)
                if (bilinear(gram, conn.at(i, j), unit_vec(n, k)) + bilinear(gram, unit_vec(n, j), conn.at(i, k)) != 0)
                    return false;
    return true;
}

bool is_torsion_free(const ConnectionTable& conn, const LieAlgebra& alg) {
    const std::size_t n = conn.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (conn.at(i, j) - conn.at(j, i) != alg.bracket(i, j)) return false;
    return true;
}

bool is_antisymmetric(const RiemannTensor& r) {
    const std::size_t n = r.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!is_zero(r.at(i, j, k) + r.at(j, i, k))) return false;
    return true;
}

bool satisfies_first_bianchi(const RiemannTensor& r) {
    const std::size_t n = r.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!is_zero(r.at(i, j, k) + r.at(j, k, i) + r.at(k, i, j))) return false;
    return true;
}

bool has_pair_symmetry(const RiemannTensor& r, const Mat& gram) {
    const std::size_t n = r.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (bilinear(gram, r.at(i, j, k), unit_vec(n, l)) != bilinear(gram, r.at(k, l, i), unit_vec(n, j)))
                        return false;
    return true;
}

} // namespace h3m
