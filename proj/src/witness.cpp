#include "h3m/witness.hpp"

#include <cmath>
#include <sstream>

#include "h3m/errors.hpp"

namespace h3m {

namespace {

// Power of two 2^k with |2^k x|² close to 2 for the Euclidean length of x.
Scalar balancing_scale(const Vec& x) {
    double e = 0;
    for (const auto& c : x) e += c.get_d() * c.get_d();
    const long k = std::lround(std::log2(2.0 / e) / 2.0);
    const mpz_class pow = mpz_class(1) << static_cast<mp_bitcnt_t>(std::labs(k));
    return k >= 0 ? Scalar(pow) : Scalar(mpz_class(1), pow);
}

// System of the small subspace inside the (possibly degenerate) space of the
// big one, with the nulls that lie in rad(big) moved to the end.
ScaledSystem small_system(const QuadraticSpace& big_space, const Mat& B, const Subspace& small) {
    const ScaledSystem s = scaled_system(big_space, small);
    const std::vector<Vec> zs = s.null();
    const Subspace rad_big = radical(big_space);
    std::vector<Vec> tail = zs.empty() || rad_big.dim() == 0 ? std::vector<Vec>{} : intersect(zs, rad_big.basis());

    std::vector<Vec> front;
    std::vector<Vec> all = tail;
    std::size_t r = span_dim(all, big_space.dim());
    for (const auto& z : zs) {
        all.push_back(z);
        const std::size_t r2 = span_dim(all, big_space.dim());
        if (r2 > r) {
            front.push_back(z);
            r = r2;
        } else {
            all.pop_back();
        }
    }

    ScaledSystem out;
    out.pattern = s.pattern;
    for (std::size_t i = 0; i < s.vectors.size(); ++i)
        if (sgn(s.norms[i]) != 0) {
            out.vectors.push_back(s.vectors[i]);
            out.norms.push_back(s.norms[i]);
        }
    for (auto* group : {&front, &tail})
        for (auto& z : *group) {
            out.vectors.push_back(balancing_scale(B * z) * z);
            out.norms.emplace_back(0);
        }
    return out;
}

} // namespace

Eigen::MatrixXd to_double(const Mat& m) {
    Eigen::MatrixXd d(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
    return d;
}

Eigen::MatrixXd projector(const Eigen::MatrixXd& A) {
    const Eigen::Index k = A.cols();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
    const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(A.rows(), k);
    return Q * Q.transpose();
}

ScaledSystem adapted_basis(const QuadraticSpace& space, const Flag& f) {
    const Subspace& big = f.big();
    const Mat B = big.basis_matrix();

    // Work inside `big` in its own coordinates.
    const QuadraticSpace big_space(restrict(space, big));
    std::vector<Vec> small_coords;
    for (const auto& v : f.small().basis()) {
        auto c = solve(B, v);
        if (!c) throw MalformedInput("adapted_basis: small subspace not inside big subspace");
        small_coords.push_back(std::move(*c));
    }
    const Subspace small_in_big(big.dim(), small_coords);
    const ScaledSystem inner = extend_basis(big_space, small_in_big, small_system(big_space, B, small_in_big));

    ScaledSystem big_sys;
    big_sys.pattern = inner.pattern;
    big_sys.norms = inner.norms;
    for (std::size_t i = 0; i < inner.vectors.size(); ++i) {
        const Vec v = B * inner.vectors[i];
        big_sys.vectors.push_back(sgn(inner.norms[i]) == 0 ? balancing_scale(v) * v : v);
    }
    return extend_basis(space, big, big_sys);
}

IsometryWitness isometry_witness(int p, int q, const Flag& f1, const Flag& f2) {
    const QuadraticSpace space = QuadraticSpace::standard(p, q);
    if (f1.ambient_dim() != space.dim() || f2.ambient_dim() != space.dim())
        throw MalformedInput("isometry_witness: flag ambient dimension is not p + q");
    if (f1.small().dim() != f2.small().dim() || f1.big().dim() != f2.big().dim())
        throw MalformedInput("isometry_witness: flags have different types (k1, k2)");
    const FlagInvariants i1 = flag_invariants(space, f1);
    const FlagInvariants i2 = flag_invariants(space, f2);
    if (i1 != i2) throw PreconditionError("inequivalent: " + invariant_difference(i1, i2));

    const ScaledSystem b1 = adapted_basis(space, f1);
    const ScaledSystem b2 = adapted_basis(space, f2);
    const std::size_t n = space.dim();

    // g = Σ_i sign_i / sqrt(|m1_i m2_i|) · b1_i (J b2_i)ᵀ sends b2_i/√|m2_i| to b1_i/√|m1_i|.
    // Each outer product is exact; only the square roots are irrational, so the
    // sum is accumulated in extended precision and rounded once at the end.
    constexpr mp_bitcnt_t kBits = 256;
    const Mat& J = space.gram();
    std::vector<mpf_class> acc(n * n, mpf_class(0, kBits));
    for (std::size_t i = 0; i < n; ++i) {
        const Scalar m = b1.norms[i] * b2.norms[i];
        mpf_class c(abs(m), kBits);
        c = sqrt(c);
        c = (sgn(b1.norms[i]) > 0 ? 1 : -1) / c;
        const Vec jb2 = J * b2.vectors[i];
        for (std::size_t r = 0; r < n; ++r) {
            if (sgn(b1.vectors[i][r]) == 0) continue;
            for (std::size_t s = 0; s < n; ++s) {
                if (sgn(jb2[s]) == 0) continue;
                acc[r * n + s] += c * mpf_class(b1.vectors[i][r] * jb2[s], kBits);
            }
        }
    }
    IsometryWitness out;
    out.matrix.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            out.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) = acc[r * n + s].get_d();
    const Eigen::MatrixXd Jd = to_double(J);
    out.isometry_residual = (out.matrix.transpose() * Jd * out.matrix - Jd).cwiseAbs().maxCoeff();

    const auto dist = [&](const Subspace& s1, const Subspace& s2) {
        const Eigen::MatrixXd mapped = out.matrix * to_double(s2.basis_matrix());
        return (projector(mapped) - projector(to_double(s1.basis_matrix()))).cwiseAbs().maxCoeff();
    };
    out.small_distance = dist(f1.small(), f2.small());
    out.big_distance = dist(f1.big(), f2.big());

    if (!(out.isometry_residual <= kWitnessTolerance && out.small_distance <= kWitnessTolerance &&
          out.big_distance <= kWitnessTolerance)) {
        std::ostringstream os;
        os << "witness residuals above tolerance: isometry " << out.isometry_residual << ", small "
           << out.small_distance << ", big " << out.big_distance;
        throw WitnessFailure(os.str());
    }
    return out;
}

} // namespace h3m
