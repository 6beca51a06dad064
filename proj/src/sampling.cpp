#include "h3m/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace h3m {

Scalar random_rational(Rng& rng, int num_max, int den_max) {
    std::uniform_int_distribution<int> num(-num_max, num_max), den(1, den_max);
    Scalar x(num(rng));
    x /= den(rng);
    return x;
}

Vec random_vec(Rng& rng, std::size_t n, int num_max, int den_max) {
    Vec v(n);
    for (auto& x : v) x = random_rational(rng, num_max, den_max);
    return v;
}

Mat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int num_max, int den_max) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng, num_max, den_max);
    return m;
}

Mat random_symmetric(Rng& rng, std::size_t n, int num_max, int den_max) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = random_rational(rng, num_max, den_max);
    return m;
}

Mat random_invertible(Rng& rng, std::size_t n) {
    for (;;) {
        Mat m = random_matrix(rng, n, n);
        if (sgn(det(m)) != 0) return m;
    }
}

Mat random_nondegenerate_symmetric(Rng& rng, std::size_t n) {
    for (;;) {
        Mat m = random_symmetric(rng, n);
        if (sgn(det(m)) != 0) return m;
    }
}

Mat cayley_element(Rng& rng, int p, int q) {
    const auto n = static_cast<std::size_t>(p + q);
    const Mat J = QuadraticSpace::standard(p, q).gram();
    const Mat I = Mat::identity(n);
    for (;;) {
        Mat A(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                A(i, j) = random_rational(rng);
                A(j, i) = -A(i, j);
            }
        const Mat S = J * A;
        const Mat plus = I + S;
        if (sgn(det(plus)) == 0) continue;
        return (I - S) * invert(plus);
    }
}

Mat signed_block_permutation(Rng& rng, int p, int q) {
    const auto n = static_cast<std::size_t>(p + q);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.begin() + p, rng);
    std::shuffle(perm.begin() + p, perm.end(), rng);
    std::bernoulli_distribution flip(0.5);
    Mat m(n, n);
    for (std::size_t j = 0; j < n; ++j) m(perm[j], j) = flip(rng) ? -1 : 1;
    return m;
}

Mat random_opq(Rng& rng, int p, int q) {
    const Mat c = cayley_element(rng, p, q);
    return signed_block_permutation(rng, p, q) * c;
}

Subspace transform(const Mat& g, const Subspace& W) {
    std::vector<Vec> b;
    for (const auto& v : W.basis()) b.push_back(g * v);
    return Subspace(W.ambient_dim(), std::move(b));
}

Flag transform(const Mat& g, const Flag& f) { return Flag(transform(g, f.small()), transform(g, f.big())); }

Flag random_flag(Rng& rng, std::size_t n, std::size_t k1, std::size_t k2) {
    for (;;) {
        std::vector<Vec> vs;
        for (std::size_t i = 0; i < k2; ++i) vs.push_back(random_vec(rng, n, 1, 1));
        if (span_dim(vs, n) != k2) continue;
        std::vector<Vec> small(vs.begin(), vs.begin() + static_cast<long>(k1));
        return Flag(Subspace(n, std::move(small)), Subspace(n, std::move(vs)));
    }
}

std::pair<Flag, Flag> equivalent_flag_pair(Rng& rng, int p, int q) {
    const auto n = static_cast<std::size_t>(p + q);
    const QuadraticSpace space = QuadraticSpace::standard(p, q);
    Flag f1 = random_flag(rng, n, 1, n - 2);
    const FlagInvariants inv = flag_invariants(space, f1);
    for (;;) {
        Flag f2 = random_flag(rng, n, 1, n - 2);
        if (flag_invariants(space, f2) == inv) return {std::move(f1), std::move(f2)};
    }
}

} // namespace h3m
