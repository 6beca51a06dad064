#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "h3m/enumerate.hpp"
#include "h3m/errors.hpp"
#include "h3m/sampling.hpp"
#include "h3m/witness.hpp"

using namespace h3m;

namespace {

Vec e(std::size_t n, std::size_t i) { return unit_vec(n, i - 1); }
Subspace sp(std::size_t n, std::vector<Vec> b) { return Subspace(n, std::move(b)); }

// Residuals recomputed here rather than trusted from the witness.
double isometry_residual(const Eigen::MatrixXd& g, int p, int q) {
    const Eigen::MatrixXd J = to_double(QuadraticSpace::standard(p, q).gram());
    return (g.transpose() * J * g - J).cwiseAbs().maxCoeff();
}

double mapping_residual(const Eigen::MatrixXd& g, const Subspace& target, const Subspace& source) {
    return (projector(g * to_double(source.basis_matrix())) - projector(to_double(target.basis_matrix())))
        .cwiseAbs()
        .maxCoeff();
}

} // namespace

TEST_CASE("identical flags give the identity") {
    const Flag f(sp(4, {e(4, 1)}), sp(4, {e(4, 1), e(4, 2)}));
    const IsometryWitness w = isometry_witness(2, 2, f, f);
    CHECK((w.matrix - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(w.isometry_residual == 0.0);
}

TEST_CASE("swap example") {
    const Flag f1(sp(4, {e(4, 1)}), sp(4, {e(4, 1), e(4, 2)}));
    const Flag f2(sp(4, {e(4, 2)}), sp(4, {e(4, 1), e(4, 2)}));
    const IsometryWitness w = isometry_witness(2, 2, f1, f2);
    Eigen::MatrixXd swap = Eigen::MatrixXd::Identity(4, 4);
    swap.row(0).swap(swap.row(1));
    CHECK((w.matrix - swap).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(isometry_residual(w.matrix, 2, 2) <= kWitnessTolerance);
}

TEST_CASE("isotropic flags related by a hyperbolic rotation") {
    // R = [[5/3,-4/3],[-4/3,5/3]] on (e1, e3), identity on (e2, e4); (5/3)² - (4/3)² = 1.
    Mat R = Mat::identity(4);
    R(0, 0) = Scalar(5, 3);
    R(0, 2) = Scalar(-4, 3);
    R(2, 0) = Scalar(-4, 3);
    R(2, 2) = Scalar(5, 3);
    const Mat J = QuadraticSpace::standard(2, 2).gram();
    REQUIRE(R.transpose() * J * R == J);
    const Flag f2(sp(4, {e(4, 1) + e(4, 3)}), sp(4, {e(4, 1) + e(4, 3), e(4, 2) + e(4, 4)}));
    const Flag f1 = transform(R, f2);
    const IsometryWitness w = isometry_witness(2, 2, f1, f2);
    CHECK(isometry_residual(w.matrix, 2, 2) <= kWitnessTolerance);
    CHECK(mapping_residual(w.matrix, f1.small(), f2.small()) <= kWitnessTolerance);
    CHECK(mapping_residual(w.matrix, f1.big(), f2.big()) <= kWitnessTolerance);
}

TEST_CASE("inequivalent flags are rejected with the differing invariant") {
    const Flag f1(sp(4, {e(4, 1)}), sp(4, {e(4, 1), e(4, 2)}));
    const Flag f2(sp(4, {e(4, 3)}), sp(4, {e(4, 3), e(4, 4)}));
    try {
        isometry_witness(2, 2, f1, f2);
        FAIL("expected a precondition error");
    } catch (const PreconditionError& err) {
        CHECK(std::string(err.what()) == "inequivalent: sig_big (2,0,0) ≠ (0,2,0)");
    }
    const Flag g(sp(4, {e(4, 1)}), sp(4, {e(4, 1), e(4, 2), e(4, 3)}));
    CHECK_THROWS_AS(isometry_witness(2, 2, f1, g), MalformedInput);
}

TEST_CASE("adapted bases are exact scaled bases") {
    for (auto [p, q] : {std::pair{2, 2}, {3, 1}, {3, 2}}) {
        const QuadraticSpace space = QuadraticSpace::standard(p, q);
        const EnumerationResult r = enumerate_flags(p, q);
        for (const auto& [inv, f] : r.examples) {
            const ScaledSystem b = adapted_basis(space, f);
            REQUIRE(is_valid_system(space, b));
            REQUIRE(b.pattern == Signature{p, q, 0});
            REQUIRE(span_dim(b.vectors, space.dim()) == space.dim());
        }
    }
}

TEST_CASE("property: witnesses for random equivalent pairs") {
    Rng rng(99);
    for (auto [p, q] : {std::pair{2, 2}, {3, 1}, {3, 3}, {2, 3}}) {
        CAPTURE(p);
        CAPTURE(q);
        for (int t = 0; t < 100; ++t) {
            const auto [f1, f2] = equivalent_flag_pair(rng, p, q);
            CAPTURE(t);
            const IsometryWitness w = isometry_witness(p, q, f1, f2);
            REQUIRE(isometry_residual(w.matrix, p, q) <= kWitnessTolerance);
            REQUIRE(mapping_residual(w.matrix, f1.small(), f2.small()) <= kWitnessTolerance);
            REQUIRE(mapping_residual(w.matrix, f1.big(), f2.big()) <= kWitnessTolerance);
        }
        const EnumerationResult r = enumerate_flags(p, q, {Exec::Parallel, 3});
        std::vector<Flag> flags;
        for (const auto& [inv, f] : r.examples) flags.push_back(f);
        for (std::size_t i = 0; i < flags.size(); ++i)
            for (std::size_t j = 0; j < flags.size(); ++j)
                if (i != j) REQUIRE_THROWS_AS(isometry_witness(p, q, flags[i], flags[j]), PreconditionError);
    }
}

TEST_CASE("property: badly conditioned pairs never yield a silent bad witness") {
    Rng rng(5);
    for (auto [p, q] : {std::pair{2, 2}, {3, 3}}) {
        const EnumerationResult r = enumerate_flags(p, q, {Exec::Parallel, 3});
        std::vector<Flag> flags;
        for (const auto& [inv, f] : r.examples) flags.push_back(f);
        for (int t = 0; t < 24; ++t) {
            const Flag& base = flags[static_cast<std::size_t>(t) % flags.size()];
            const Flag f1 = transform(random_opq(rng, p, q), base);
            const Flag f2 = transform(random_opq(rng, p, q), base);
            CAPTURE(t);
            try {
                const IsometryWitness w = isometry_witness(p, q, f1, f2);
                CHECK(isometry_residual(w.matrix, p, q) <= kWitnessTolerance);
                CHECK(mapping_residual(w.matrix, f1.big(), f2.big()) <= kWitnessTolerance);
            } catch (const WitnessFailure&) {
            }
        }
    }
}
