#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "h3m/errors.hpp"
#include "h3m/forms.hpp"
#include "h3m/sampling.hpp"

using namespace h3m;

namespace {

Vec e(std::size_t n, std::size_t i) { return unit_vec(n, i - 1); }  // 1-based
Subspace sp(std::size_t n, std::vector<Vec> b) { return Subspace(n, std::move(b)); }
const QuadraticSpace I22 = QuadraticSpace::standard(2, 2);
const QuadraticSpace I33 = QuadraticSpace::standard(3, 3);

Signature sig(int p, int q, int r) { return {p, q, r}; }

// The identities an extension must satisfy: W's positives/negatives are
// the leading α/β, each non-radical null z_i equals α_{s+i} + β_{t+i}, and the
// radical nulls lead the γ block.
void check_extension(const QuadraticSpace& space, const ScaledSystem& w, const ScaledSystem& ext) {
    REQUIRE(is_valid_system(space, ext));
    REQUIRE(ext.vectors.size() == space.dim());
    REQUIRE(span_dim(ext.vectors, space.dim()) == space.dim());
    const auto xs = w.positive(), ys = w.negative(), zs = w.null();
    const auto al = ext.positive(), be = ext.negative(), ga = ext.null();
    for (std::size_t i = 0; i < xs.size(); ++i) REQUIRE(al[i] == xs[i]);
    for (std::size_t i = 0; i < ys.size(); ++i) REQUIRE(be[i] == ys[i]);
    const Subspace rad = radical(space);
    std::size_t split = 0, kept = 0;
    for (const auto& z : zs) {
        if (rad.contains(z)) {
            REQUIRE(ga[kept++] == z);
        } else {
            REQUIRE(al[xs.size() + split] + be[ys.size() + split] == z);
            ++split;
        }
    }
}

} // namespace

TEST_CASE("restrict") {
    CHECK(restrict(I22, sp(4, {e(4, 1), e(4, 2)})) == Mat::identity(2));
    CHECK(restrict(I22, sp(4, {e(4, 1) + e(4, 3)})) == Mat::zero(1, 1));
    CHECK(restrict(I22, sp(4, {e(4, 1) + e(4, 3), e(4, 2) + e(4, 4)})) == Mat::zero(2, 2));
    CHECK_THROWS_AS(restrict(I22, sp(3, {e(3, 1)})), MalformedInput);
}

TEST_CASE("signature") {
    CHECK(signature(I22) == sig(2, 2, 0));
    CHECK(signature(QuadraticSpace::standard(4, 1)) == sig(4, 1, 0));
    CHECK(signature(I22, sp(4, {e(4, 1) + e(4, 3), e(4, 2) + e(4, 4)})) == sig(0, 0, 2));
    CHECK(signature(I33, sp(6, {e(6, 1), e(6, 2), e(6, 3), e(6, 4)})) == sig(3, 1, 0));
}

TEST_CASE("radical") {
    const QuadraticSpace d(Mat::diagonal(std::vector<Scalar>{1, 0, -1}));
    CHECK(radical(d).same_span(sp(3, {e(3, 2)})));
    CHECK(radical(I22).dim() == 0);
    CHECK(radical(I22, sp(4, {e(4, 1), e(4, 2) + e(4, 4)})).same_span(sp(4, {e(4, 2) + e(4, 4)})));
}

TEST_CASE("refined line signature") {
    const Subspace V = sp(4, {e(4, 1), e(4, 2) + e(4, 4)});
    CHECK(refined_line_signature(I22, V, sp(4, {e(4, 2) + e(4, 4)})) == LineType::Radical);
    CHECK(refined_line_signature(I22, V, sp(4, {e(4, 1)})) == LineType::Spacelike);
    const Subspace V2 = sp(4, {e(4, 1), e(4, 3)});
    CHECK(refined_line_signature(I22, V2, sp(4, {e(4, 1) + e(4, 3)})) == LineType::Lightlike);
    CHECK(refined_line_signature(I22, V2, sp(4, {e(4, 3)})) == LineType::Timelike);
    CHECK_THROWS_AS(refined_line_signature(I22, V2, sp(4, {e(4, 2)})), PreconditionError);
    CHECK_THROWS_AS(refined_line_signature(I22, sp(4, {e(4, 1)}), sp(4, {e(4, 1)})), PreconditionError);
    CHECK_THROWS_AS(refined_line_signature(I22, V2, V2), PreconditionError);
}

TEST_CASE("flag invariants and equivalence") {
    const Flag f1(sp(6, {e(6, 1)}), sp(6, {e(6, 1), e(6, 2), e(6, 3), e(6, 4)}));
    CHECK(flag_invariants(I33, f1) == FlagInvariants{sig(3, 1, 0), sig(1, 0, 0), 0});
    const Flag f2(sp(4, {e(4, 1)}), sp(4, {e(4, 1), e(4, 2)}));
    CHECK(flag_invariants(I22, f2) == FlagInvariants{sig(2, 0, 0), sig(1, 0, 0), 0});
    const Flag f3(sp(4, {e(4, 1) + e(4, 3)}), sp(4, {e(4, 1) + e(4, 3), e(4, 2) + e(4, 4)}));
    CHECK(flag_invariants(I22, f3) == FlagInvariants{sig(0, 0, 2), sig(0, 0, 1), 1});

    const Flag g(sp(4, {e(4, 3)}), sp(4, {e(4, 3), e(4, 4)}));
    const Flag h(sp(4, {e(4, 2)}), sp(4, {e(4, 1), e(4, 2)}));
    CHECK(flags_equivalent(I22, f2, f2));
    CHECK_FALSE(flags_equivalent(I22, f2, g));
    CHECK(invariant_difference(flag_invariants(I22, f2), flag_invariants(I22, g)) == "sig_big (2,0,0) ≠ (0,2,0)");
    CHECK(flags_equivalent(I22, f2, h));

    const QuadraticSpace degenerate(Mat::diagonal(std::vector<Scalar>{1, -1, 0}));
    CHECK_THROWS_AS(flag_invariants(degenerate, Flag(sp(3, {e(3, 1)}), sp(3, {e(3, 1), e(3, 2)}))),
                    PreconditionError);
    CHECK_THROWS_AS(Flag(sp(4, {e(4, 3)}), sp(4, {e(4, 1), e(4, 2)})), MalformedInput);
}

TEST_CASE("matsuki data") {
    const Flag f1(sp(6, {e(6, 1)}), sp(6, {e(6, 1), e(6, 2), e(6, 3), e(6, 4)}));
    CHECK(matsuki_data(f1, 3, 3) == MatsukiData{3, 1, 0, 1, 0, 0, 1});
    const Flag f2(sp(4, {e(4, 1) + e(4, 3)}), sp(4, {e(4, 1) + e(4, 3), e(4, 2) + e(4, 4)}));
    CHECK(matsuki_data(f2, 2, 2) == MatsukiData{0, 0, 2, 0, 0, 1, 0});
    const Flag f3(sp(4, {e(4, 3)}), sp(4, {e(4, 3), e(4, 4)}));
    CHECK(matsuki_data(f3, 2, 2) == MatsukiData{0, 2, 0, 0, 1, 0, 1});
    CHECK_THROWS_AS(matsuki_data(f3, 3, 2), MalformedInput);
}

TEST_CASE("possible signature sets") {
    using V = std::vector<Signature>;
    const auto sorted = [](V v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(possible_codim2_signatures(3, 3)) ==
          sorted(V{sig(1, 3, 0), sig(2, 2, 0), sig(3, 1, 0), sig(1, 2, 1), sig(2, 1, 1), sig(1, 1, 2)}));
    CHECK(sorted(possible_codim2_signatures(2, 1)) == sorted(V{sig(0, 1, 0), sig(1, 0, 0), sig(0, 0, 1)}));
    CHECK(sorted(possible_codim2_signatures(3, 1)) == sorted(V{sig(1, 1, 0), sig(2, 0, 0), sig(1, 0, 1)}));

    using L = std::vector<LineType>;
    CHECK(possible_line_signatures(2, 0, 1) == L{LineType::Spacelike, LineType::Radical});
    CHECK(possible_line_signatures(1, 1, 0) == L{LineType::Spacelike, LineType::Timelike, LineType::Lightlike});
    CHECK(possible_line_signatures(0, 0, 1) == L{LineType::Radical});
}

TEST_CASE("scaled system") {
    const QuadraticSpace d(Mat::diagonal(std::vector<Scalar>{3, -5, 0}));
    const ScaledSystem s = scaled_system(d, Subspace::whole(3));
    CHECK(s.vectors == std::vector<Vec>{e(3, 1), e(3, 2), e(3, 3)});
    CHECK(s.norms == std::vector<Scalar>{3, -5, 0});
    CHECK(s.pattern == sig(1, 1, 1));

    const QuadraticSpace h(Mat{{0, 1}, {1, 0}});
    CHECK(scaled_system(h, Subspace::whole(2)).norms == std::vector<Scalar>{2, -2});
    const ScaledSystem pd = scaled_system(I22, sp(4, {e(4, 1), e(4, 1) + e(4, 2)}));
    CHECK(pd.pattern == sig(2, 0, 0));
    CHECK(is_valid_system(I22, pd));

    // Radical vectors come last and span the radical.
    const Subspace W = sp(4, {e(4, 2) + e(4, 4), e(4, 1)});
    const ScaledSystem ws = scaled_system(I22, W);
    REQUIRE(ws.pattern == sig(1, 0, 1));
    CHECK(Subspace(4, ws.null()).same_span(radical(I22, W)));
}

TEST_CASE("lightlike split") {
    const Subspace all = Subspace::whole(4);
    for (const Vec& v : {e(4, 1) + e(4, 3), Vec{1, 1, 1, 1}, e(4, 2) + e(4, 4)}) {
        const LightlikeSplit s = lightlike_split(I22, all, v);
        CHECK(s.plus + s.minus == v);
        CHECK(I22.inner(s.plus, s.plus) == 1);
        CHECK(I22.inner(s.minus, s.minus) == -1);
        CHECK(I22.inner(s.plus, s.minus) == 0);
    }
    const LightlikeSplit s = lightlike_split(I22, all, e(4, 1) + e(4, 3));
    CHECK(s.plus == e(4, 1));
    CHECK(s.minus == e(4, 3));

    const Subspace V = sp(4, {e(4, 1), e(4, 2) + e(4, 4)});
    CHECK_THROWS_AS(lightlike_split(I22, V, e(4, 2) + e(4, 4)), PreconditionError);
    CHECK_THROWS_AS(lightlike_split(I22, all, e(4, 1)), PreconditionError);
}

TEST_CASE("extend nullsystem") {
    const ScaledSystem a = extend_nullsystem(I22, {e(4, 1) + e(4, 3)});
    REQUIRE(is_valid_system(I22, a));
    CHECK(a.vectors[0] == e(4, 1));
    CHECK(a.vectors[2] == e(4, 3));
    CHECK(a.vectors[0] + a.vectors[2] == e(4, 1) + e(4, 3));

    const ScaledSystem b = extend_nullsystem(I22, {e(4, 1) + e(4, 3), e(4, 2) + e(4, 4)});
    CHECK(b.vectors == std::vector<Vec>{e(4, 1), e(4, 2), e(4, 3), e(4, 4)});

    const ScaledSystem c = extend_nullsystem(I22, {});
    CHECK(c.pattern == sig(2, 2, 0));
    CHECK_THROWS_AS(extend_nullsystem(I22, {e(4, 1) + e(4, 3), e(4, 1) + e(4, 3)}), PreconditionError);
    CHECK_THROWS_AS(extend_nullsystem(I22, {e(4, 1)}), PreconditionError);
}

TEST_CASE("extend basis") {
    SUBCASE("whole nondegenerate space") {
        const ScaledSystem w = scaled_system(I22, Subspace::whole(4));
        CHECK(extend_basis(I22, Subspace::whole(4), w).vectors == w.vectors);
    }
    SUBCASE("degenerate subspace") {
        const Subspace W = sp(4, {e(4, 1), e(4, 2) + e(4, 4)});
        const ScaledSystem w{{e(4, 1), e(4, 2) + e(4, 4)}, {1, 0}, sig(1, 0, 1)};
        const ScaledSystem ext = extend_basis(I22, W, w);
        check_extension(I22, w, ext);
        CHECK(ext.positive()[1] == e(4, 2));
        CHECK(ext.negative()[0] == e(4, 4));
    }
    SUBCASE("line") {
        const ScaledSystem w{{e(4, 1)}, {1}, sig(1, 0, 0)};
        const ScaledSystem ext = extend_basis(I22, sp(4, {e(4, 1)}), w);
        check_extension(I22, w, ext);
        CHECK(ext.vectors.front() == e(4, 1));
    }
    SUBCASE("degenerate ambient space") {
        const QuadraticSpace d(Mat::diagonal(std::vector<Scalar>{1, -1, 0}));
        const Subspace W = sp(3, {e(3, 1) + e(3, 2), e(3, 3)});
        const ScaledSystem w{{e(3, 1) + e(3, 2), e(3, 3)}, {0, 0}, sig(0, 0, 2)};
        check_extension(d, w, extend_basis(d, W, w));
        const ScaledSystem wrong{{e(3, 3), e(3, 1) + e(3, 2)}, {0, 0}, sig(0, 0, 2)};
        CHECK_THROWS_AS(extend_basis(d, W, wrong), PreconditionError);
    }
}

TEST_CASE("subspaces equivalent") {
    CHECK(subspaces_equivalent(I22, sp(4, {e(4, 1)}), sp(4, {e(4, 2)})));
    CHECK_FALSE(subspaces_equivalent(I22, sp(4, {e(4, 1)}), sp(4, {e(4, 3)})));
    const QuadraticSpace d(Mat::diagonal(std::vector<Scalar>{1, -1, 0}));
    CHECK_FALSE(subspaces_equivalent(d, sp(3, {e(3, 3)}), sp(3, {e(3, 1) + e(3, 2)})));
}

TEST_CASE("property: basis independence") {
    Rng rng(101);
    for (int t = 0; t < 300; ++t) {
        const int p = 1 + t % 3, q = 1 + (t / 3) % 3;
        const auto n = static_cast<std::size_t>(p + q);
        const QuadraticSpace space = QuadraticSpace::standard(p, q);
        const std::size_t k2 = 2 + static_cast<std::size_t>(t) % (n - 1);
        const Flag f = random_flag(rng, n, 1, k2);
        // Random change of basis of both subspaces.
        const Mat C = random_invertible(rng, k2);
        const Mat B2 = f.big().basis_matrix() * C;
        const Subspace big2(n, B2.columns());
        const Subspace small2(n, {Scalar(1 + t % 4) * f.small().basis()[0]});
        CAPTURE(t);
        REQUIRE(signature(space, big2) == signature(space, f.big()));
        REQUIRE(radical(space, big2).dim() == radical(space, f.big()).dim());
        REQUIRE(radical(space, big2).same_span(radical(space, f.big())));
        REQUIRE(refined_line_signature(space, big2, small2) == refined_line_signature(space, f.big(), f.small()));
        REQUIRE(flag_invariants(space, Flag(small2, big2)) == flag_invariants(space, f));
    }
}

TEST_CASE("property: O(p,q) invariance") {
    Rng rng(202);
    for (auto [p, q] : {std::pair{2, 2}, {3, 2}, {3, 3}, {3, 1}}) {
        const auto n = static_cast<std::size_t>(p + q);
        const QuadraticSpace space = QuadraticSpace::standard(p, q);
        const Mat J = space.gram();
        for (int t = 0; t < 100; ++t) {
            const Mat g = random_opq(rng, p, q);
            REQUIRE(g.transpose() * J * g == J);
            const Flag f = random_flag(rng, n, 1 + static_cast<std::size_t>(t) % 2, n - 1);
            REQUIRE(flag_invariants(space, transform(g, f)) == flag_invariants(space, f));
        }
    }
}

TEST_CASE("property: consistency with possible signature sets") {
    Rng rng(303);
    for (int t = 0; t < 400; ++t) {
        const int p = 1 + t % 4, q = 1 + (t / 4) % 3;
        const auto n = static_cast<std::size_t>(p + q);
        if (n < 4) continue;
        const QuadraticSpace space = QuadraticSpace::standard(p, q);
        const Flag f = random_flag(rng, n, 1, n - 2);
        const FlagInvariants inv = flag_invariants(space, f);
        const auto codim2 = possible_codim2_signatures(p, q);
        REQUIRE(std::find(codim2.begin(), codim2.end(), inv.sig_big) != codim2.end());
        const auto lines = possible_line_signatures(inv.sig_big);
        REQUIRE(std::find(lines.begin(), lines.end(), refined_line_signature(space, f.big(), f.small())) != lines.end());
    }
}

TEST_CASE("property: split identities") {
    Rng rng(404);
    for (int t = 0; t < 200; ++t) {
        const int p = 1 + t % 3, q = 1 + (t / 3) % 3;
        const auto n = static_cast<std::size_t>(p + q);
        const QuadraticSpace space = QuadraticSpace::standard(p, q);
        const Mat g = random_opq(rng, p, q);
        const int k = 1 + t % std::min(p, q);
        std::vector<Vec> nulls;
        for (int i = 0; i < k; ++i) nulls.push_back(g * (unit_vec(n, i) + unit_vec(n, p + i)));
        CAPTURE(t);

        const LightlikeSplit s = lightlike_split(space, Subspace::whole(n), nulls[0]);
        REQUIRE(s.plus + s.minus == nulls[0]);
        REQUIRE(sgn(space.inner(s.plus, s.plus)) > 0);
        REQUIRE(sgn(space.inner(s.minus, s.minus)) < 0);
        REQUIRE(sgn(space.inner(s.plus, s.minus)) == 0);

        const ScaledSystem ext = extend_nullsystem(space, nulls);
        REQUIRE(is_valid_system(space, ext));
        REQUIRE(ext.pattern == sig(p, q, 0));
        const auto xs = ext.positive(), ys = ext.negative();
        for (int i = 0; i < k; ++i) REQUIRE(xs[i] + ys[i] == nulls[i]);
    }
}

TEST_CASE("property: extend_basis on random subspaces") {
    Rng rng(505);
    for (int t = 0; t < 200; ++t) {
        const int p = 1 + t % 3, q = 1 + (t / 3) % 3;
        const auto n = static_cast<std::size_t>(p + q);
        const QuadraticSpace space = QuadraticSpace::standard(p, q);
        const std::size_t k = 1 + static_cast<std::size_t>(t) % n;
        const Flag f = random_flag(rng, n, k == n ? k - 1 : k, k == n ? k : k + 1);
        const Subspace W = transform(random_opq(rng, p, q), f.small());
        const ScaledSystem w = scaled_system(space, W);
        CAPTURE(t);
        check_extension(space, w, extend_basis(space, W, w));
    }
}
