#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "h3m/enumerate.hpp"
#include "h3m/heisenberg.hpp"
#include "h3m/sampling.hpp"
#include "h3m/verify.hpp"

using namespace h3m;

namespace {

std::set<int> observed(int p, int q, const EnumerationResult& r) {
    std::set<int> out;
    for (const auto& inv : r.invariants) out.insert(class_of_flag(p, q, inv));
    return out;
}

std::set<int> admissible(int p, int q) {
    const auto v = admissible_classes(p, q).ids();
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("sign vectors") {
    CHECK(sign_vectors(1).size() == 1);
    CHECK(sign_vectors(3).size() == 13);  // (3^3 - 1) / 2
    CHECK(sign_vectors(4, 2).size() == 4 + 12);
    for (const auto& v : sign_vectors(4)) {
        std::size_t lead = 0;
        while (v[lead] == 0) ++lead;
        CHECK(v[lead] == 1);
    }
}

TEST_CASE("fast enumeration matches the brute-force reference") {
    for (auto [p, q] : {std::pair{2, 2}, {3, 1}, {1, 3}}) {
        CAPTURE(p);
        CAPTURE(q);
        const EnumerationResult fast = enumerate_flags(p, q, {Exec::Serial, 0});
        const EnumerationResult ref = enumerate_flags_reference(p, q);
        CHECK(fast.invariants == ref.invariants);
        CHECK(fast.matsuki == ref.matsuki);
        CHECK(fast.planes == ref.planes);
        CHECK(fast.flags == ref.flags);
    }
}

TEST_CASE("serial and parallel enumeration agree") {
    for (auto [p, q] : {std::pair{2, 2}, {3, 1}, {3, 2}}) {
        const EnumerationResult s = enumerate_flags(p, q, {Exec::Serial, 0});
        const EnumerationResult par = enumerate_flags(p, q, {Exec::Parallel, 0});
        CHECK(s.invariants == par.invariants);
        CHECK(s.matsuki == par.matsuki);
        CHECK(s.planes == par.planes);
        CHECK(s.flags == par.flags);
        REQUIRE(s.examples.size() == par.examples.size());
        for (const auto& [inv, f] : s.examples) {
            CHECK(par.examples.at(inv).small().basis_matrix() == f.small().basis_matrix());
            CHECK(par.examples.at(inv).big().basis_matrix() == f.big().basis_matrix());
        }
    }
}

TEST_CASE("observed classes equal the admissible set") {
    for (auto [p, q] : {std::pair{2, 2}, {3, 1}, {3, 2}, {2, 3}}) {
        CAPTURE(p);
        CAPTURE(q);
        const EnumerationResult r = enumerate_flags(p, q);
        CHECK(observed(p, q, r) == admissible(p, q));
        CHECK(r.matsuki.size() == r.invariants.size());
    }
    const EnumerationResult r = enumerate_flags(4, 3, {Exec::Parallel, 3});
    CHECK(observed(4, 3, r) == admissible(4, 3));
}

TEST_CASE("property: exact O(p,q) samples") {
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const int q = 1 + t % 3, p = 1 + (t / 3) % 4;
        const Mat J = QuadraticSpace::standard(p, q).gram();
        const Mat g = random_opq(rng, p, q);
        CAPTURE(t);
        REQUIRE(g.transpose() * J * g == J);
        const Mat s = signed_block_permutation(rng, p, q);
        REQUIRE(s.transpose() * J * s == J);
    }
}

TEST_CASE("property: random flags are valid and keep their invariants under O(p,q)") {
    Rng rng(4);
    for (int t = 0; t < 200; ++t) {
        const int p = 2 + t % 2, q = 2;
        const std::size_t n = static_cast<std::size_t>(p + q);
        const QuadraticSpace space = QuadraticSpace::standard(p, q);
        const Flag f = random_flag(rng, n, 1, n - 2);
        REQUIRE(f.small().dim() == 1);
        REQUIRE(f.big().dim() == n - 2);
        REQUIRE(f.big().contains(f.small()));
        const Flag g = transform(random_opq(rng, p, q), f);
        REQUIRE(flag_invariants(space, g) == flag_invariants(space, f));
    }
}

TEST_CASE("equivalent pairs share invariants") {
    Rng rng(6);
    const QuadraticSpace space = QuadraticSpace::standard(3, 2);
    for (int t = 0; t < 50; ++t) {
        const auto [a, b] = equivalent_flag_pair(rng, 3, 2);
        CHECK(flag_invariants(space, a) == flag_invariants(space, b));
    }
}

TEST_CASE("verify passes for small signatures") {
    for (auto [p, q] : {std::pair{2, 2}, {3, 1}}) {
        const VerifyReport rep = verify(p, q, {1, 50, Exec::Parallel, 0});
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.passed);
        }
        CHECK(rep.passed());
        CHECK(rep.matsuki_count == rep.invariant_count);
    }
}

TEST_CASE("invariance checks are deterministic across execution modes") {
    const CheckResult a = parabolic_invariance(3, 2, 9, 40, Exec::Serial);
    const CheckResult b = parabolic_invariance(3, 2, 9, 40, Exec::Parallel);
    CHECK(a.passed);
    CHECK(a.detail == b.detail);
    const CheckResult c = opq_invariance(3, 2, 9, 40, Exec::Serial);
    const CheckResult d = opq_invariance(3, 2, 9, 40, Exec::Parallel);
    CHECK(c.passed);
    CHECK(c.detail == d.detail);
}
