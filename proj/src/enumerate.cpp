#include "h3m/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "h3m/errors.hpp"

namespace h3m {

namespace {

using IntVec = std::vector<int>;

int dot(const IntVec& a, const IntVec& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec to_vec(const IntVec& v) { return Vec(v.begin(), v.end()); }

std::vector<Scalar> plane_key(const IntVec& a, const IntVec& b) {
    Mat m(2, a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        m(0, j) = a[j];
        m(1, j) = b[j];
    }
    const Mat r = rref(m);
    std::vector<Scalar> key;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < a.size(); ++j) key.push_back(r(i, j));
    return key;
}

Subspace plane_of(const IntVec& a, const IntVec& b) {
    Mat m(2, a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        m(0, j) = a[j];
        m(1, j) = b[j];
    }
    return Subspace(a.size(), kernel(m));
}

struct PlaneResult {
    std::vector<std::pair<FlagInvariants, Flag>> first_seen;
    std::set<FlagInvariants> invariants;
    std::set<MatsukiData> matsuki;
    std::size_t flags = 0;
};

PlaneResult process_plane(const QuadraticSpace& space, int p, const IntVec& a, const IntVec& b,
                          const std::vector<IntVec>& lines) {
    const std::size_t n = space.dim();
    const Subspace V = plane_of(a, b);
    const SubspaceProfile prof = profile(space, V);

    std::vector<Vec> uplus, uminus;
    for (std::size_t i = 0; i < n; ++i) (static_cast<int>(i) < p ? uplus : uminus).push_back(unit_vec(n, i));
    const auto big_plus = intersect(V.basis(), uplus);
    const auto big_minus = intersect(V.basis(), uminus);
    std::vector<Vec> split = big_plus;
    split.insert(split.end(), big_minus.begin(), big_minus.end());

    MatsukiData base;
    base.c_plus = static_cast<int>(big_plus.size());
    base.c_minus = static_cast<int>(big_minus.size());
    base.c_zero = static_cast<int>(n) - 2 - base.c_plus - base.c_minus;

    PlaneResult out;
    for (const auto& v : lines) {
        if (dot(a, v) != 0 || dot(b, v) != 0) continue;
        ++out.flags;
        int norm = 0;
        bool in_plus = true, in_minus = true;
        for (std::size_t i = 0; i < n; ++i) {
            const bool positive = static_cast<int>(i) < p;
            norm += positive ? v[i] * v[i] : -v[i] * v[i];
            if (v[i] != 0) (positive ? in_minus : in_plus) = false;
        }

        FlagInvariants inv;
        inv.sig_big = prof.sig;
        inv.sig_small = norm > 0 ? Signature{1, 0, 0} : norm < 0 ? Signature{0, 1, 0} : Signature{0, 0, 1};
        const Vec x = to_vec(v);
        if (norm == 0 && prof.rad.dim() > 0 && prof.rad.contains(x)) inv.dim_small_cap_rad = 1;

        MatsukiData m = base;
        m.d_plus = in_plus ? 1 : 0;
        m.d_minus = in_minus ? 1 : 0;
        m.d_zero = 1 - m.d_plus - m.d_minus;
        m.d_pm = (in_plus || in_minus || (!split.empty() && in_span(split, x))) ? 1 : 0;

        if (out.invariants.insert(inv).second)
            out.first_seen.emplace_back(inv, Flag(Subspace(n, {x}), V));
        out.matsuki.insert(m);
    }
    return out;
}

void check_signature(int p, int q) {
    if (p < 0 || q < 0 || p + q < 3) throw PreconditionError("enumerate_flags: need p, q >= 0 and p + q >= 3");
}

} // namespace

std::vector<IntVec> sign_vectors(std::size_t n, int max_support) {
    std::vector<IntVec> out;
    IntVec v(n, -1);
    // Odometer over {-1,0,1}^n.
    for (;;) {
        std::size_t lead = 0;
        while (lead < n && v[lead] == 0) ++lead;
        const int support = static_cast<int>(std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }));
        if (lead < n && v[lead] == 1 && (max_support <= 0 || support <= max_support)) out.push_back(v);
        std::size_t i = n;
        while (i > 0 && v[i - 1] == 1) v[--i] = -1;
        if (i == 0) break;
        ++v[i - 1];
    }
    return out;
}

EnumerationResult enumerate_flags(int p, int q, const EnumerationOptions& opts) {
    check_signature(p, q);
    const auto n = static_cast<std::size_t>(p + q);
    const QuadraticSpace space = QuadraticSpace::standard(p, q);
    const auto covectors = sign_vectors(n, opts.max_support);
    const auto lines = sign_vectors(n, opts.max_support);
    const bool parallel = opts.exec == Exec::Parallel;

    // Phase 1: canonical key of span{a, b} for every pair.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < covectors.size(); ++i)
        for (std::size_t j = i + 1; j < covectors.size(); ++j) pairs.emplace_back(i, j);
    std::vector<std::vector<Scalar>> keys(pairs.size());
    const auto npairs = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (long k = 0; k < npairs; ++k) {
        const auto [i, j] = pairs[static_cast<std::size_t>(k)];
        keys[static_cast<std::size_t>(k)] = plane_key(covectors[i], covectors[j]);
    }

    // Phase 2: one representative pair per plane, in a fixed order.
    std::vector<std::size_t> order(pairs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
    std::vector<std::size_t> reps;
    for (std::size_t k = 0; k < order.size(); ++k)
        if (k == 0 || keys[order[k]] != keys[order[k - 1]]) reps.push_back(order[k]);
    keys.clear();

    // Phase 3: per-plane evaluation.
    std::vector<PlaneResult> results(reps.size());
    const auto nreps = static_cast<long>(reps.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (long k = 0; k < nreps; ++k) {
        const auto [i, j] = pairs[reps[static_cast<std::size_t>(k)]];
        results[static_cast<std::size_t>(k)] = process_plane(space, p, covectors[i], covectors[j], lines);
    }

    EnumerationResult out;
    out.planes = reps.size();
    for (auto& r : results) {
        out.flags += r.flags;
        out.invariants.insert(r.invariants.begin(), r.invariants.end());
        out.matsuki.insert(r.matsuki.begin(), r.matsuki.end());
        for (auto& [inv, f] : r.first_seen) out.examples.try_emplace(inv, std::move(f));
    }
    return out;
}

EnumerationResult enumerate_flags_reference(int p, int q) {
    check_signature(p, q);
    const auto n = static_cast<std::size_t>(p + q);
    const QuadraticSpace space = QuadraticSpace::standard(p, q);
    const auto vectors = sign_vectors(n);

    EnumerationResult out;
    std::set<std::vector<Vec>> planes;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i + 1; j < vectors.size(); ++j) {
            const Subspace V = plane_of(vectors[i], vectors[j]);
            if (!planes.insert(V.canonical_basis()).second) continue;
            for (const auto& v : vectors) {
                const Vec x = to_vec(v);
                if (!V.contains(x)) continue;
                const Flag f(Subspace(n, {x}), V);
                const FlagInvariants inv = flag_invariants(space, f);
                ++out.flags;
                out.invariants.insert(inv);
                out.matsuki.insert(matsuki_data(f, p, q));
                out.examples.try_emplace(inv, f);
            }
        }
    out.planes = planes.size();
    return out;
}

} // namespace h3m
