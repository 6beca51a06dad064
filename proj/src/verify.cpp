#include "h3m/verify.hpp"

#include <algorithm>
#include <sstream>

#include "h3m/errors.hpp"
#include "h3m/sampling.hpp"

namespace h3m {

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

// Per-trial seed, independent of thread scheduling.
std::uint64_t trial_seed(std::uint64_t seed, int trial) {
    return seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(trial) + 1;
}

// Gram matrix of signature (p,q): Mᵀ I_{p,q} M for random invertible M.
Mat random_metric(Rng& rng, int p, int q) {
    const Mat M = random_invertible(rng, static_cast<std::size_t>(p + q));
    return M.transpose() * QuadraticSpace::standard(p, q).gram() * M;
}

} // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<CheckResult> enumeration_checks(int p, int q, const EnumerationResult& e, std::vector<int>* observed) {
    const ClassTable table = admissible_classes(p, q);
    const std::vector<int> expected = table.ids();
    std::vector<CheckResult> out;

    // Consistency with the possible-signature sets.
    const auto codim2 = possible_codim2_signatures(p, q);
    std::string bad;
    for (const auto& inv : e.invariants) {
        const bool sig_ok = std::find(codim2.begin(), codim2.end(), inv.sig_big) != codim2.end();
        const auto lines = possible_line_signatures(inv.sig_big);
        const LineType t = inv.sig_small.pos   ? LineType::Spacelike
                           : inv.sig_small.neg ? LineType::Timelike
                           : inv.dim_small_cap_rad ? LineType::Radical
                                                   : LineType::Lightlike;
        if (!sig_ok || std::find(lines.begin(), lines.end(), t) == lines.end()) bad = to_string(inv);
    }
    out.push_back({"signature-consistency", bad.empty(),
                   bad.empty() ? std::to_string(e.invariants.size()) + " invariant tuples inside the possible sets"
                               : "outside the possible sets: " + bad});

    std::vector<int> ids;
    for (const auto& inv : e.invariants) ids.push_back(class_of_flag(p, q, inv));
    std::sort(ids.begin(), ids.end());
    const bool injective = std::adjacent_find(ids.begin(), ids.end()) == ids.end();
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (observed) *observed = ids;
    out.push_back({"enumeration-completeness", injective && ids == expected,
                   "observed " + join(ids) + " (" + std::to_string(ids.size()) + "), admissible " + join(expected) +
                       " (" + std::to_string(expected.size()) + ")" + (injective ? "" : ", invariant tuples collide")});

    const HeisenbergAlgebra alg(p + q);
    std::string mismatch;
    for (const auto& [inv, f] : e.examples) {
        const int via_flag = class_of_flag(p, q, inv);
        const int via_gram = classify_metric(alg, gram_of_flag(p, q, f)).metric_class.id;
        if (via_flag != via_gram)
            mismatch = to_string(inv) + ": flag class " + std::to_string(via_flag) + ", metric class " +
                       std::to_string(via_gram);
    }
    out.push_back({"flag-metric-correspondence", mismatch.empty(),
                   mismatch.empty() ? std::to_string(e.examples.size()) + " example flags agree" : mismatch});

    out.push_back({"matsuki-count", e.matsuki.size() == e.invariants.size(),
                   "matsuki tuples " + std::to_string(e.matsuki.size()) + ", invariant tuples " +
                       std::to_string(e.invariants.size())});
    return out;
}

CheckResult parabolic_invariance(int p, int q, std::uint64_t seed, int trials, Exec exec) {
    const int n = p + q;
    const HeisenbergAlgebra alg(n);
    const std::vector<int> ids = admissible_classes(p, q).ids();
    std::vector<int> failures(static_cast<std::size_t>(trials), 0);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (int t = 0; t < trials; ++t) {
        Rng rng(trial_seed(seed, t));
        // Even trials start from a representative, odd ones from a random metric.
        const Mat A = t % 2 == 0 ? representative(ids[static_cast<std::size_t>(t / 2) % ids.size()], p, q)
                                 : random_metric(rng, p, q);
        const ScaledAutomorphism g = parabolic_sample(n, rng());
        const int before = classify_metric(alg, A).metric_class.id;
        const int after = classify_metric(alg, act_on_metric(g.matrix, A)).metric_class.id;
        if (before != after) failures[static_cast<std::size_t>(t)] = 1;
    }
    const auto bad = std::count(failures.begin(), failures.end(), 1);
    return {"parabolic-invariance", bad == 0,
            std::to_string(trials - bad) + "/" + std::to_string(trials) + " class ids unchanged"};
}

CheckResult opq_invariance(int p, int q, std::uint64_t seed, int trials, Exec exec) {
    const auto n = static_cast<std::size_t>(p + q);
    const QuadraticSpace space = QuadraticSpace::standard(p, q);
    std::vector<int> failures(static_cast<std::size_t>(trials), 0);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (int t = 0; t < trials; ++t) {
        Rng rng(trial_seed(seed, t));
        // Alternate between class representatives (degenerate cases) and random flags.
        const std::vector<int> ids = admissible_classes(p, q).ids();
        const Flag f = t % 2 == 0 ? representative_flag(ids[static_cast<std::size_t>(t / 2) % ids.size()], p, q).flag
                                  : random_flag(rng, n, 1, n - 2);
        const Mat g = random_opq(rng, p, q);
        if (flag_invariants(space, f) != flag_invariants(space, transform(g, f))) failures[static_cast<std::size_t>(t)] = 1;
    }
    const auto bad = std::count(failures.begin(), failures.end(), 1);
    return {"opq-invariance", bad == 0,
            std::to_string(trials - bad) + "/" + std::to_string(trials) + " flag invariants unchanged"};
}

VerifyReport verify(int p, int q, const VerifyOptions& opts) {
    admissible_classes(p, q);  // scope check
    VerifyReport r;
    r.p = p;
    r.q = q;
    const EnumerationResult e = enumerate_flags(p, q, {opts.exec, opts.max_support});
    r.invariant_count = e.invariants.size();
    r.matsuki_count = e.matsuki.size();
    r.flags = e.flags;
    r.checks = enumeration_checks(p, q, e, &r.observed_classes);
    r.checks.push_back(parabolic_invariance(p, q, opts.seed, opts.trials, opts.exec));
    r.checks.push_back(opq_invariance(p, q, opts.seed, opts.trials, opts.exec));
    return r;
}

} // namespace h3m
