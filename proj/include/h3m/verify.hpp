#pragma once

// Randomized and exhaustive consistency checks for one signature (p, q).

#include <cstdint>
#include <string>
#include <vector>

#include "h3m/enumerate.hpp"
#include "h3m/heisenberg.hpp"

namespace h3m {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int trials = 200;
    Exec exec = Exec::Parallel;
    int max_support = 0;  // forwarded to the enumeration oracle
};

struct VerifyReport {
    int p = 0, q = 0;
    std::vector<int> observed_classes;
    std::size_t invariant_count = 0;
    std::size_t matsuki_count = 0;
    std::size_t flags = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
};

// Enumeration covers the admissible set; metric classes of enumerated flags
// agree with class_of_flag; Matsuki and invariant counts agree.
std::vector<CheckResult> enumeration_checks(int p, int q, const EnumerationResult& e,
                                            std::vector<int>* observed = nullptr);

// classify_metric is constant along parabolic orbits.
CheckResult parabolic_invariance(int p, int q, std::uint64_t seed, int trials, Exec exec = Exec::Parallel);

// flag_invariants is constant along exact O(p,q) orbits.
CheckResult opq_invariance(int p, int q, std::uint64_t seed, int trials, Exec exec = Exec::Parallel);

VerifyReport verify(int p, int q, const VerifyOptions& opts = {});

} // namespace h3m
