#pragma once

// Structured enumeration oracle over flags (V_1, V_{n-2}) of (Q^{p+q}, I_{p,q}).
//
// V_{n-2} runs over the kernels of pairs of covectors with entries in
// {-1, 0, 1}; V_1 runs over the lines of V_{n-2} spanned by vectors with
// entries in {-1, 0, 1}.  Both are taken up to sign, so every covector and
// every line vector has leading nonzero entry +1.

#include <cstddef>
#include <map>
#include <set>

#include "h3m/forms.hpp"
#include "h3m/parallel.hpp"

namespace h3m {

struct EnumerationOptions {
    Exec exec = Exec::Parallel;
    int max_support = 0;  // 0: no limit on the number of nonzero entries
};

struct EnumerationResult {
    std::set<FlagInvariants> invariants;
    std::set<MatsukiData> matsuki;
    std::map<FlagInvariants, Flag> examples;  // first flag seen per invariant tuple
    std::size_t planes = 0;
    std::size_t flags = 0;
};

// Deduplicates planes and evaluates each line with integer arithmetic.
EnumerationResult enumerate_flags(int p, int q, const EnumerationOptions& opts = {});

// Serial brute force over every covector pair, using the generic
// flag_invariants and matsuki_data.  Only practical for n <= 5.
EnumerationResult enumerate_flags_reference(int p, int q);

// Vectors of {-1, 0, 1}^n with leading entry +1 and at most max_support nonzeros.
std::vector<std::vector<int>> sign_vectors(std::size_t n, int max_support = 0);

} // namespace h3m
