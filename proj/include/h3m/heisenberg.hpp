#pragma once

// Left-invariant metrics on H_3 x R^{n-3} up to scaling and automorphisms.
//
// The Lie algebra is span{e_1..e_n} with the single bracket
// [e_{n-1}, e_n] = e_1, so the center is span{e_1..e_{n-2}} and the derived
// ideal is span{e_1}.  A metric's class is determined by the signature of its
// restriction to the center together with the refined type of the derived
// ideal inside the center.  Classes are numbered 1..21 in the fixed order
// below: six center patterns, each followed by its possible line types.

#include <cstdint>
#include <string>
#include <vector>

#include "h3m/forms.hpp"
#include "h3m/lie_algebra.hpp"

namespace h3m {

class HeisenbergAlgebra {
public:
    explicit HeisenbergAlgebra(int n);  // n >= 4

    int n() const { return n_; }
    const LieAlgebra& structure() const { return lie_; }
    Subspace center() const;          // span{e_1..e_{n-2}}
    Subspace derived_ideal() const;   // span{e_1}

private:
    int n_;
    LieAlgebra lie_;
};

// Symbolic center signature (p - dp, q - dq, nul) for p >= q.
struct SignaturePattern {
    int dp = 0;
    int dq = 0;
    int nul = 0;

    Signature at(int p, int q) const { return {p - dp, q - dq, nul}; }
    std::string label() const;  // e.g. "(p-2, q, 0)"
    auto operator<=>(const SignaturePattern&) const = default;
};

struct MetricClass {
    int id = 0;
    SignaturePattern pattern;
    Signature center_signature;   // pattern evaluated at the canonical (p, q)
    LineType derived_refined = LineType::Spacelike;
};

// The 21 symbolic rows in numbering order.
struct TableRow {
    int id;
    SignaturePattern pattern;
    LineType refined;
};
const std::vector<TableRow>& table_rows();

struct ClassTable {
    int p = 0, q = 0;        // canonical, p >= q
    bool swapped = false;    // input was (q, p)
    std::vector<MetricClass> classes;

    std::vector<int> ids() const;
};

// Derived from possible_codim2_signatures and possible_line_signatures.
ClassTable admissible_classes(int p, int q);

struct Classification {
    int p = 0, q = 0;        // canonical, p >= q
    bool swapped = false;    // the Gram matrix was negated to reach p >= q
    MetricClass metric_class;
};

Classification classify_metric(const HeisenbergAlgebra& alg, const Mat& gram);

// Class id of an O(p,q)-orbit in F_{1,p+q-2}, given by its invariants under I_{p,q}.
int class_of_flag(int p, int q, const FlagInvariants& inv);

// Bᵀ I_{p,q} B for a basis B whose first column spans f.small() and whose
// first n-2 columns span f.big(); f must have type (1, p+q-2).
Mat gram_of_flag(int p, int q, const Flag& f);

// Gram matrix with entries in {0, ±1} in the given class.
Mat representative(int class_id, int p, int q);

// Flag (V_1, V_{n-2}) in (Q^{p+q}, I_{p,q}) together with the basis B whose
// first column spans V_1 and whose first n-2 columns span V_{n-2};
// representative(...) == Bᵀ I_{p,q} B.
struct RepresentativeFlag {
    Flag flag;
    Mat basis;
};
RepresentativeFlag representative_flag(int class_id, int p, int q);

struct ScaledAutomorphism {
    Mat matrix;       // block upper triangular, blocks (1, n-3, 2)
    Scalar scale;     // c = det(D) / a
    Mat automorphism; // matrix / c
};

ScaledAutomorphism parabolic_sample(int n, std::uint64_t seed);
ScaledAutomorphism decompose_scaled_automorphism(const Mat& g);

// g.<x,y> = <g^{-1}x, g^{-1}y>, i.e. g^{-T} gram g^{-1}.
Mat act_on_metric(const Mat& g, const Mat& gram);

bool is_scaled_automorphism(const Mat& g, int n);

} // namespace h3m
