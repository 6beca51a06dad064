#pragma once

// Quadratic spaces over Q, their subspaces and flags, and the orbit
// invariants of O(p,q) acting on flag manifolds.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "h3m/exact.hpp"

namespace h3m {

struct Signature {
    int pos = 0;
    int neg = 0;
    int nul = 0;

    int dim() const { return pos + neg + nul; }
    auto operator<=>(const Signature&) const = default;
};

std::string to_string(const Signature& s);

// Refinement of the signature of a line L inside a subspace V: the null case
// splits according to whether L lies in rad(V).
enum class LineType { Spacelike, Timelike, Lightlike, Radical };

std::string to_string(LineType t);         // "SPACELIKE", ...
std::string signature_label(LineType t);   // "(1,0,0)", ..., "(0,0,1)_nul"

// (V, <,>) with V = Q^n and <x,y> = xᵀ gram y; gram may be degenerate.
class QuadraticSpace {
public:
    explicit QuadraticSpace(Mat gram);

    // Q^{p+q} with I_{p,q}.
    static QuadraticSpace standard(int p, int q);

    std::size_t dim() const { return gram_.rows(); }
    const Mat& gram() const { return gram_; }
    Scalar inner(const Vec& x, const Vec& y) const { return bilinear(gram_, x, y); }
    bool is_nondegenerate() const;

private:
    Mat gram_;
};

// A subspace given by an explicit basis.  The zero subspace has an empty basis.
class Subspace {
public:
    Subspace(std::size_t ambient_dim, std::vector<Vec> basis);

    // Span of arbitrary (possibly dependent) vectors.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
    static Subspace whole(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    Mat basis_matrix() const { return Mat::from_columns(basis_, ambient_dim_); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    // Canonical RREF basis; equal spans give equal results.
    std::vector<Vec> canonical_basis() const;
    bool same_span(const Subspace& other) const;

private:
    std::size_t ambient_dim_;
    std::vector<Vec> basis_;
};

Subspace intersect(const Subspace& a, const Subspace& b);

// Nested pair small ⊂ big.
class Flag {
public:
    Flag(Subspace small, Subspace big);

    const Subspace& small() const { return small_; }
    const Subspace& big() const { return big_; }
    std::size_t ambient_dim() const { return big_.ambient_dim(); }

private:
    Subspace small_;
    Subspace big_;
};

struct FlagInvariants {
    Signature sig_big;
    Signature sig_small;
    int dim_small_cap_rad = 0;

    auto operator<=>(const FlagInvariants&) const = default;
};

std::string to_string(const FlagInvariants& f);

// Seven counts attached to a flag of type (1, n-2) relative to
// U+ = span{e_1..e_p} and U- = span{e_{p+1}..e_{p+q}}.
struct MatsukiData {
    int c_plus = 0, c_minus = 0, c_zero = 0;
    int d_plus = 0, d_minus = 0, d_zero = 0;
    int d_pm = 0;

    auto operator<=>(const MatsukiData&) const = default;
};

std::string to_string(const MatsukiData& m);

// Pairwise orthogonal vectors with exact norms <v_i, v_i> = norms[i].
// Ordering: positive norms, then negative, then zero.
struct ScaledSystem {
    std::vector<Vec> vectors;
    std::vector<Scalar> norms;
    Signature pattern;

    std::vector<Vec> positive() const;
    std::vector<Vec> negative() const;
    std::vector<Vec> null() const;
};

// Checks orthogonality, norms, the declared sign pattern and the ordering.
bool is_valid_system(const QuadraticSpace& space, const ScaledSystem& sys);

// ---------------------------------------------------------------- operations

Mat restrict(const QuadraticSpace& space, const Subspace& W);
Signature signature(const QuadraticSpace& space);
Signature signature(const QuadraticSpace& space, const Subspace& W);
Subspace radical(const QuadraticSpace& space);
Subspace radical(const QuadraticSpace& space, const Subspace& W);

// dim V >= 2 and L ⊆ V required; otherwise PreconditionError.
LineType refined_line_signature(const QuadraticSpace& space, const Subspace& V, const Subspace& L);

// Signature and radical of a subspace computed once, for repeated flag queries.
struct SubspaceProfile {
    Subspace subspace;
    Signature sig;
    Subspace rad;
};

SubspaceProfile profile(const QuadraticSpace& space, const Subspace& W);

FlagInvariants flag_invariants(const QuadraticSpace& space, const Flag& f);
FlagInvariants flag_invariants(const QuadraticSpace& space, const SubspaceProfile& big, const Subspace& small);
bool flags_equivalent(const QuadraticSpace& space, const Flag& f1, const Flag& f2);

// Empty when equal, otherwise e.g. "sig_big (2,0,0) ≠ (0,2,0)".
std::string invariant_difference(const FlagInvariants& a, const FlagInvariants& b);

MatsukiData matsuki_data(const Flag& f, int p, int q);

std::vector<Signature> possible_codim2_signatures(int p, int q);
std::vector<LineType> possible_line_signatures(int s, int t, int u);
std::vector<LineType> possible_line_signatures(const Signature& sig);

ScaledSystem scaled_system(const QuadraticSpace& space, const Subspace& W);

struct LightlikeSplit {
    Vec plus;   // <plus, plus> = 1
    Vec minus;  // <minus, minus> = -1
};

// v = plus + minus with plus ⊥ minus, both in V.
LightlikeSplit lightlike_split(const QuadraticSpace& space, const Subspace& V, const Vec& v);

// Scaled basis x_1..x_p, y_1..y_q of a nondegenerate space with
// nulls[i] = x_i + y_i and <x_i,x_i> = 1 = -<y_i,y_i> for the split pairs.
ScaledSystem extend_nullsystem(const QuadraticSpace& space, const std::vector<Vec>& nulls);

// Extends a system of W (positives x, negatives y, nulls z with the nulls
// lying in rad(space) listed last) to a scaled basis of the whole space:
// x_i = α_i, y_i = β_i, z_i = α_{s+i} + β_{t+i} for the nulls outside
// rad(space), and the remaining nulls become the leading radical vectors γ.
ScaledSystem extend_basis(const QuadraticSpace& space, const Subspace& W, const ScaledSystem& w_system);

bool subspaces_equivalent(const QuadraticSpace& space, const Subspace& U, const Subspace& W);

} // namespace h3m
