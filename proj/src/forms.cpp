#include "h3m/forms.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "h3m/errors.hpp"

namespace h3m {

namespace {

void require_ambient(const QuadraticSpace& space, const Subspace& W, const char* op) {
    if (W.ambient_dim() != space.dim())
        throw MalformedInput(std::string(op) + ": subspace ambient dimension " + std::to_string(W.ambient_dim()) +
                             " does not match space dimension " + std::to_string(space.dim()));
}

std::size_t first_nonzero(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) return i;
    return v.size();
}

// {c ∈ C | <c, w> = 0 for every w in constraints}
Subspace orthogonal_within(const QuadraticSpace& space, const Subspace& C, const std::vector<Vec>& constraints) {
    if (constraints.empty() || C.dim() == 0) return C;
    Mat m(constraints.size(), C.dim());
    for (std::size_t i = 0; i < constraints.size(); ++i)
        for (std::size_t j = 0; j < C.dim(); ++j) m(i, j) = space.inner(constraints[i], C.basis()[j]);
    std::vector<Vec> out;
    const Mat B = C.basis_matrix();
    for (const auto& coeffs : kernel(m)) out.push_back(B * coeffs);
    return Subspace(space.dim(), std::move(out));
}

// Greedily appends candidates that are independent of `current` (and of
// `also_avoid`) until no candidate is left.
void extend_independent(std::vector<Vec>& current, const std::vector<Vec>& also_avoid,
                        const std::vector<Vec>& candidates, std::size_t dim) {
    std::vector<Vec> all = current;
    all.insert(all.end(), also_avoid.begin(), also_avoid.end());
    std::size_t r = span_dim(all, dim);
    for (const auto& c : candidates) {
        all.push_back(c);
        const std::size_t r2 = span_dim(all, dim);
        if (r2 > r) {
            current.push_back(c);
            r = r2;
        } else {
            all.pop_back();
        }
    }
}

// Exact orthogonal basis of a nondegenerate subspace, pivoting on the vector
// whose norm is largest relative to its Euclidean length.  Keeps the basis
// far from the light cone, which the floating-point witness depends on.
std::vector<Vec> balanced_orthogonal_basis(const QuadraticSpace& space, const Subspace& C) {
    std::vector<Vec> rest = C.basis(), out;
    const auto ratio = [&](const Vec& v) {
        double e = 0;
        for (const auto& c : v) e += c.get_d() * c.get_d();
        return std::abs(space.inner(v, v).get_d()) / e;
    };
    while (!rest.empty()) {
        if (std::all_of(rest.begin(), rest.end(), [&](const Vec& v) { return sgn(space.inner(v, v)) == 0; })) {
            // All null: some pair pairs nontrivially, and their sum is not null.
            bool fixed = false;
            for (std::size_t i = 0; i < rest.size() && !fixed; ++i)
                for (std::size_t j = i + 1; j < rest.size() && !fixed; ++j)
                    if (sgn(space.inner(rest[i], rest[j])) != 0) {
                        rest[i] = rest[i] + rest[j];
                        fixed = true;
                    }
            if (!fixed) throw PreconditionError("balanced_orthogonal_basis: subspace is degenerate");
        }
        std::size_t best = rest.size();
        double best_ratio = -1;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (sgn(space.inner(rest[i], rest[i])) == 0) continue;
            const double r = ratio(rest[i]);
            if (r > best_ratio) {
                best = i;
                best_ratio = r;
            }
        }
        Vec w = std::move(rest[best]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
        const Scalar ww = space.inner(w, w);
        for (auto& v : rest) v = v - Scalar(space.inner(v, w) / ww) * w;
        out.push_back(std::move(w));
    }
    return out;
}

struct SplitBasis {
    std::vector<Vec> pos, neg;
    std::vector<Scalar> pos_norms, neg_norms;
};

// Nulls are pairwise orthogonal, independent and lie in the nondegenerate
// subspace C.  Returns a scaled basis of C whose first k positive and first
// k negative vectors sum to the nulls.
SplitBasis split_nulls_within(const QuadraticSpace& space, Subspace C, const std::vector<Vec>& nulls) {
    SplitBasis out;
    for (std::size_t i = 0; i < nulls.size(); ++i) {
        const std::vector<Vec> later(nulls.begin() + static_cast<std::ptrdiff_t>(i) + 1, nulls.end());
        const Subspace W = orthogonal_within(space, C, later);
        LightlikeSplit s = lightlike_split(space, W, nulls[i]);
        C = orthogonal_within(space, C, {s.plus, s.minus});
        out.pos.push_back(std::move(s.plus));
        out.pos_norms.emplace_back(1);
        out.neg.push_back(std::move(s.minus));
        out.neg_norms.emplace_back(-1);
    }
    for (auto& v : balanced_orthogonal_basis(space, C)) {
        Scalar norm = space.inner(v, v);
        if (sgn(norm) > 0) {
            out.pos.push_back(std::move(v));
            out.pos_norms.push_back(std::move(norm));
        } else {
            out.neg.push_back(std::move(v));
            out.neg_norms.push_back(std::move(norm));
        }
    }
    return out;
}

void check_null_system(const QuadraticSpace& space, const std::vector<Vec>& nulls, const char* op) {
    for (const auto& v : nulls)
        if (v.size() != space.dim()) throw MalformedInput(std::string(op) + ": vector length mismatch");
    if (span_dim(nulls, space.dim()) != nulls.size())
        throw PreconditionError(std::string(op) + ": null vectors are linearly dependent");
    for (std::size_t i = 0; i < nulls.size(); ++i)
        for (std::size_t j = i; j < nulls.size(); ++j)
            if (sgn(space.inner(nulls[i], nulls[j])) != 0)
                throw PreconditionError(std::string(op) + ": vectors are not a pairwise orthogonal null system");
}

} // namespace

// ---------------------------------------------------------------- types

std::string to_string(const Signature& s) {
    return "(" + std::to_string(s.pos) + "," + std::to_string(s.neg) + "," + std::to_string(s.nul) + ")";
}

std::string to_string(LineType t) {
    switch (t) {
    case LineType::Spacelike: return "SPACELIKE";
    case LineType::Timelike: return "TIMELIKE";
    case LineType::Lightlike: return "LIGHTLIKE";
    case LineType::Radical: return "RADICAL";
    }
    return "?";
}

std::string signature_label(LineType t) {
    switch (t) {
    case LineType::Spacelike: return "(1,0,0)";
    case LineType::Timelike: return "(0,1,0)";
    case LineType::Lightlike: return "(0,0,1)";
    case LineType::Radical: return "(0,0,1)_nul";
    }
    return "?";
}

QuadraticSpace::QuadraticSpace(Mat gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw MalformedInput("Gram matrix is not square");
    if (!gram_.is_symmetric()) throw MalformedInput("Gram matrix is not symmetric");
}

QuadraticSpace QuadraticSpace::standard(int p, int q) {
    if (p < 0 || q < 0) throw MalformedInput("negative signature component");
    Mat g(static_cast<std::size_t>(p + q), static_cast<std::size_t>(p + q));
    for (int i = 0; i < p + q; ++i) g(i, i) = i < p ? 1 : -1;
    return QuadraticSpace(std::move(g));
}

bool QuadraticSpace::is_nondegenerate() const { return rank(gram_) == dim(); }

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vec> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    for (const auto& v : basis_)
        if (v.size() != ambient_dim_) throw MalformedInput("subspace basis vector has wrong length");
    if (basis_.size() > ambient_dim_ || span_dim(basis_, ambient_dim_) != basis_.size())
        throw MalformedInput("subspace basis vectors are linearly dependent");
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
    std::vector<Vec> chosen;
    extend_independent(chosen, {}, vectors, ambient_dim);
    return Subspace(ambient_dim, std::move(chosen));
}

Subspace Subspace::whole(std::size_t ambient_dim) {
    std::vector<Vec> b;
    for (std::size_t i = 0; i < ambient_dim; ++i) b.push_back(unit_vec(ambient_dim, i));
    return Subspace(ambient_dim, std::move(b));
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_dim_) throw MalformedInput("vector length mismatch");
    return in_span(basis_, v);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) throw MalformedInput("ambient dimension mismatch");
    if (other.dim() > dim()) return false;
    std::vector<Vec> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span_dim(all, ambient_dim_) == dim();
}

std::vector<Vec> Subspace::canonical_basis() const { return span_basis(basis_, ambient_dim_); }

bool Subspace::same_span(const Subspace& other) const {
    return other.ambient_dim_ == ambient_dim_ && other.dim() == dim() && contains(other);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw MalformedInput("intersect: ambient dimension mismatch");
    return Subspace(a.ambient_dim(), intersect(a.basis(), b.basis()));
}

Flag::Flag(Subspace small, Subspace big) : small_(std::move(small)), big_(std::move(big)) {
    if (small_.ambient_dim() != big_.ambient_dim()) throw MalformedInput("flag: ambient dimension mismatch");
    if (small_.dim() == 0 || small_.dim() >= big_.dim())
        throw MalformedInput("flag: need 0 < dim(small) < dim(big)");
    if (!big_.contains(small_)) throw MalformedInput("flag: small subspace is not contained in big subspace");
}

std::string to_string(const FlagInvariants& f) {
    return "sig_big=" + to_string(f.sig_big) + " sig_small=" + to_string(f.sig_small) +
           " dim_small_cap_rad=" + std::to_string(f.dim_small_cap_rad);
}

std::string to_string(const MatsukiData& m) {
    return "(" + std::to_string(m.c_plus) + "," + std::to_string(m.c_minus) + "," + std::to_string(m.c_zero) + "," +
           std::to_string(m.d_plus) + "," + std::to_string(m.d_minus) + "," + std::to_string(m.d_zero) + "," +
           std::to_string(m.d_pm) + ")";
}

std::vector<Vec> ScaledSystem::positive() const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        if (sgn(norms[i]) > 0) out.push_back(vectors[i]);
    return out;
}

std::vector<Vec> ScaledSystem::negative() const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        if (sgn(norms[i]) < 0) out.push_back(vectors[i]);
    return out;
}

std::vector<Vec> ScaledSystem::null() const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        if (sgn(norms[i]) == 0) out.push_back(vectors[i]);
    return out;
}

bool is_valid_system(const QuadraticSpace& space, const ScaledSystem& sys) {
    if (sys.vectors.size() != sys.norms.size()) return false;
    Signature counted;
    int stage = 0;  // 0 positive, 1 negative, 2 null
    for (std::size_t i = 0; i < sys.vectors.size(); ++i) {
        if (sys.vectors[i].size() != space.dim()) return false;
        const int s = sgn(sys.norms[i]);
        const int st = s > 0 ? 0 : (s < 0 ? 1 : 2);
        if (st < stage) return false;
        stage = st;
        (s > 0 ? counted.pos : (s < 0 ? counted.neg : counted.nul))++;
        for (std::size_t j = i; j < sys.vectors.size(); ++j) {
            const Scalar v = space.inner(sys.vectors[i], sys.vectors[j]);
            if (i == j ? v != sys.norms[i] : sgn(v) != 0) return false;
        }
    }
    if (counted != sys.pattern) return false;
    return span_dim(sys.vectors, space.dim()) == sys.vectors.size();
}

// ---------------------------------------------------------------- invariants

Mat restrict(const QuadraticSpace& space, const Subspace& W) {
    require_ambient(space, W, "restrict");
    const Mat B = W.basis_matrix();
    return B.transpose() * space.gram() * B;
}

namespace {
Signature count_signs(const std::vector<Scalar>& d) {
    Signature s;
    for (const auto& x : d) {
        const int sg = sgn(x);
        (sg > 0 ? s.pos : (sg < 0 ? s.neg : s.nul))++;
    }
    return s;
}
} // namespace

Signature signature(const QuadraticSpace& space) {
    return count_signs(congruence_diagonalize(space.gram()).diagonal);
}

Signature signature(const QuadraticSpace& space, const Subspace& W) {
    if (W.dim() == 0) {
        require_ambient(space, W, "signature");
        return {};
    }
    return count_signs(congruence_diagonalize(restrict(space, W)).diagonal);
}

Subspace radical(const QuadraticSpace& space) { return radical(space, Subspace::whole(space.dim())); }

Subspace radical(const QuadraticSpace& space, const Subspace& W) {
    require_ambient(space, W, "radical");
    if (W.dim() == 0) return W;
    const Mat B = W.basis_matrix();
    std::vector<Vec> out;
    for (const auto& c : kernel(restrict(space, W))) out.push_back(B * c);
    return Subspace(space.dim(), std::move(out));
}

LineType refined_line_signature(const QuadraticSpace& space, const Subspace& V, const Subspace& L) {
    require_ambient(space, V, "refined_line_signature");
    require_ambient(space, L, "refined_line_signature");
    if (V.dim() < 2) throw PreconditionError("refined_line_signature: dim V must be at least 2");
    if (L.dim() != 1) throw PreconditionError("refined_line_signature: L must be a line");
    if (!V.contains(L)) throw PreconditionError("refined_line_signature: L is not contained in V");
    const Vec& v = L.basis().front();
    const int s = sgn(space.inner(v, v));
    if (s > 0) return LineType::Spacelike;
    if (s < 0) return LineType::Timelike;
    for (const auto& b : V.basis())
        if (sgn(space.inner(v, b)) != 0) return LineType::Lightlike;
    return LineType::Radical;
}

SubspaceProfile profile(const QuadraticSpace& space, const Subspace& W) {
    return SubspaceProfile{W, signature(space, W), radical(space, W)};
}

FlagInvariants flag_invariants(const QuadraticSpace& space, const SubspaceProfile& big, const Subspace& small) {
    FlagInvariants inv;
    inv.sig_big = big.sig;
    inv.sig_small = signature(space, small);
    inv.dim_small_cap_rad = big.rad.dim() == 0 ? 0 : static_cast<int>(intersect(small, big.rad).dim());
    return inv;
}

FlagInvariants flag_invariants(const QuadraticSpace& space, const Flag& f) {
    require_ambient(space, f.big(), "flag_invariants");
    if (!space.is_nondegenerate()) throw PreconditionError("flag_invariants: ambient form is degenerate");
    return flag_invariants(space, profile(space, f.big()), f.small());
}

bool flags_equivalent(const QuadraticSpace& space, const Flag& f1, const Flag& f2) {
    if (f1.small().dim() != f2.small().dim() || f1.big().dim() != f2.big().dim())
        throw MalformedInput("flags_equivalent: flags have different types (k1, k2)");
    return flag_invariants(space, f1) == flag_invariants(space, f2);
}

std::string invariant_difference(const FlagInvariants& a, const FlagInvariants& b) {
    if (a.sig_big != b.sig_big) return "sig_big " + to_string(a.sig_big) + " ≠ " + to_string(b.sig_big);
    if (a.sig_small != b.sig_small) return "sig_small " + to_string(a.sig_small) + " ≠ " + to_string(b.sig_small);
    if (a.dim_small_cap_rad != b.dim_small_cap_rad)
        return "dim_small_cap_rad " + std::to_string(a.dim_small_cap_rad) + " ≠ " +
               std::to_string(b.dim_small_cap_rad);
    return {};
}

MatsukiData matsuki_data(const Flag& f, int p, int q) {
    const std::size_t n = f.ambient_dim();
    if (p < 0 || q < 0 || n != static_cast<std::size_t>(p + q))
        throw MalformedInput("matsuki_data: ambient dimension is not p + q");
    if (f.small().dim() != 1 || f.big().dim() + 2 != n)
        throw MalformedInput("matsuki_data: flag must have type (1, p+q-2)");
    std::vector<Vec> uplus, uminus;
    for (std::size_t i = 0; i < n; ++i) (static_cast<int>(i) < p ? uplus : uminus).push_back(unit_vec(n, i));

    const auto big_plus = intersect(f.big().basis(), uplus);
    const auto big_minus = intersect(f.big().basis(), uminus);
    MatsukiData m;
    m.c_plus = static_cast<int>(big_plus.size());
    m.c_minus = static_cast<int>(big_minus.size());
    m.c_zero = static_cast<int>(n) - 2 - m.c_plus - m.c_minus;
    m.d_plus = static_cast<int>(intersect(f.small().basis(), uplus).size());
    m.d_minus = static_cast<int>(intersect(f.small().basis(), uminus).size());
    m.d_zero = 1 - m.d_plus - m.d_minus;
    std::vector<Vec> split = big_plus;
    split.insert(split.end(), big_minus.begin(), big_minus.end());
    m.d_pm = static_cast<int>(intersect(split, f.small().basis()).size());
    return m;
}

std::vector<Signature> possible_codim2_signatures(int p, int q) {
    if (p < 0 || q < 0 || p + q < 2) throw PreconditionError("possible_codim2_signatures: need p + q >= 2");
    const Signature candidates[] = {{p - 2, q, 0},     {p - 1, q - 1, 0}, {p, q - 2, 0},
                                    {p - 2, q - 1, 1}, {p - 1, q - 2, 1}, {p - 2, q - 2, 2}};
    std::vector<Signature> out;
    for (const auto& s : candidates)
        if (s.pos >= 0 && s.neg >= 0) out.push_back(s);
    return out;
}

std::vector<LineType> possible_line_signatures(int s, int t, int u) {
    if (s < 0 || t < 0 || u < 0 || s + t + u < 1) throw PreconditionError("possible_line_signatures: need s+t+u >= 1");
    std::vector<LineType> out;
    if (s >= 1) out.push_back(LineType::Spacelike);
    if (t >= 1) out.push_back(LineType::Timelike);
    if (s >= 1 && t >= 1) out.push_back(LineType::Lightlike);
    if (u >= 1) out.push_back(LineType::Radical);
    return out;
}

std::vector<LineType> possible_line_signatures(const Signature& sig) {
    return possible_line_signatures(sig.pos, sig.neg, sig.nul);
}

// ---------------------------------------------------------------- constructions

ScaledSystem scaled_system(const QuadraticSpace& space, const Subspace& W) {
    require_ambient(space, W, "scaled_system");
    ScaledSystem sys;
    if (W.dim() == 0) return sys;
    const CongruenceResult cr = congruence_diagonalize(restrict(space, W));
    const Mat B = W.basis_matrix() * cr.transform;

    struct Entry {
        int group;
        std::size_t lead;
        std::size_t index;
    };
    std::vector<Entry> order;
    std::vector<Vec> vecs = B.columns();
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        const int s = sgn(cr.diagonal[i]);
        order.push_back({s > 0 ? 0 : (s < 0 ? 1 : 2), first_nonzero(vecs[i]), i});
    }
    std::stable_sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
        return a.group != b.group ? a.group < b.group : a.lead < b.lead;
    });
    for (const auto& e : order) {
        sys.vectors.push_back(std::move(vecs[e.index]));
        sys.norms.push_back(cr.diagonal[e.index]);
        (e.group == 0 ? sys.pattern.pos : (e.group == 1 ? sys.pattern.neg : sys.pattern.nul))++;
    }
    return sys;
}

LightlikeSplit lightlike_split(const QuadraticSpace& space, const Subspace& V, const Vec& v) {
    require_ambient(space, V, "lightlike_split");
    if (v.size() != space.dim()) throw MalformedInput("lightlike_split: vector length mismatch");
    if (is_zero(v)) throw PreconditionError("lightlike_split: v is zero");
    if (!V.contains(v)) throw PreconditionError("lightlike_split: v is not in V");
    if (sgn(space.inner(v, v)) != 0) throw PreconditionError("lightlike_split: v is not null");
    // Partner: the Euclidean projection w of G·v onto V.  Then <v,w> = |w|² > 0
    // unless v ∈ rad(V), and the split is balanced in standard coordinates.
    const Mat B = V.basis_matrix();
    const auto coeffs = solve(B.transpose() * B, B.transpose() * (space.gram() * v));
    const Vec w = B * *coeffs;
    const Scalar a = space.inner(v, w);
    if (sgn(a) == 0) throw PreconditionError("lightlike_split: v lies in rad(V)");
    // u null with <v,u> = 1; then v/2 ± u have norms ±1 and are orthogonal.
    const Scalar b = space.inner(w, w);
    const Vec u = Scalar(1 / a) * (w - Scalar(b / (2 * a)) * v);
    const Vec half = Scalar(1, 2) * v;
    return {half + u, half - u};
}

ScaledSystem extend_nullsystem(const QuadraticSpace& space, const std::vector<Vec>& nulls) {
    if (!space.is_nondegenerate()) throw PreconditionError("extend_nullsystem: ambient form is degenerate");
    check_null_system(space, nulls, "extend_nullsystem");
    SplitBasis sb = split_nulls_within(space, Subspace::whole(space.dim()), nulls);
    ScaledSystem sys;
    for (std::size_t i = 0; i < sb.pos.size(); ++i) {
        sys.vectors.push_back(std::move(sb.pos[i]));
        sys.norms.push_back(sb.pos_norms[i]);
    }
    for (std::size_t i = 0; i < sb.neg.size(); ++i) {
        sys.vectors.push_back(std::move(sb.neg[i]));
        sys.norms.push_back(sb.neg_norms[i]);
    }
    sys.pattern = {static_cast<int>(sb.pos.size()), static_cast<int>(sb.neg.size()), 0};
    return sys;
}

ScaledSystem extend_basis(const QuadraticSpace& space, const Subspace& W, const ScaledSystem& w_system) {
    require_ambient(space, W, "extend_basis");
    const std::size_t n = space.dim();
    if (!is_valid_system(space, w_system)) throw PreconditionError("extend_basis: input is not a valid scaled system");
    if (w_system.vectors.size() != W.dim()) throw PreconditionError("extend_basis: system is not a basis of W");
    for (const auto& v : w_system.vectors)
        if (!W.contains(v)) throw PreconditionError("extend_basis: system vector outside W");

    const std::vector<Vec> xs = w_system.positive();
    const std::vector<Vec> ys = w_system.negative();
    const std::vector<Vec> zs = w_system.null();
    const Subspace rad_space = radical(space);

    std::size_t k = 0;
    while (k < zs.size() && rad_space.contains(zs[zs.size() - 1 - k])) ++k;
    if (intersect(W, rad_space).dim() != k)
        throw PreconditionError("extend_basis: nulls lying in rad(space) must be listed last");
    const std::vector<Vec> z_front(zs.begin(), zs.end() - static_cast<std::ptrdiff_t>(k));
    const std::vector<Vec> z_back(zs.end() - static_cast<std::ptrdiff_t>(k), zs.end());

    // U: complement of rad(space) containing x, y and the non-radical nulls.
    std::vector<Vec> u_basis = xs;
    u_basis.insert(u_basis.end(), ys.begin(), ys.end());
    u_basis.insert(u_basis.end(), z_front.begin(), z_front.end());
    std::vector<Vec> units;
    for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vec(n, i));
    extend_independent(u_basis, rad_space.basis(), units, n);
    const Subspace U(n, u_basis);

    std::vector<Vec> xy = xs;
    xy.insert(xy.end(), ys.begin(), ys.end());
    const Subspace complement = orthogonal_within(space, U, xy);
    SplitBasis sb = split_nulls_within(space, complement, z_front);

    std::vector<Vec> gammas = z_back;
    extend_independent(gammas, {}, rad_space.basis(), n);

    ScaledSystem out;
    for (std::size_t i = 0; i < w_system.vectors.size(); ++i)
        if (sgn(w_system.norms[i]) > 0) {
            out.vectors.push_back(w_system.vectors[i]);
            out.norms.push_back(w_system.norms[i]);
        }
    for (std::size_t i = 0; i < sb.pos.size(); ++i) {
        out.vectors.push_back(sb.pos[i]);
        out.norms.push_back(sb.pos_norms[i]);
    }
    for (std::size_t i = 0; i < w_system.vectors.size(); ++i)
        if (sgn(w_system.norms[i]) < 0) {
            out.vectors.push_back(w_system.vectors[i]);
            out.norms.push_back(w_system.norms[i]);
        }
    for (std::size_t i = 0; i < sb.neg.size(); ++i) {
        out.vectors.push_back(sb.neg[i]);
        out.norms.push_back(sb.neg_norms[i]);
    }
    for (auto& g : gammas) {
        out.vectors.push_back(std::move(g));
        out.norms.emplace_back(0);
    }
    out.pattern = {static_cast<int>(xs.size() + sb.pos.size()), static_cast<int>(ys.size() + sb.neg.size()),
                   static_cast<int>(rad_space.dim())};
    return out;
}

bool subspaces_equivalent(const QuadraticSpace& space, const Subspace& U, const Subspace& W) {
    require_ambient(space, U, "subspaces_equivalent");
    require_ambient(space, W, "subspaces_equivalent");
    if (signature(space, U) != signature(space, W)) return false;
    const Subspace rad_space = radical(space);
    return intersect(U, rad_space).dim() == intersect(W, rad_space).dim();
}

} // namespace h3m
