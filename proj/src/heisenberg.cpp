#include "h3m/heisenberg.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "h3m/errors.hpp"

namespace h3m {

namespace {

LieAlgebra heisenberg_structure(int n) {
    const auto N = static_cast<std::size_t>(n);
    std::vector<Vec> b(N * N, Vec(N));
    b[(N - 2) * N + (N - 1)][0] = 1;
    b[(N - 1) * N + (N - 2)][0] = -1;
    return LieAlgebra(N, std::move(b));
}

constexpr SignaturePattern kPatterns[] = {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {2, 1, 1}, {1, 2, 1}, {2, 2, 2}};

LineType line_type_of(const FlagInvariants& inv) {
    if (inv.sig_small.pos == 1) return LineType::Spacelike;
    if (inv.sig_small.neg == 1) return LineType::Timelike;
    return inv.dim_small_cap_rad == 1 ? LineType::Radical : LineType::Lightlike;
}

Signature swapped(const Signature& s) { return {s.neg, s.pos, s.nul}; }

const MetricClass* find_class(const ClassTable& t, const Signature& center, LineType refined) {
    for (const auto& c : t.classes)
        if (c.center_signature == center && c.derived_refined == refined) return &c;
    return nullptr;
}

void check_pq(int p, int q) {
    if (p < 0 || q < 0) throw MalformedInput("negative signature component");
    if (p == 0 || q == 0)
        throw UnsupportedSignature("signature (" + std::to_string(p) + "," + std::to_string(q) +
                                   ") is Riemannian; only indefinite signatures are classified here");
    if (p + q < 4)
        throw UnsupportedSignature("p + q = " + std::to_string(p + q) +
                                   " is out of scope; the classification covers n = p + q >= 4");
}

Scalar draw(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    int a = 0;
    do a = num(rng);
    while (nonzero && a == 0);
    Scalar x(a, den(rng));
    x.canonicalize();
    return x;
}

} // namespace

// ---------------------------------------------------------------- algebra

HeisenbergAlgebra::HeisenbergAlgebra(int n) : n_(n), lie_(heisenberg_structure(std::max(n, 3))) {
    if (n < 4)
        throw UnsupportedSignature("n = " + std::to_string(n) +
                                   " is out of scope; H_3 x R^{n-3} is classified here for n >= 4");
}

Subspace HeisenbergAlgebra::center() const {
    const auto N = static_cast<std::size_t>(n_);
    std::vector<Vec> b;
    for (std::size_t i = 0; i + 2 < N; ++i) b.push_back(unit_vec(N, i));
    return Subspace(N, std::move(b));
}

Subspace HeisenbergAlgebra::derived_ideal() const {
    const auto N = static_cast<std::size_t>(n_);
    return Subspace(N, {unit_vec(N, 0)});
}

// ---------------------------------------------------------------- table

std::string SignaturePattern::label() const {
    const auto term = [](const char* sym, int d) {
        return d == 0 ? std::string(sym) : std::string(sym) + "-" + std::to_string(d);
    };
    return "(" + term("p", dp) + ", " + term("q", dq) + ", " + std::to_string(nul) + ")";
}

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = [] {
        std::vector<TableRow> r;
        int id = 1;
        for (const auto& pat : kPatterns) {
            r.push_back({id++, pat, LineType::Spacelike});
            r.push_back({id++, pat, LineType::Timelike});
            r.push_back({id++, pat, LineType::Lightlike});
            if (pat.nul > 0) r.push_back({id++, pat, LineType::Radical});
        }
        return r;
    }();
    return rows;
}

std::vector<int> ClassTable::ids() const {
    std::vector<int> out;
    for (const auto& c : classes) out.push_back(c.id);
    return out;
}

ClassTable admissible_classes(int p, int q) {
    check_pq(p, q);
    ClassTable t;
    t.swapped = p < q;
    t.p = std::max(p, q);
    t.q = std::min(p, q);

    for (const Signature& center : possible_codim2_signatures(t.p, t.q)) {
        std::vector<SignaturePattern> matches;
        for (const auto& pat : kPatterns)
            if (pat.at(t.p, t.q) == center) matches.push_back(pat);
        if (matches.size() != 1)
            throw std::logic_error("center signature " + to_string(center) + " matches " +
                                   std::to_string(matches.size()) + " symbolic patterns");
        for (LineType refined : possible_line_signatures(center)) {
            const auto& rows = table_rows();
            const auto row = std::find_if(rows.begin(), rows.end(), [&](const TableRow& r) {
                return r.pattern == matches.front() && r.refined == refined;
            });
            t.classes.push_back({row->id, row->pattern, center, refined});
        }
    }
    std::sort(t.classes.begin(), t.classes.end(), [](const MetricClass& a, const MetricClass& b) { return a.id < b.id; });

    // (center signature, refined type) must identify the row.
    for (std::size_t i = 0; i < t.classes.size(); ++i)
        for (std::size_t j = i + 1; j < t.classes.size(); ++j)
            if (t.classes[i].center_signature == t.classes[j].center_signature &&
                t.classes[i].derived_refined == t.classes[j].derived_refined)
                throw std::logic_error("rows " + std::to_string(t.classes[i].id) + " and " +
                                       std::to_string(t.classes[j].id) + " share concrete invariants");
    return t;
}

// ---------------------------------------------------------------- classification

Classification classify_metric(const HeisenbergAlgebra& alg, const Mat& gram) {
    if (!gram.is_square()) throw MalformedInput("classify_metric: Gram matrix is not square");
    if (!gram.is_symmetric()) throw MalformedInput("classify_metric: Gram matrix is not symmetric");
    if (gram.rows() != static_cast<std::size_t>(alg.n()))
        throw PreconditionError("classify_metric: Gram matrix is " + std::to_string(gram.rows()) + "x" +
                                std::to_string(gram.rows()) + " but the algebra has dimension " +
                                std::to_string(alg.n()));
    const QuadraticSpace input(gram);
    const Signature sig = signature(input);
    if (sig.nul != 0) throw PreconditionError("classify_metric: Gram matrix is degenerate");
    check_pq(sig.pos, sig.neg);

    Classification out;
    out.swapped = sig.pos < sig.neg;
    out.p = std::max(sig.pos, sig.neg);
    out.q = std::min(sig.pos, sig.neg);
    const QuadraticSpace space = out.swapped ? QuadraticSpace(Scalar(-1) * gram) : input;

    const Subspace Z = alg.center();
    const Signature center = signature(space, Z);
    const LineType refined = refined_line_signature(space, Z, alg.derived_ideal());
    const ClassTable table = admissible_classes(out.p, out.q);
    const MetricClass* c = find_class(table, center, refined);
    if (!c)
        throw std::logic_error("classify_metric: invariants " + to_string(center) + ", " + to_string(refined) +
                               " are not in the class table");
    out.metric_class = *c;
    return out;
}

int class_of_flag(int p, int q, const FlagInvariants& inv) {
    const ClassTable table = admissible_classes(p, q);
    const Signature center = table.swapped ? swapped(inv.sig_big) : inv.sig_big;
    const FlagInvariants canon{center, table.swapped ? swapped(inv.sig_small) : inv.sig_small, inv.dim_small_cap_rad};
    const MetricClass* c = find_class(table, center, line_type_of(canon));
    return c ? c->id : 0;
}

Mat gram_of_flag(int p, int q, const Flag& f) {
    const auto n = static_cast<std::size_t>(p + q);
    if (f.ambient_dim() != n || f.small().dim() != 1 || f.big().dim() + 2 != n)
        throw MalformedInput("gram_of_flag: flag must have type (1, p+q-2) in dimension p+q");
    std::vector<Vec> cols = f.small().basis();
    const auto extend = [&](const std::vector<Vec>& candidates) {
        for (const auto& c : candidates) {
            cols.push_back(c);
            if (span_dim(cols, n) < cols.size()) cols.pop_back();
        }
    };
    extend(f.big().basis());
    std::vector<Vec> units;
    for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vec(n, i));
    extend(units);
    const Mat B = Mat::from_columns(cols, n);
    return B.transpose() * QuadraticSpace::standard(p, q).gram() * B;
}

// ---------------------------------------------------------------- representatives

RepresentativeFlag representative_flag(int class_id, int p, int q) {
    const ClassTable table = admissible_classes(p, q);
    const auto it = std::find_if(table.classes.begin(), table.classes.end(),
                                 [&](const MetricClass& c) { return c.id == class_id; });
    if (it == table.classes.end())
        throw PreconditionError("class " + std::to_string(class_id) + " is not admissible for signature (" +
                                std::to_string(p) + "," + std::to_string(q) + ")");
    const int P = table.p, Q = table.q, n = P + Q;
    const SignaturePattern pat = it->pattern;
    const LineType tag = it->derived_refined;

    // Standard coordinates x_0..x_{P-1} (positive), y_0..y_{Q-1} (negative).
    // Hyperbolic pair i: a_i = x_i + y_i, b_i = (x_i - y_i)/2, <a_i,b_i> = 1.
    const int pairs = pat.nul + (tag == LineType::Lightlike ? 1 : 0);
    const auto N = static_cast<std::size_t>(n);
    const auto x = [&](int i) { return unit_vec(N, static_cast<std::size_t>(i)); };
    const auto y = [&](int i) { return unit_vec(N, static_cast<std::size_t>(P + i)); };
    std::vector<Vec> a, b, pos, neg;
    for (int i = 0; i < pairs; ++i) {
        a.push_back(x(i) + y(i));
        b.push_back(Scalar(1, 2) * (x(i) - y(i)));
    }
    for (int i = pairs; i < P; ++i) pos.push_back(x(i));
    for (int i = pairs; i < Q; ++i) neg.push_back(y(i));

    // Outside the center: the b-partners of the degenerate directions plus
    // enough definite vectors to reach codimension two.
    std::vector<Vec> outside(b.begin(), b.begin() + pat.nul);
    const int drop_pos = pat.dp - pat.nul;
    const int drop_neg = pat.dq - pat.nul;
    outside.insert(outside.end(), pos.begin(), pos.begin() + drop_pos);
    outside.insert(outside.end(), neg.begin(), neg.begin() + drop_neg);
    pos.erase(pos.begin(), pos.begin() + drop_pos);
    neg.erase(neg.begin(), neg.begin() + drop_neg);

    std::vector<Vec> center;
    switch (tag) {
    case LineType::Spacelike:
        center.push_back(pos.front());
        pos.erase(pos.begin());
        break;
    case LineType::Timelike:
        center.push_back(neg.front());
        neg.erase(neg.begin());
        break;
    case LineType::Lightlike:
        // The extra pair sits wholly inside the center; e_1 is its a-vector.
        center.push_back(a[static_cast<std::size_t>(pat.nul)]);
        center.push_back(b[static_cast<std::size_t>(pat.nul)]);
        break;
    case LineType::Radical:
        break;
    }
    for (int i = 0; i < pat.nul; ++i) center.push_back(a[static_cast<std::size_t>(i)]);
    center.insert(center.end(), pos.begin(), pos.end());
    center.insert(center.end(), neg.begin(), neg.end());

    std::vector<Vec> cols = center;
    cols.insert(cols.end(), outside.begin(), outside.end());
    if (cols.size() != N || center.size() + 2 != N) throw std::logic_error("representative: basis has wrong size");

    if (table.swapped) {
        // Reorder coordinates so that -I_{P,Q} becomes I_{p,q}.
        for (auto& v : cols) std::rotate(v.begin(), v.begin() + P, v.end());
        for (auto& v : center) std::rotate(v.begin(), v.begin() + P, v.end());
    }
    Subspace big(N, center);
    Subspace small(N, {center.front()});
    return {Flag(std::move(small), std::move(big)), Mat::from_columns(cols, N)};
}

Mat representative(int class_id, int p, int q) {
    const RepresentativeFlag rf = representative_flag(class_id, p, q);
    const Mat J = QuadraticSpace::standard(p, q).gram();
    return rf.basis.transpose() * J * rf.basis;
}

// ---------------------------------------------------------------- scaled automorphisms

namespace {
bool has_parabolic_shape(const Mat& g) {
    const std::size_t n = g.rows();
    if (!g.is_square() || n < 4) return false;
    for (std::size_t i = 1; i < n; ++i)
        if (sgn(g(i, 0)) != 0) return false;
    for (std::size_t i = n - 2; i < n; ++i)
        for (std::size_t j = 0; j + 2 < n; ++j)
            if (sgn(g(i, j)) != 0) return false;
    return true;
}
} // namespace

ScaledAutomorphism decompose_scaled_automorphism(const Mat& g) {
    if (!has_parabolic_shape(g)) throw PreconditionError("matrix is not block upper triangular (1, n-3, 2)");
    const std::size_t n = g.rows();
    if (sgn(det(g)) == 0) throw SingularMatrix("scaled automorphism must be invertible");
    const Scalar a = g(0, 0);
    const Scalar detD = g(n - 2, n - 2) * g(n - 1, n - 1) - g(n - 2, n - 1) * g(n - 1, n - 2);
    const Scalar c = detD / a;
    return {g, c, Scalar(1 / c) * g};
}

ScaledAutomorphism parabolic_sample(int n, std::uint64_t seed) {
    if (n < 4) throw PreconditionError("parabolic_sample: n must be at least 4");
    std::mt19937_64 rng(seed);
    const auto N = static_cast<std::size_t>(n);
    for (;;) {
        Mat g(N, N);
        g(0, 0) = draw(rng, true);
        for (std::size_t j = 1; j < N; ++j) g(0, j) = draw(rng, false);
        for (std::size_t i = 1; i + 2 < N; ++i)
            for (std::size_t j = 1; j < N; ++j) g(i, j) = draw(rng, false);
        for (std::size_t i = N - 2; i < N; ++i)
            for (std::size_t j = N - 2; j < N; ++j) g(i, j) = draw(rng, false);
        if (sgn(det(g)) != 0) return decompose_scaled_automorphism(g);
    }
}

Mat act_on_metric(const Mat& g, const Mat& gram) {
    if (!g.is_square() || g.rows() != gram.rows() || !gram.is_square())
        throw MalformedInput("act_on_metric: shape mismatch");
    const Mat inv = invert(g);
    return inv.transpose() * gram * inv;
}

bool is_scaled_automorphism(const Mat& g, int n) {
    if (n < 4 || !g.is_square() || g.rows() != static_cast<std::size_t>(n)) return false;
    if (!has_parabolic_shape(g) || sgn(det(g)) == 0) return false;
    const ScaledAutomorphism sa = decompose_scaled_automorphism(g);
    if (!HeisenbergAlgebra(n).structure().is_automorphism(sa.automorphism))
        throw std::logic_error("parabolic matrix whose normalized part does not preserve the bracket");
    return true;
}

} // namespace h3m
