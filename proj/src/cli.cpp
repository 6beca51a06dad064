#include "h3m/cli.hpp"

#include <cstdio>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "h3m/curvature.hpp"
#include "h3m/errors.hpp"
#include "h3m/heisenberg.hpp"
#include "h3m/matrix_io.hpp"
#include "h3m/verify.hpp"
#include "h3m/witness.hpp"

namespace h3m {

namespace {

struct CheckFailed {};

std::string inline_matrix(const Mat& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + to_string(m(i, j));
        s += "]";
    }
    return s + "]";
}

std::string fixed(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

void print_curvature(std::ostream& os, const CurvatureReport& r) {
    os << "flat: " << (r.flat ? "true" : "false") << "\n";
    os << "scalar_curvature: " << to_string(r.ricci.scalar) << "\n";
    os << "ricci: " << inline_matrix(r.ricci.ricci) << "\n";
    if (r.soliton) {
        os << "soliton: true\n";
        os << "soliton_c: " << to_string(r.soliton->c) << "\n";
        os << "soliton_derivation: " << inline_matrix(r.soliton->derivation) << "\n";
        os << "einstein: " << (r.soliton->einstein ? "true" : "false") << "\n";
    } else {
        os << "soliton: false\n";
    }
}

void cmd_classify(std::ostream& os, const std::string& path, bool curvature, bool record) {
    const Mat gram = read_matrix_file(path);
    const HeisenbergAlgebra alg(static_cast<int>(gram.rows()));
    const Classification c = classify_metric(alg, gram);
    const MetricClass& m = c.metric_class;
    os << "p: " << c.p << "\n";
    os << "q: " << c.q << "\n";
    os << "swapped: " << (c.swapped ? "true" : "false") << "\n";
    os << "class_id: " << m.id << "\n";
    os << "center_pattern: " << m.pattern.label() << "\n";
    os << "center_signature: " << to_string(m.center_signature) << "\n";
    os << "derived_refined: " << to_string(m.derived_refined) << "\n";

    std::optional<CurvatureReport> rep;
    if (curvature) {
        rep = curvature_report(alg.structure(), gram);
        print_curvature(os, *rep);
    }
    if (record) {
        nlohmann::ordered_json j;
        j["p"] = c.p;
        j["q"] = c.q;
        j["swapped"] = c.swapped;
        j["class_id"] = m.id;
        j["center_signature"] = {m.center_signature.pos, m.center_signature.neg, m.center_signature.nul};
        j["derived_refined"] = to_string(m.derived_refined);
        if (rep) j["flat"] = rep->flat;
        j["notes"] = c.swapped ? "Gram matrix negated to reach p >= q" : "";
        os << "record: " << j.dump() << "\n";
    }
}

void cmd_table(std::ostream& os, int p, int q) {
    const ClassTable t = admissible_classes(p, q);
    os << "signature: (" << p << "," << q << ")\n";
    os << "canonical: (" << t.p << "," << t.q << ")\n";
    os << "swapped: " << (t.swapped ? "true" : "false") << "\n";
    for (const auto& c : t.classes) {
        char line[128];
        std::snprintf(line, sizeof line, "class %2d: %-16s %-9s %s\n", c.id, c.pattern.label().c_str(),
                      to_string(c.center_signature).c_str(), to_string(c.derived_refined).c_str());
        os << line;
    }
    os << "count: " << t.classes.size() << "\n";
}

void cmd_verify(std::ostream& os, int p, int q, std::uint64_t seed, int trials) {
    if (trials < 1) throw MalformedInput("--trials must be positive");
    VerifyOptions opts;
    opts.seed = seed;
    opts.trials = trials;
    opts.max_support = p + q > 6 ? 3 : 0;
    const VerifyReport r = verify(p, q, opts);
    os << "signature: (" << p << "," << q << ")\n";
    os << "seed: " << seed << "\n";
    os << "trials: " << trials << "\n";
    if (opts.max_support) os << "oracle_support_cap: " << opts.max_support << "\n";
    os << "enumerated_flags: " << r.flags << "\n";
    os << "invariant_tuples: " << r.invariant_count << "\n";
    os << "matsuki_tuples: " << r.matsuki_count << "\n";
    os << "observed_classes:";
    for (int id : r.observed_classes) os << " " << id;
    os << "\n";
    os << "observed_class_count: " << r.observed_classes.size() << "\n";
    for (const auto& c : r.checks) os << "check " << c.name << ": " << (c.passed ? "PASS" : "FAIL") << " (" << c.detail << ")\n";
    os << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
    if (!r.passed()) throw CheckFailed{};
}

void cmd_witness(std::ostream& os, int p, int q, const std::string& s1, const std::string& s2) {
    const Flag f1 = parse_flag(s1), f2 = parse_flag(s2);
    const QuadraticSpace space = QuadraticSpace::standard(p, q);
    if (f1.ambient_dim() != space.dim() || f2.ambient_dim() != space.dim())
        throw MalformedInput("flag vectors must have length p + q = " + std::to_string(p + q));
    if (f1.small().dim() != f2.small().dim() || f1.big().dim() != f2.big().dim())
        throw MalformedInput("flags have different types (k1, k2)");
    const FlagInvariants i1 = flag_invariants(space, f1), i2 = flag_invariants(space, f2);
    if (i1 != i2) {
        os << "inequivalent: " << invariant_difference(i1, i2) << "\n";
        return;
    }
    const IsometryWitness w = isometry_witness(p, q, f1, f2);
    os << "equivalent: true\n";
    os << "invariants: " << to_string(i1) << "\n";
    os << "isometry_residual: " << fixed(w.isometry_residual) << "\n";
    os << "small_distance: " << fixed(w.small_distance) << "\n";
    os << "big_distance: " << fixed(w.big_distance) << "\n";
    os << "witness:\n";
    for (Eigen::Index i = 0; i < w.matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j < w.matrix.cols(); ++j) {
            char buf[32];
            const double x = w.matrix(i, j);
            std::snprintf(buf, sizeof buf, "%s%.12f", j ? " " : "  ", x == 0.0 ? 0.0 : x);
            os << buf;
        }
        os << "\n";
    }
}

void cmd_curvature(std::ostream& os, int p, int q, int only) {
    const ClassTable t = admissible_classes(p, q);
    const HeisenbergAlgebra alg(p + q);
    bool found = false;
    for (const auto& c : t.classes) {
        if (only && c.id != only) continue;
        found = true;
        const Mat gram = representative(c.id, p, q);
        os << "class_id: " << c.id << "\n";
        os << "representative: " << inline_matrix(gram) << "\n";
        print_curvature(os, curvature_report(alg.structure(), gram));
    }
    if (!found)
        throw PreconditionError("class " + std::to_string(only) + " is not admissible for signature (" +
                                std::to_string(p) + "," + std::to_string(q) + ")");
}

void cmd_matsuki(std::ostream& os, int p, int q, const std::string& spec) {
    const Flag f = parse_flag(spec);
    const MatsukiData m = matsuki_data(f, p, q);
    const QuadraticSpace space = QuadraticSpace::standard(p, q);
    const FlagInvariants inv = flag_invariants(space, f);
    os << "c_plus: " << m.c_plus << "\n";
    os << "c_minus: " << m.c_minus << "\n";
    os << "c_zero: " << m.c_zero << "\n";
    os << "d_plus: " << m.d_plus << "\n";
    os << "d_minus: " << m.d_minus << "\n";
    os << "d_zero: " << m.d_zero << "\n";
    os << "d_pm: " << m.d_pm << "\n";
    os << "invariants: " << to_string(inv) << "\n";
    if (p + q >= 4 && p >= 1 && q >= 1) os << "class_id: " << class_of_flag(p, q, inv) << "\n";
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Left-invariant metrics on H3 x R^(n-3): classification, verification, curvature"};
    app.name("h3m");
    app.require_subcommand(1);

    std::string path, spec1, spec2;
    int p = 0, q = 0, trials = 200, class_id = 0;
    std::uint64_t seed = 1;
    bool curvature = false, record = false;

    auto* classify = app.add_subcommand("classify", "Classify the metric in a matrix file");
    classify->add_option("path", path, "Matrix file")->required();
    classify->add_flag("--curvature", curvature, "Also report curvature");
    classify->add_flag("--record", record, "Append a single-line JSON record");

    auto* table = app.add_subcommand("table", "List the admissible classes for (p, q)");
    auto* verify_cmd = app.add_subcommand("verify", "Run the enumeration oracle and invariance trials");
    auto* witness = app.add_subcommand("witness", "Construct an isometry between two equivalent flags");
    auto* curv = app.add_subcommand("curvature", "Curvature of the class representatives");
    auto* matsuki = app.add_subcommand("matsuki", "Print the seven Matsuki data of a flag");
    for (auto* sub : {table, verify_cmd, witness, curv, matsuki}) {
        sub->add_option("p", p)->required();
        sub->add_option("q", q)->required();
    }
    verify_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    verify_cmd->add_option("--trials", trials, "Trials per randomized check")->capture_default_str();
    witness->add_option("flag1", spec1, "Flag spec small:big")->required();
    witness->add_option("flag2", spec2, "Flag spec small:big")->required();
    curv->add_option("--class", class_id, "Restrict to one class id");
    matsuki->add_option("flag", spec1, "Flag spec small:big")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitMalformed;
    }

    std::ostringstream buf;
    try {
        if (*classify) cmd_classify(buf, path, curvature, record);
        else if (*table) cmd_table(buf, p, q);
        else if (*verify_cmd) cmd_verify(buf, p, q, seed, trials);
        else if (*witness) cmd_witness(buf, p, q, spec1, spec2);
        else if (*curv) cmd_curvature(buf, p, q, class_id);
        else if (*matsuki) cmd_matsuki(buf, p, q, spec1);
    } catch (const CheckFailed&) {
        out << buf.str();
        err << "error: verification failed\n";
        return kExitCheckFailed;
    } catch (const MalformedInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const WitnessFailure& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    out << buf.str();
    return kExitOk;
}

} // namespace h3m
