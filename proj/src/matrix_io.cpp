#include "h3m/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "h3m/errors.hpp"

namespace h3m {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

std::string vectors_to_string(const std::vector<Vec>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < vs[i].size(); ++j) {
            if (j) out += ',';
            out += to_string(vs[i][j]);
        }
    }
    return out;
}

} // namespace

Mat parse_matrix(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    const auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!trim(line).empty()) return true;
        }
        return false;
    };
    if (!next_line()) throw MalformedInput("matrix file: missing header line");
    std::size_t n = 0;
    {
        std::istringstream hs(line);
        long long v = 0;
        std::string extra;
        if (!(hs >> v) || (hs >> extra) || v <= 0)
            throw MalformedInput("matrix file: header must be a single positive integer, got '" + std::string(trim(line)) + "'");
        n = static_cast<std::size_t>(v);
    }
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!next_line()) throw MalformedInput("matrix file: expected " + std::to_string(n) + " rows, got " + std::to_string(i));
        std::istringstream rs(line);
        std::string tok;
        std::size_t j = 0;
        while (rs >> tok) {
            if (j >= n) throw MalformedInput("matrix file: line " + std::to_string(lineno) + " has more than " + std::to_string(n) + " entries");
            m(i, j++) = parse_scalar(tok);
        }
        if (j != n) throw MalformedInput("matrix file: line " + std::to_string(lineno) + " has " + std::to_string(j) + " entries, expected " + std::to_string(n));
    }
    if (next_line()) throw MalformedInput("matrix file: trailing content on line " + std::to_string(lineno));
    return m;
}

Mat read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open matrix file '" + path + "'");
    return parse_matrix(in);
}

std::string format_matrix(const Mat& m) {
    std::ostringstream os;
    os << m.rows() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
        os << "\n";
    }
    return os.str();
}

std::vector<Vec> parse_vectors(std::string_view text) {
    std::vector<Vec> out;
    for (const auto part : split(text, ';')) {
        if (part.empty()) throw MalformedInput("flag spec: empty vector in '" + std::string(text) + "'");
        Vec v;
        for (const auto entry : split(part, ',')) v.push_back(parse_scalar(entry));
        if (!out.empty() && v.size() != out.front().size())
            throw MalformedInput("flag spec: vectors of different lengths in '" + std::string(text) + "'");
        out.push_back(std::move(v));
    }
    return out;
}

Flag parse_flag(std::string_view spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 2) throw MalformedInput("flag spec must have the form '<small>:<big>', got '" + std::string(spec) + "'");
    std::vector<Vec> small = parse_vectors(parts[0]);
    std::vector<Vec> big = parse_vectors(parts[1]);
    const std::size_t n = small.front().size();
    if (big.front().size() != n) throw MalformedInput("flag spec: small and big vectors have different lengths");
    if (span_dim(small, n) != small.size() || span_dim(big, n) != big.size())
        throw MalformedInput("flag spec: spanning vectors must be linearly independent");
    return Flag(Subspace(n, std::move(small)), Subspace(n, std::move(big)));
}

std::string format_flag(const Flag& f) {
    return vectors_to_string(f.small().basis()) + ":" + vectors_to_string(f.big().basis());
}

} // namespace h3m
