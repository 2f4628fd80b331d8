#include "latkit/io.hpp"

#include <fstream>
#include <sstream>

namespace latkit {

namespace {

Int read_int(std::istream& in, const char* what) {
    std::string tok;
    if (!(in >> tok)) throw io_error(std::string("expected ") + what);
    try {
        return Int(tok);
    } catch (const std::invalid_argument&) {
        throw io_error(std::string("bad integer '") + tok + "' for " + what);
    }
}

long read_count(std::istream& in, const char* what, long max) {
    Int v = read_int(in, what);
    if (v < 0 || v > max)
        throw io_error(std::string("out-of-range ") + what + ": " +
                       v.get_str());
    return v.get_si();
}

}  // namespace

Polyhedron parse_polytope_file(std::istream& in) {
    long m = read_count(in, "row count", 100000);
    long cols = read_count(in, "column count", 100000);
    if (cols < 1) throw io_error("column count must be at least 1");
    long n = cols - 1;
    std::vector<VecZ> rows(m, VecZ(n));
    VecZ rhs(m);
    for (long i = 0; i < m; ++i) {
        rhs[i] = read_int(in, "right-hand side");
        for (long j = 0; j < n; ++j)
            rows[i][j] = -read_int(in, "coefficient");
    }
    std::vector<bool> is_eq(m, false);
    std::string word;
    while (in >> word) {
        if (word == "linearity") {
            long k = read_count(in, "linearity count", m);
            for (long t = 0; t < k; ++t) {
                long idx = read_count(in, "linearity index", m);
                if (idx < 1) throw io_error("linearity index must be >= 1");
                is_eq[idx - 1] = true;
            }
        } else {
            throw io_error("unexpected token '" + word + "'");
        }
    }
    Polyhedron P;
    P.A = MatZ(0, n);
    P.E = MatZ(0, n);
    for (long i = 0; i < m; ++i) {
        if (is_eq[i])
            P.add_equation(rows[i], rhs[i]);
        else
            P.add_inequality(rows[i], rhs[i]);
    }
    return P;
}

Polyhedron parse_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "'");
    return parse_polytope_file(in);
}

MatZ parse_matrix_file(std::istream& in) {
    long r = read_count(in, "row count", 100000);
    long c = read_count(in, "column count", 100000);
    MatZ M(r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) M.at(i, j) = read_int(in, "entry");
    std::string extra;
    if (in >> extra) throw io_error("trailing token '" + extra + "'");
    return M;
}

MatZ parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "'");
    return parse_matrix_file(in);
}

std::string serialize(const ShortRatFun& f) {
    ShortRatFun g = f;
    g.compress();
    std::ostringstream os;
    auto vec = [&](const VecZ& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ",";
            os << v[i];
        }
    };
    for (const auto& t : g.terms()) {
        os << t.coeff << " ; ";
        vec(t.numer);
        os << " ; ";
        for (std::size_t j = 0; j < t.denom.size(); ++j) {
            if (j) os << " | ";
            vec(t.denom[j]);
        }
        os << "\n";
    }
    return os.str();
}

VecZ parse_int_vector(const std::string& text) {
    std::istringstream in(text);
    VecZ v;
    std::string tok;
    while (in >> tok) {
        try {
            v.push_back(Int(tok));
        } catch (const std::invalid_argument&) {
            throw io_error("bad integer '" + tok + "'");
        }
    }
    return v;
}

}  // namespace latkit
