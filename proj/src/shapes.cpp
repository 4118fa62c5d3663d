#include "permv/shapes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace permv {

namespace {

int parse_positive_int(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("shape: expected a positive integer, got \"" + s + "\"");
    long v = std::stol(s);
    if (v <= 0) throw parse_error("shape: expected a positive integer, got \"" + s + "\"");
    return int(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::pair<int, int> parse_dims(const std::string& s) {
    auto x = s.find('x');
    if (x == std::string::npos) throw parse_error("shape: expected MxN, got \"" + s + "\"");
    return {parse_positive_int(s.substr(0, x)), parse_positive_int(s.substr(x + 1))};
}

void check_index_sets(const SymbolicMatrix& M, const std::vector<int>& rows,
                      const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw domain_error("submatrix: row/column count mismatch");
    if (rows.empty()) throw domain_error("submatrix: empty index set");
    auto check = [](const std::vector<int>& idx, int bound, const char* what) {
        std::vector<int> sorted(idx);
        std::sort(sorted.begin(), sorted.end());
        if (sorted.front() < 1 || sorted.back() > bound)
            throw domain_error(std::string("submatrix: ") + what + " index out of range");
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw domain_error(std::string("submatrix: repeated ") + what + " index");
    };
    check(rows, M.rows(), "row");
    check(cols, M.cols(), "column");
}

Polynomial expand_minor(const SymbolicMatrix& M, const std::vector<int>& rows,
                        const std::vector<int>& cols, const MonomialOrder& order, bool signed_) {
    check_index_sets(M, rows, cols);
    const RingPtr& ring = M.ring();
    const FieldSpec& field = ring->field();
    std::size_t t = rows.size();

    std::vector<std::size_t> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Term> terms;
    do {
        Monomial m(ring->nvars());
        for (std::size_t i = 0; i < t; ++i) m[M.entry(rows[i], cols[perm[i]])] += 1;
        mpq_class c = 1;
        if (signed_) {
            unsigned inversions = 0;
            for (std::size_t i = 0; i < t; ++i)
                for (std::size_t j = i + 1; j < t; ++j)
                    if (perm[i] > perm[j]) ++inversions;
            if (inversions % 2 == 1) c = field.neg(c);
        }
        terms.push_back(Term{c, std::move(m)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Polynomial::from_terms(ring, order, std::move(terms));
}

void combinations(int n, int t, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> idx(t);
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
        emit(idx);
        int i = t - 1;
        while (i >= 0 && idx[i] == n - (t - 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Ideal minors_ideal(const ShapeSpec& shape, bool signed_) {
    shape.validate();
    SymbolicMatrix M = build_matrix(shape);
    MonomialOrder order = shape_order(shape);
    std::vector<Polynomial> gens;
    combinations(shape.rows, shape.minor, [&](const std::vector<int>& rows) {
        combinations(shape.cols, shape.minor, [&](const std::vector<int>& cols) {
            gens.push_back(expand_minor(M, rows, cols, order, signed_));
        });
    });
    return Ideal(M.ring(), std::move(gens)); // ctor deduplicates equal minors
}

} // namespace

std::string family_name(Family f) {
    switch (f) {
    case Family::generic: return "generic";
    case Family::symmetric: return "symmetric";
    case Family::hankel: return "hankel";
    }
    throw domain_error("unknown family");
}

ShapeSpec ShapeSpec::parse(const std::string& text, FieldSpec field) {
    auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3) throw parse_error("shape: malformed \"" + text + "\"");

    ShapeSpec s;
    s.field = field;
    if (parts[0] == "generic" || parts[0] == "hankel") {
        s.family = parts[0] == "generic" ? Family::generic : Family::hankel;
        auto [m, n] = parse_dims(parts[1]);
        if (m > n) std::swap(m, n); // transpose freedom: P_t is transpose-invariant
        s.rows = m;
        s.cols = n;
    } else if (parts[0] == "symmetric") {
        s.family = Family::symmetric;
        int n = parse_positive_int(parts[1]);
        s.rows = s.cols = n;
    } else {
        throw parse_error("shape: unknown family \"" + parts[0] + "\"");
    }
    if (parts.size() == 3) {
        if (parts[2].rfind("t=", 0) != 0) throw parse_error("shape: expected t=T, got \"" + parts[2] + "\"");
        s.minor = parse_positive_int(parts[2].substr(2));
    }
    s.validate();
    return s;
}

std::string ShapeSpec::to_string() const {
    std::ostringstream os;
    os << family_name(family) << ':';
    if (family == Family::symmetric)
        os << rows;
    else
        os << rows << 'x' << cols;
    if (minor != 2) os << ":t=" << minor;
    return os.str();
}

void ShapeSpec::validate() const {
    if (minor < 1) throw domain_error("shape: minor size must be at least 1");
    if (family == Family::symmetric) {
        if (rows != cols) throw domain_error("shape: symmetric matrices are square");
        if (rows < 2) throw domain_error("shape: symmetric size must be at least 2");
    } else {
        if (rows < 2 || rows > cols) throw domain_error("shape: need 2 <= m <= n");
    }
    if (minor > rows) throw domain_error("shape: minor size exceeds matrix dimensions");
}

SymbolicMatrix build_matrix(const ShapeSpec& shape) {
    shape.validate();
    int m = shape.rows, n = shape.cols;
    std::vector<std::string> vars;
    std::vector<std::size_t> entries(std::size_t(m) * n);

    auto name2 = [](char head, int i, int j) {
        return std::string(1, head) + "_" + std::to_string(i) + "_" + std::to_string(j);
    };

    switch (shape.family) {
    case Family::generic:
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j) vars.push_back(name2('x', i, j));
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j)
                entries[std::size_t(i - 1) * n + (j - 1)] = std::size_t(i - 1) * n + (j - 1);
        break;
    case Family::symmetric: {
        std::map<std::pair<int, int>, std::size_t> at;
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                at[{i, j}] = vars.size();
                vars.push_back(name2('y', i, j));
            }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                entries[std::size_t(i - 1) * n + (j - 1)] = at[{std::min(i, j), std::max(i, j)}];
        break;
    }
    case Family::hankel:
        for (int k = 1; k <= m + n - 1; ++k) vars.push_back("x_" + std::to_string(k));
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j)
                entries[std::size_t(i - 1) * n + (j - 1)] = std::size_t(i + j - 2);
        break;
    }
    return SymbolicMatrix(make_ring(std::move(vars), shape.field), m, n, std::move(entries));
}

MonomialOrder shape_order(const ShapeSpec& shape) {
    shape.validate();
    std::size_t nvars;
    switch (shape.family) {
    case Family::generic: nvars = std::size_t(shape.rows) * shape.cols; break;
    case Family::symmetric: nvars = std::size_t(shape.rows) * (shape.rows + 1) / 2; break;
    case Family::hankel: nvars = std::size_t(shape.rows) + shape.cols - 1; break;
    default: throw domain_error("unknown family");
    }
    // the paper's orders all coincide with lex over the natural variable
    // sequence of build_matrix
    return MonomialOrder::lex(nvars);
}

Polynomial subpermanent(const SymbolicMatrix& M, const std::vector<int>& rows,
                        const std::vector<int>& cols, const MonomialOrder& order) {
    return expand_minor(M, rows, cols, order, false);
}

Polynomial subdeterminant(const SymbolicMatrix& M, const std::vector<int>& rows,
                          const std::vector<int>& cols, const MonomialOrder& order) {
    return expand_minor(M, rows, cols, order, true);
}

Ideal permanental_ideal(const ShapeSpec& shape) {
    return minors_ideal(shape, false);
}

Ideal determinantal_ideal(const ShapeSpec& shape) {
    return minors_ideal(shape, true);
}

} // namespace permv
