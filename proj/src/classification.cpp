#include "permv/classification.hpp"

#include <algorithm>

#include "permv/ideal_ops.hpp"

namespace permv {

namespace {

Polynomial var_poly(const RingPtr& ring, const MonomialOrder& order, const std::string& name) {
    auto idx = ring->var_index(name);
    if (!idx) throw domain_error("classification: unknown variable " + name);
    return Polynomial::from_terms(ring, order, {Term{1, Monomial::variable(ring->nvars(), *idx)}});
}

Ideal vars_ideal(const RingPtr& ring, const MonomialOrder& order,
                 const std::vector<std::string>& names) {
    std::vector<Polynomial> gens;
    for (const auto& n : names) gens.push_back(var_poly(ring, order, n));
    return Ideal(ring, std::move(gens));
}

std::string xvar(int k) { return "x_" + std::to_string(k); }
std::string xvar(int i, int j) { return "x_" + std::to_string(i) + "_" + std::to_string(j); }
std::string yvar(int i, int j) {
    return "y_" + std::to_string(std::min(i, j)) + "_" + std::to_string(std::max(i, j));
}

std::vector<std::string> xrange(int lo, int hi) {
    std::vector<std::string> names;
    for (int k = lo; k <= hi; ++k) names.push_back(xvar(k));
    return names;
}

// (x_lo, ..., x_hi) in the hankel ring
Ideal hankel_vars(const RingPtr& ring, const MonomialOrder& order, int lo, int hi) {
    return vars_ideal(ring, order, xrange(lo, hi));
}

// q_rs(Y) = (y_rr y_ss + y_rs^2, all other variables)
Ideal q_rs(const RingPtr& ring, const MonomialOrder& order, int n, int r, int s) {
    std::vector<Polynomial> gens;
    gens.push_back(parse_polynomial(yvar(r, r) + "*" + yvar(s, s) + "+" + yvar(r, s) + "^2", ring,
                                    order));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            if ((i == r && j == r) || (i == s && j == s) || (i == r && j == s)) continue;
            gens.push_back(var_poly(ring, order, yvar(i, j)));
        }
    return Ideal(ring, std::move(gens));
}

struct ShapeContext {
    RingPtr ring;
    MonomialOrder order;
};

ShapeContext context_of(const ShapeSpec& shape) {
    return {build_matrix(shape).ring(), shape_order(shape)};
}

} // namespace

bool is_classified(const ShapeSpec& shape) {
    try {
        shape.validate();
    } catch (const error&) {
        return false;
    }
    return shape.minor == 2; // every t = 2 shape falls into a table case
}

KnownPrimeSet known_data(const ShapeSpec& shape) {
    shape.validate();
    if (shape.minor != 2)
        throw unclassified_error("no classification data for t = " + std::to_string(shape.minor) +
                                 " (only t = 2 is covered)");
    auto [ring, order] = context_of(shape);
    const int m = shape.rows, n = shape.cols;

    KnownPrimeSet d;
    d.shape = shape;

    switch (shape.family) {
    case Family::generic:
        if (m == 2 && n == 2) {
            d.known_prime = true;
            d.paper_v = 0;
            d.provenance = "Chau-Jayanthan sec.1 (after LS00): P_2 of a 2x2 matrix is prime";
            return d;
        }
        if (m == 2) {
            d.paper_v = 2;
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= n; ++j)
                    d.min_prime_covers.push_back(vars_ideal(ring, order, {xvar(i, j)}));
            d.nonprime_probe = parse_polynomial("x_1_1*x_2_2", ring, order);
            d.provenance = "Chau-Jayanthan Thm 3.2 proof (LS00 Thm 4.1: every associated prime "
                           "of P_2(X) contains a variable)";
            return d;
        }
        {
            d.paper_v = 3;
            for (int i = 1; i <= m; ++i) {
                std::vector<std::string> row;
                for (int j = 1; j <= n; ++j) row.push_back(xvar(i, j));
                d.min_prime_covers.push_back(vars_ideal(ring, order, row));
            }
            for (int j = 1; j <= n; ++j) {
                std::vector<std::string> col;
                for (int i = 1; i <= m; ++i) col.push_back(xvar(i, j));
                d.min_prime_covers.push_back(vars_ideal(ring, order, col));
            }
            d.nonprime_probe = parse_polynomial("x_1_1*x_1_2*x_1_3", ring, order);
            d.provenance = "Chau-Jayanthan Thm 3.5 proof (LS00 Thm 5.7: every associated prime "
                           "contains a full row or column)";
            return d;
        }
    case Family::symmetric:
        if (n == 2) {
            d.known_prime = true;
            d.paper_v = 0;
            d.provenance = "Chau-Jayanthan sec.1: P_2 of a 2x2 matrix is prime";
            return d;
        }
        d.paper_v = 3;
        for (int r = 1; r <= n; ++r)
            for (int s = r + 1; s <= n; ++s) d.min_prime_covers.push_back(q_rs(ring, order, n, r, s));
        d.nonprime_probe = parse_polynomial("y_1_2*y_3_3^2", ring, order);
        d.provenance = "Chau-Jayanthan sec.4 (Chau Thm 4.1: the q_rs(Y) are exactly the minimal "
                       "primes of P_2(Y))";
        return d;
    case Family::hankel: {
        const int N = m + n - 1; // number of ring variables
        if (m == 2 && n == 2) {
            d.known_prime = true;
            d.paper_v = 0;
            d.provenance = "Chau-Jayanthan sec.1: P_2 of a 2x2 matrix is prime";
            return d;
        }
        if (m == 2 && n == 3) {
            d.paper_v = 3;
            d.ass_primes = {hankel_vars(ring, order, 1, 3), hankel_vars(ring, order, 2, 4)};
            d.nonprime_probe = parse_polynomial("x_1*x_2*x_3", ring, order);
            d.provenance = "Chau-Jayanthan Thm 5.4(1) (GGS07 Prop 6.3: Ass list)";
            return d;
        }
        if (m == 2) { // n >= 4
            d.paper_v = 2;
            d.ass_primes = {hankel_vars(ring, order, 1, n), hankel_vars(ring, order, 2, n + 1),
                            hankel_vars(ring, order, 1, n + 1)};
            d.nonprime_probe = parse_polynomial("x_2*" + xvar(n), ring, order);
            d.provenance = "Chau-Jayanthan Thm 5.3(1) (GGS07 Prop 5.1(1): Ass list)";
            return d;
        }
        if (m == 3 && n == 3) {
            d.paper_v = 3;
            d.ass_primes = {hankel_vars(ring, order, 1, 4), hankel_vars(ring, order, 2, 5),
                            hankel_vars(ring, order, 1, 5)};
            d.nonprime_probe = parse_polynomial("x_1*x_3*x_5", ring, order);
            d.provenance = "Chau-Jayanthan Thm 5.4(2) (GGS07 Thm 4.3, Prop 5.2: Ass list)";
            return d;
        }
        if (m == 3 && n == 4) {
            d.paper_v = 2;
            d.ass_primes = {hankel_vars(ring, order, 1, 5), hankel_vars(ring, order, 2, 6),
                            hankel_vars(ring, order, 1, 6)};
            d.nonprime_probe = parse_polynomial("x_2*x_5", ring, order);
            d.provenance = "Chau-Jayanthan Thm 5.3(2) (GGS07 Thm 4.3, Prop 5.3: Ass list)";
            return d;
        }
        if (m == 3 && n == 5) {
            d.paper_v = 2;
            d.ass_primes = {hankel_vars(ring, order, 1, 6), hankel_vars(ring, order, 2, 7)};
            d.nonprime_probe = parse_polynomial("x_2*x_3", ring, order);
            d.provenance = "Chau-Jayanthan Thm 5.3(3) (GGS07 Prop 6.4: Ass list)";
            return d;
        }
        if (m == 4 && n == 4) {
            d.paper_v = 2;
            d.ass_primes = {hankel_vars(ring, order, 1, 6), hankel_vars(ring, order, 2, 7),
                            hankel_vars(ring, order, 1, 7)};
            d.nonprime_probe = parse_polynomial("x_2*x_5", ring, order);
            d.provenance = "Chau-Jayanthan Thm 5.3(4) (GGS07 Thm 4.3, Prop 5.4: Ass list)";
            return d;
        }
        if ((m == 3 && n == 6) || (m == 4 && n == 5) || (m >= 3 && N >= 9)) {
            d.paper_v = 1;
            // x_5 lies in P_2 : x_5 in every Thm 5.2 case, so x_5^2 is in P_2 and
            // every prime over P_2 contains x_5
            d.min_prime_covers = {hankel_vars(ring, order, 5, 5)};
            d.nonprime_probe = parse_polynomial("x_5", ring, order);
            d.provenance = "Chau-Jayanthan Thm 5.2 (with GGS07 Prop 5.1(2)): x_5 lies in "
                           "P_2(H) : x_5, hence in every minimal prime";
            return d;
        }
        break;
    }
    }
    throw unclassified_error("shape " + shape.to_string() + " is outside the classification table");
}

std::vector<Witness> paper_witnesses(const ShapeSpec& shape) {
    if (!is_classified(shape)) return {};
    KnownPrimeSet data = known_data(shape);
    if (data.known_prime) return {};

    auto [ring, order] = context_of(shape);
    const int m = shape.rows, n = shape.cols;
    auto mk = [&](const std::string& f, const std::vector<std::string>& colon_vars, int degree,
                  const std::string& prov) {
        return Witness{parse_polynomial(f, ring, order), vars_ideal(ring, order, colon_vars),
                       degree, prov};
    };

    switch (shape.family) {
    case Family::generic:
        if (m == 2) {
            // p = (x_13..x_1n, x_23..x_2n, x_11 x_22 + x_12 x_21)
            std::vector<Polynomial> gens;
            for (int i = 1; i <= 2; ++i)
                for (int j = 3; j <= n; ++j) gens.push_back(var_poly(ring, order, xvar(i, j)));
            gens.push_back(parse_polynomial("x_1_1*x_2_2+x_1_2*x_2_1", ring, order));
            return {Witness{parse_polynomial("x_1_1*x_2_2", ring, order),
                            Ideal(ring, std::move(gens)), 2,
                            "Chau-Jayanthan Thm 3.2 proof: P_2(X) : x_11x_22 = p"}};
        }
        {
            std::vector<std::string> below; // all variables off the first row
            for (int i = 2; i <= m; ++i)
                for (int j = 1; j <= n; ++j) below.push_back(xvar(i, j));
            return {mk("x_1_1*x_1_2*x_1_3", below, 3,
                       "Chau-Jayanthan Thm 3.5 proof: P_2(X) : x_11x_12x_13 = (x_ij | i >= 2)")};
        }
    case Family::symmetric: {
        // the paper leaves (i,j,k) open; search admissible triples in lex order
        Ideal I = permanental_ideal(shape);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    if (k == i || k == j) continue;
                    Polynomial f =
                        parse_polynomial(yvar(i, j) + "*" + yvar(k, k) + "^2", ring, order);
                    Ideal colon = colon_poly(I, f);
                    if (is_recognized_prime(colon))
                        return {Witness{f, colon, 3,
                                        "Chau-Jayanthan Thm 4.6 (Chau Prop 5.3): P_2(Y) : "
                                        "y_ij y_kk^2 is an associated prime; triple (" +
                                            std::to_string(i) + "," + std::to_string(j) + "," +
                                            std::to_string(k) + ") found by search"}};
                }
        return {};
    }
    case Family::hankel: {
        const int N = m + n - 1;
        if (m == 2 && n == 3)
            return {mk("x_1*x_2*x_3", xrange(2, 4), 3,
                       "Chau-Jayanthan Thm 5.4(1): P_2(H) : x_1x_2x_3 = (x_2,x_3,x_4)")};
        if (m == 2)
            return {mk("x_2*" + xvar(n), xrange(1, n + 1), 2,
                       "Chau-Jayanthan Thm 5.3(1) (GGS07 Prop 5.1(1)): P_2(H) : x_2x_n = "
                       "(x_1,...,x_{n+1})")};
        if (m == 3 && n == 3)
            return {mk("x_1*x_3*x_5", xrange(1, 5), 3,
                       "Chau-Jayanthan Thm 5.4(2) (GGS07 Prop 5.2): P_2(H) : x_1x_3x_5 = "
                       "(x_1,...,x_5)")};
        if (m == 3 && n == 4)
            return {mk("x_2*x_5", xrange(1, 6), 2,
                       "Chau-Jayanthan Thm 5.3(2) (GGS07 Prop 5.3): P_2(H) : x_2x_5 = "
                       "(x_1,...,x_6)")};
        if (m == 3 && n == 5)
            return {mk("x_2*x_3", xrange(2, 7), 2,
                       "Chau-Jayanthan Thm 5.3(3): P_2(H) : x_2x_3 = (x_2,...,x_7)")};
        if (m == 4 && n == 4)
            return {mk("x_2*x_5", xrange(1, 7), 2,
                       "Chau-Jayanthan Thm 5.3(4) (GGS07 Prop 5.4): P_2(H) : x_2x_5 = "
                       "(x_1,...,x_7)")};
        if ((m == 3 && n == 6) || (m == 4 && n == 5))
            return {mk("x_5", xrange(1, 7), 1,
                       "Chau-Jayanthan Thm 5.2(2),(3): P_2(H) : x_5 = (x_1,...,x_7)")};
        return {mk("x_5", xrange(1, N), 1,
                   "Chau-Jayanthan Thm 5.2(1) (GGS07 Prop 5.1(2)): P_2(H) : x_5 = "
                   "(x_1,...,x_{m+n-1})")};
    }
    }
    return {};
}

bool is_recognized_prime(const Ideal& I, const BuchbergerCaps& caps) {
    if (I.ring()->field().characteristic() == 2)
        throw domain_error("is_recognized_prime: refused in characteristic 2 (the quadric "
                           "recognition argument needs the form to be irreducible of rank >= 3, "
                           "which fails there)");
    MonomialOrder order = MonomialOrder::lex(I.ring()->nvars());
    const GroebnerBasis& gb = cached_groebner(I, order, caps);
    if (gb.contains_one()) return false;

    std::vector<std::size_t> linear_vars;
    bool have_quadric = false;
    std::vector<std::size_t> quadric_vars;

    for (const auto& g : gb.basis()) {
        const auto& terms = g.terms();
        if (terms.size() == 1 && terms[0].mono.degree() == 1) {
            for (std::size_t i = 0; i < g.ring()->nvars(); ++i)
                if (terms[0].mono[i] == 1) linear_vars.push_back(i);
            continue;
        }
        if (terms.size() == 2 && !have_quadric && terms[0].mono.degree() == 2 &&
            terms[1].mono.degree() == 2 && terms[0].coeff == 1 && terms[1].coeff == 1) {
            bool has_cross = false; // at least one term must be uv with u != v
            bool ok = true;
            std::vector<std::size_t> vars;
            for (const auto& t : terms) {
                std::vector<std::size_t> local;
                for (std::size_t i = 0; i < g.ring()->nvars(); ++i)
                    if (t.mono[i] > 0) local.push_back(i);
                if (local.size() == 2)
                    has_cross = true;
                else if (!(local.size() == 1 && t.mono[local[0]] == 2))
                    ok = false;
                for (std::size_t v : local) vars.push_back(v);
            }
            std::sort(vars.begin(), vars.end());
            if (ok && has_cross &&
                std::adjacent_find(vars.begin(), vars.end()) == vars.end()) {
                have_quadric = true;
                quadric_vars = vars;
                continue;
            }
        }
        return false;
    }

    std::sort(linear_vars.begin(), linear_vars.end());
    if (std::adjacent_find(linear_vars.begin(), linear_vars.end()) != linear_vars.end())
        return false;
    for (std::size_t v : quadric_vars)
        if (std::binary_search(linear_vars.begin(), linear_vars.end(), v)) return false;
    return true;
}

std::vector<Polynomial> symmetric_family_basis(int n, const FieldSpec& field) {
    if (n < 2) throw domain_error("symmetric_family_basis: n must be at least 2");
    ShapeSpec shape;
    shape.family = Family::symmetric;
    shape.rows = shape.cols = n;
    shape.field = field;
    RingPtr ring = build_matrix(shape).ring();
    MonomialOrder order = shape_order(shape);

    std::vector<Polynomial> out;
    auto add = [&](const std::string& text) {
        Polynomial p = parse_polynomial(text, ring, order);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    };
    auto mono2 = [&](int a, int b, int c, int d) { return yvar(a, b) + "*" + yvar(c, d); };

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            add(mono2(i, i, j, j) + "+" + yvar(i, j) + "^2"); // (1a)
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                if (i != j && i != k) add(mono2(i, i, j, k) + "+" + mono2(i, j, i, k)); // (1b)
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    if (i != k && i != l && j != k && j != l) add(mono2(i, j, k, l)); // (1c)
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int l = j + 1; l <= n; ++l) {
                add(mono2(i, l, j, l) + "*" + yvar(i, l));                               // (2a) k=i
                add(mono2(i, l, j, l) + "*" + yvar(j, l));                               // (2a) k=j
                for (int k = j + 1; k < l; ++k) add(mono2(i, l, j, l) + "*" + yvar(k, l)); // (2a)
            }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) add(mono2(i, l, j, l) + "*" + yvar(k, k)); // (2b)
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) add(mono2(i, j, i, k) + "*" + yvar(j, j)); // (2c)
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l) {
                add(mono2(i, l, i, k) + "*" + yvar(i, l));                                 // (3a) j=l
                add(mono2(i, k, i, k) + "*" + yvar(i, l));                                 // (3a) j=k
                for (int j = i + 1; j < k; ++j) add(mono2(i, j, i, k) + "*" + yvar(i, l)); // (3a)
            }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) add(mono2(i, k, i, l) + "*" + yvar(j, j)); // (3b)
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                add(mono2(i, k, j, k) + "*" + yvar(j, j));              // (3c)
                add(yvar(i, k) + "^3*" + yvar(j, j));                   // (6a)
                add(yvar(i, k) + "^2*" + yvar(j, j) + "^2");            // (6b)
            }
    return out;
}

std::vector<Polynomial> hankel36_quoted_basis(const FieldSpec& field) {
    ShapeSpec shape = ShapeSpec::parse("hankel:3x6", field);
    RingPtr ring = build_matrix(shape).ring();
    MonomialOrder order = shape_order(shape);

    std::vector<Polynomial> out;
    auto add = [&](const std::string& text) {
        Polynomial p = parse_polynomial(text, ring, order);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    };
    // { x_i x_{i+s+t} + x_{i+s} x_{i+t} : i in [1,6], s in [1,2], t in [1,5],
    //   i+s+t in [3,8] }
    for (int i = 1; i <= 6; ++i)
        for (int s = 1; s <= 2; ++s)
            for (int t = 1; t <= 5; ++t) {
                if (i + s + t < 3 || i + s + t > 8) continue;
                add(xvar(i) + "*" + xvar(i + s + t) + "+" + xvar(i + s) + "*" + xvar(i + t));
            }
    // { x_i x_{i+1}, x_i^2, x_6^2 : i in [3,5] }
    for (int i = 3; i <= 5; ++i) {
        add(xvar(i) + "*" + xvar(i + 1));
        add(xvar(i) + "^2");
    }
    add("x_6^2");
    // { x_2^2 x_3, x_6 x_7^2, x_2^4, x_7^4 }
    add("x_2^2*x_3");
    add("x_6*x_7^2");
    add("x_2^4");
    add("x_7^4");
    return out;
}

} // namespace permv
