#include "permv/verify.hpp"

#include <algorithm>
#include <sstream>

#include "permv/classification.hpp"
#include "permv/ideal_ops.hpp"
#include "permv/vnum.hpp"

namespace permv {

namespace {

std::string xv(int k) { return "x_" + std::to_string(k); }
std::string yv(int i, int j) {
    return "y_" + std::to_string(std::min(i, j)) + "_" + std::to_string(std::max(i, j));
}

std::vector<std::string> xr(int lo, int hi) {
    std::vector<std::string> v;
    for (int k = lo; k <= hi; ++k) v.push_back(xv(k));
    return v;
}

std::string compact(const std::string& poly) {
    std::string out;
    for (char c : poly)
        if (c != '_' && c != '*') out += c;
    return out;
}

std::vector<VerifyCheck> build_corpus() {
    std::vector<VerifyCheck> cs;

    // --- Groebner conformance -----------------------------------------
    cs.push_back({"gb_reduced:hankel:2x3", "gb_reduced", "hankel:2x3", {},
                  {"x_1*x_3+x_2^2", "x_1*x_4+x_2*x_3", "x_2*x_4+x_3^2", "x_2^2*x_3", "x_2*x_3^2",
                   "x_2^4", "x_3^4"},
                  "Chau-Jayanthan Thm 5.4(1) proof (GGS07 Thm 2.7): the 7-element basis"});
    cs.push_back({"gb_reduced:hankel:3x6", "gb_reduced", "hankel:3x6", {},
                  {"x_1*x_3+x_2^2", "x_1*x_4+x_2*x_3", "x_1*x_5", "x_1*x_6", "x_1*x_7", "x_1*x_8",
                   "x_2^4", "x_2^2*x_3", "x_2*x_4", "x_2*x_5", "x_2*x_6", "x_2*x_7", "x_2*x_8",
                   "x_3^2", "x_3*x_4", "x_3*x_5", "x_3*x_6", "x_3*x_7", "x_3*x_8", "x_4^2",
                   "x_4*x_5", "x_4*x_6", "x_4*x_7", "x_4*x_8", "x_5^2", "x_5*x_6", "x_5*x_7",
                   "x_5*x_8+x_6*x_7", "x_6^2", "x_6*x_7^2", "x_6*x_8+x_7^2", "x_7^4"},
                  "reduction of the Thm 5.2(2) display (GGS07 Thm 2.10) to the unique reduced "
                  "basis"});
    cs.push_back({"gb_reduced:symmetric:3", "gb_reduced", "symmetric:3", {},
                  {"@symmetric_families"},
                  "Chau-Jayanthan Thm 4.1 families at n=3; equals the set G of Lemma 4.4's "
                  "proof"});
    cs.push_back({"gb_reduced:symmetric:4", "gb_reduced", "symmetric:4", {},
                  {"@symmetric_families"}, "Chau-Jayanthan Thm 4.1 families at n=4"});
    cs.push_back({"gb_criterion:hankel:3x6", "gb_criterion", "hankel:3x6",
                  {"@hankel36_quoted"}, {},
                  "Thm 5.2(2) display (GGS07 Thm 2.10) passes Buchberger's criterion"});
    cs.push_back({"gb_criterion:symmetric:3", "gb_criterion", "symmetric:3",
                  {"@symmetric_families"}, {},
                  "Thm 4.1 families at n=3 pass Buchberger's criterion"});
    cs.push_back({"gb_criterion:symmetric:4", "gb_criterion", "symmetric:4",
                  {"@symmetric_families"}, {},
                  "Thm 4.1 families at n=4 pass Buchberger's criterion"});

    // --- colon identities ----------------------------------------------
    auto colon = [&cs](const std::string& shape, const std::string& f,
                       std::vector<std::string> expected, const std::string& prov) {
        cs.push_back({"colon:" + shape + ":" + compact(f), "colon", shape, {f},
                      std::move(expected), prov});
    };
    for (int n : {3, 4, 5}) {
        std::vector<std::string> p;
        for (int i = 1; i <= 2; ++i)
            for (int j = 3; j <= n; ++j) p.push_back("x_" + std::to_string(i) + "_" + std::to_string(j));
        p.push_back("x_1_1*x_2_2+x_1_2*x_2_1");
        colon("generic:2x" + std::to_string(n), "x_1_1*x_2_2", p,
              "Chau-Jayanthan Thm 3.2 proof: \"p = P_2(X) : x_11x_22\"");
    }
    {
        std::vector<std::string> q;
        for (int i = 2; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) q.push_back("x_" + std::to_string(i) + "_" + std::to_string(j));
        colon("generic:3x3", "x_1_1*x_1_2*x_1_3", q,
              "Chau-Jayanthan Thm 3.5 proof: \"P_2(X) : x_11x_12x_13 = (x_ij | 2<=i<=m)\"");
    }
    colon("hankel:3x6", "x_5", xr(1, 7),
          "Chau-Jayanthan Thm 5.2(2): \"P_2(H) : x_5 = (x_1,x_2,...,x_7)\"");
    for (int n : {4, 5, 6})
        colon("hankel:2x" + std::to_string(n), "x_2*" + xv(n), xr(1, n + 1),
              "Chau-Jayanthan Thm 5.3(1) (GGS07 Prop 5.1(1)): \"P_2(H) : x_2x_n = "
              "(x_1,...,x_{n+1})\"");
    colon("hankel:3x4", "x_2*x_5", xr(1, 6),
          "Chau-Jayanthan Thm 5.3(2) (GGS07 Prop 5.3): \"P_2(X) : x_2x_5 = (x_1,...,x_6)\"");
    colon("hankel:3x5", "x_2*x_3", xr(2, 7),
          "Chau-Jayanthan Thm 5.3(3): \"P_2(X) : x_2x_3 = (x_2,...,x_7)\"");
    colon("hankel:4x4", "x_2*x_5", xr(1, 7),
          "Chau-Jayanthan Thm 5.3(4) (GGS07 Prop 5.4): \"P_2(X) : x_2x_5 = (x_1,...,x_7)\"");
    colon("hankel:2x3", "x_1*x_2*x_3", {"x_2", "x_3", "x_4"},
          "Chau-Jayanthan Thm 5.4(1): \"P_2(X) : x_1x_2x_3 = (x_2,x_3,x_4)\"");
    colon("hankel:3x3", "x_1*x_3*x_5", xr(1, 5),
          "Chau-Jayanthan Thm 5.4(2) (GGS07 Prop 5.2): \"P_2(X) : x_1x_3x_5 = (x_1,...,x_5)\"");

    // --- memberships (Thm 5.2(2) proof display) -------------------------
    for (const char* f : {"2*x_1*x_5", "2*x_2*x_5", "2*x_3*x_5", "x_4*x_5", "x_5^2", "x_5*x_6",
                          "2*x_5*x_7"})
        cs.push_back({"member:hankel:3x6:" + compact(f), "membership", "hankel:3x6", {f}, {},
                      "Chau-Jayanthan Thm 5.2(2) proof: element of P_2(H)"});
    cs.push_back({"nonmember:hankel:3x6:x5", "nonmembership", "hankel:3x6", {"x_5"}, {},
                  "Chau-Jayanthan Thm 5.2(2) proof: \"x_5 notin P_2(H)\""});

    // --- alpha lower bounds ---------------------------------------------
    auto alpha = [&cs](const std::string& shape, const std::string& tag,
                       std::vector<std::string> gens, int bound, const std::string& prov) {
        gens.push_back(std::to_string(bound)); // last input is the bound
        cs.push_back({"alpha_lb:" + shape + ":" + tag, "alpha_lb", shape, std::move(gens), {},
                      prov});
    };
    alpha("generic:3x3", "col1", {"x_1_1", "x_2_1", "x_3_1"}, 3,
          "Chau-Jayanthan Lemma 3.3: alpha >= 3 for the column ideal");
    for (int n : {3, 4}) {
        for (int r = 1; r <= n; ++r)
            for (int s = r + 1; s <= n; ++s) {
                std::vector<std::string> gens = {yv(r, r) + "*" + yv(s, s) + "+" + yv(r, s) +
                                                 "^2"};
                for (int i = 1; i <= n; ++i)
                    for (int j = i; j <= n; ++j) {
                        if ((i == r && j == r) || (i == s && j == s) || (i == r && j == s))
                            continue;
                        gens.push_back(yv(i, j));
                    }
                alpha("symmetric:" + std::to_string(n),
                      "q" + std::to_string(r) + std::to_string(s), gens, 3,
                      "Chau-Jayanthan Lemmas 4.4/4.5: alpha((P_2(Y):q_rs)/P_2(Y)) >= 3");
            }
    }
    alpha("hankel:2x3", "x1x2x3", {"x_1", "x_2", "x_3"}, 3,
          "Chau-Jayanthan Thm 5.4(1) proof: alpha >= 3");
    alpha("hankel:3x3", "x1to4", {"x_1", "x_2", "x_3", "x_4"}, 3,
          "Chau-Jayanthan Thm 5.4(2) proof: alpha >= 3");
    for (int n : {3, 4, 5})
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= n; ++j) {
                std::string v = "x_" + std::to_string(i) + "_" + std::to_string(j);
                alpha("generic:2x" + std::to_string(n), compact(v), {v}, 2,
                      "Chau-Jayanthan Thm 3.2 proof: P_2(X) : x does not contain a linear form");
            }

    // --- ideal equality and retraction -----------------------------------
    cs.push_back({"ideal_equal:hankel:4x5:3x6", "ideal_equal", "hankel:4x5",
                  {"@shape:hankel:3x6"}, {},
                  "Chau-Jayanthan Thm 5.2(3): P_2(hankel 4x5) equals P_2(hankel 3x6)"});
    for (int n : {3, 4})
        cs.push_back({"contract:symmetric:" + std::to_string(n), "contract",
                      "symmetric:" + std::to_string(n), {}, {},
                      "Chau-Jayanthan Lemma 4.3: P_2(Y) cap K[Y-hat] = P_2(Y-hat)"});

    return cs;
}

std::vector<std::string> sorted_strings(const std::vector<Polynomial>& polys) {
    std::vector<std::string> out;
    for (const auto& p : polys) out.push_back(p.to_string());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

const std::vector<VerifyCheck>& verify_corpus() {
    static const std::vector<VerifyCheck> corpus = build_corpus();
    return corpus;
}

VerifyOutcome run_check(const VerifyCheck& check, const FieldSpec& field,
                        const BuchbergerCaps& caps) {
    VerifyOutcome out;
    out.id = check.id;

    ShapeSpec shape = ShapeSpec::parse(check.shape, field);
    RingPtr ring = build_matrix(shape).ring();
    MonomialOrder order = shape_order(shape);
    auto parse = [&](const std::string& s) { return parse_polynomial(s, ring, order); };
    auto resolve = [&](const std::vector<std::string>& texts) {
        std::vector<Polynomial> polys;
        for (const auto& s : texts) {
            if (s == "@symmetric_families") {
                for (auto& p : symmetric_family_basis(shape.rows, field)) polys.push_back(p);
            } else if (s == "@hankel36_quoted") {
                for (auto& p : hankel36_quoted_basis(field)) polys.push_back(p);
            } else {
                polys.push_back(parse(s));
            }
        }
        return polys;
    };

    Ideal I = permanental_ideal(shape);

    if (check.kind == "membership" || check.kind == "nonmembership") {
        bool in = member(parse(check.inputs.at(0)), I, order, caps);
        out.pass = (check.kind == "membership") ? in : !in;
        out.detail = check.inputs.at(0) + (in ? " is" : " is not") + " in P_2";
        return out;
    }
    if (check.kind == "colon") {
        Ideal colon = colon_poly(I, parse(check.inputs.at(0)), caps);
        Ideal expected(ring, resolve(check.expected));
        out.pass = ideal_equal(colon, expected, caps);
        out.detail = out.pass ? "colon matches" : "colon differs from the quoted ideal";
        return out;
    }
    if (check.kind == "gb_reduced") {
        const GroebnerBasis& gb = cached_groebner(I, order, caps);
        std::vector<std::string> got = sorted_strings(gb.basis());
        std::vector<std::string> want = sorted_strings(resolve(check.expected));
        out.pass = got == want;
        out.detail = "reduced basis has " + std::to_string(got.size()) + " elements, expected " +
                     std::to_string(want.size());
        return out;
    }
    if (check.kind == "gb_criterion") {
        std::vector<Polynomial> gens = resolve(check.inputs);
        GroebnerCheck gc = is_groebner_basis(gens, order);
        // the quoted set must also generate P_2 itself
        out.pass = gc.ok && ideal_equal(Ideal(ring, gens), I, caps);
        if (gc.failing_pair)
            out.detail = "S-pair (" + std::to_string(gc.failing_pair->first) + "," +
                         std::to_string(gc.failing_pair->second) + ") fails to reduce";
        else
            out.detail = out.pass ? "Buchberger criterion holds" : "set does not generate P_2";
        return out;
    }
    if (check.kind == "ideal_equal") {
        const std::string& ref = check.inputs.at(0);
        if (ref.rfind("@shape:", 0) != 0) throw domain_error("ideal_equal: bad reference");
        ShapeSpec other = ShapeSpec::parse(ref.substr(7), field);
        Ideal J = permanental_ideal(other);
        if (!same_ring(I.ring(), J.ring())) {
            out.pass = false;
            out.detail = "shapes live in different rings";
            return out;
        }
        out.pass = ideal_equal(I, J, caps);
        out.detail = out.pass ? "ideals coincide" : "ideals differ";
        return out;
    }
    if (check.kind == "contract") {
        int n = shape.rows;
        std::vector<std::size_t> keep;
        for (int i = 2; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                keep.push_back(*ring->var_index("y_" + std::to_string(i) + "_" +
                                                std::to_string(j)));
        Ideal contracted = contract_to_subring(I, keep, caps);

        ShapeSpec hat = shape;
        hat.rows = hat.cols = n - 1;
        Ideal Phat = permanental_ideal(hat);
        // rename y_ij -> y_{i+1,j+1} into the contracted subring
        std::vector<std::size_t> index_map(Phat.ring()->nvars());
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i; j <= n - 1; ++j) {
                auto src = Phat.ring()->var_index("y_" + std::to_string(i) + "_" +
                                                  std::to_string(j));
                auto dst = contracted.ring()->var_index("y_" + std::to_string(i + 1) + "_" +
                                                        std::to_string(j + 1));
                index_map[*src] = *dst;
            }
        Ideal mapped = map_to_ring(Phat, contracted.ring(), index_map,
                                   MonomialOrder::lex(contracted.ring()->nvars()));
        out.pass = ideal_equal(contracted, mapped, caps);
        out.detail = out.pass ? "contraction equals P_2 of the trailing block"
                              : "contraction mismatch";
        return out;
    }
    if (check.kind == "alpha_lb") {
        std::vector<std::string> gens(check.inputs.begin(), check.inputs.end() - 1);
        int bound = std::stoi(check.inputs.back());
        Ideal J(ring, resolve(gens));
        AlphaResult a = alpha_quotient(I, J, bound - 1, order, caps);
        out.pass = !a.value.has_value();
        out.detail = out.pass ? "no element below degree " + std::to_string(bound)
                              : "element found at degree " + std::to_string(*a.value);
        return out;
    }
    throw domain_error("unknown check kind: " + check.kind);
}

} // namespace permv
