#include "permv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "permv/report.hpp"
#include "permv/verify.hpp"

namespace permv::cli {

namespace {

struct Options {
    std::string shape;
    unsigned long characteristic = 0;
    std::string order = "shape-default";
    int max_degree = 4;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out_path;
    bool timings = false;
};

void add_common(CLI::App* cmd, Options& opt, bool needs_shape) {
    auto* shape = cmd->add_option("--shape", opt.shape, "matrix shape, e.g. generic:3x4, "
                                                        "symmetric:3, hankel:3x6[:t=T]");
    if (needs_shape) shape->required();
    cmd->add_option("--char", opt.characteristic, "field characteristic (0 or a prime)")
        ->envname("PERMV_CHAR");
    cmd->add_option("--order", opt.order,
                    "monomial order: shape-default or lex:<comma-separated variable indices>");
    cmd->add_option("--max-degree", opt.max_degree, "degree cap for alpha / witness search")
        ->envname("PERMV_MAX_DEGREE");
    cmd->add_option("--seed", opt.seed, "seed for the bounded witness search")
        ->envname("PERMV_SEED");
    cmd->add_option("--format", opt.format, "output format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", opt.out_path, "write the report to FILE instead of stdout");
    cmd->add_flag("--timings", opt.timings, "include wall-clock timings in reports");
}

MonomialOrder resolve_order(const Options& opt, const ShapeSpec& shape) {
    if (opt.order == "shape-default") return shape_order(shape);
    if (opt.order.rfind("lex:", 0) == 0) {
        std::vector<unsigned> priority;
        std::stringstream ss(opt.order.substr(4));
        std::string tok;
        while (std::getline(ss, tok, ',')) priority.push_back(unsigned(std::stoul(tok)));
        return MonomialOrder::lex(std::move(priority));
    }
    throw parse_error("unknown order: " + opt.order);
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
    if (opt.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(opt.out_path);
    if (!f) throw domain_error("cannot write to " + opt.out_path);
    f << text;
}

void emit_json(const Options& opt, const ReportDocument& doc, std::ostream& out) {
    emit(opt, doc.dump(2) + "\n", out);
}

ReportDocument basis_json(const std::string& command, const ShapeSpec& shape,
                          const std::vector<Polynomial>& polys) {
    ReportDocument doc = make_report(command);
    doc["shape"] = shape.to_string();
    doc["characteristic"] = shape.field.characteristic();
    ReportDocument arr = ReportDocument::array();
    for (const auto& p : polys) arr.push_back(p.to_string());
    doc["polynomials"] = arr;
    return doc;
}

std::string plain_list(const std::vector<Polynomial>& polys) {
    std::string text;
    for (const auto& p : polys) text += p.to_string() + "\n";
    return text;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact v-number computations for permanental ideals of "
                 "generic, symmetric, and Hankel matrices"};
    app.require_subcommand(1);
    app.set_config("--config");

    Options opt;
    std::string nf_poly, colon_by;
    std::vector<std::string> colon_ideal_gens, alpha_gens;
    std::string verify_id;
    std::vector<std::string> table_shapes;

    auto* c_ideal = app.add_subcommand("ideal", "print the generators of P_t(shape)");
    add_common(c_ideal, opt, true);
    auto* c_gb = app.add_subcommand("gb", "print the reduced Groebner basis of P_t(shape)");
    add_common(c_gb, opt, true);
    auto* c_nf = app.add_subcommand("nf", "normal form of a polynomial modulo P_t(shape)");
    add_common(c_nf, opt, true);
    c_nf->add_option("--poly", nf_poly, "polynomial to reduce")->required();
    auto* c_colon = app.add_subcommand("colon", "colon ideal P_t(shape) : f or : J");
    add_common(c_colon, opt, true);
    c_colon->add_option("--by", colon_by, "single polynomial divisor f");
    c_colon->add_option("--by-ideal", colon_ideal_gens, "generators of the divisor ideal J");
    auto* c_alpha = app.add_subcommand("alpha", "alpha of (P_t(shape) : J) / P_t(shape)");
    add_common(c_alpha, opt, true);
    c_alpha->add_option("--by-ideal", alpha_gens, "generators of J")->required();
    auto* c_vnum = app.add_subcommand("vnumber", "v-number pipeline for one shape");
    add_common(c_vnum, opt, true);
    auto* c_table = app.add_subcommand("table", "v-number suite over the default shape list");
    add_common(c_table, opt, false);
    c_table->add_option("--shapes", table_shapes, "override the default shape list");
    auto* c_verify = app.add_subcommand("verify", "replay the quoted-identity corpus");
    add_common(c_verify, opt, false);
    c_verify->add_option("--check", verify_id, "run a single check by id");

    try {
        std::vector<std::string> argv = args;
        std::reverse(argv.begin(), argv.end()); // CLI11 consumes reversed args
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return kExitOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    FieldSpec field(opt.characteristic);

    if (c_ideal->parsed() || c_gb->parsed() || c_nf->parsed() || c_colon->parsed() ||
        c_alpha->parsed()) {
        ShapeSpec shape = ShapeSpec::parse(opt.shape, field);
        MonomialOrder order = resolve_order(opt, shape);
        Ideal I = permanental_ideal(shape);
        RingPtr ring = I.ring();

        if (c_ideal->parsed()) {
            if (opt.format == "json")
                emit_json(opt, basis_json("ideal", shape, I.generators()), out);
            else
                emit(opt, plain_list(I.generators()), out);
            return kExitOk;
        }
        if (c_gb->parsed()) {
            const GroebnerBasis& gb = cached_groebner(I, order);
            if (opt.format == "json")
                emit_json(opt, basis_json("gb", shape, gb.basis()), out);
            else
                emit(opt, plain_list(gb.basis()), out);
            return kExitOk;
        }
        if (c_nf->parsed()) {
            Polynomial f = parse_polynomial(nf_poly, ring, order);
            Polynomial r = normal_form(f, cached_groebner(I, order));
            if (opt.format == "json") {
                ReportDocument doc = make_report("nf");
                doc["shape"] = shape.to_string();
                doc["input"] = f.to_string();
                doc["normal_form"] = r.to_string();
                doc["member"] = r.is_zero();
                emit_json(opt, doc, out);
            } else {
                emit(opt, r.to_string() + "\n", out);
            }
            return kExitOk;
        }
        if (c_colon->parsed()) {
            if (colon_by.empty() == colon_ideal_gens.empty()) {
                err << "usage error: colon needs exactly one of --by or --by-ideal\n";
                return kExitUsage;
            }
            Ideal result = !colon_by.empty()
                               ? colon_poly(I, parse_polynomial(colon_by, ring, order))
                               : [&] {
                                     std::vector<Polynomial> gens;
                                     for (const auto& s : colon_ideal_gens)
                                         gens.push_back(parse_polynomial(s, ring, order));
                                     return colon_ideal(I, Ideal(ring, std::move(gens)));
                                 }();
            if (opt.format == "json")
                emit_json(opt, basis_json("colon", shape, result.generators()), out);
            else
                emit(opt, plain_list(result.generators()), out);
            return kExitOk;
        }
        // alpha
        std::vector<Polynomial> gens;
        for (const auto& s : alpha_gens) gens.push_back(parse_polynomial(s, ring, order));
        AlphaResult a = alpha_quotient(I, Ideal(ring, std::move(gens)), opt.max_degree, order);
        ReportDocument doc = make_report("alpha");
        doc["shape"] = shape.to_string();
        doc["cap"] = a.cap;
        if (a.value)
            doc["alpha"] = *a.value;
        else
            doc["alpha"] = nullptr;
        ReportDocument dims = ReportDocument::array();
        for (const auto& d : a.dims) {
            ReportDocument row;
            row["degree"] = d.degree;
            row["solution_dim"] = d.solution_dim;
            row["ideal_dim"] = d.ideal_dim;
            dims.push_back(row);
        }
        doc["dims"] = dims;
        if (a.element) doc["element"] = a.element->to_string();
        emit_json(opt, doc, out);
        return kExitOk;
    }

    if (c_vnum->parsed()) {
        ShapeSpec shape = ShapeSpec::parse(opt.shape, field);
        VNumberReport r = v_number(shape, opt.max_degree, opt.seed);
        ReportDocument doc = make_report("vnumber");
        doc["result"] = vnumber_to_json(r, opt.timings);
        emit_json(opt, doc, out);
        return r.status == VStatus::bounds_only ? kExitMismatch : kExitOk;
    }

    if (c_table->parsed()) {
        std::vector<ShapeSpec> shapes;
        if (table_shapes.empty()) {
            shapes = default_table_suite(field);
        } else {
            for (const auto& s : table_shapes) shapes.push_back(ShapeSpec::parse(s, field));
        }
        ReportDocument doc = table_report(shapes, opt.max_degree, opt.seed, opt.timings);
        if (opt.format == "csv")
            emit(opt, table_to_csv(doc), out);
        else if (opt.format == "text")
            emit(opt, table_to_text(doc), out);
        else
            emit_json(opt, doc, out);
        return doc.at("pass").get<bool>() ? kExitOk : kExitMismatch;
    }

    // verify
    ReportDocument doc = make_report("verify");
    ReportDocument checks = ReportDocument::array();
    bool all = true;
    bool found = verify_id.empty();
    for (const auto& check : verify_corpus()) {
        if (!verify_id.empty() && check.id != verify_id) continue;
        found = true;
        VerifyOutcome o = run_check(check, field);
        ReportDocument row;
        row["id"] = o.id;
        row["pass"] = o.pass;
        row["detail"] = o.detail;
        row["provenance"] = check.provenance;
        checks.push_back(row);
        all = all && o.pass;
    }
    if (!found) {
        err << "usage error: unknown check id: " << verify_id << "\n";
        return kExitUsage;
    }
    doc["checks"] = checks;
    doc["pass"] = all;
    emit_json(opt, doc, out);
    return all ? kExitOk : kExitMismatch;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const cap_exceeded& e) {
        err << "resource cap: " << e.what() << "\n";
        return kExitCap;
    } catch (const parse_error& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const unclassified_error& e) {
        err << "unclassified: " << e.what() << "\n";
        return kExitUsage;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace permv::cli
