// Command-line front end: check structures against their axiom suites,
// run the standard constructions and extractions, fuzz with deterministic
// generators, and inspect the built-in catalog.
//
// Exit codes: 0 = pass, 1 = mathematical failure, 2 = usage/schema error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "manin/catalog.hpp"
#include "manin/generate.hpp"
#include "manin/io.hpp"

using namespace manin;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitSchemaError = 2;

Json report_to_json(const std::string& command, const std::string& input_digest,
                    const Report& rep) {
    Json j = Json::object();
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["subject"] = rep.subject;
    Json items = Json::array();
    for (const auto& it : rep.items) {
        Json e = Json::object();
        e["name"] = it.name;
        e["pass"] = it.pass;
        if (!it.pass) e["witness"] = it.witness;
        items.push_back(std::move(e));
    }
    j["items"] = std::move(items);
    j["overall"] = rep.passed();
    return j;
}

void print_report(const Report& rep) {
    for (const auto& it : rep.items) {
        std::cout << (it.pass ? "PASS " : "FAIL ") << rep.subject << "." << it.name;
        if (!it.pass && !it.witness.empty()) std::cout << "  [" << it.witness << "]";
        std::cout << "\n";
    }
    std::cout << (rep.passed() ? "OK" : "FAILED") << "\n";
}

int emit(const std::string& command, const Json& input, const Report& rep, bool json_out) {
    if (json_out)
        std::cout << dump_structure(report_to_json(command, structure_digest(input), rep));
    else
        print_report(rep);
    return rep.passed() ? kExitPass : kExitMathFailure;
}

int cmd_check(const std::string& path, const std::string& kind, bool json_out) {
    Json file = read_structure_file(path);
    if (!kind.empty() && structure_kind(file) != kind)
        throw SchemaError("file kind '" + structure_kind(file) + "' does not match --kind " + kind);
    return emit("check", file, run_structure_checks(file), json_out);
}

int cmd_build(const std::string& sub, const std::string& in_path, const std::string& out_path) {
    Json in = read_structure_file(in_path);
    std::string kind = structure_kind(in);
    Report pre = run_structure_checks(in);
    Json out;
    if (sub == "double") {
        if (kind != "bialgebra") throw SchemaError("build double expects a bialgebra");
        if (!pre.passed()) {
            print_report(pre);
            return kExitMathFailure;
        }
        DrinfeldDouble d = drinfeld_double(bialgebra_from_json(in));
        out = wrap_structure("quadratic", quadratic_to_json(d.total));
    } else if (sub == "ca-from-coquad") {
        if (kind != "coquadratic") throw SchemaError("build ca-from-coquad expects a coquadratic");
        if (!pre.passed()) {
            print_report(pre);
            return kExitMathFailure;
        }
        out = wrap_structure("quadratic_lie2",
                             quadratic_lie2_to_json(coquad_to_ca(coquadratic_from_json(in))));
    } else if (sub == "double-2") {
        if (kind != "lie2_bialgebra") throw SchemaError("build double-2 expects a lie2_bialgebra");
        if (!pre.passed()) {
            print_report(pre);
            return kExitMathFailure;
        }
        DoubledLie2Bialgebra d = double_lie2bialgebra(lie2_bialgebra_from_json(in));
        out = wrap_structure("quadratic_lie2", quadratic_lie2_to_json(d.q));
    } else if (sub == "dual-vb") {
        if (kind != "two_vect") throw SchemaError("build dual-vb expects a two_vect");
        out = wrap_structure("two_vect", twovect_to_json(dualize(twovect_from_json(in))));
    } else if (sub == "rmatrix-bialgebra") {
        if (kind != "lie_algebra" || !in.contains("rmatrix"))
            throw SchemaError("build rmatrix-bialgebra expects a lie_algebra with an rmatrix field");
        LieAlgebra g = lie_from_json(in);
        Multivector lam = bivector_from_json(in["rmatrix"], g.dim());
        Report r = check_jacobi(g);
        r.merge(check_rmatrix(g, lam), "rmatrix");
        if (!r.passed()) {
            print_report(r);
            return kExitMathFailure;
        }
        out = wrap_structure("bialgebra", bialgebra_to_json(bialgebra_from_rmatrix(g, lam)));
    } else {
        throw SchemaError("unknown build subcommand: " + sub);
    }
    write_structure_file(out_path, out);
    return kExitPass;
}

int cmd_extract(const std::string& sub, const std::string& in_path, const std::string& out_path) {
    Json in = read_structure_file(in_path);
    std::string kind = structure_kind(in);
    Json out;
    if (sub == "bialgebra") {
        if (kind != "quadratic") throw SchemaError("extract bialgebra expects a quadratic");
        QuadraticLieAlgebra q = quadratic_from_json(in);
        std::size_t n = q.algebra.dim() / 2;
        if (q.algebra.dim() % 2 != 0) throw SchemaError("total dimension must be even");
        Matrix r1(n, 2 * n), r2(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            r1.at(i, i) = 1;
            r2.at(i, n + i) = 1;
        }
        ManinTriple t{q, Subspace::span(r1), Subspace::span(r2)};
        Report mt = check_manin_triple(t);
        if (!mt.passed()) {
            print_report(mt);
            return kExitMathFailure;
        }
        out = wrap_structure("bialgebra", bialgebra_to_json(extract_bialgebra(t)));
    } else if (sub == "coquad") {
        if (kind != "quadratic_lie2") throw SchemaError("extract coquad expects a quadratic_lie2");
        try {
            out = wrap_structure(
                "coquadratic", coquadratic_to_json(ca_to_coquad(quadratic_lie2_from_json(in))));
        } catch (const std::runtime_error& e) {
            std::cout << "FAIL extraction  [" << e.what() << "]\n";
            return kExitMathFailure;
        }
    } else if (sub == "lie2-bialgebra") {
        if (kind != "quadratic_lie2")
            throw SchemaError("extract lie2-bialgebra expects a quadratic_lie2");
        QuadraticLie2Algebra q = quadratic_lie2_from_json(in);
        std::size_t n = q.total.algebra.dim() / 2;
        if (q.total.algebra.dim() % 2 != 0) throw SchemaError("total dimension must be even");
        Matrix r1(n, 2 * n), r2(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            r1.at(i, i) = 1;
            r2.at(i, n + i) = 1;
        }
        try {
            Lie2Bialgebra b = extract_lie2bialgebra(q, Subspace::span(r1), Subspace::span(r2));
            out = wrap_structure("lie2_bialgebra", lie2_bialgebra_to_json(b));
        } catch (const std::invalid_argument& e) {
            std::cout << "FAIL extraction  [" << e.what() << "]\n";
            return kExitMathFailure;
        }
    } else {
        throw SchemaError("unknown extract subcommand: " + sub);
    }
    write_structure_file(out_path, out);
    return kExitPass;
}

/// One deterministic fuzz instance.  Instance i draws from Lcg(seed, i), so
/// results are independent of execution order and of --parallel.
Report fuzz_instance(const std::string& kind, std::uint64_t seed, std::size_t i,
                     const std::vector<std::size_t>& dims, bool& disagreement) {
    Lcg rng(seed * 1000003ULL + i);
    Report rep;
    rep.subject = kind + "[" + std::to_string(i) + "]";
    try {
        if (kind == "bialgebra") {
            LieBialgebra b = gen_bialgebra(rng);
            rep.add("valid", is_valid_bialgebra(b));
            DrinfeldDouble d = drinfeld_double(b);
            rep.merge(check_courant_point(d.total), "double");
            LieBialgebra back = extract_bialgebra({d.total, d.l1, d.l2});
            rep.add("round_trip", back.g == b.g && back.gstar == b.gstar);
        } else if (kind == "coquadratic") {
            CoquadraticLieAlgebra cq = gen_coquadratic(rng);
            rep.merge(check_coquadratic(cq));
            QuadraticLie2Algebra q = coquad_to_ca(cq);
            rep.merge(check_multiplicativity(q));
            CoquadraticLieAlgebra back = ca_to_coquad(q);
            rep.add("round_trip", back.k == cq.k && back.del == cq.del);
            if (i % 5 == 0 && !cq.k.is_abelian()) {
                QuadraticLie2Algebra bad = mutate_quadratic_lie2(rng, q);
                rep.add("mutation_detected", !check_multiplicativity(bad).passed());
            }
        } else if (kind == "two_vect") {
            std::size_t side = dims.empty() ? 2 + rng.below(2) : dims[0];
            std::size_t core = dims.size() < 2 ? 1 + rng.below(2) : dims[1];
            TwoVect v = gen_twovect(rng, side, core);
            rep.merge(check_phi_identity(v));
            rep.merge(check_Phi_identity(v));
            TwoVect vv = dualize(dualize(v));
            rep.add("dual_involution",
                    vv.side_dim == v.side_dim && vv.core_dim == v.core_dim && vv.del == v.del);
        } else if (kind == "crossed_module") {
            rep.merge(check_crossed_module(gen_crossed_module(rng)));
        } else if (kind == "lie2_bialgebra") {
            Lie2Bialgebra b = gen_lie2bialgebra(rng);
            rep.merge(check_lie2bialgebra(b));
            DoubledLie2Bialgebra d = double_lie2bialgebra(b);
            rep.merge(check_multiplicativity(d.q), "double");
            rep.merge(check_pairing_morphism(standardize_ca(d.q)), "double");
        } else if (kind == "poly_bivector") {
            std::size_t n = dims.empty() ? 2 + rng.below(2) : dims[0];
            PolyMultivector pi = gen_poly_bivector(rng, n);
            Report r = check_poisson_graph(pi);  // throws on verdict disagreement
            rep.add("verdicts_agree", true,
                    r.passed() ? "poisson" : "non-poisson, coherently rejected");
        } else {
            throw SchemaError("unknown fuzz kind: " + kind);
        }
    } catch (const SchemaError&) {
        throw;
    } catch (const std::logic_error& e) {
        disagreement = true;
        rep.add("verdicts_agree", false, e.what());
    }
    return rep;
}

int cmd_fuzz(const std::string& kind, std::size_t count, std::uint64_t seed,
             const std::vector<std::size_t>& dims, bool json_out) {
    bool disagreement = false;
    std::size_t failures = 0;
    Json items = Json::array();
    for (std::size_t i = 0; i < count; ++i) {
        bool dis = false;
        Report rep = fuzz_instance(kind, seed, i, dims, dis);
        disagreement = disagreement || dis;
        if (!rep.passed()) {
            ++failures;
            if (!json_out) print_report(rep);
        }
        if (json_out) items.push_back(report_to_json("fuzz", "", rep));
    }
    if (json_out) {
        Json j = Json::object();
        j["command"] = "fuzz";
        j["kind"] = kind;
        j["count"] = count;
        j["seed"] = seed;
        j["failures"] = failures;
        j["verdict_disagreement"] = disagreement;
        j["instances"] = std::move(items);
        j["report_digest"] = digest(items.dump());
        std::cout << dump_structure(j);
    } else {
        std::cout << kind << ": " << count << " instances, " << failures << " failures, "
                  << (disagreement ? "verdict disagreement" : "verdicts agree") << "\n";
    }
    if (disagreement) return kExitMathFailure;
    return failures == 0 ? kExitPass : kExitMathFailure;
}

int cmd_catalog(const std::string& sub, const std::string& dir) {
    if (sub == "list") {
        for (const auto& n : catalog_names()) std::cout << n << "\n";
        return kExitPass;
    }
    if (sub == "verify") {
        Report r = catalog_verify_all();
        print_report(r);
        return r.passed() ? kExitPass : kExitMathFailure;
    }
    if (sub == "dump") {
        for (const auto& e : catalog())
            write_structure_file(dir + "/" + e.name + ".json", catalog_entry_json(e));
        return kExitPass;
    }
    throw SchemaError("unknown catalog subcommand: " + sub);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for Lie bialgebras, crossed modules, and "
                 "co-quadratic Lie algebras"};
    app.require_subcommand(1);

    std::string path, kind, out_path, sub, dir = ".";
    bool json_out = false;
    std::size_t count = 100;
    std::uint64_t seed = 0;
    std::vector<std::size_t> dims;

    auto* check = app.add_subcommand("check", "run the axiom suite for a structure file");
    check->add_option("file", path)->required();
    check->add_option("--kind", kind, "expected kind tag");
    check->add_flag("--json", json_out, "machine-readable report");

    auto* build = app.add_subcommand("build", "run a construction");
    build->add_option("subcommand", sub,
                      "double | ca-from-coquad | double-2 | dual-vb | rmatrix-bialgebra")
        ->required();
    build->add_option("input", path)->required();
    build->add_option("-o,--output", out_path)->required();

    auto* extract = app.add_subcommand("extract", "run an extraction");
    extract->add_option("subcommand", sub, "bialgebra | coquad | lie2-bialgebra")->required();
    extract->add_option("input", path)->required();
    extract->add_option("-o,--output", out_path)->required();

    auto* fuzz = app.add_subcommand("fuzz", "deterministic generator sweep");
    fuzz->add_option("--kind", kind)->required();
    fuzz->add_option("--count", count);
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--dims", dims, "dimension hints (kind-specific)");
    fuzz->add_flag("--json", json_out);

    auto* cat = app.add_subcommand("catalog", "built-in example structures");
    cat->add_option("subcommand", sub, "list | verify | dump")->required();
    cat->add_option("--dir", dir, "output directory for dump");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitSchemaError;
    }

    try {
        if (check->parsed()) return cmd_check(path, kind, json_out);
        if (build->parsed()) return cmd_build(sub, path, out_path);
        if (extract->parsed()) return cmd_extract(sub, path, out_path);
        if (fuzz->parsed()) return cmd_fuzz(kind, count, seed, dims, json_out);
        if (cat->parsed()) return cmd_catalog(sub, dir);
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchemaError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitSchemaError;
}
