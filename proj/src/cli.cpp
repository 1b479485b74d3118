#include "homlie/cli.hpp"

#include <chrono>
#include <sstream>

#include <CLI11.hpp>

#include "homlie/classification.hpp"
#include "homlie/cochain.hpp"
#include "homlie/io.hpp"
#include "homlie/report.hpp"
#include "homlie/series.hpp"
#include "homlie/twisting.hpp"

namespace homlie {
namespace cli {

namespace {

constexpr unsigned kDefaultSeed = 20240801;

std::string series_dims(const SeriesReport& rep) {
    std::string out = "[";
    for (std::size_t i = 0; i < rep.dims.size(); ++i)
        out += (i ? "," : "") + std::to_string(rep.dims[i]);
    return out + "]";
}

std::string flags_str(const std::vector<bool>& flags) {
    std::string out = "[";
    for (std::size_t i = 0; i < flags.size(); ++i)
        out += (i ? "," : "") + std::string(flags[i] ? "yes" : "no");
    return out + "]";
}

HomAlgebra load_input(const std::string& path, Report& rep) {
    std::string text = read_file(path);
    rep.add("input", path);
    rep.add("input-digest", digest(text));
    return parse_algebra(text);
}

int cmd_check(const std::string& file, Report& rep) {
    HomAlgebra g = load_input(file, rep);
    bool hj = check_hom_jacobi(g);
    rep.add("hom_jacobi", hj);
    rep.add("multiplicative", check_multiplicative(g));
    rep.add("lie", is_lie(g));
    return hj ? 0 : 1;
}

int cmd_series(const std::string& file, Report& rep) {
    HomAlgebra g = load_input(file, rep);
    NilpotencyReport nil = nilpotency(g);
    rep.add("dims", series_dims(nil.series));
    rep.add("alpha_stable", flags_str(nil.series.alpha_stable));
    rep.add("nilpotent", nil.nilpotent);
    if (nil.nilindex) rep.add("nilindex", long(*nil.nilindex));
    if (!nil.nilpotent && !nil.reason.empty()) rep.add("reason", nil.reason);
    rep.add("filiform", is_filiform(g));
    rep.add("solvable", is_solvable(g));
    return 0;
}

int cmd_classify(const std::string& file, unsigned seed, Report& rep) {
    HomAlgebra g = load_input(file, rep);
    ClassificationResult res = classify(g, seed);
    rep.add("matched", res.matched);
    if (res.matched) {
        rep.add("representative", res.name);
        for (const auto& [k, v] : res.params) rep.add("param " + k, v.str());
    } else {
        rep.add("diagnostics", res.diagnostics);
        std::string term = "{";
        bool first = true;
        for (const auto& [kr, v] : res.terminal_coefficients.entries()) {
            term += (first ? "" : ", ") + std::string("a") + std::to_string(kr.first) +
                    std::to_string(kr.second) + "=" + v.str();
            first = false;
        }
        rep.add("terminal_coefficients", term + "}");
    }
    std::string seq;
    for (const auto& c : res.changes) seq += (seq.empty() ? "" : " ; ") + change_str(c);
    rep.add("changes", seq.empty() ? "(none)" : seq);
    rep.add("verified", true); // classify re-verifies internally or throws
    return res.matched ? 0 : 1;
}

int cmd_audit(int dim, bool mult, int samples, unsigned seed, Report& rep) {
    auto rows = audit_registry(dim, mult, samples, seed);
    rep.add("dim", long(dim));
    rep.add("table", mult ? "multiplicative" : "general");
    rep.add("samples-per-entry", long(samples));
    rep.add("seed", long(seed));
    for (const auto& row : rows) {
        std::ostringstream line;
        line << "field=" << row.field << " samples=" << row.samples << " pass=" << row.pass
             << " hom_jacobi_fail=" << row.hom_jacobi_fail
             << " filiform_fail=" << row.filiform_fail
             << " multiplicative_fail=" << row.multiplicative_fail << " skipped=" << row.skipped
             << " verdict=" << (row.pass == row.samples ? "PASS" : "FAIL");
        rep.add(row.entry, line.str());
        if (!row.finding.empty()) rep.finding(row.entry + " first failing sample " + row.finding);
    }
    return 0;
}

int cmd_cocycle(const std::string& file, int p, bool equivariant, const std::string& delta,
                bool with_basis, Report& rep) {
    HomAlgebra g = load_input(file, rep);
    DeltaKind kind = DeltaKind::literal;
    if (delta == "circle")
        kind = DeltaKind::circle2;
    else if (delta != "literal")
        throw input_error("unknown delta kind '" + delta + "' (expected literal or circle)");
    CohomologyReport ch = cohomology_report(g, p, equivariant, kind);
    rep.add("p", long(p));
    rep.add("equivariant", equivariant);
    rep.add("delta", delta);
    rep.add("cochain_space_dim", long(ch.cochain_space_dim));
    rep.add("cocycle_dim", long(ch.cocycle_dim));
    rep.add("coboundary_dim", long(ch.coboundary_dim));
    rep.add("dd_zero", ch.dd_zero);
    if (ch.cohomology_dim)
        rep.add("cohomology_dim", long(*ch.cohomology_dim));
    else
        rep.add("cohomology_dim", std::string("refused (delta o delta != 0 for this algebra)"));
    if (with_basis) {
        auto basis = cocycle_basis(g, p, equivariant, kind);
        long idx = 0;
        for (const auto& c : basis) {
            std::ostringstream line;
            for (const auto& t : c.support()) {
                line << " (";
                for (std::size_t i = 0; i < t.size(); ++i) line << (i ? "," : "") << t[i];
                line << ")->[";
                Vec v = c.eval_basis(t);
                bool first = true;
                for (int k = 0; k < g.dim; ++k)
                    if (!v[k].is_zero()) {
                        line << (first ? "" : ",") << k << "=" << v[k].str();
                        first = false;
                    }
                line << "]";
            }
            rep.add("cocycle[" + std::to_string(idx++) + "]", line.str());
        }
    }
    return 0;
}

int cmd_twist(const std::string& file, const std::string& map_file, const std::string& variant,
              const std::string& out_path, Report& rep) {
    HomAlgebra g = load_input(file, rep);
    HomAlgebra result = g;
    if (variant == "untwist") {
        result = untwist(g);
    } else if (variant.rfind("derived:", 0) == 0) {
        int n = int(std::stol(variant.substr(8)));
        result = nth_derived(g, n);
    } else {
        if (map_file.empty()) throw input_error("variant '" + variant + "' needs --map");
        Matrix m = load_matrix_file(map_file);
        if (variant == "yau")
            result = yau_twist(g, m);
        else if (variant == "beta")
            result = beta_twist(g, m);
        else
            throw input_error("unknown twist variant '" + variant + "'");
    }
    rep.add("variant", variant);
    rep.add("hom_jacobi", check_hom_jacobi(result));
    rep.add("multiplicative", check_multiplicative(result));
    NilpotencyReport nil = nilpotency(result);
    rep.add("nilpotent", nil.nilpotent);
    if (nil.nilindex) rep.add("nilindex", long(*nil.nilindex));
    rep.add("filiform", is_filiform(result));
    if (!out_path.empty()) {
        save_algebra_file(out_path, result);
        rep.add("out", out_path);
    }
    return 0;
}

AdaptedChange parse_change_spec(const std::string& spec, const Field& f, int dim) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw input_error("change spec needs 'kind:args'");
    std::string kind = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);
    std::vector<std::string> parts;
    std::istringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(tok);
    if (kind == "sigma" || kind == "tau") {
        if (parts.size() != 2) throw input_error(kind + " expects 'scalar,k'");
        Scalar v = parse_scalar(parts[0], f);
        int k = int(std::stol(parts[1]));
        if (kind == "sigma") return Sigma{v, k};
        return Tau{v, k};
    }
    if (kind == "nu") {
        if (parts.size() != 2) throw input_error("nu expects 'a,b'");
        return Nu{parse_scalar(parts[0], f), parse_scalar(parts[1], f)};
    }
    if (kind == "general") {
        auto semi = args.find(';');
        if (semi == std::string::npos) throw input_error("general expects 'a0,..,an;b0,..,bn'");
        auto parse_vec = [&](const std::string& s) {
            Vec v;
            std::istringstream vs(s);
            std::string t;
            while (std::getline(vs, t, ',')) v.push_back(parse_scalar(t, f));
            if (int(v.size()) != dim) throw input_error("general change vector length mismatch");
            return v;
        };
        return General{parse_vec(args.substr(0, semi)), parse_vec(args.substr(semi + 1))};
    }
    throw input_error("unknown change kind '" + kind + "'");
}

int cmd_change(const std::string& file, const std::string& spec, const std::string& out_path,
               Report& rep) {
    HomAlgebra g = load_input(file, rep);
    AdaptedChange change = parse_change_spec(spec, g.field(), g.dim);
    HomAlgebra result = apply_change(change, g);
    rep.add("change", change_str(change));
    rep.add("hom_jacobi", check_hom_jacobi(result));
    if (!out_path.empty()) {
        save_algebra_file(out_path, result);
        rep.add("out", out_path);
    }
    return 0;
}

int cmd_deform(int n, const std::vector<std::string>& coeff_specs, const std::string& alpha_spec,
               const std::string& out_path, Report& rep) {
    Field f = Field::rationals();
    Matrix alpha = Matrix::identity(n + 1, f);
    if (!alpha_spec.empty() && alpha_spec != "id") {
        alpha = load_matrix_file(alpha_spec);
        if (alpha.field() != f) f = alpha.field();
    }
    PsiCoefficients coeffs(n);
    for (const auto& spec : coeff_specs) {
        // k,r=value
        auto eq = spec.find('=');
        auto comma = spec.find(',');
        if (eq == std::string::npos || comma == std::string::npos || comma > eq)
            throw input_error("coefficient spec expects 'k,r=value'");
        int k = int(std::stol(spec.substr(0, comma)));
        int r = int(std::stol(spec.substr(comma + 1, eq - comma - 1)));
        try {
            coeffs.set(k, r, parse_scalar(spec.substr(eq + 1), f));
        } catch (const domain_error& e) {
            throw input_error(e.what());
        }
    }
    HomAlgebra g = assemble(n, coeffs, alpha);
    DeformationReport d = deformation_check(g);
    rep.add("n", long(n));
    rep.add("verdict", d.verdict);
    rep.add("cocycle_residual_zero", d.cocycle_ok);
    rep.add("jacobi_residual_zero", d.jacobi_ok);
    rep.add("cocycle_residual_zero_on_x0_triples", d.cocycle_ok_zero_triples);
    rep.add("cocycle_residual_zero_on_other_triples", d.cocycle_ok_nonzero_triples);
    rep.add("jacobi_residual_zero_on_x0_triples", d.jacobi_ok_zero_triples);
    rep.add("jacobi_residual_zero_on_other_triples", d.jacobi_ok_nonzero_triples);
    rep.add("alpha_split_shape", d.alpha_matches_split_shape);
    rep.add("hom_jacobi", check_hom_jacobi(g));
    if (!out_path.empty()) {
        save_algebra_file(out_path, g);
        rep.add("out", out_path);
    }
    return d.verdict ? 0 : 1;
}

int cmd_oracle_iso(const std::string& file1, const std::string& file2, long p, bool adapted,
                   Report& rep) {
    HomAlgebra g1 = load_input(file1, rep);
    std::string text2 = read_file(file2);
    rep.add("input2", file2);
    rep.add("input2-digest", digest(text2));
    HomAlgebra g2 = parse_algebra(text2);
    if (g1.field().is_rational() || g2.field().is_rational())
        throw input_error("oracle iso expects prime-field algebra files (Fp:" + std::to_string(p) +
                          ")");
    if (g1.field().characteristic() != p || g2.field().characteristic() != p)
        throw input_error("algebra files must be over Fp:" + std::to_string(p));
    IsoResult res = iso_bruteforce(g1, g2, adapted);
    rep.add("adapted", adapted);
    rep.add("p", p);
    rep.add("isomorphic", res.isomorphic);
    rep.add("exhausted", res.exhausted);
    rep.add("candidates", (long)res.candidates_tried);
    if (res.isomorphic) {
        std::ostringstream w;
        for (int i = 0; i < res.witness.rows(); ++i)
            for (int j = 0; j < res.witness.cols(); ++j)
                w << (i || j ? " " : "") << res.witness.at(i, j).str();
        rep.add("witness", w.str());
    }
    return res.isomorphic ? 0 : 1;
}

} // namespace

RunResult run(const std::vector<std::string>& args) {
    Report rep;
    {
        std::string echo = "homlie";
        for (const auto& a : args) echo += " " + a;
        rep.add("command", echo);
    }
    CLI::App app{"exact calculator for Hom-Lie algebra structure and classification"};
    app.require_subcommand(1);

    std::string file, file2, map_file, out_path, variant, spec, alpha_spec = "id",
                                                               delta = "literal";
    int dim = 5, p_arity = 2, n_model = 4;
    long prime = 3;
    int samples = 100;
    unsigned seed = kDefaultSeed;
    bool mult = false, equivariant = false, with_basis = false, adapted = true;
    std::vector<std::string> coeff_specs;

    auto* check = app.add_subcommand("check", "axiom checks for an algebra file");
    check->add_option("file", file)->required();

    auto* series = app.add_subcommand("series", "central/derived series and predicates");
    series->add_option("file", file)->required();

    auto* classify_cmd = app.add_subcommand("classify", "reduce to a canonical representative");
    classify_cmd->add_option("file", file)->required();
    classify_cmd->add_option("--seed", seed);

    auto* audit = app.add_subcommand("audit", "sample-audit the classification tables");
    audit->add_option("--dim", dim)->required();
    audit->add_flag("--mult", mult);
    audit->add_option("--samples", samples);
    audit->add_option("--seed", seed);

    auto* cocycle = app.add_subcommand("cocycle", "cocycle/coboundary/cohomology dimensions");
    cocycle->add_option("file", file)->required();
    cocycle->add_option("--p", p_arity);
    cocycle->add_flag("--equivariant", equivariant);
    cocycle->add_option("--delta", delta);
    cocycle->add_flag("--basis", with_basis);

    auto* twist = app.add_subcommand("twist", "twisting constructions");
    twist->add_option("file", file)->required();
    twist->add_option("--map", map_file);
    twist->add_option("--variant", variant)->required();
    twist->add_option("--out", out_path);

    auto* change = app.add_subcommand("change", "apply an adapted basis change");
    change->add_option("file", file)->required();
    change->add_option("--spec", spec)->required();
    change->add_option("--out", out_path);

    auto* deform = app.add_subcommand("deform", "assemble a deformed model bracket");
    deform->add_option("--n", n_model)->required();
    deform->add_option("--coeff", coeff_specs);
    deform->add_option("--alpha", alpha_spec);
    deform->add_option("--out", out_path);

    auto* oracle = app.add_subcommand("oracle", "independent brute-force oracles");
    oracle->require_subcommand(1);
    auto* iso = oracle->add_subcommand("iso", "exhaustive isomorphism search over F_p");
    iso->add_option("file1", file)->required();
    iso->add_option("file2", file2)->required();
    iso->add_option("--p", prime);
    auto* adapted_opt = iso->add_flag("--adapted,!--full", adapted);
    (void)adapted_opt;

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        RunResult res;
        res.code = 2;
        std::ostringstream out;
        out << "error: " << e.what() << "\n" << app.help();
        res.out = out.str();
        return res;
    }

    int code = 0;
    try {
        if (*check)
            code = cmd_check(file, rep);
        else if (*series)
            code = cmd_series(file, rep);
        else if (*classify_cmd)
            code = cmd_classify(file, seed, rep);
        else if (*audit)
            code = cmd_audit(dim, mult, samples, seed, rep);
        else if (*cocycle)
            code = cmd_cocycle(file, p_arity, equivariant, delta, with_basis, rep);
        else if (*twist)
            code = cmd_twist(file, map_file, variant, out_path, rep);
        else if (*change)
            code = cmd_change(file, spec, out_path, rep);
        else if (*deform)
            code = cmd_deform(n_model, coeff_specs, alpha_spec, out_path, rep);
        else if (*oracle)
            code = cmd_oracle_iso(file, file2, prime, adapted, rep);
    } catch (const input_error& e) {
        rep.add("error", std::string(e.what()));
        return {2, rep.render()};
    } catch (const singular_matrix_error& e) {
        rep.add("error", std::string(e.what()));
        return {2, rep.render()};
    } catch (const domain_error& e) {
        rep.add("error", std::string(e.what()));
        return {2, rep.render()};
    } catch (const internal_error& e) {
        rep.add("internal-error", std::string(e.what()));
        return {3, rep.render()};
    }
    return {code, rep.render()};
}

} // namespace cli
} // namespace homlie
