// hgs: classify matrices, decide Gauss-Seidel convergence structurally and
// numerically, build Gauss-type preconditioners, and run stationary solves
// on Matrix Market files.
//
// Exit codes: 0 success, 2 input error, 3 theorem-vs-numerical disagreement,
// 4 solve did not converge.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hgs/convergence.hpp"
#include "hgs/corpus.hpp"
#include "hgs/market.hpp"
#include "hgs/precondition.hpp"
#include "hgs/solver.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace hgs;

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDisagree = 3;
constexpr int kExitNoConverge = 4;

// The library works on the exact-zero pattern and never drops entries on its
// own; this explicit opt-in zeroes small entries right after loading.
ComplexMatrix load_matrix(const std::string& path, double threshold) {
    ComplexMatrix A = market::read_matrix(path);
    if (threshold > 0.0) {
        for (int i = 0; i < A.order(); ++i)
            for (int j = 0; j < A.order(); ++j)
                if (std::abs(A(i, j)) <= threshold) A(i, j) = Complex(0.0, 0.0);
    }
    return A;
}

std::vector<IterationMethod> parse_methods(const std::string& csv) {
    std::vector<IterationMethod> out;
    std::string tok;
    std::istringstream is(csv);
    while (std::getline(is, tok, ',')) {
        if (tok == "j" || tok == "jacobi") {
            out.push_back(IterationMethod::Jacobi);
        } else if (tok == "fgs") {
            out.push_back(IterationMethod::FGS);
        } else if (tok == "bgs") {
            out.push_back(IterationMethod::BGS);
        } else if (tok == "sgs") {
            out.push_back(IterationMethod::SGS);
        } else {
            throw CLI::ValidationError("--method", "unknown method '" + tok + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError("--method", "no methods given");
    return out;
}

IndexSet parse_alpha(const std::string& csv, int n) {
    std::vector<int> idx;
    std::string tok;
    std::istringstream is(csv);
    while (std::getline(is, tok, ',')) {
        const int v = std::stoi(tok);
        if (v < 1 || v > n) throw Error("--alpha index " + tok + " out of range 1.." + std::to_string(n));
        idx.push_back(v - 1);
    }
    std::sort(idx.begin(), idx.end());
    return IndexSet(idx);
}

json classification_json(const Classification& c, const FrobeniusForm& fnf) {
    json j;
    j["dominance"] = to_string(c.dominance.tag);
    json eq = json::array();
    for (int k = 0; k < c.dominance.equality_rows.size(); ++k)
        eq.push_back(c.dominance.equality_rows[k] + 1);
    j["equality_rows"] = eq;
    j["m_class"] = {{"tag", to_string(c.comparison_mclass.tag)},
                    {"s", c.comparison_mclass.s},
                    {"rho_b", c.comparison_mclass.rhoB}};
    j["h_class"] = to_string(c.hclass);
    j["irreducible"] = c.irreducible;
    j["hermitian_positive_definite"] = c.hermitian_positive_definite;
    json gd;
    gd["exists"] = c.scaling.exists;
    gd["equipotent"] = c.scaling.equipotent;
    gd["weights"] = c.scaling.weights;
    j["gd_scaling"] = gd;
    json blocks = json::array();
    for (const IndexSet& b : fnf.blocks) {
        json ids = json::array();
        for (int k = 0; k < b.size(); ++k) ids.push_back(b[k] + 1);
        blocks.push_back(ids);
    }
    j["fnf_blocks"] = blocks;
    return j;
}

json verdict_json(const Verdict& v) {
    json j;
    j["status"] = to_string(v.status);
    json rules = json::array();
    for (const RuleStep& r : v.rule_chain) rules.push_back({{"id", r.id}, {"note", r.note}});
    j["rules"] = rules;
    if (v.witness) {
        json w;
        json ids = json::array();
        for (int k = 0; k < v.witness->block.size(); ++k) ids.push_back(v.witness->block[k] + 1);
        w["block"] = ids;
        if (v.witness->family) w["family"] = to_string(*v.witness->family);
        if (v.witness->ray_angle) w["ray_angle"] = *v.witness->ray_angle;
        if (v.witness->rho) w["rho"] = *v.witness->rho;
        j["witness"] = w;
    }
    return j;
}

json report_header(const std::string& input, int order) {
    json j;
    j["tool"] = "hgs";
    j["version"] = kVersion;
    j["input"] = input;
    j["order"] = order;
    return j;
}

void emit(const json& j, bool json_flag) {
    if (json_flag) std::cout << j.dump(2) << "\n";
}

int cmd_classify(const std::string& path, double threshold, bool json_flag) {
    const ComplexMatrix A = load_matrix(path, threshold);
    const Classification c = classify(A);
    const FrobeniusForm fnf = frobenius_normal_form(A);
    if (json_flag) {
        json j = report_header(path, A.order());
        j["classification"] = classification_json(c, fnf);
        emit(j, true);
        return kExitOk;
    }
    std::printf("order:        %d\n", A.order());
    std::printf("dominance:    %s\n", to_string(c.dominance.tag));
    std::printf("H-class:      %s\n", to_string(c.hclass));
    std::printf("M-class of comparison matrix: %s (s=%.6g, rho(B)=%.6g)\n",
                to_string(c.comparison_mclass.tag), c.comparison_mclass.s,
                c.comparison_mclass.rhoB);
    std::printf("irreducible:  %s\n", c.irreducible ? "yes" : "no");
    std::printf("hermitian positive definite: %s\n",
                c.hermitian_positive_definite ? "yes" : "no");
    std::printf("generalized dominance: %s%s\n", c.scaling.exists ? "yes" : "no",
                c.scaling.equipotent ? " (equipotent)" : "");
    std::printf("FNF blocks:  ");
    for (const IndexSet& b : fnf.blocks) std::printf(" %d", b.size());
    std::printf("\n");
    return kExitOk;
}

int cmd_analyze(const std::string& path, const std::string& methods_csv, double threshold,
                bool json_flag) {
    const ComplexMatrix A = load_matrix(path, threshold);
    const std::vector<IterationMethod> methods = parse_methods(methods_csv);
    const ConvergenceReport rep = analyze(A);

    bool all_agree = true;
    for (IterationMethod m : methods) all_agree &= rep.method(m).agree;

    if (json_flag) {
        json j = report_header(path, A.order());
        j["classification"] = classification_json(rep.classification, rep.fnf);
        json jm;
        for (IterationMethod m : methods) {
            const MethodReport& mr = rep.method(m);
            json e;
            e["verdict"] = verdict_json(mr.verdict);
            if (mr.rho) {
                e["rho"] = *mr.rho;
                e["numerical_converges"] = mr.numerical_converges;
            }
            if (!mr.diagnostic.empty()) e["diagnostic"] = mr.diagnostic;
            e["agree"] = mr.agree;
            jm[to_string(m)] = e;
        }
        j["methods"] = jm;
        j["agreement"] = all_agree;
        emit(j, true);
    } else {
        std::printf("%-8s %-10s %-12s %-10s %s\n", "method", "verdict", "rho", "agree", "rules");
        for (IterationMethod m : methods) {
            const MethodReport& mr = rep.method(m);
            std::string rho = mr.rho ? std::to_string(*mr.rho) : "-";
            std::string rules;
            for (const RuleStep& r : mr.verdict.rule_chain) {
                if (!rules.empty()) rules += " -> ";
                rules += r.id;
            }
            std::printf("%-8s %-10s %-12s %-10s %s\n", to_string(m),
                        to_string(mr.verdict.status), rho.c_str(), mr.agree ? "yes" : "NO",
                        rules.c_str());
        }
    }
    return all_agree ? kExitOk : kExitDisagree;
}

int cmd_precondition(const std::string& path, const std::string& strategy, int k_1based,
                     const std::string& alpha_csv, const std::vector<double>& weights,
                     double threshold, const std::string& out_path, bool json_flag) {
    const ComplexMatrix A = load_matrix(path, threshold);
    const int n = A.order();
    Preconditioner P{PreconditionerKind::FirstColumn, ComplexMatrix::identity(n), -1, {}, {}};
    if (strategy == "first-column") {
        std::vector<double> w = weights.empty() ? std::vector<double>(static_cast<size_t>(n), 1.0)
                                                : weights;
        P = first_column(A, w);
    } else if (strategy == "gauss-chain") {
        if (k_1based < 1) throw Error("--k is required for gauss-chain");
        P = gauss_chain(A, k_1based - 1);
    } else if (strategy == "column-k") {
        if (k_1based < 1) throw Error("--k is required for column-k");
        P = column_eliminator(A, k_1based - 1);
    } else if (strategy == "schur-alpha") {
        if (alpha_csv.empty()) throw Error("--alpha is required for schur-alpha");
        P = schur_preconditioner(A, parse_alpha(alpha_csv, n));
    } else {
        throw Error("unknown strategy '" + strategy + "'");
    }

    const PreconditionReport rep = verify_preconditioned(A, P);
    if (!out_path.empty()) market::write_matrix(rep.preconditioned, out_path);

    if (json_flag) {
        json j = report_header(path, n);
        j["strategy"] = strategy;
        j["kind"] = to_string(P.kind);
        j["h_class"] = to_string(rep.hclass);
        j["reference"] = rep.reference_kind;
        json jb;
        for (IterationMethod m : kAllMethods) {
            const MethodBound& b = rep.method(m);
            jb[to_string(m)] = {{"rho", b.rho_preconditioned},
                                {"rho_reference", b.rho_reference},
                                {"bound_holds", b.bound_holds},
                                {"reference_below_one", b.reference_below_one}};
        }
        j["bounds"] = jb;
        j["all_bounds_hold"] = rep.all_bounds_hold;
        if (!out_path.empty()) j["preconditioned_written_to"] = out_path;
        emit(j, true);
    } else {
        std::printf("H-class of preconditioned matrix: %s\n", to_string(rep.hclass));
        std::printf("reference: %s\n", rep.reference_kind.c_str());
        std::printf("%-8s %-12s %-12s %-6s\n", "method", "rho", "reference", "bound");
        for (IterationMethod m : kAllMethods) {
            const MethodBound& b = rep.method(m);
            std::printf("%-8s %-12.6f %-12.6f %s\n", to_string(m), b.rho_preconditioned,
                        b.rho_reference,
                        b.bound_holds && b.reference_below_one ? "ok" : "VIOLATED");
        }
        if (!out_path.empty()) std::printf("preconditioned matrix written to %s\n", out_path.c_str());
    }
    return kExitOk;
}

int cmd_solve(const std::string& path, const std::string& rhs_path, const std::string& method_csv,
              double tol, int maxit, const std::string& strategy, int k_1based,
              const std::string& alpha_csv, double threshold, const std::string& out_path,
              bool json_flag) {
    const ComplexMatrix A = load_matrix(path, threshold);
    const CVector b = market::read_vector(rhs_path);
    const std::vector<IterationMethod> methods = parse_methods(method_csv);
    if (methods.size() != 1) throw Error("solve takes exactly one --method");
    const IterationMethod m = methods.front();

    SolveOptions opts;
    opts.tol = tol;
    if (maxit > 0) {
        opts.max_iterations = maxit;
    } else {
        double rho_hat = std::numeric_limits<double>::quiet_NaN();
        try {
            rho_hat = numerical_verdict(A, m).first;
        } catch (const Error&) {
        }
        opts.max_iterations = suggested_max_iterations(A.order(), rho_hat);
    }

    SolveResult res;
    if (!strategy.empty()) {
        Preconditioner P{PreconditionerKind::FirstColumn, ComplexMatrix::identity(A.order()), -1,
                         {}, {}};
        if (strategy == "first-column") {
            P = first_column(A, std::vector<double>(static_cast<size_t>(A.order()), 1.0));
        } else if (strategy == "gauss-chain") {
            P = gauss_chain(A, k_1based - 1);
        } else if (strategy == "column-k") {
            P = column_eliminator(A, k_1based - 1);
        } else if (strategy == "schur-alpha") {
            P = schur_preconditioner(A, parse_alpha(alpha_csv, A.order()));
        } else {
            throw Error("unknown strategy '" + strategy + "'");
        }
        res = preconditioned_solve(A, b, P, m, opts);
    } else {
        res = solve(A, b, m, opts);
    }

    const CVector Ax = A * res.x;
    double resid = 0.0;
    for (size_t i = 0; i < b.size(); ++i) resid = std::max(resid, std::abs(Ax[i] - b[i]));

    if (!out_path.empty()) market::write_vector(res.x, out_path);

    if (json_flag) {
        json j = report_header(path, A.order());
        j["method"] = to_string(m);
        j["status"] = to_string(res.status);
        j["iterations"] = res.iterations;
        j["residual_inf"] = resid;
        if (!out_path.empty()) j["solution_written_to"] = out_path;
        emit(j, true);
    } else {
        std::printf("status:     %s\n", to_string(res.status));
        std::printf("iterations: %d\n", res.iterations);
        std::printf("residual:   %.3e\n", resid);
        if (!out_path.empty()) std::printf("solution written to %s\n", out_path.c_str());
    }
    return res.status == SolveStatus::Converged ? kExitOk : kExitNoConverge;
}

int cmd_gen(const std::string& id, int n, std::uint64_t seed, const std::string& out_path) {
    ComplexMatrix A(1);
    if (id == "ex11A" || id == "ex11B" || id == "ex12A" || id == "ex12B" || id == "ex62") {
        A = corpus::get(id);
    } else if (id == "family61") {
        A = corpus::get(id, n);
    } else {
        A = corpus::random_in_class(corpus::matrix_class_from_string(id), n, seed);
    }
    if (out_path.empty()) {
        market::write_matrix(A, std::cout);
    } else {
        market::write_matrix(A, out_path);
        std::fprintf(stderr, "wrote %dx%d matrix to %s\n", A.order(), A.order(),
                     out_path.c_str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss-Seidel convergence analysis for general H-matrices"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string path, rhs_path, out_path;
    std::string methods = "jacobi,fgs,bgs,sgs";
    std::string strategy, alpha_csv;
    std::vector<double> weights;
    bool json_flag = false;
    int k_1based = 0;
    int n = 0;
    std::uint64_t seed = 0;
    double tol = 1e-10;
    double threshold = 0.0;
    int maxit = 0;

    CLI::App* classify_cmd = app.add_subcommand("classify", "taxonomy of a matrix file");
    classify_cmd->add_option("path", path, "Matrix Market file")->required();
    classify_cmd->add_flag("--json", json_flag, "machine-readable report");
    classify_cmd->add_option("--threshold", threshold,
                             "zero out entries with modulus <= this after loading");

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "structural and numerical convergence verdicts");
    analyze_cmd->add_option("path", path, "Matrix Market file")->required();
    analyze_cmd->add_option("--method", methods, "comma list of j,fgs,bgs,sgs");
    analyze_cmd->add_flag("--json", json_flag, "machine-readable report");
    analyze_cmd->add_option("--threshold", threshold,
                             "zero out entries with modulus <= this after loading");

    CLI::App* precond_cmd =
        app.add_subcommand("precondition", "build and verify a Gauss-type preconditioner");
    precond_cmd->add_option("path", path, "Matrix Market file")->required();
    precond_cmd
        ->add_option("--strategy", strategy,
                     "one of first-column, gauss-chain, column-k, schur-alpha")
        ->required();
    precond_cmd->add_option("--k", k_1based, "pivot index (1-based)");
    precond_cmd->add_option("--alpha", alpha_csv, "comma list of 1-based indices");
    precond_cmd->add_option("--weights", weights, "weights for first-column");
    precond_cmd->add_option("--out", out_path, "write the preconditioned matrix here");
    precond_cmd->add_flag("--json", json_flag, "machine-readable report");
    precond_cmd->add_option("--threshold", threshold,
                             "zero out entries with modulus <= this after loading");

    CLI::App* solve_cmd = app.add_subcommand("solve", "run the stationary iteration");
    solve_cmd->add_option("path", path, "Matrix Market file")->required();
    solve_cmd->add_option("rhs", rhs_path, "right-hand side (Matrix Market vector)")->required();
    solve_cmd->add_option("--method", methods, "one of j,fgs,bgs,sgs")->required();
    solve_cmd->add_option("--tol", tol, "update-norm stopping tolerance");
    solve_cmd->add_option("--maxit", maxit, "iteration cap (default: radius-informed)");
    solve_cmd->add_option("--strategy", strategy, "optional preconditioner strategy");
    solve_cmd->add_option("--k", k_1based, "pivot index (1-based)");
    solve_cmd->add_option("--alpha", alpha_csv, "comma list of 1-based indices");
    solve_cmd->add_option("--out", out_path, "write the solution vector here");
    solve_cmd->add_flag("--json", json_flag, "machine-readable report");
    solve_cmd->add_option("--threshold", threshold,
                             "zero out entries with modulus <= this after loading");

    CLI::App* gen_cmd = app.add_subcommand("gen", "emit a corpus or random-class matrix");
    gen_cmd
        ->add_option("id", path,
                     "ex11A|ex11B|ex12A|ex12B|ex62|family61|sdd|idd|de|gde|mixedh|noth")
        ->required();
    gen_cmd->add_option("--n", n, "order for family61 and the random classes");
    gen_cmd->add_option("--seed", seed, "seed for the random classes");
    gen_cmd->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (app.got_subcommand(classify_cmd)) return cmd_classify(path, threshold, json_flag);
        if (app.got_subcommand(analyze_cmd)) return cmd_analyze(path, methods, threshold, json_flag);
        if (app.got_subcommand(precond_cmd)) {
            return cmd_precondition(path, strategy, k_1based, alpha_csv, weights, threshold,
                                    out_path, json_flag);
        }
        if (app.got_subcommand(solve_cmd)) {
            return cmd_solve(path, rhs_path, methods, tol, maxit, strategy, k_1based, alpha_csv,
                             threshold, out_path, json_flag);
        }
        if (app.got_subcommand(gen_cmd)) return cmd_gen(path, n, seed, out_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    }
    return kExitOk;
}
