// Python bindings for the core operations: matrices travel as numpy
// complex128 arrays, reports as plain dicts.
#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hgs/convergence.hpp"
#include "hgs/corpus.hpp"
#include "hgs/market.hpp"
#include "hgs/precondition.hpp"
#include "hgs/solver.hpp"

namespace py = pybind11;
using namespace hgs;

namespace {

ComplexMatrix to_matrix(const py::array_t<Complex>& arr) {
    const auto buf = arr.request();
    if (buf.ndim != 2 || buf.shape[0] != buf.shape[1]) {
        throw py::value_error("expected a square 2-d array");
    }
    const int n = static_cast<int>(buf.shape[0]);
    ComplexMatrix A(n);
    const auto r = arr.unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = r(i, j);
    if (!A.all_finite()) throw py::value_error("matrix has non-finite entries");
    return A;
}

py::array_t<Complex> from_matrix(const ComplexMatrix& A) {
    const int n = A.order();
    py::array_t<Complex> out({n, n});
    auto w = out.mutable_unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w(i, j) = A(i, j);
    return out;
}

IterationMethod method_from_string(const std::string& s) {
    if (s == "jacobi" || s == "j") return IterationMethod::Jacobi;
    if (s == "fgs") return IterationMethod::FGS;
    if (s == "bgs") return IterationMethod::BGS;
    if (s == "sgs") return IterationMethod::SGS;
    throw py::value_error("unknown method '" + s + "'");
}

RayFamily family_from_string(const std::string& s) {
    if (s == "theta") return RayFamily::Theta;
    if (s == "psi") return RayFamily::Psi;
    if (s == "phi") return RayFamily::Phi;
    if (s == "zero") return RayFamily::Zero;
    throw py::value_error("unknown ray family '" + s + "'");
}

py::list index_set_list(const IndexSet& s) {
    py::list out;
    for (int k = 0; k < s.size(); ++k) out.append(s[k]);
    return out;
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["status"] = to_string(v.status);
    py::list rules;
    for (const RuleStep& r : v.rule_chain) {
        py::dict e;
        e["id"] = r.id;
        e["note"] = r.note;
        rules.append(e);
    }
    d["rules"] = rules;
    if (v.witness) {
        py::dict w;
        w["block"] = index_set_list(v.witness->block);
        if (v.witness->family) w["family"] = to_string(*v.witness->family);
        if (v.witness->ray_angle) w["ray_angle"] = *v.witness->ray_angle;
        if (v.witness->rho) w["rho"] = *v.witness->rho;
        d["witness"] = w;
    }
    return d;
}

py::dict classification_dict(const Classification& c) {
    py::dict d;
    d["dominance"] = to_string(c.dominance.tag);
    d["equality_rows"] = index_set_list(c.dominance.equality_rows);
    d["m_class"] = to_string(c.comparison_mclass.tag);
    d["h_class"] = to_string(c.hclass);
    d["irreducible"] = c.irreducible;
    d["hermitian_positive_definite"] = c.hermitian_positive_definite;
    d["gd_exists"] = c.scaling.exists;
    d["gd_equipotent"] = c.scaling.equipotent;
    d["gd_weights"] = c.scaling.weights;
    return d;
}

}  // namespace

PYBIND11_MODULE(_hgs, m) {
    m.doc() = "Gauss-Seidel convergence analysis for general H-matrices";

    m.def("split", [](const py::array_t<Complex>& a) {
        const Splitting s = split(to_matrix(a));
        return py::make_tuple(from_matrix(s.D), from_matrix(s.L), from_matrix(s.U),
                              s.diagonal_nonzero);
    });

    m.def("iteration_matrix", [](const py::array_t<Complex>& a, const std::string& method) {
        return from_matrix(iteration_matrix(to_matrix(a), method_from_string(method)));
    });

    m.def("eigenvalues", [](const py::array_t<Complex>& a) {
        const Spectrum s = eigenvalues(to_matrix(a));
        py::dict d;
        d["eigenvalues"] = s.eigenvalues;
        d["spectral_radius"] = s.spectral_radius;
        d["residual_bound"] = s.residual_bound;
        return d;
    });

    m.def("spectral_radius", [](const py::array_t<Complex>& a, const std::string& method) {
        return spectral_radius(iteration_matrix(to_matrix(a), method_from_string(method)));
    });

    m.def("determinant", [](const py::array_t<Complex>& a) { return determinant(to_matrix(a)); });

    m.def("schur_complement", [](const py::array_t<Complex>& a, const std::vector<int>& alpha) {
        return from_matrix(schur_complement(to_matrix(a), IndexSet(alpha)));
    });

    m.def("is_irreducible",
          [](const py::array_t<Complex>& a) { return is_irreducible(to_matrix(a)); });

    m.def("frobenius_blocks", [](const py::array_t<Complex>& a) {
        const FrobeniusForm f = frobenius_normal_form(to_matrix(a));
        py::list blocks;
        for (const IndexSet& b : f.blocks) blocks.append(index_set_list(b));
        return blocks;
    });

    m.def("comparison_matrix",
          [](const py::array_t<Complex>& a) { return from_matrix(comparison_matrix(to_matrix(a))); });

    m.def("classify", [](const py::array_t<Complex>& a) {
        return classification_dict(classify(to_matrix(a)));
    });

    m.def("ray_test", [](const py::array_t<Complex>& a, const std::string& family) {
        const RayVerdict v = ray_test(to_matrix(a), family_from_string(family));
        py::dict d;
        d["member"] = v.member;
        d["family"] = to_string(v.family);
        if (v.angle_kind == RayAngle::Determined) {
            d["angle"] = v.angle;
        } else {
            d["angle"] = py::none();
        }
        d["phases"] = v.phases;
        d["eta"] = v.eta;
        d["max_violation"] = v.max_violation;
        return d;
    });

    m.def("construct_ray",
          [](const std::string& family, int n, double angle, std::uint64_t moduli_seed,
             std::uint64_t phase_seed) {
              return from_matrix(
                  construct_ray(family_from_string(family), n, angle, moduli_seed, phase_seed));
          },
          py::arg("family"), py::arg("n"), py::arg("angle"), py::arg("moduli_seed") = 1,
          py::arg("phase_seed") = 2);

    m.def("theorem_verdict", [](const py::array_t<Complex>& a, const std::string& method) {
        return verdict_dict(theorem_verdict(to_matrix(a), method_from_string(method)));
    });

    m.def("analyze", [](const py::array_t<Complex>& a) {
        const ConvergenceReport rep = analyze(to_matrix(a));
        py::dict d;
        d["classification"] = classification_dict(rep.classification);
        py::dict methods;
        for (IterationMethod mth : kAllMethods) {
            const MethodReport& mr = rep.method(mth);
            py::dict e;
            e["verdict"] = verdict_dict(mr.verdict);
            e["rho"] = mr.rho ? py::cast(*mr.rho) : py::none();
            e["numerical_converges"] = mr.numerical_converges;
            e["agree"] = mr.agree;
            if (!mr.diagnostic.empty()) e["diagnostic"] = mr.diagnostic;
            methods[to_string(mth)] = e;
        }
        d["methods"] = methods;
        return d;
    });

    m.def("column_eliminator", [](const py::array_t<Complex>& a, int k) {
        return from_matrix(column_eliminator(to_matrix(a), k).matrix);
    });

    m.def("schur_preconditioner", [](const py::array_t<Complex>& a, const std::vector<int>& alpha) {
        return from_matrix(schur_preconditioner(to_matrix(a), IndexSet(alpha)).matrix);
    });

    m.def("verify_preconditioned",
          [](const py::array_t<Complex>& a, const std::string& strategy, int k,
             const std::vector<int>& alpha) {
              const ComplexMatrix A = to_matrix(a);
              Preconditioner P = strategy == "schur-alpha"
                                     ? schur_preconditioner(A, IndexSet(alpha))
                                     : column_eliminator(A, k);
              const PreconditionReport rep = verify_preconditioned(A, P);
              py::dict d;
              d["preconditioned"] = from_matrix(rep.preconditioned);
              d["h_class"] = to_string(rep.hclass);
              d["reference"] = rep.reference_kind;
              py::dict bounds;
              for (IterationMethod mth : kAllMethods) {
                  const MethodBound& b = rep.method(mth);
                  py::dict e;
                  e["rho"] = b.rho_preconditioned;
                  e["rho_reference"] = b.rho_reference;
                  e["bound_holds"] = b.bound_holds;
                  e["reference_below_one"] = b.reference_below_one;
                  bounds[to_string(mth)] = e;
              }
              d["bounds"] = bounds;
              d["all_bounds_hold"] = rep.all_bounds_hold;
              return d;
          },
          py::arg("a"), py::arg("strategy") = "column-k", py::arg("k") = 0,
          py::arg("alpha") = std::vector<int>{});

    m.def("solve",
          [](const py::array_t<Complex>& a, const std::vector<Complex>& b,
             const std::string& method, double tol, int maxit) {
              SolveOptions opts;
              opts.tol = tol;
              opts.max_iterations = maxit;
              const SolveResult r = solve(to_matrix(a), b, method_from_string(method), opts);
              py::dict d;
              d["x"] = r.x;
              d["iterations"] = r.iterations;
              d["status"] = to_string(r.status);
              d["history"] = r.history;
              return d;
          },
          py::arg("a"), py::arg("b"), py::arg("method") = "sgs", py::arg("tol") = 1e-10,
          py::arg("maxit") = 100000);

    m.def("corpus_get",
          [](const std::string& name, int n) { return from_matrix(corpus::get(name, n)); },
          py::arg("name"), py::arg("n") = 0);

    m.def("random_in_class",
          [](const std::string& cls, int n, std::uint64_t seed) {
              return from_matrix(
                  corpus::random_in_class(corpus::matrix_class_from_string(cls), n, seed));
          },
          py::arg("cls"), py::arg("n"), py::arg("seed") = 0);

    m.def("read_matrix",
          [](const std::string& path) { return from_matrix(market::read_matrix(path)); });
    m.def("write_matrix", [](const py::array_t<Complex>& a, const std::string& path) {
        market::write_matrix(to_matrix(a), path);
    });

    m.attr("__version__") = "0.1.0";
}
