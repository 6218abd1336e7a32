#include "hgs/ray.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hgs {

const char* to_string(RayFamily f) {
    switch (f) {
        case RayFamily::Theta: return "theta";
        case RayFamily::Psi: return "psi";
        case RayFamily::Phi: return "phi";
        case RayFamily::Zero: return "zero";
    }
    return "?";
}

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a > M_PI) a -= 2.0 * M_PI;
    if (a <= -M_PI) a += 2.0 * M_PI;
    return a;
}

double wrap_angle_2pi(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a < 0.0) a += 2.0 * M_PI;
    if (a >= 2.0 * M_PI) a = 0.0;
    return a;
}

double angle_distance(double a, double b) { return std::abs(wrap_angle(a - b)); }

namespace {

constexpr double kPhaseTol = 1e-9;

struct Edge {
    int r, s;       // constraint phi_r - phi_s = t - c*omega (mod 2pi)
    double t;
    int c;
};

// Angle coefficient of the family angle on the entry (r, s).
int angle_coefficient(RayFamily family, int r, int s) {
    switch (family) {
        case RayFamily::Theta: return 1;  // the symbol is the global phase eta
        case RayFamily::Psi: return r < s ? 1 : 0;
        case RayFamily::Phi: return r > s ? 1 : 0;
        case RayFamily::Zero: return 0;
    }
    return 0;
}

}  // namespace

RayVerdict ray_test(const ComplexMatrix& M, RayFamily family) {
    const int n = M.order();
    RayVerdict out;
    out.family = family;
    out.phases.assign(static_cast<size_t>(n), 0.0);

    // Common phase of the nonzero diagonal entries.
    bool has_diag = false;
    double xi = 0.0;
    for (int i = 0; i < n; ++i) {
        if (M.is_zero(i, i)) continue;
        const double a = std::arg(M(i, i));
        if (!has_diag) {
            has_diag = true;
            xi = a;
        } else {
            const double d = angle_distance(a, xi);
            if (d > kPhaseTol) {
                out.member = false;
                out.max_violation = d;
                out.violation_row = out.violation_col = i;
                return out;
            }
        }
    }
    // With an all-zero diagonal the eta factor of the Zero family is not
    // pinned, which turns the test into the Theta system; for Psi/Phi the
    // global phase is normalized to zero.
    RayFamily effective = family;
    if (!has_diag && family == RayFamily::Zero) effective = RayFamily::Theta;
    const bool symbol_is_eta = effective == RayFamily::Theta;
    if (!symbol_is_eta) out.eta = has_diag ? xi : 0.0;

    std::vector<Edge> edges;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
            if (r == s || M.is_zero(r, s)) continue;
            const double base = symbol_is_eta ? 0.0 : xi;
            edges.push_back(Edge{r, s, wrap_angle(std::arg(M(r, s)) - base - M_PI),
                                 angle_coefficient(effective, r, s)});
            adj[static_cast<size_t>(r)].push_back(s);
            adj[static_cast<size_t>(s)].push_back(r);
        }
    }

    // Spanning-tree phase propagation, phi_v = p_v + q_v * omega.
    std::vector<double> p(static_cast<size_t>(n), 0.0);
    std::vector<int> q(static_cast<size_t>(n), 0);
    std::vector<char> known(static_cast<size_t>(n), 0);
    std::vector<std::vector<const Edge*>> out_edges(static_cast<size_t>(n));
    for (const Edge& e : edges) out_edges[static_cast<size_t>(e.r)].push_back(&e);

    for (int root = 0; root < n; ++root) {
        if (known[static_cast<size_t>(root)]) continue;
        known[static_cast<size_t>(root)] = 1;
        std::vector<int> queue{root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            // Traverse any incident directed constraint touching an unknown.
            for (const Edge* e : out_edges[static_cast<size_t>(u)]) {
                if (!known[static_cast<size_t>(e->s)]) {
                    // phi_s = phi_r - t + c*omega
                    p[static_cast<size_t>(e->s)] = p[static_cast<size_t>(u)] - e->t;
                    q[static_cast<size_t>(e->s)] = q[static_cast<size_t>(u)] + e->c;
                    known[static_cast<size_t>(e->s)] = 1;
                    queue.push_back(e->s);
                }
            }
            for (const Edge& e : edges) {
                if (e.s != u || known[static_cast<size_t>(e.r)]) continue;
                // phi_r = phi_s + t - c*omega
                p[static_cast<size_t>(e.r)] = p[static_cast<size_t>(u)] + e.t;
                q[static_cast<size_t>(e.r)] = q[static_cast<size_t>(u)] - e.c;
                known[static_cast<size_t>(e.r)] = 1;
                queue.push_back(e.r);
            }
        }
    }

    // Every constraint becomes k*omega + beta = 0 (mod 2pi).
    struct Equation {
        int k;
        double beta;
        const Edge* e;
    };
    std::vector<Equation> fixed, angular;
    for (const Edge& e : edges) {
        const int k = q[static_cast<size_t>(e.r)] - q[static_cast<size_t>(e.s)] + e.c;
        const double beta = p[static_cast<size_t>(e.r)] - p[static_cast<size_t>(e.s)] - e.t;
        if (k == 0) {
            fixed.push_back({k, beta, &e});
        } else {
            angular.push_back({k, beta, &e});
        }
    }

    out.member = true;
    auto record = [&](double viol, const Edge* e) {
        if (viol > out.max_violation) {
            out.max_violation = viol;
            out.violation_row = e->r;
            out.violation_col = e->s;
        }
        if (viol > kPhaseTol) out.member = false;
    };
    for (const Equation& eq : fixed) record(std::abs(wrap_angle(eq.beta)), eq.e);

    double omega = 0.0;
    bool omega_determined = false;
    if (!angular.empty()) {
        omega_determined = true;
        const Equation* base = &angular.front();
        for (const Equation& eq : angular) {
            if (std::abs(eq.k) < std::abs(base->k)) base = &eq;
        }
        const int kk = std::abs(base->k);
        double best_worst = std::numeric_limits<double>::infinity();
        const Edge* best_edge = base->e;
        for (int j = 0; j < kk; ++j) {
            const double cand =
                wrap_angle_2pi((-base->beta + 2.0 * M_PI * j) / static_cast<double>(base->k));
            double worst = 0.0;
            const Edge* worst_edge = base->e;
            for (const Equation& eq : angular) {
                const double v = std::abs(wrap_angle(eq.k * cand + eq.beta));
                if (v > worst) {
                    worst = v;
                    worst_edge = eq.e;
                }
            }
            if (worst < best_worst) {
                best_worst = worst;
                best_edge = worst_edge;
                omega = cand;
            }
        }
        record(best_worst, best_edge);
    }

    for (int v = 0; v < n; ++v) {
        out.phases[static_cast<size_t>(v)] =
            wrap_angle(p[static_cast<size_t>(v)] + q[static_cast<size_t>(v)] * omega);
    }

    // Family angle reported to the caller.
    if (family == RayFamily::Zero) {
        out.angle_kind = has_diag ? RayAngle::Determined : RayAngle::Free;
        out.angle = 0.0;
    } else if (family == RayFamily::Theta) {
        if (omega_determined && has_diag) {
            out.angle_kind = RayAngle::Determined;
            out.angle = wrap_angle_2pi(xi - omega);
            out.eta = wrap_angle(omega);
        } else {
            out.angle_kind = RayAngle::Free;
            out.eta = omega_determined ? wrap_angle(omega) : 0.0;
        }
    } else {
        if (omega_determined) {
            out.angle_kind = RayAngle::Determined;
            out.angle = wrap_angle_2pi(omega);
        } else {
            out.angle_kind = RayAngle::Free;
        }
    }
    return out;
}

ComplexMatrix construct_ray(RayFamily family, int n, double angle, std::uint64_t moduli_seed,
                            std::uint64_t phase_seed) {
    if (n < 2) throw BadAngleError("construct_ray requires n >= 2");
    if (!(angle >= 0.0 && angle < 2.0 * M_PI)) {
        throw BadAngleError("angle must lie in [0, 2*pi)");
    }
    if (family == RayFamily::Zero && angle != 0.0) {
        throw BadAngleError("the zero-ray family has angle 0");
    }

    std::vector<std::pair<int, int>> pattern;
    for (int i = 0; i + 1 < n; ++i) {
        pattern.emplace_back(i, i + 1);
        pattern.emplace_back(i + 1, i);
    }
    pattern.emplace_back(n - 1, 0);
    pattern.emplace_back(0, n - 1);
    if (n >= 4) {
        // Chord creating an odd cycle, so the angle is pinned for every family.
        pattern.emplace_back(0, 2);
        pattern.emplace_back(2, 0);
    }

    std::mt19937_64 mod_rng(moduli_seed);
    std::uniform_real_distribution<double> mod_dist(0.5, 2.0);
    std::mt19937_64 phase_rng(phase_seed);
    std::uniform_real_distribution<double> gauge_dist(0.0, 2.0 * M_PI);

    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) out(i, i) = 1.0;

    std::vector<double> gauge(static_cast<size_t>(n));
    for (double& g : gauge) g = gauge_dist(phase_rng);

    for (const auto& [r, s] : pattern) {
        double arg = M_PI;
        switch (family) {
            case RayFamily::Theta: arg = M_PI - angle; break;
            case RayFamily::Psi: arg = M_PI + (r < s ? angle : 0.0); break;
            case RayFamily::Phi: arg = M_PI + (r > s ? angle : 0.0); break;
            case RayFamily::Zero: break;
        }
        arg += gauge[static_cast<size_t>(s)] - gauge[static_cast<size_t>(r)];
        out(r, s) = std::polar(mod_dist(mod_rng), wrap_angle(arg));
    }
    return out;
}

}  // namespace hgs
