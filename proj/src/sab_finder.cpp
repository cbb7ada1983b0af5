// Copyright 2026 The Uncertainty Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ulab/sab_finder.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "ulab/correlations.hpp"
#include "ulab/moments.hpp"
#include "ulab/sampling.hpp"
#include "ulab/state_sets.hpp"

namespace ulab {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-18;
constexpr int kPolishIters = 60;
// The polish aims slightly above the floor so that rounding cannot leave a
// solution a few ulps below it.
constexpr double kFloorMargin = 1e-8;

// Products needed by the objective, formed once per pair.
struct PairContext {
    Matrix a, b, ab, ba, a2, b2;
    double floor = 0.0;
    double weight = 0.0;

    PairContext(const Observable& oa, const Observable& ob, double floor_, double weight_)
        : a(oa.matrix()),
          b(ob.matrix()),
          ab(a * b),
          ba(b * a),
          a2(a * a),
          b2(b * b),
          floor(floor_),
          weight(weight_) {}
};

struct Point {
    double f = 0.0;
    Complex c;
    double mean_a = 0.0, mean_b = 0.0;
    double delta_a = 0.0, delta_b = 0.0;
    double hinge_a = 0.0, hinge_b = 0.0;
};

Point evaluate_point(const PairContext& ctx, const Vector& x) {
    const double n = x.squaredNorm();
    Point p;
    p.mean_a = x.dot(ctx.a * x).real() / n;
    p.mean_b = x.dot(ctx.b * x).real() / n;
    const Complex mean_ab = x.dot(ctx.ab * x) / n;
    const double var_a = x.dot(ctx.a2 * x).real() / n - p.mean_a * p.mean_a;
    const double var_b = x.dot(ctx.b2 * x).real() / n - p.mean_b * p.mean_b;
    p.c = mean_ab - p.mean_a * p.mean_b;
    p.delta_a = std::sqrt(std::max(var_a, 0.0));
    p.delta_b = std::sqrt(std::max(var_b, 0.0));
    p.hinge_a = std::max(ctx.floor - p.delta_a, 0.0);
    p.hinge_b = std::max(ctx.floor - p.delta_b, 0.0);
    p.f = std::norm(p.c) + ctx.weight * (p.hinge_a * p.hinge_a + p.hinge_b * p.hinge_b);
    return p;
}

// Partials of <M> = x^H M x / x^H x in the interleaved real coordinates, for
// Hermitian M (real partials).
Eigen::VectorXd hermitian_partials(const Matrix& m, const Vector& x, double mean) {
    const double n = x.squaredNorm();
    const Vector r = m * x - mean * x;
    Eigen::VectorXd g(2 * x.size());
    for (Index k = 0; k < x.size(); ++k) {
        g(2 * k) = 2.0 * r(k).real() / n;
        g(2 * k + 1) = 2.0 * r(k).imag() / n;
    }
    return g;
}

// Same for a general M with adjoint m_adj; partials are complex.
Eigen::VectorXcd general_partials(const Matrix& m, const Matrix& m_adj, const Vector& x,
                                  Complex mean) {
    const double n = x.squaredNorm();
    const Vector left = m * x - mean * x;
    const Vector right = (m_adj * x - std::conj(mean) * x).conjugate();
    const Complex i(0.0, 1.0);
    Eigen::VectorXcd g(2 * x.size());
    for (Index k = 0; k < x.size(); ++k) {
        g(2 * k) = (left(k) + right(k)) / n;
        g(2 * k + 1) = i * (right(k) - left(k)) / n;
    }
    return g;
}

struct Derivatives {
    Eigen::VectorXcd dc;       // dC
    Eigen::VectorXd ddelta_a;  // d(Delta A), zero where Delta A = 0
    Eigen::VectorXd ddelta_b;
};

Derivatives derivatives(const PairContext& ctx, const Vector& x, const Point& p) {
    const Complex mean_ab = p.c + p.mean_a * p.mean_b;
    const Eigen::VectorXd da = hermitian_partials(ctx.a, x, p.mean_a);
    const Eigen::VectorXd db = hermitian_partials(ctx.b, x, p.mean_b);
    const double mean_a2 = p.delta_a * p.delta_a + p.mean_a * p.mean_a;
    const double mean_b2 = p.delta_b * p.delta_b + p.mean_b * p.mean_b;
    const Eigen::VectorXd da2 = hermitian_partials(ctx.a2, x, mean_a2);
    const Eigen::VectorXd db2 = hermitian_partials(ctx.b2, x, mean_b2);

    Derivatives d;
    d.dc = general_partials(ctx.ab, ctx.ba, x, mean_ab) - p.mean_b * da.cast<Complex>() -
           p.mean_a * db.cast<Complex>();
    d.ddelta_a = Eigen::VectorXd::Zero(da.size());
    d.ddelta_b = Eigen::VectorXd::Zero(db.size());
    if (p.delta_a > 0.0) {
        d.ddelta_a = (da2 - 2.0 * p.mean_a * da) / (2.0 * p.delta_a);
    }
    if (p.delta_b > 0.0) {
        d.ddelta_b = (db2 - 2.0 * p.mean_b * db) / (2.0 * p.delta_b);
    }
    return d;
}

Eigen::VectorXd objective_gradient(const PairContext& ctx, const Vector& x, const Point& p) {
    const Derivatives d = derivatives(ctx, x, p);
    Eigen::VectorXd g = 2.0 * (p.c.real() * d.dc.real() + p.c.imag() * d.dc.imag());
    g -= 2.0 * ctx.weight * (p.hinge_a * d.ddelta_a + p.hinge_b * d.ddelta_b);
    return g;
}

Vector step(const Vector& x, const Eigen::VectorXd& dir, double t) {
    Vector y = x;
    for (Index k = 0; k < x.size(); ++k) {
        y(k) += t * Complex(dir(2 * k), dir(2 * k + 1));
    }
    return y / y.norm();
}

void check_x(const Vector& x) {
    const double n = x.norm();
    if (!std::isfinite(n)) {
        throw ValidationError("objective: non-finite coordinates");
    }
    if (n == 0.0) {
        throw ValidationError("objective: x must be non-zero");
    }
}

struct RestartOutcome {
    Vector x;
    Point point;
    int iterations = 0;
};

// Damped Gauss-Newton on r = (Re C, Im C, sqrt(w) h_A, sqrt(w) h_B) using the
// minimum-norm step -J^T (J J^T + mu I)^{-1} r.
int polish(const PairContext& ctx, Vector& x, Point& p) {
    PairContext target = ctx;
    target.floor = ctx.floor * (1.0 + kFloorMargin);
    Point pt = evaluate_point(target, x);
    const double sw = std::sqrt(ctx.weight);
    double mu = 1e-12;
    int it = 0;
    for (; it < kPolishIters; ++it) {
        if (pt.f == 0.0) {
            break;
        }
        const Derivatives d = derivatives(target, x, pt);
        const Index m = 2 * x.size();
        Eigen::Matrix<double, 4, Eigen::Dynamic> jac(4, m);
        jac.row(0) = d.dc.real().transpose();
        jac.row(1) = d.dc.imag().transpose();
        jac.row(2) = (pt.hinge_a > 0.0 ? -sw : 0.0) * d.ddelta_a.transpose();
        jac.row(3) = (pt.hinge_b > 0.0 ? -sw : 0.0) * d.ddelta_b.transpose();
        const Eigen::Vector4d r(pt.c.real(), pt.c.imag(), sw * pt.hinge_a, sw * pt.hinge_b);
        const Eigen::Matrix4d jjt = jac * jac.transpose();
        const double scale = std::max(jjt.trace(), 1e-300);

        bool improved = false;
        for (int tries = 0; tries < 12; ++tries) {
            const Eigen::Matrix4d sys = jjt + mu * scale * Eigen::Matrix4d::Identity();
            const Eigen::Vector4d y = sys.ldlt().solve(r);
            const Eigen::VectorXd delta = -(jac.transpose() * y);
            const Vector cand = step(x, delta, 1.0);
            const Point pc = evaluate_point(target, cand);
            if (std::isfinite(pc.f) && pc.f < pt.f) {
                x = cand;
                pt = pc;
                mu = std::max(mu * 0.1, 1e-16);
                improved = true;
                break;
            }
            mu *= 10.0;
        }
        if (!improved) {
            break;
        }
    }
    p = evaluate_point(ctx, x);
    return it;
}

RestartOutcome run_restart(const PairContext& ctx, const FinderConfig& cfg, int restart) {
    Rng rng = substream(cfg.seed, static_cast<std::uint64_t>(restart));
    const Index d = ctx.a.rows();
    RestartOutcome out{haar_random_state(d, rng).amps(), {}, 0};
    Vector& x = out.x;
    Point p = evaluate_point(ctx, x);
    double t = cfg.step_size;

    int it = 0;
    for (; it < cfg.max_iters; ++it) {
        if (p.f <= cfg.converge_tol) {
            break;
        }
        const Eigen::VectorXd g = objective_gradient(ctx, x, p);
        const double gg = g.squaredNorm();
        if (gg == 0.0 || !std::isfinite(gg)) {
            break;
        }
        if (cfg.step_rule == StepRule::fixed) {
            x = step(x, -g, cfg.step_size);
            p = evaluate_point(ctx, x);
            continue;
        }
        t = std::min(2.0 * t, 1e6);
        bool accepted = false;
        while (t >= kMinStep) {
            const Vector cand = step(x, -g, t);
            const Point pc = evaluate_point(ctx, cand);
            if (pc.f <= p.f - kArmijo * t * gg) {
                x = cand;
                p = pc;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            break;
        }
    }
    out.iterations = it + polish(ctx, x, p);
    out.point = p;
    return out;
}

}  // namespace

std::string_view to_string(StepRule r) {
    return r == StepRule::fixed ? "fixed" : "backtracking";
}

StepRule step_rule_from_string(std::string_view s) {
    if (s == "fixed") {
        return StepRule::fixed;
    }
    if (s == "backtracking") {
        return StepRule::backtracking;
    }
    throw ValidationError("unknown step rule '" + std::string(s) + "'");
}

void FinderConfig::validate(const Tolerances& tol) const {
    if (restarts < 1) {
        throw ValidationError("restarts must be >= 1");
    }
    if (max_iters < 1) {
        throw ValidationError("max_iters must be >= 1");
    }
    if (!(spread_floor > tol.eps_spread) || !std::isfinite(spread_floor)) {
        throw ValidationError("spread_floor must exceed eps_spread");
    }
    if (!(penalty_weight > 0.0) || !std::isfinite(penalty_weight)) {
        throw ValidationError("penalty_weight must be > 0");
    }
    if (!(converge_tol > 0.0) || !std::isfinite(converge_tol)) {
        throw ValidationError("converge_tol must be > 0");
    }
    if (!(step_size > 0.0) || !std::isfinite(step_size)) {
        throw ValidationError("step_size must be > 0");
    }
}

double objective(const Observable& a, const Observable& b, const Vector& x,
                 const FinderConfig& cfg) {
    require_dim(a.dim(), b.dim(), "objective");
    require_dim(a.dim(), x.size(), "objective");
    check_x(x);
    const PairContext ctx(a, b, cfg.spread_floor, cfg.penalty_weight);
    return evaluate_point(ctx, x).f;
}

Eigen::VectorXd gradient(const Observable& a, const Observable& b, const Vector& x,
                         const FinderConfig& cfg) {
    require_dim(a.dim(), b.dim(), "gradient");
    require_dim(a.dim(), x.size(), "gradient");
    check_x(x);
    const PairContext ctx(a, b, cfg.spread_floor, cfg.penalty_weight);
    return objective_gradient(ctx, x, evaluate_point(ctx, x));
}

FinderResult find(const Observable& a, const Observable& b, const FinderConfig& cfg,
                  const Tolerances& tol) {
    tol.validate();
    cfg.validate(tol);
    require_dim(a.dim(), b.dim(), "find");
    if (a.dim() < 3) {
        throw DimensionTooSmall(
            "no state with orthogonal non-zero deviation vectors exists for d < 3 (got d = " +
            std::to_string(a.dim()) + ")");
    }
    require_noncommuting(a, b, tol);

    const PairContext ctx(a, b, cfg.spread_floor, cfg.penalty_weight);
    auto is_converged = [&](const Point& p) {
        return p.f <= cfg.converge_tol && std::abs(p.c) <= tol.tol_zero &&
               p.delta_a >= cfg.spread_floor && p.delta_b >= cfg.spread_floor;
    };

    std::optional<FinderResult> best;
    for (int r = 0; r < cfg.restarts; ++r) {
        const RestartOutcome out = run_restart(ctx, cfg, r);
        const bool conv = is_converged(out.point);
        // Converged candidates beat non-converged ones; then lower objective;
        // ties keep the earlier restart.
        const bool better = !best || (conv && !best->converged) ||
                            (conv == best->converged && out.point.f < best->objective);
        if (better) {
            const StateVector phi = StateVector::normalized(out.x);
            best = FinderResult{phi,
                                out.point.f,
                                std::abs(out.point.c),
                                std_dev(a, phi),
                                std_dev(b, phi),
                                out.iterations,
                                r,
                                conv};
        }
    }
    return *best;
}

CandidateCheck check_candidate(const Observable& a, const Observable& b, const StateVector& phi,
                               const Tolerances& tol, double spread_floor) {
    require_dim(a.dim(), b.dim(), "check_candidate");
    require_dim(a.dim(), phi.dim(), "check_candidate");

    CandidateCheck chk;
    chk.c_matrix = correlation(a, b, phi);
    chk.c_deviation = correlation_from_deviations(a, b, phi);
    chk.forms_agree = std::abs(chk.c_matrix - chk.c_deviation) <= 1e-10;
    chk.correlation_zero =
        std::abs(chk.c_matrix) <= tol.tol_zero && std::abs(chk.c_deviation) <= tol.tol_zero;

    const DeviationVector dev_a = deviation_vector(a, phi);
    const DeviationVector dev_b = deviation_vector(b, phi);
    chk.delta_a = dev_a.norm;
    chk.delta_b = dev_b.norm;
    chk.spreads_ok = chk.delta_a >= spread_floor && chk.delta_b >= spread_floor;

    chk.gram_defect = std::numeric_limits<double>::infinity();
    if (dev_a.norm > 0.0 && dev_b.norm > 0.0) {
        Matrix basis(phi.dim(), 3);
        basis.col(0) = phi.amps();
        basis.col(1) = dev_a.vec / dev_a.norm;
        basis.col(2) = dev_b.vec / dev_b.norm;
        const Matrix gram = basis.adjoint() * basis;
        chk.gram_defect = (gram - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff();
    }
    chk.orthonormal = chk.gram_defect <= kGramTol;
    return chk;
}

bool verify_candidate(const Observable& a, const Observable& b, const StateVector& phi,
                      const Tolerances& tol, double spread_floor) {
    return check_candidate(a, b, phi, tol, spread_floor).passed();
}

}  // namespace ulab
