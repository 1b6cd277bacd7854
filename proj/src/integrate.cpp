#include "connorb/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace connorb {

namespace {

// Dormand-Prince 5(4) tableau (FSAL).
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
constexpr double er1 = 71.0 / 57600, er3 = -71.0 / 16695, er4 = 71.0 / 1920,
                 er5 = -17253.0 / 339200, er6 = 22.0 / 525, er7 = -1.0 / 40;
// 4th-order continuous extension.
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

double error_norm(const Eigen::VectorXd& err, const Eigen::VectorXd& y0, const Eigen::VectorXd& y1,
                  double atol, double rtol) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < err.size(); ++i) {
        double sc = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        double q = err[i] / sc;
        acc += q * q;
    }
    return std::sqrt(acc / static_cast<double>(err.size()));
}

double initial_step(const VectorField& rhs, double t0, const Eigen::VectorXd& x0,
                    const Eigen::VectorXd& f0, double dir, double atol, double rtol,
                    double h_cap) {
    auto scaled_norm = [&](const Eigen::VectorXd& v, const Eigen::VectorXd& ref) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            double sc = atol + rtol * std::abs(ref[i]);
            acc += (v[i] / sc) * (v[i] / sc);
        }
        return std::sqrt(acc / static_cast<double>(v.size()));
    };
    double d0 = scaled_norm(x0, x0);
    double dl = scaled_norm(f0, x0);
    double h0 = (d0 < 1e-5 || dl < 1e-5) ? 1e-6 : 0.01 * d0 / dl;
    h0 = std::min(h0, h_cap);
    Eigen::VectorXd y1 = x0 + dir * h0 * f0;
    Eigen::VectorXd f1 = rhs(t0 + dir * h0, y1);
    double d2 = scaled_norm(f1 - f0, x0) / h0;
    double dm = std::max(dl, d2);
    double h1 = (dm <= 1e-15) ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dm, 0.2);
    return std::min({100.0 * h0, h1, h_cap});
}

} // namespace

Trajectory integrate(const VectorField& rhs, const Eigen::VectorXd& x0,
                     std::pair<double, double> t_span, const ToleranceConfig& tol,
                     const IntegrateOptions& opts) {
    tol.validate();
    const double t0 = t_span.first, t_end = t_span.second;
    if (t0 == t_end)
        throw PreconditionError("integrate: degenerate time span");
    const double dir = (t_end > t0) ? 1.0 : -1.0;
    const double span = std::abs(t_end - t0);

    Eigen::VectorXd y = x0;
    if (!y.allFinite())
        throw NonFiniteState("integrate: non-finite initial state");
    double t = t0;
    Eigen::VectorXd k1 = rhs(t, y);
    if (!k1.allFinite())
        throw NonFiniteState("integrate: vector field non-finite at initial state");

    double h = initial_step(rhs, t, y, k1, dir, tol.abs_tol, tol.rel_tol,
                            std::min(tol.max_step, span));

    std::vector<double> ts{t};
    std::vector<Eigen::VectorXd> ys{y};
    std::vector<Trajectory::Segment> segs;

    const double eps = std::numeric_limits<double>::epsilon();
    bool last_reject_nonfinite = false;
    double facmax = 5.0;

    while (dir * (t_end - t) > 0.0) {
        double remaining = std::abs(t_end - t);
        h = std::min(h, tol.max_step);
        bool final_step = remaining <= 1.1 * h;
        if (final_step) h = remaining;
        if (h < 16.0 * eps * std::max(std::abs(t), 1.0)) {
            if (last_reject_nonfinite)
                throw NonFiniteState("integrate: state blew up near t = " + std::to_string(t));
            throw StepSizeUnderflow("integrate: step size underflow near t = " + std::to_string(t));
        }
        const double hs = dir * h;

        Eigen::VectorXd k2 = rhs(t + c2 * hs, y + hs * (a21 * k1));
        Eigen::VectorXd k3 = rhs(t + c3 * hs, y + hs * (a31 * k1 + a32 * k2));
        Eigen::VectorXd k4 = rhs(t + c4 * hs, y + hs * (a41 * k1 + a42 * k2 + a43 * k3));
        Eigen::VectorXd k5 = rhs(t + c5 * hs, y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        Eigen::VectorXd k6 = rhs(t + hs, y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        Eigen::VectorXd y1 = y + hs * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
        double t1 = final_step ? t_end : t + hs;
        Eigen::VectorXd k7 = rhs(t1, y1);

        if (!y1.allFinite() || !k7.allFinite()) {
            last_reject_nonfinite = true;
            h *= 0.25;
            facmax = 1.0;
            continue;
        }
        last_reject_nonfinite = false;

        Eigen::VectorXd err = hs * (er1 * k1 + er3 * k3 + er4 * k4 + er5 * k5 + er6 * k6 + er7 * k7);
        double en = error_norm(err, y, y1, tol.abs_tol, tol.rel_tol);
        if (!(en <= 1.0)) {
            double fac = std::max(0.1, 0.9 * std::pow(en, -0.2));
            h *= fac;
            facmax = 1.0;
            continue;
        }

        if (opts.post_step) {
            opts.post_step(t1, y1);
            if (!y1.allFinite())
                throw NonFiniteState("integrate: post_step produced a non-finite state");
            k7 = rhs(t1, y1);
        }

        Trajectory::Segment seg;
        seg.t0 = t;
        seg.h = hs;
        Eigen::VectorXd dy = y1 - y;
        seg.c0 = y;
        seg.c1 = dy;
        seg.c2 = hs * k1 - dy;
        seg.c3 = dy - hs * k7 - seg.c2;
        seg.c4 = hs * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
        segs.push_back(std::move(seg));

        t = t1;
        y = y1;
        k1 = k7;
        ts.push_back(t);
        ys.push_back(y);

        double fac = std::clamp(0.9 * std::pow(std::max(en, 1e-10), -0.2), 0.2, facmax);
        h *= fac;
        facmax = 5.0;
    }

    Trajectory out;
    if (dir > 0) {
        for (std::size_t i = 0; i < ts.size(); ++i) out.append_node(ts[i], ys[i]);
        for (auto& s : segs) out.append_segment(std::move(s));
    } else {
        for (std::size_t i = ts.size(); i-- > 0;) out.append_node(ts[i], ys[i]);
        for (std::size_t j = segs.size(); j-- > 0;) out.append_segment(std::move(segs[j]));
    }
    return out;
}

} // namespace connorb
