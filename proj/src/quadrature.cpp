#include "connorb/quadrature.hpp"

#include <cmath>

#include "connorb/errors.hpp"

namespace connorb {

QuadratureResult quad_nodes(const std::vector<double>& ts, const std::vector<double>& fs) {
    if (ts.size() != fs.size())
        throw PreconditionError("quad_nodes: ragged inputs");
    if (ts.size() < 2)
        throw PreconditionError("quad_nodes: need at least 2 nodes");
    double fine = 0.0;
    for (std::size_t i = 1; i < ts.size(); ++i) {
        if (!(ts[i] > ts[i - 1]))
            throw PreconditionError("quad_nodes: node times must be strictly increasing");
        fine += 0.5 * (fs[i] + fs[i - 1]) * (ts[i] - ts[i - 1]);
    }
    QuadratureResult out;
    out.value = fine;
    if (ts.size() >= 3) {
        double coarse = 0.0;
        std::size_t prev = 0;
        for (std::size_t i = 2; i < ts.size(); i += 2) {
            coarse += 0.5 * (fs[i] + fs[prev]) * (ts[i] - ts[prev]);
            prev = i;
        }
        if (prev != ts.size() - 1) {
            std::size_t last = ts.size() - 1;
            coarse += 0.5 * (fs[last] + fs[prev]) * (ts[last] - ts[prev]);
        }
        out.richardson = std::abs(fine - coarse) / 3.0;
    }
    return out;
}

QuadratureResult quad_trajectory(const Trajectory& traj,
                                 const std::function<double(double, const Eigen::VectorXd&)>& integrand,
                                 double a, double b) {
    if (!(b > a))
        throw PreconditionError("quad_trajectory: need b > a");
    if (a < traj.t_min() - 1e-12 || b > traj.t_max() + 1e-12)
        throw PreconditionError("quad_trajectory: [a,b] not covered by trajectory");
    a = std::max(a, traj.t_min());
    b = std::min(b, traj.t_max());
    std::vector<double> ts, fs;
    ts.reserve(traj.size() + 2);
    fs.reserve(traj.size() + 2);
    auto push = [&](double t, const Eigen::VectorXd& x) {
        ts.push_back(t);
        fs.push_back(integrand(t, x));
    };
    push(a, traj.eval(a));
    for (const auto& n : traj.nodes()) {
        if (n.t > a + 1e-14 && n.t < b - 1e-14) push(n.t, n.x);
    }
    push(b, traj.eval(b));
    return quad_nodes(ts, fs);
}

} // namespace connorb
