#pragma once

#include <Eigen/Core>
#include <cmath>

namespace connorb {

/// The explicit heteroclinic solution of the Michelson system at c = c_k,
///   p_1(t) = alpha(-9 tanh(beta t) + 11 tanh^3(beta t)),  p_2 = p_1', p_3 = p_1'',
/// with alpha = 15 sqrt(11/19^3), beta = sqrt(11/19)/2, c_k = sqrt(2) alpha.
/// All derivatives are evaluated in closed form.
class KuramotoOrbit {
public:
    KuramotoOrbit()
        : alpha(15.0 * std::sqrt(11.0 / (19.0 * 19.0 * 19.0))),
          beta(std::sqrt(11.0 / 19.0) / 2.0),
          c_k(std::sqrt(2.0) * alpha) {}

    double alpha;
    double beta;
    double c_k;

    double s(double t) const { return std::tanh(beta * t); }

    /// 1 - tanh(beta t) without cancellation for large positive t.
    double one_minus_s(double t) const {
        if (t <= 0.0) return 1.0 - std::tanh(beta * t);
        double u = std::exp(-2.0 * beta * t);
        return 2.0 * u / (1.0 + u);
    }

    double p1(double t) const {
        double st = s(t);
        return alpha * st * (-9.0 + 11.0 * st * st);
    }
    double p2(double t) const {
        double st = s(t);
        return alpha * beta * (1.0 - st * st) * (-9.0 + 33.0 * st * st);
    }
    double p3(double t) const {
        double st = s(t);
        return alpha * beta * beta * (1.0 - st * st) * st * (84.0 - 132.0 * st * st);
    }
    /// p_1''' = d p_3 / dt.
    double p4(double t) const {
        double st = s(t);
        double s2 = st * st;
        return alpha * beta * beta * beta * (1.0 - s2) * (84.0 - 648.0 * s2 + 660.0 * s2 * s2);
    }

    Eigen::Vector3d p(double t) const { return {p1(t), p2(t), p3(t)}; }
    Eigen::Vector3d pdot(double t) const { return {p2(t), p3(t), p4(t)}; }

    /// The Michelson field at c_k evaluated on the orbit; identical to pdot
    /// because p solves the system.
    Eigen::Vector3d field_on_orbit(double t) const {
        Eigen::Vector3d x = p(t);
        return {x[1], x[2], c_k * c_k - x[1] - 0.5 * x[0] * x[0]};
    }
};

} // namespace connorb
