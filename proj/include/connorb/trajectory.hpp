#pragma once

#include <Eigen/Core>
#include <functional>
#include <ostream>
#include <vector>

#include "connorb/errors.hpp"

namespace connorb {

/// Piecewise-polynomial solution record of an ODE integration.
///
/// Nodes carry the accepted step endpoints; between consecutive nodes a dense
/// interpolant of the stated order is stored.  Node times are strictly
/// increasing and interpolation at a node time returns the stored state
/// exactly, by construction.
class Trajectory {
public:
    struct Node {
        double t;
        Eigen::VectorXd x;
    };

    /// Interpolation coefficients for one interval [t0, t0+h].
    /// Evaluation uses the nested form
    ///   c0 + th*(c1 + (1-th)*(c2 + th*(c3 + (1-th)*c4)))   with th = (t-t0)/h,
    /// which reproduces the endpoints exactly (th=0 -> c0, th=1 -> c0+c1).
    struct Segment {
        double t0;
        double h;
        Eigen::VectorXd c0, c1, c2, c3, c4;
    };

    Trajectory() = default;

    int order() const { return order_; }
    void set_order(int k) { order_ = k; }

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    Eigen::Index dimension() const { return nodes_.empty() ? 0 : nodes_.front().x.size(); }

    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& front() const { return nodes_.front(); }
    const Node& back() const { return nodes_.back(); }
    double t_min() const { return nodes_.front().t; }
    double t_max() const { return nodes_.back().t; }

    void append_node(double t, const Eigen::VectorXd& x) {
        if (!nodes_.empty()) {
            if (!(t > nodes_.back().t))
                throw PreconditionError("Trajectory: node times must be strictly increasing");
            if (x.size() != nodes_.back().x.size())
                throw PreconditionError("Trajectory: all states must share one dimension");
        }
        nodes_.push_back({t, x});
    }

    void append_segment(Segment seg) { segments_.push_back(std::move(seg)); }

    /// Dense evaluation anywhere in [t_min, t_max].  Exact at node times.
    Eigen::VectorXd eval(double t) const {
        if (nodes_.empty())
            throw PreconditionError("Trajectory::eval on empty trajectory");
        if (t < t_min() - 1e-12 || t > t_max() + 1e-12)
            throw PreconditionError("Trajectory::eval outside covered span");
        std::size_t i = locate(t);
        if (t == nodes_[i].t) return nodes_[i].x;
        if (i + 1 < nodes_.size() && t == nodes_[i + 1].t) return nodes_[i + 1].x;
        if (segments_.empty()) {
            // linear fallback for sample-only trajectories
            const Node& a = nodes_[i];
            const Node& b = nodes_[i + 1];
            double th = (t - a.t) / (b.t - a.t);
            return (1.0 - th) * a.x + th * b.x;
        }
        const Segment& s = segments_[i];
        double th = (t - s.t0) / s.h;
        double th1 = 1.0 - th;
        return s.c0 + th * (s.c1 + th1 * (s.c2 + th * (s.c3 + th1 * s.c4)));
    }

    /// Concatenate `left` (ending where `right` begins) into one trajectory.
    static Trajectory merge(const Trajectory& left, const Trajectory& right);

    /// Build a trajectory from samples and their time derivatives
    /// (cubic Hermite between nodes, order 3).
    static Trajectory from_samples(const std::vector<double>& ts,
                                   const std::vector<Eigen::VectorXd>& xs,
                                   const std::vector<Eigen::VectorXd>& dxs);

    void write_csv(std::ostream& os, const std::vector<std::string>& column_names) const;

private:
    std::size_t locate(double t) const {
        // index of the interval containing t (binary search over node times)
        std::size_t lo = 0, hi = nodes_.size() - 1;
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            if (nodes_[mid].t <= t) lo = mid; else hi = mid;
        }
        return lo;
    }

    std::vector<Node> nodes_;
    std::vector<Segment> segments_;
    int order_ = 4;
};

} // namespace connorb
