#include "connorb/trajectory.hpp"

#include <iomanip>

namespace connorb {

Trajectory Trajectory::merge(const Trajectory& left, const Trajectory& right) {
    if (left.empty()) return right;
    if (right.empty()) return left;
    if (std::abs(left.t_max() - right.t_min()) > 1e-12)
        throw PreconditionError("Trajectory::merge: pieces do not abut");
    Trajectory out;
    out.order_ = std::min(left.order_, right.order_);
    out.nodes_ = left.nodes_;
    out.segments_ = left.segments_;
    for (std::size_t i = 1; i < right.nodes_.size(); ++i)
        out.nodes_.push_back(right.nodes_[i]);
    for (const auto& s : right.segments_)
        out.segments_.push_back(s);
    return out;
}

Trajectory Trajectory::from_samples(const std::vector<double>& ts,
                                    const std::vector<Eigen::VectorXd>& xs,
                                    const std::vector<Eigen::VectorXd>& dxs) {
    if (ts.size() != xs.size() || ts.size() != dxs.size())
        throw PreconditionError("Trajectory::from_samples: ragged inputs");
    if (ts.size() < 2)
        throw PreconditionError("Trajectory::from_samples: need at least 2 samples");
    Trajectory out;
    out.order_ = 3;
    for (std::size_t i = 0; i < ts.size(); ++i)
        out.append_node(ts[i], xs[i]);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        double h = ts[i + 1] - ts[i];
        Eigen::VectorXd dy = xs[i + 1] - xs[i];
        Eigen::VectorXd a = h * dxs[i] - dy;
        Eigen::VectorXd b = dy - h * dxs[i + 1];
        Segment s;
        s.t0 = ts[i];
        s.h = h;
        s.c0 = xs[i];
        s.c1 = dy;
        s.c2 = a;
        s.c3 = b - a;
        s.c4 = Eigen::VectorXd::Zero(xs[i].size());
        out.append_segment(std::move(s));
    }
    return out;
}

void Trajectory::write_csv(std::ostream& os, const std::vector<std::string>& column_names) const {
    os << "t";
    for (const auto& name : column_names) os << "," << name;
    os << "\n";
    os << std::setprecision(17);
    for (const auto& node : nodes_) {
        os << node.t;
        for (Eigen::Index j = 0; j < node.x.size(); ++j) os << "," << node.x[j];
        os << "\n";
    }
}

} // namespace connorb
