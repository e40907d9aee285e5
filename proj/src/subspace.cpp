#include "crn/subspace.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "crn/errors.hpp"
#include "crn/structure.hpp"

namespace crn {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

Subspace Subspace::of_network(const ReactionNetwork& net) {
    auto [basis, sigma] = stoichiometric_subspace(net);
    Subspace sub;
    sub.ambient_ = net.num_species();
    if (sigma == 0) return sub;

    Eigen::MatrixXd b(net.num_species(), sigma);
    for (int j = 0; j < sigma; ++j)
        for (int i = 0; i < net.num_species(); ++i)
            b(i, j) = mpz_get_d(basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].get_mpz_t());
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(b);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(net.num_species(), sigma);

    sub.q_.assign(static_cast<std::size_t>(sigma),
                  std::vector<double>(static_cast<std::size_t>(net.num_species())));
    for (int r = 0; r < sigma; ++r)
        for (int i = 0; i < net.num_species(); ++i)
            sub.q_[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = q(i, r);
    return sub;
}

std::vector<double> Subspace::coords(const std::vector<double>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw InvalidArgument("subspace: dimension mismatch");
    std::vector<double> t(q_.size());
    for (std::size_t r = 0; r < q_.size(); ++r) t[r] = dot(q_[r], v);
    return t;
}

std::vector<double> Subspace::from_coords(const std::vector<double>& t) const {
    if (t.size() != q_.size()) throw InvalidArgument("subspace: dimension mismatch");
    std::vector<double> v(static_cast<std::size_t>(ambient_), 0.0);
    for (std::size_t r = 0; r < q_.size(); ++r)
        for (int i = 0; i < ambient_; ++i)
            v[static_cast<std::size_t>(i)] += t[r] * q_[r][static_cast<std::size_t>(i)];
    return v;
}

std::vector<double> Subspace::project(const std::vector<double>& v) const {
    return from_coords(coords(v));
}

std::vector<double> Subspace::off(const std::vector<double>& v) const {
    std::vector<double> p = project(v);
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] - p[i];
    return out;
}

} // namespace crn
