#ifndef CRN_SUBSPACE_HPP
#define CRN_SUBSPACE_HPP

#include <vector>

#include "crn/network.hpp"

namespace crn {

/// Orthonormal basis of the stoichiometric subspace S, for projections and
/// reduced coordinates. Floating point; exact questions about S go through
/// structure.hpp.
class Subspace {
public:
    Subspace() = default;

    static Subspace of_network(const ReactionNetwork& net);

    int dim() const { return static_cast<int>(q_.size()); }
    int ambient_dim() const { return ambient_; }

    /// Coordinates t = Q v of the S-component.
    std::vector<double> coords(const std::vector<double>& v) const;
    /// Q^T t back into ambient space.
    std::vector<double> from_coords(const std::vector<double>& t) const;
    std::vector<double> project(const std::vector<double>& v) const;
    /// v - project(v).
    std::vector<double> off(const std::vector<double>& v) const;

    /// Orthonormal basis vectors (rows), dim x ambient.
    const std::vector<std::vector<double>>& rows() const { return q_; }

private:
    std::vector<std::vector<double>> q_;
    int ambient_ = 0;
};

double norm2(const std::vector<double>& v);
double dot(const std::vector<double>& a, const std::vector<double>& b);

} // namespace crn

#endif
