#ifndef ZONOTOPAL_SPLINE_HPP
#define ZONOTOPAL_SPLINE_HPP

#include "zonotopal/matroid.hpp"
#include "zonotopal/polynomial.hpp"

#include <map>
#include <vector>

namespace zonotopal {

/// Shift vector c in Q^X for the arrangement H(X, c) = {theta : theta.x = c_x}.
struct GenericShift {
    Vector c;
    unsigned long seed = 0;  // M with c_x = M^(index of x); 0 if supplied directly
    bool verified = false;
};

/// Every basis B has theta_B with theta_B.x != c_x for x not in B, and the theta_B are pairwise distinct.
bool is_general_position(const VectorList& X, const Vector& c);

/// c_x = M^i (i = 1..N), advancing M until the arrangement is in general position.
GenericShift choose_generic_c(const VectorList& X, unsigned long seed = 2);

/// Wraps a caller-supplied c; `verified` reports the general-position check.
GenericShift make_shift(const VectorList& X, Vector c);

/// theta_B = B^{-T} c_B, i.e. theta_B . b = c_b for b in B.
Vector vertex(const VectorList& X, const BasisId& b, const Vector& c);
std::map<BasisId, Vector> arrangement_vertices(const VectorList& X, const GenericShift& shift);

enum class ConeStatus { inside, boundary, outside };
const char* to_string(ConeStatus status);

ConeStatus cone_contains(const Matrix& basis, const Vector& u);
ConeStatus cone_contains(const VectorList& X, const BasisId& b, const Vector& u);

/// r components, each a polynomial in eps (coefficient k is eps^k).
struct EpsPolyVector {
    std::vector<std::vector<Rational>> components;
};

/// lambda(eps) with candidate * lambda = tau(eps) = sum_i eps^(i-1) b_i, b_i the columns of `flag`.
EpsPolyVector tau_coordinates(const Matrix& flag, const Matrix& candidate);

/// tau(eps) lies in the open cone of `candidate` for all small eps > 0.
bool tau_cone_test(const Matrix& flag, const Matrix& candidate);

/// Some linear functional is strictly positive on every vector of X.
bool is_pointed(const VectorList& X);

class BoundaryError : public ContractViolation {
public:
    using ContractViolation::ContractViolation;
};

/// What to do when a point lies on the wall of some basis cone.
///  reject: throw BoundaryError.
///  continuous_limit: use the cell of u + eps*w for a generic w; valid when X has no coloops.
enum class BoundaryPolicy { reject, continuous_limit };

/// The vertex-formula term of basis b: (theta_b . t)^(N-r) / ((N-r)! |det b| prod_{x not in b} (theta_b.x - c_x)).
MPoly vertex_term(const VectorList& X, const BasisId& b, const GenericShift& shift);

/// Bases whose cone contains u (or u + eps*w under the limit policy).
std::vector<BasisId> containing_bases(const VectorList& X, const Vector& u, BoundaryPolicy policy);

/// The polynomial piece of T_X on the cell of u.
MPoly cell_polynomial(const VectorList& X, const Vector& u, const GenericShift& shift,
                      BoundaryPolicy policy = BoundaryPolicy::reject);

Rational t_spline_eval(const VectorList& X, const Vector& u, const GenericShift& shift,
                       BoundaryPolicy policy = BoundaryPolicy::reject);

/// B_X(u) = sum over S of (-1)^|S| T_X(u - a_S).
Rational box_spline_eval(const VectorList& X, const Vector& u, const GenericShift& shift,
                         BoundaryPolicy policy = BoundaryPolicy::continuous_limit);

}  // namespace zonotopal

#endif
