#ifndef ZONOTOPAL_SPACES_HPP
#define ZONOTOPAL_SPACES_HPP

#include "zonotopal/forward_exchange.hpp"
#include "zonotopal/polynomial.hpp"
#include "zonotopal/spline.hpp"

#include <optional>
#include <vector>

namespace zonotopal {

/// Q_B = p_{X \ (B u E(B))}, S-side.
MPoly q_polynomial(const VectorList& X, const BasisId& b);

/// {Q_B : B in B'}, labelled; throws if the products turn out dependent.
SpaceBasis p_space_basis(const VectorList& X, const std::vector<BasisId>& bprime);

/// Kernel of the ideal generated by p_C over the B'-cocircuits C; T-side.
/// Degree bound defaults to N - r.
SpaceBasis d_space_basis(const VectorList& X, const std::vector<BasisId>& bprime,
                         std::optional<unsigned> max_degree = std::nullopt);

/// The sublist of X at positions `keep`, with `b` renumbered into it.
struct Sublist {
    VectorList list;
    BasisId basis;
};
Sublist restrict_list(const VectorList& X, const IndexSet& keep, const BasisId& b);

/// Z with the vectors negative in the flag of `b` negated.
struct Reorientation {
    VectorList list;
    std::size_t flipped = 0;
};
Reorientation reorient(const VectorList& Z, const BasisId& b);

/// R^B_Z: local piece of T_{Z^{B+}} on the cell of tau, times (-1)^(number of flipped vectors).
/// A generic shift for Z^{B+} is chosen from `seed`.
MPoly r_polynomial(const VectorList& Z, const BasisId& b, unsigned long seed = 2);
MPoly r_polynomial(const VectorList& Z, const BasisId& b, const GenericShift& shift_for_reoriented);

/// {|det B| R^B_{X \ E(B)} : B in B'}, labelled, T-side.
SpaceBasis bcyr_basis(const VectorList& X, const std::vector<BasisId>& bprime, unsigned long seed = 2);

/// Entries <p_i, d_j>.
Matrix gram_matrix(const SpaceBasis& p_basis, const SpaceBasis& d_basis);

/// The basis of d_space_basis dual to p_space_basis, by solving the Gram system.
SpaceBasis dual_basis_oracle(const VectorList& X, const std::vector<BasisId>& bprime);

/// Compares T_{Z^{B+}} (second shift) with +-R^B_Z at scaled tau points, then on a grid in the cell.
bool local_piece_check(const VectorList& Z, const BasisId& b, unsigned long seed = 2);

struct PowerIdealGenerator {
    IndexSet flat;                   // F, a flat of rank < r
    std::vector<Vector> annihilator;  // basis of F° (normals)
    unsigned exponent = 0;           // kappa(F) + 1
};

struct PowerIdealSpec {
    std::vector<PowerIdealGenerator> generators;
    unsigned cap = 0;  // kappa for a generic normal
};

/// kappa(F) = max over B' of |X \ (B u E(B) u F)|.
unsigned kappa(const VectorList& X, const std::vector<BasisId>& bprime, const IndexSet& flat);

PowerIdealSpec power_ideal_spec(const VectorList& X, const std::vector<BasisId>& bprime);

struct PowerIdealResult {
    PowerIdealSpec spec;
    SpaceBasis kernel;  // S-side
    bool equal = false;  // kernel == span P(X, B')
};

PowerIdealResult power_ideal_kernel(const VectorList& X, const std::vector<BasisId>& bprime);

struct HilbertCheck {
    bool holds = false;
    HilbertVector p_space;
    HilbertVector d_space;
    HilbertVector tutte;  // coefficients of sum_B q^(N-r-|E(B)|)
};

HilbertCheck hilbert_tutte_check(const VectorList& X, const std::vector<BasisId>& bprime);

/// Smallest x with both {B in B' : x in B} and {B in B' : x not in B} nonempty.
std::optional<std::size_t> delcon_element(const std::vector<BasisId>& bprime, std::size_t list_size);

struct Minor {
    std::optional<VectorList> list;  // empty for a contraction down to rank 0
    std::vector<BasisId> bases;
};
Minor deletion_minor(const VectorList& X, const std::vector<BasisId>& bprime, std::size_t x);
Minor contraction_minor(const VectorList& X, const std::vector<BasisId>& bprime, std::size_t x);

struct DelconCheck {
    std::size_t element = 0;
    HilbertVector p_space, p_deletion, p_contraction;
    HilbertVector d_space, d_deletion, d_contraction;
    bool p_holds = false;
    bool d_holds = false;
    bool derivative_holds = false;  // D_x R^B_{X\E(B)} = R^B_{X\(E(B) u x)} for B not containing x
    bool holds() const { return p_holds && d_holds && derivative_holds; }
};

DelconCheck delcon_dimension_check(const VectorList& X, const std::vector<BasisId>& bprime, unsigned long seed = 2);

}  // namespace zonotopal

#endif
