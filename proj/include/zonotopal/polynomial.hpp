#ifndef ZONOTOPAL_POLYNOMIAL_HPP
#define ZONOTOPAL_POLYNOMIAL_HPP

#include "zonotopal/basis_id.hpp"
#include "zonotopal/linalg.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zonotopal {

/// Which symmetric algebra a polynomial lives in. P-spaces are S-side
/// (variables s1..sr), D-spaces are T-side (t1..tr).
enum class Side { S, T };

Side opposite(Side side);
char variable_letter(Side side);

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Graded lexicographic order with variable 1 highest. `grlex_greater(a, b)`
/// is true when a comes first in printed output.
bool grlex_greater(const Exponent& a, const Exponent& b);

struct GrlexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const { return grlex_greater(a, b); }
};

/// All exponents of total degree d in r variables, in printing order.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned degree);

/// Multivariate polynomial with rational coefficients. Zero coefficients are never stored.
class MPoly {
public:
    using Terms = std::map<Exponent, Rational, GrlexDescending>;

    MPoly(Side side, std::size_t nvars) : side_(side), nvars_(nvars) {}

    static MPoly constant(Side side, std::size_t nvars, const Rational& c);
    static MPoly variable(Side side, std::size_t nvars, std::size_t i);
    static MPoly monomial(Side side, const Exponent& e, const Rational& c = Rational(1));

    Side side() const { return side_; }
    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Exponent& e) const;
    /// Adds c to the coefficient of e.
    void add_term(const Exponent& e, const Rational& c);

    /// Highest total degree; -1 for the zero polynomial.
    int degree() const;
    /// Lowest total degree; -1 for the zero polynomial.
    int low_degree() const;
    bool is_homogeneous() const;
    MPoly homogeneous_component(unsigned degree) const;

    Rational evaluate(const Vector& point) const;
    MPoly partial(std::size_t i) const;

    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    MPoly& operator*=(const Rational& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
    friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;

    friend bool operator==(const MPoly&, const MPoly&) = default;

private:
    void check_compatible(const MPoly& other, const char* what) const;

    Side side_;
    std::size_t nvars_;
    Terms terms_;
};

/// Canonical text form: terms in graded lex order, e.g. "1/2*t1^2 + t2".
std::string to_string(const MPoly& p);

/// Parses the canonical text form (any term order is accepted).
MPoly parse_mpoly(std::string_view text, Side side, std::size_t nvars);

/// sum_i x_i * var_i
MPoly linear_form(const Vector& x, Side side);

/// Product of the linear forms of the given vectors; the empty product is 1.
MPoly product_of_forms(const std::vector<Vector>& vectors, Side side, std::size_t nvars);

MPoly power(const MPoly& p, unsigned exponent);

/// Directional derivative sum_i x_i d f / d var_i.
MPoly derive(const MPoly& f, const Vector& x);

/// op(d/dvar) applied to f; op and f live on opposite sides.
MPoly apply_operator(const MPoly& op, const MPoly& f);

/// <p, f>: p (S-side) acts on f (T-side) as a differential operator, then take the constant term.
Rational pair(const MPoly& p, const MPoly& f);

/// The same pairing with the roles of the sides swapped: q is T-side, g is S-side.
Rational pair_swapped(const MPoly& q, const MPoly& g);

/// Dimension of each homogeneous component, from degree 0, trailing zeros trimmed.
using HilbertVector = std::vector<std::size_t>;

std::string to_string(const HilbertVector& h);

/// An ordered list of polynomials spanning a P- or D-space, optionally labelled by bases.
struct SpaceBasis {
    Side side = Side::T;
    std::size_t nvars = 0;
    std::vector<MPoly> elements;
    std::vector<BasisId> labels;  // empty, or parallel to elements
    HilbertVector hilbert;

    std::size_t size() const { return elements.size(); }
};

/// Hilbert vector of a list of homogeneous polynomials. Throws on a non-homogeneous element.
HilbertVector hilbert_vector(const std::vector<MPoly>& elements);
HilbertVector hilbert_vector(const SpaceBasis& basis);

/// Builds a SpaceBasis and fills in its Hilbert vector.
SpaceBasis make_space_basis(Side side, std::size_t nvars, std::vector<MPoly> elements,
                            std::vector<BasisId> labels = {});

/// Reduced row-echelon form of span(polys), monomial columns in graded lex
/// order (highest first). Zero rows dropped. Canonical for the span.
std::vector<MPoly> echelon_basis(const std::vector<MPoly>& polys, Side side, std::size_t nvars);

/// Dimension of span(polys).
std::size_t span_dimension(const std::vector<MPoly>& polys, Side side, std::size_t nvars);

bool same_span(const std::vector<MPoly>& a, const std::vector<MPoly>& b, Side side, std::size_t nvars);

/// Is f in span(polys)?
bool in_span(const MPoly& f, const std::vector<MPoly>& polys);

/// Basis of {f of degree <= max_degree on the opposite side : g(d) f = 0 for all generators g}.
/// Generators must be nonzero and homogeneous, all on one side. The result is
/// ordered by degree, each degree block in reduced echelon form.
SpaceBasis kernel_of_differential_ideal(const std::vector<MPoly>& generators, Side generator_side,
                                        std::size_t nvars, unsigned max_degree);

struct LeastSpace {
    SpaceBasis basis;
    unsigned truncation_degree = 0;
};

/// Least space of a finite point set in V: span of the lowest-degree parts of the
/// span of the exponentials e^v, v in points. Exponentials are truncated at
/// max_degree; throws ContractViolation if that is too low to separate the points.
LeastSpace least_space(const std::vector<Vector>& points, unsigned max_degree);

}  // namespace zonotopal

#endif
