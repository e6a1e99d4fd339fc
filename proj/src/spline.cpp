#include "zonotopal/spline.hpp"

#include <algorithm>
#include <set>

namespace zonotopal {

Vector vertex(const VectorList& X, const BasisId& b, const Vector& c) {
    if (c.size() != X.size()) throw DimensionError("vertex: shift has wrong length");
    Vector cb;
    for (std::size_t i : b.indices) cb.push_back(c[i]);
    return solve(X.columns(b.indices).transpose(), cb);
}

bool is_general_position(const VectorList& X, const Vector& c) {
    if (c.size() != X.size()) throw DimensionError("is_general_position: shift has wrong length");
    std::set<Vector> seen;
    for (const BasisId& b : bases(X)) {
        const Vector theta = vertex(X, b, c);
        for (std::size_t x = 0; x < X.size(); ++x)
            if (!b.contains(x) && dot(theta, X[x]) == c[x]) return false;
        if (!seen.insert(theta).second) return false;
    }
    return true;
}

GenericShift choose_generic_c(const VectorList& X, unsigned long seed) {
    if (!is_spanning(X)) throw ContractViolation("choose_generic_c: the list does not span");
    for (unsigned long m = std::max(seed, 1ul);; ++m) {
        Vector c;
        Rational p(1);
        for (std::size_t i = 0; i < X.size(); ++i) {
            p *= Rational(static_cast<long>(m));
            c.push_back(p);
        }
        if (is_general_position(X, c)) return {c, m, true};
    }
}

GenericShift make_shift(const VectorList& X, Vector c) {
    const bool ok = is_general_position(X, c);
    return {std::move(c), 0, ok};
}

std::map<BasisId, Vector> arrangement_vertices(const VectorList& X, const GenericShift& shift) {
    if (!shift.verified) throw ContractViolation("arrangement_vertices: shift is not verified");
    std::map<BasisId, Vector> out;
    for (const BasisId& b : bases(X)) out.emplace(b, vertex(X, b, shift.c));
    return out;
}

const char* to_string(ConeStatus status) {
    switch (status) {
        case ConeStatus::inside: return "inside";
        case ConeStatus::boundary: return "boundary";
        case ConeStatus::outside: return "outside";
    }
    return "?";
}

ConeStatus cone_contains(const Matrix& basis, const Vector& u) {
    const Vector lambda = solve(basis, u);
    bool zero = false;
    for (const Rational& l : lambda) {
        if (l < 0) return ConeStatus::outside;
        if (l == 0) zero = true;
    }
    return zero ? ConeStatus::boundary : ConeStatus::inside;
}

ConeStatus cone_contains(const VectorList& X, const BasisId& b, const Vector& u) {
    validate_basis(X, b);
    return cone_contains(X.columns(b.indices), u);
}

EpsPolyVector tau_coordinates(const Matrix& flag, const Matrix& candidate) {
    if (determinant(candidate) == 0) throw SingularMatrixError("tau_coordinates: candidate basis is singular");
    const Matrix inv = inverse(candidate);
    const std::size_t r = flag.cols();
    EpsPolyVector out;
    out.components.assign(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i) {
        const Vector coords = inv * flag.column(i);
        for (std::size_t j = 0; j < r; ++j) out.components[j][i] = coords[j];
    }
    for (const auto& comp : out.components)
        if (std::all_of(comp.begin(), comp.end(), [](const Rational& q) { return q == 0; }))
            throw ContractViolation("tau_coordinates: identically zero component (flag is not a basis)");
    return out;
}

bool tau_cone_test(const Matrix& flag, const Matrix& candidate) {
    for (const auto& comp : tau_coordinates(flag, candidate).components) {
        const auto lowest = std::find_if(comp.begin(), comp.end(), [](const Rational& q) { return q != 0; });
        if (*lowest < 0) return false;
    }
    return true;
}

bool is_pointed(const VectorList& X) {
    const std::size_t r = X.dim();
    for (std::size_t i = 0; i < X.size(); ++i)
        if (is_loop(X, i)) return false;
    if (r == 1) {
        const int s = sgn(X[0][0]);
        return std::all_of(X.vectors().begin(), X.vectors().end(), [s](const Vector& v) { return sgn(v[0]) == s; });
    }
    Vector total(r);
    bool any = false;
    IndexSet c(r - 1);
    for (std::size_t i = 0; i + 1 < r; ++i) c[i] = i;
    if (X.size() < r - 1) return false;
    while (true) {
        if (rank_of(X, c) == r - 1) {
            const Vector normal = nullspace_basis(Matrix::from_rows(X.select(c), r)).front();
            bool nonneg = true, nonpos = true;
            for (const Vector& x : X.vectors()) {
                const int s = sgn(dot(normal, x));
                nonneg = nonneg && s >= 0;
                nonpos = nonpos && s <= 0;
            }
            if (nonneg || nonpos) {
                for (std::size_t k = 0; k < r; ++k) total[k] += nonneg ? normal[k] : Rational(-normal[k]);
                any = true;
            }
        }
        std::size_t k = c.size();
        while (k-- > 0 && c[k] == X.size() - c.size() + k) {}
        if (k == static_cast<std::size_t>(-1)) break;
        ++c[k];
        for (std::size_t j = k + 1; j < c.size(); ++j) c[j] = c[j - 1] + 1;
    }
    if (!any) return false;
    return std::all_of(X.vectors().begin(), X.vectors().end(), [&](const Vector& x) { return dot(total, x) > 0; });
}

MPoly vertex_term(const VectorList& X, const BasisId& b, const GenericShift& shift) {
    const std::size_t r = X.dim();
    const unsigned k = static_cast<unsigned>(X.size() - r);
    const Vector theta = vertex(X, b, shift.c);
    Rational denom = abs(basis_determinant(X, b)) * factorial(k);
    for (std::size_t x = 0; x < X.size(); ++x) {
        if (b.contains(x)) continue;
        const Rational f = dot(theta, X[x]) - shift.c[x];
        if (f == 0) throw ContractViolation("vertex_term: shift is not in general position");
        denom *= f;
    }
    return power(linear_form(theta, Side::T), k) * Rational(1 / denom);
}

namespace {

/// w with B^{-1} w free of zeros for every basis B.
Vector generic_direction(const VectorList& X) {
    const std::vector<BasisId> all = bases(X);
    for (long m = 2;; ++m) {
        Vector w;
        Rational p(1);
        for (std::size_t i = 0; i < X.dim(); ++i) {
            w.push_back(p);
            p *= m;
        }
        const bool ok = std::all_of(all.begin(), all.end(), [&](const BasisId& b) {
            const Vector l = solve(X.columns(b.indices), w);
            return std::none_of(l.begin(), l.end(), [](const Rational& q) { return q == 0; });
        });
        if (ok) return w;
    }
}

void require_pointed_spanning(const VectorList& X, const char* what) {
    if (!is_spanning(X)) throw ContractViolation(std::string(what) + ": the list does not span");
    if (!is_pointed(X)) throw ContractViolation(std::string(what) + ": cone(X) is not pointed");
}

}  // namespace

std::vector<BasisId> containing_bases(const VectorList& X, const Vector& u, BoundaryPolicy policy) {
    if (u.size() != X.dim()) throw DimensionError("point has wrong dimension");
    const std::vector<BasisId> all = bases(X);
    std::vector<BasisId> inside;
    bool boundary = false;
    for (const BasisId& b : all) {
        const ConeStatus s = cone_contains(X.columns(b.indices), u);
        if (s == ConeStatus::inside) inside.push_back(b);
        if (s == ConeStatus::boundary) boundary = true;
    }
    if (!boundary) return inside;
    if (policy == BoundaryPolicy::reject)
        throw BoundaryError("point " + to_string(u) + " lies on the boundary of a basis cone");
    for (std::size_t i = 0; i < X.size(); ++i)
        if (is_coloop(X, i))
            throw BoundaryError("point " + to_string(u) + " lies on a cone wall and X has a coloop (no continuous limit)");

    const Vector w = generic_direction(X);
    inside.clear();
    for (const BasisId& b : all) {
        const Matrix m = X.columns(b.indices);
        const Vector l0 = solve(m, u);
        const Vector l1 = solve(m, w);
        bool in = true;
        for (std::size_t j = 0; j < l0.size() && in; ++j) in = l0[j] > 0 || (l0[j] == 0 && l1[j] > 0);
        if (in) inside.push_back(b);
    }
    return inside;
}

MPoly cell_polynomial(const VectorList& X, const Vector& u, const GenericShift& shift, BoundaryPolicy policy) {
    require_pointed_spanning(X, "cell_polynomial");
    if (!shift.verified) throw ContractViolation("cell_polynomial: shift is not verified");
    MPoly sum(Side::T, X.dim());
    for (const BasisId& b : containing_bases(X, u, policy)) sum += vertex_term(X, b, shift);
    return sum;
}

Rational t_spline_eval(const VectorList& X, const Vector& u, const GenericShift& shift, BoundaryPolicy policy) {
    return cell_polynomial(X, u, shift, policy).evaluate(u);
}

Rational box_spline_eval(const VectorList& X, const Vector& u, const GenericShift& shift, BoundaryPolicy policy) {
    require_pointed_spanning(X, "box_spline_eval");
    if (!shift.verified) throw ContractViolation("box_spline_eval: shift is not verified");
    if (u.size() != X.dim()) throw DimensionError("box_spline_eval: point has wrong dimension");
    if (X.size() > 24) throw ContractViolation("box_spline_eval: list too long");
    std::map<BasisId, MPoly> terms;
    for (const BasisId& b : bases(X)) terms.emplace(b, vertex_term(X, b, shift));

    Rational total(0);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << X.size()); ++m) {
        Vector p = u;
        int parity = 1;
        for (std::size_t i = 0; i < X.size(); ++i) {
            if (!(m & (std::uint64_t{1} << i))) continue;
            parity = -parity;
            for (std::size_t k = 0; k < p.size(); ++k) p[k] -= X[i][k];
        }
        Rational value(0);
        for (const BasisId& b : containing_bases(X, p, policy)) value += terms.at(b).evaluate(p);
        total += parity * value;
    }
    return total;
}

}  // namespace zonotopal
