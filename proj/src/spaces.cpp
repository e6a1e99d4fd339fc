#include "zonotopal/spaces.hpp"

#include <algorithm>
#include <set>

namespace zonotopal {

namespace {

IndexSet complement(std::size_t n, const IndexSet& a, const IndexSet& b = {}) {
    IndexSet out;
    for (std::size_t i = 0; i < n; ++i)
        if (!std::binary_search(a.begin(), a.end(), i) && !std::binary_search(b.begin(), b.end(), i)) out.push_back(i);
    return out;
}

void require_nonempty(const std::vector<BasisId>& bprime, const char* what) {
    if (bprime.empty()) throw ContractViolation(std::string(what) + ": empty set of bases");
}

HilbertVector trimmed(HilbertVector h) {
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

}  // namespace

MPoly q_polynomial(const VectorList& X, const BasisId& b) {
    const Activities act = activity_sets(X, b);
    return product_of_forms(X.select(complement(X.size(), b.indices, act.external)), Side::S, X.dim());
}

SpaceBasis p_space_basis(const VectorList& X, const std::vector<BasisId>& bprime) {
    require_nonempty(bprime, "p_space_basis");
    std::vector<MPoly> elements;
    for (const BasisId& b : bprime) elements.push_back(q_polynomial(X, b));
    if (span_dimension(elements, Side::S, X.dim()) != elements.size())
        throw Error("p_space_basis: the products Q_B are linearly dependent (internal inconsistency)");
    return make_space_basis(Side::S, X.dim(), std::move(elements), bprime);
}

SpaceBasis d_space_basis(const VectorList& X, const std::vector<BasisId>& bprime, std::optional<unsigned> max_degree) {
    require_nonempty(bprime, "d_space_basis");
    std::vector<MPoly> generators;
    for (const IndexSet& c : cocircuits(X, bprime)) generators.push_back(product_of_forms(X.select(c), Side::S, X.dim()));
    const unsigned bound = max_degree.value_or(static_cast<unsigned>(X.size() - X.dim()));
    return kernel_of_differential_ideal(generators, Side::S, X.dim(), bound);
}

Sublist restrict_list(const VectorList& X, const IndexSet& keep, const BasisId& b) {
    BasisId renumbered;
    for (std::size_t i : b.indices) {
        const auto it = std::lower_bound(keep.begin(), keep.end(), i);
        if (it == keep.end() || *it != i) throw ContractViolation("restrict_list: basis element not kept");
        renumbered.indices.push_back(static_cast<std::size_t>(it - keep.begin()));
    }
    return {VectorList(X.dim(), X.select(keep)), renumbered};
}

Reorientation reorient(const VectorList& Z, const BasisId& b) {
    std::vector<Vector> vectors = Z.vectors();
    std::size_t flipped = 0;
    for (const FlagLevel& level : flag_partition(Z, b))
        for (std::size_t x : level.negative) {
            for (Rational& q : vectors[x]) q = -q;
            ++flipped;
        }
    return {VectorList(Z.dim(), std::move(vectors)), flipped};
}

MPoly r_polynomial(const VectorList& Z, const BasisId& b, const GenericShift& shift) {
    validate_basis(Z, b);
    for (std::size_t i = 0; i < Z.size(); ++i)
        if (is_loop(Z, i)) throw ContractViolation("r_polynomial: the list contains the zero vector");
    const Reorientation re = reorient(Z, b);
    if (!shift.verified || shift.c.size() != Z.size())
        throw ContractViolation("r_polynomial: shift is not verified for the reoriented list");
    const Matrix flag = Z.columns(b.indices);
    MPoly sum(Side::T, Z.dim());
    for (const BasisId& candidate : bases(re.list))
        if (tau_cone_test(flag, re.list.columns(candidate.indices))) sum += vertex_term(re.list, candidate, shift);
    if (re.flipped % 2) sum = -sum;
    return sum;
}

MPoly r_polynomial(const VectorList& Z, const BasisId& b, unsigned long seed) {
    validate_basis(Z, b);
    const Reorientation re = reorient(Z, b);
    return r_polynomial(Z, b, choose_generic_c(re.list, seed));
}

SpaceBasis bcyr_basis(const VectorList& X, const std::vector<BasisId>& bprime, unsigned long seed) {
    require_nonempty(bprime, "bcyr_basis");
    std::vector<MPoly> elements;
    for (const BasisId& b : bprime) {
        const Activities act = activity_sets(X, b);
        const Sublist z = restrict_list(X, complement(X.size(), act.external), b);
        elements.push_back(r_polynomial(z.list, z.basis, seed) * abs(basis_determinant(X, b)));
    }
    return make_space_basis(Side::T, X.dim(), std::move(elements), bprime);
}

Matrix gram_matrix(const SpaceBasis& p_basis, const SpaceBasis& d_basis) {
    if (p_basis.size() != d_basis.size()) throw DimensionError("gram_matrix: bases have different sizes");
    if (p_basis.side != Side::S || d_basis.side != Side::T)
        throw ContractViolation("gram_matrix: expected an S-side and a T-side basis");
    if (!p_basis.labels.empty() && !d_basis.labels.empty() && p_basis.labels != d_basis.labels)
        throw ContractViolation("gram_matrix: label lists differ");
    Matrix g(p_basis.size(), d_basis.size());
    for (std::size_t i = 0; i < p_basis.size(); ++i)
        for (std::size_t j = 0; j < d_basis.size(); ++j) g(i, j) = pair(p_basis.elements[i], d_basis.elements[j]);
    return g;
}

SpaceBasis dual_basis_oracle(const VectorList& X, const std::vector<BasisId>& bprime) {
    const SpaceBasis p = p_space_basis(X, bprime);
    const SpaceBasis d = d_space_basis(X, bprime);
    if (d.size() != p.size())
        throw ContractViolation("dual_basis_oracle: dim D = " + std::to_string(d.size()) + " differs from |B'| = " +
                                std::to_string(p.size()));
    const Matrix g = gram_matrix(p, SpaceBasis{Side::T, d.nvars, d.elements, {}, d.hilbert});
    const Matrix ginv = inverse(g);
    std::vector<MPoly> dual;
    for (std::size_t j = 0; j < p.size(); ++j) {
        MPoly f(Side::T, X.dim());
        for (std::size_t k = 0; k < d.size(); ++k)
            if (ginv(k, j) != 0) f += d.elements[k] * ginv(k, j);
        dual.push_back(std::move(f));
    }
    return make_space_basis(Side::T, X.dim(), std::move(dual), bprime);
}

bool local_piece_check(const VectorList& Z, const BasisId& b, unsigned long seed) {
    validate_basis(Z, b);
    const Reorientation re = reorient(Z, b);
    const GenericShift first = choose_generic_c(re.list, seed);
    const GenericShift second = choose_generic_c(re.list, first.seed + 1);
    MPoly expected = r_polynomial(Z, b, first);
    if (re.flipped % 2) expected = -expected;

    const std::size_t r = Z.dim();
    const Matrix flag = Z.columns(b.indices);
    const std::vector<BasisId> all = bases(re.list);
    std::vector<bool> pattern;
    for (const BasisId& c : all) pattern.push_back(tau_cone_test(flag, re.list.columns(c.indices)));

    auto in_cell = [&](const Vector& u) {
        for (std::size_t k = 0; k < all.size(); ++k) {
            const ConeStatus s = cone_contains(re.list.columns(all[k].indices), u);
            if (s == ConeStatus::boundary || (s == ConeStatus::inside) != pattern[k]) return false;
        }
        return true;
    };
    auto agrees = [&](const Vector& u) { return t_spline_eval(re.list, u, second) == expected.evaluate(u); };

    const unsigned degree = static_cast<unsigned>(Z.size() - r);
    int consecutive = 0;
    for (long k = 1; k <= 64; ++k) {
        Vector u(r);
        Rational scale(1);
        for (std::size_t i = r; i-- > 0;) {
            for (std::size_t j = 0; j < r; ++j) u[j] += scale * flag(j, i);
            scale *= k;
        }
        if (!in_cell(u)) {
            consecutive = 0;
            continue;
        }
        if (!agrees(u)) return false;
        if (++consecutive < 2) continue;

        // Polynomial identity on the cell: a (degree+1)^r grid is unisolvent.
        Rational h(1);
        for (int attempt = 0; attempt < 48; ++attempt, h /= 2) {
            std::vector<Vector> grid;
            std::vector<unsigned> idx(r, 0);
            while (true) {
                Vector p = u;
                for (std::size_t j = 0; j < r; ++j) p[j] += h * idx[j];
                grid.push_back(std::move(p));
                std::size_t j = 0;
                while (j < r && ++idx[j] > degree) idx[j++] = 0;
                if (j == r) break;
            }
            if (!std::all_of(grid.begin(), grid.end(), in_cell)) continue;
            return std::all_of(grid.begin(), grid.end(), agrees);
        }
        return false;
    }
    return false;
}

unsigned kappa(const VectorList& X, const std::vector<BasisId>& bprime, const IndexSet& flat) {
    unsigned best = 0;
    for (const BasisId& b : bprime) {
        IndexSet covered = b.indices;
        const Activities act = activity_sets(X, b);
        covered.insert(covered.end(), act.external.begin(), act.external.end());
        covered.insert(covered.end(), flat.begin(), flat.end());
        std::sort(covered.begin(), covered.end());
        best = std::max(best, static_cast<unsigned>(complement(X.size(), covered).size()));
    }
    return best;
}

PowerIdealSpec power_ideal_spec(const VectorList& X, const std::vector<BasisId>& bprime) {
    require_nonempty(bprime, "power_ideal_spec");
    for (const BasisId& b : bprime) validate_basis(X, b);
    const std::size_t r = X.dim();
    PowerIdealSpec spec;
    for (const Flat& f : flats(X)) {
        if (f.rank == r) continue;
        PowerIdealGenerator g;
        g.flat = f.elements;
        if (f.rank == 0) {
            for (std::size_t i = 0; i < r; ++i) {
                Vector e(r);
                e[i] = 1;
                g.annihilator.push_back(e);
            }
        } else {
            g.annihilator = nullspace_basis(Matrix::from_rows(X.select(f.elements), r));
        }
        g.exponent = kappa(X, bprime, f.elements) + 1;
        if (f.rank == 0) spec.cap = g.exponent - 1;
        spec.generators.push_back(std::move(g));
    }
    return spec;
}

namespace {

/// All products of `degree` vectors chosen with repetition from `basis`, T-side.
std::vector<MPoly> symmetric_power(const std::vector<Vector>& basis, unsigned degree, std::size_t nvars) {
    std::vector<MPoly> out;
    std::vector<std::size_t> pick(degree, 0);
    while (true) {
        std::vector<Vector> factors;
        for (std::size_t k : pick) factors.push_back(basis[k]);
        out.push_back(product_of_forms(factors, Side::T, nvars));
        std::size_t j = degree;
        while (j-- > 0 && pick[j] + 1 == basis.size()) {}
        if (j == static_cast<std::size_t>(-1)) break;
        ++pick[j];
        for (std::size_t k = j + 1; k < degree; ++k) pick[k] = pick[j];
        if (degree == 0) break;
    }
    return out;
}

}  // namespace

PowerIdealResult power_ideal_kernel(const VectorList& X, const std::vector<BasisId>& bprime) {
    PowerIdealResult result;
    result.spec = power_ideal_spec(X, bprime);
    std::vector<MPoly> generators;
    for (const PowerIdealGenerator& g : result.spec.generators)
        for (MPoly& p : symmetric_power(g.annihilator, g.exponent, X.dim())) generators.push_back(std::move(p));
    result.kernel = kernel_of_differential_ideal(generators, Side::T, X.dim(), result.spec.cap);
    const SpaceBasis p = p_space_basis(X, bprime);
    result.equal = same_span(result.kernel.elements, p.elements, Side::S, X.dim());
    return result;
}

HilbertCheck hilbert_tutte_check(const VectorList& X, const std::vector<BasisId>& bprime) {
    HilbertCheck check;
    check.p_space = p_space_basis(X, bprime).hilbert;
    check.d_space = d_space_basis(X, bprime).hilbert;
    HilbertVector t(X.size() + 1, 0);
    for (const BasisId& b : bprime) ++t[X.size() - X.dim() - activity_sets(X, b).external.size()];
    check.tutte = trimmed(std::move(t));
    check.holds = check.p_space == check.tutte && check.d_space == check.tutte;
    return check;
}

std::optional<std::size_t> delcon_element(const std::vector<BasisId>& bprime, std::size_t list_size) {
    for (std::size_t x = 0; x < list_size; ++x) {
        bool with = false, without = false;
        for (const BasisId& b : bprime) (b.contains(x) ? with : without) = true;
        if (with && without) return x;
    }
    return std::nullopt;
}

Minor deletion_minor(const VectorList& X, const std::vector<BasisId>& bprime, std::size_t x) {
    Minor m;
    m.list = deletion(X, x);
    for (const BasisId& b : bprime)
        if (!b.contains(x)) m.bases.push_back(shift_after_removal(b, x));
    return m;
}

Minor contraction_minor(const VectorList& X, const std::vector<BasisId>& bprime, std::size_t x) {
    Minor m;
    if (X.dim() > 1) m.list = contraction(X, x);
    for (const BasisId& b : bprime)
        if (b.contains(x)) m.bases.push_back(shift_after_removal(b, x));
    return m;
}

namespace {

HilbertVector p_hilbert(const Minor& m) {
    return m.list ? p_space_basis(*m.list, m.bases).hilbert : HilbertVector{1};
}

HilbertVector d_hilbert(const Minor& m) {
    return m.list ? d_space_basis(*m.list, m.bases).hilbert : HilbertVector{1};
}

HilbertVector shifted_sum(const HilbertVector& del, const HilbertVector& con) {
    HilbertVector out(std::max(del.size() + 1, con.size()), 0);
    for (std::size_t i = 0; i < del.size(); ++i) out[i + 1] += del[i];
    for (std::size_t i = 0; i < con.size(); ++i) out[i] += con[i];
    return trimmed(std::move(out));
}

}  // namespace

DelconCheck delcon_dimension_check(const VectorList& X, const std::vector<BasisId>& bprime, unsigned long seed) {
    require_nonempty(bprime, "delcon_dimension_check");
    const std::optional<std::size_t> x = delcon_element(bprime, X.size());
    if (!x) throw ContractViolation("delcon_dimension_check: no element splits B' (every element is in all or none)");
    DelconCheck check;
    check.element = *x;
    const Minor del = deletion_minor(X, bprime, *x);
    const Minor con = contraction_minor(X, bprime, *x);

    check.p_space = p_space_basis(X, bprime).hilbert;
    check.p_deletion = p_hilbert(del);
    check.p_contraction = p_hilbert(con);
    check.p_holds = check.p_space == shifted_sum(check.p_deletion, check.p_contraction);

    check.d_space = d_space_basis(X, bprime).hilbert;
    check.d_deletion = d_hilbert(del);
    check.d_contraction = d_hilbert(con);
    check.d_holds = check.d_space == shifted_sum(check.d_deletion, check.d_contraction);

    check.derivative_holds = true;
    for (const BasisId& b : bprime) {
        if (b.contains(*x)) continue;
        const Activities act = activity_sets(X, b);
        if (std::binary_search(act.external.begin(), act.external.end(), *x)) continue;
        const Sublist z = restrict_list(X, complement(X.size(), act.external), b);
        IndexSet shrunk_keep = act.external;
        shrunk_keep.insert(std::upper_bound(shrunk_keep.begin(), shrunk_keep.end(), *x), *x);
        const Sublist z2 = restrict_list(X, complement(X.size(), shrunk_keep), b);
        if (derive(r_polynomial(z.list, z.basis, seed), X[*x]) != r_polynomial(z2.list, z2.basis, seed)) {
            check.derivative_holds = false;
            break;
        }
    }
    return check;
}

}  // namespace zonotopal
