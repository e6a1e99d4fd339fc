#include "zonotopal/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace zonotopal {

Side opposite(Side side) { return side == Side::S ? Side::T : Side::S; }

char variable_letter(Side side) { return side == Side::S ? 's' : 't'; }

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool grlex_greater(const Exponent& a, const Exponent& b) {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void fill_monomials(std::size_t var, unsigned remaining, Exponent& current, std::vector<Exponent>& out) {
    if (var + 1 == current.size()) {
        current[var] = remaining;
        out.push_back(current);
        return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
        current[var] = k;
        fill_monomials(var + 1, remaining - k, current, out);
    }
    current[var] = 0;
}

Rational exponent_factorial(const Exponent& e) {
    Rational f(1);
    for (unsigned k : e) f *= factorial(k);
    return f;
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned degree) {
    std::vector<Exponent> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    Exponent current(nvars, 0);
    fill_monomials(0, degree, current, out);
    return out;
}

// ---------------------------------------------------------------------------
// MPoly

MPoly MPoly::constant(Side side, std::size_t nvars, const Rational& c) {
    MPoly p(side, nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(Side side, std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw DimensionError("MPoly::variable: index out of range");
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(side, e);
}

MPoly MPoly::monomial(Side side, const Exponent& e, const Rational& c) {
    MPoly p(side, e.size());
    p.add_term(e, c);
    return p;
}

Rational MPoly::coefficient(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != nvars_) throw DimensionError("MPoly: exponent has wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int MPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

int MPoly::low_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.rbegin()->first));
}

bool MPoly::is_homogeneous() const { return degree() == low_degree(); }

MPoly MPoly::homogeneous_component(unsigned d) const {
    MPoly out(side_, nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) out.terms_.emplace(e, c);
    return out;
}

Rational MPoly::evaluate(const Vector& point) const {
    if (point.size() != nvars_) throw DimensionError("MPoly::evaluate: point has wrong dimension");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < nvars_; ++i) term *= power(point[i], e[i]);
        sum += term;
    }
    return sum;
}

MPoly MPoly::partial(std::size_t i) const {
    if (i >= nvars_) throw DimensionError("MPoly::partial: index out of range");
    MPoly out(side_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent d = e;
        --d[i];
        out.add_term(d, c * e[i]);
    }
    return out;
}

void MPoly::check_compatible(const MPoly& other, const char* what) const {
    if (side_ != other.side_) throw ContractViolation(std::string(what) + ": side mismatch");
    if (nvars_ != other.nvars_) throw DimensionError(std::string(what) + ": variable count mismatch");
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
    check_compatible(rhs, "MPoly +");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
    check_compatible(rhs, "MPoly -");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_compatible(b, "MPoly *");
    MPoly out(a.side_, a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e(a.nvars_);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

// ---------------------------------------------------------------------------
// text form

std::string to_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += variable_letter(p.side()) + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += to_string(mag) + "*" + mono;
    }
    return out;
}

namespace {

void parse_term(std::string_view term, bool negative, MPoly& into, std::string_view whole) {
    auto fail = [&](const std::string& why) {
        throw ParseError("polynomial \"" + std::string(whole) + "\": " + why);
    };
    const char letter = variable_letter(into.side());
    Rational coeff(negative ? -1 : 1);
    Exponent e(into.nvars(), 0);
    std::size_t pos = 0;
    bool any_factor = false;
    while (pos <= term.size()) {
        const std::size_t star = term.find('*', pos);
        const std::string_view factor = term.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
        if (factor.empty()) fail("empty factor");
        any_factor = true;
        if (factor.front() == letter) {
            const auto caret = factor.find('^');
            const std::string idx(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
            if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
                fail("bad variable \"" + std::string(factor) + "\"");
            const std::size_t var = std::stoul(idx);
            if (var == 0 || var > into.nvars()) fail("variable index out of range");
            unsigned k = 1;
            if (caret != std::string_view::npos) {
                const std::string ex(factor.substr(caret + 1));
                if (ex.empty() || !std::all_of(ex.begin(), ex.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
                    fail("bad exponent");
                k = static_cast<unsigned>(std::stoul(ex));
            }
            e[var - 1] += k;
        } else {
            coeff *= parse_rational(factor);
        }
        if (star == std::string_view::npos) break;
        pos = star + 1;
    }
    if (!any_factor) fail("empty term");
    into.add_term(e, coeff);
}

}  // namespace

MPoly parse_mpoly(std::string_view text, Side side, std::size_t nvars) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact.empty()) throw ParseError("empty polynomial");
    MPoly out(side, nvars);
    std::size_t pos = 0;
    bool negative = false;
    if (compact[0] == '-' || compact[0] == '+') {
        negative = compact[0] == '-';
        pos = 1;
    }
    while (pos < compact.size()) {
        std::size_t next = compact.find_first_of("+-", pos);
        const std::string_view term(compact.data() + pos, (next == std::string::npos ? compact.size() : next) - pos);
        if (term.empty()) throw ParseError("polynomial \"" + std::string(text) + "\": empty term");
        parse_term(term, negative, out, text);
        if (next == std::string::npos) break;
        negative = compact[next] == '-';
        pos = next + 1;
        if (pos == compact.size()) throw ParseError("polynomial \"" + std::string(text) + "\": trailing sign");
    }
    return out;
}

// ---------------------------------------------------------------------------
// forms, derivatives, pairing

MPoly linear_form(const Vector& x, Side side) {
    MPoly out(side, x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        Exponent e(x.size(), 0);
        e[i] = 1;
        out.add_term(e, x[i]);
    }
    return out;
}

MPoly product_of_forms(const std::vector<Vector>& vectors, Side side, std::size_t nvars) {
    MPoly out = MPoly::constant(side, nvars, 1);
    for (const Vector& x : vectors) {
        if (x.size() != nvars) throw DimensionError("product_of_forms: vector has wrong dimension");
        out = out * linear_form(x, side);
    }
    return out;
}

MPoly power(const MPoly& p, unsigned exponent) {
    MPoly out = MPoly::constant(p.side(), p.nvars(), 1);
    for (unsigned i = 0; i < exponent; ++i) out = out * p;
    return out;
}

MPoly derive(const MPoly& f, const Vector& x) {
    if (x.size() != f.nvars()) throw DimensionError("derive: direction has wrong dimension");
    MPoly out(f.side(), f.nvars());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) out += f.partial(i) * x[i];
    return out;
}

MPoly apply_operator(const MPoly& op, const MPoly& f) {
    if (op.side() == f.side()) throw ContractViolation("apply_operator: operator and target on the same side");
    if (op.nvars() != f.nvars()) throw DimensionError("apply_operator: variable count mismatch");
    MPoly out(f.side(), f.nvars());
    for (const auto& [a, ca] : op.terms())
        for (const auto& [b, cb] : f.terms()) {
            Exponent rest(b.size());
            Rational falling(1);
            bool divides = true;
            for (std::size_t i = 0; i < b.size() && divides; ++i) {
                if (a[i] > b[i]) {
                    divides = false;
                    break;
                }
                rest[i] = b[i] - a[i];
                for (unsigned k = 0; k < a[i]; ++k) falling *= b[i] - k;
            }
            if (divides) out.add_term(rest, ca * cb * falling);
        }
    return out;
}

namespace {

Rational pairing_formula(const MPoly& op, const MPoly& f) {
    if (op.nvars() != f.nvars()) throw DimensionError("pair: variable count mismatch");
    Rational sum(0);
    for (const auto& [e, c] : op.terms()) {
        const auto it = f.terms().find(e);
        if (it != f.terms().end()) sum += exponent_factorial(e) * c * it->second;
    }
    return sum;
}

}  // namespace

Rational pair(const MPoly& p, const MPoly& f) {
    if (p.side() != Side::S || f.side() != Side::T)
        throw ContractViolation("pair: expected an S-side operator and a T-side argument");
    return pairing_formula(p, f);
}

Rational pair_swapped(const MPoly& q, const MPoly& g) {
    if (q.side() != Side::T || g.side() != Side::S)
        throw ContractViolation("pair_swapped: expected a T-side operator and an S-side argument");
    return pairing_formula(q, g);
}

// ---------------------------------------------------------------------------
// spaces

std::string to_string(const HilbertVector& h) {
    std::string out = "(";
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(h[i]);
    }
    return out + ")";
}

HilbertVector hilbert_vector(const std::vector<MPoly>& elements) {
    HilbertVector h;
    for (const MPoly& p : elements) {
        if (p.is_zero() || !p.is_homogeneous())
            throw ContractViolation("hilbert_vector: element is not homogeneous: " + to_string(p));
        const auto d = static_cast<std::size_t>(p.degree());
        if (h.size() <= d) h.resize(d + 1, 0);
        ++h[d];
    }
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

HilbertVector hilbert_vector(const SpaceBasis& basis) { return hilbert_vector(basis.elements); }

SpaceBasis make_space_basis(Side side, std::size_t nvars, std::vector<MPoly> elements, std::vector<BasisId> labels) {
    SpaceBasis b;
    b.side = side;
    b.nvars = nvars;
    b.hilbert = hilbert_vector(elements);
    b.elements = std::move(elements);
    b.labels = std::move(labels);
    return b;
}

namespace {

/// Monomials appearing in polys, in printing order.
std::vector<Exponent> support(const std::vector<MPoly>& polys) {
    std::map<Exponent, int, GrlexDescending> all;
    for (const MPoly& p : polys)
        for (const auto& [e, c] : p.terms()) all.emplace(e, 0);
    std::vector<Exponent> out;
    out.reserve(all.size());
    for (const auto& [e, unused] : all) out.push_back(e);
    return out;
}

Matrix coefficient_matrix(const std::vector<MPoly>& polys, const std::vector<Exponent>& columns) {
    Matrix m(polys.size(), columns.size());
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = 0; j < columns.size(); ++j) m(i, j) = polys[i].coefficient(columns[j]);
    return m;
}

}  // namespace

std::vector<MPoly> echelon_basis(const std::vector<MPoly>& polys, Side side, std::size_t nvars) {
    for (const MPoly& p : polys)
        if (p.side() != side || p.nvars() != nvars) throw ContractViolation("echelon_basis: mixed polynomial rings");
    const std::vector<Exponent> columns = support(polys);
    std::vector<std::size_t> pivots;
    const Matrix r = rref(coefficient_matrix(polys, columns), &pivots);
    std::vector<MPoly> out;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        MPoly p(side, nvars);
        for (std::size_t j = 0; j < columns.size(); ++j) p.add_term(columns[j], r(i, j));
        out.push_back(std::move(p));
    }
    return out;
}

std::size_t span_dimension(const std::vector<MPoly>& polys, Side side, std::size_t nvars) {
    return echelon_basis(polys, side, nvars).size();
}

bool same_span(const std::vector<MPoly>& a, const std::vector<MPoly>& b, Side side, std::size_t nvars) {
    return echelon_basis(a, side, nvars) == echelon_basis(b, side, nvars);
}

bool in_span(const MPoly& f, const std::vector<MPoly>& polys) {
    std::vector<MPoly> extended = polys;
    extended.push_back(f);
    return span_dimension(extended, f.side(), f.nvars()) == span_dimension(polys, f.side(), f.nvars());
}

SpaceBasis kernel_of_differential_ideal(const std::vector<MPoly>& generators, Side generator_side,
                                        std::size_t nvars, unsigned max_degree) {
    for (const MPoly& g : generators) {
        if (g.side() != generator_side || g.nvars() != nvars)
            throw ContractViolation("kernel_of_differential_ideal: generator in the wrong ring");
        if (g.is_zero() || !g.is_homogeneous())
            throw ContractViolation("kernel_of_differential_ideal: generator is not a nonzero homogeneous polynomial: " +
                                    to_string(g));
    }
    const Side target = opposite(generator_side);
    std::vector<MPoly> elements;

    for (unsigned d = 0; d <= max_degree; ++d) {
        const std::vector<Exponent> unknowns = monomials_of_degree(nvars, d);
        std::map<Exponent, std::size_t, GrlexDescending> column_of;
        for (std::size_t j = 0; j < unknowns.size(); ++j) column_of.emplace(unknowns[j], j);

        // One equation per generator g and monomial gamma of degree d - deg g:
        // coefficient of t^gamma in g(d) f = sum_a g_a f_{a+gamma} (a+gamma)!/gamma!.
        std::vector<Vector> rows;
        for (const MPoly& g : generators) {
            const auto gd = static_cast<unsigned>(g.degree());
            if (gd > d) continue;
            for (const Exponent& gamma : monomials_of_degree(nvars, d - gd)) {
                Vector row(unknowns.size());
                for (const auto& [a, ca] : g.terms()) {
                    Exponent beta(nvars);
                    Rational weight(1);
                    for (std::size_t i = 0; i < nvars; ++i) {
                        beta[i] = a[i] + gamma[i];
                        for (unsigned k = 0; k < a[i]; ++k) weight *= beta[i] - k;
                    }
                    row[column_of.at(beta)] += ca * weight;
                }
                rows.push_back(std::move(row));
            }
        }

        std::vector<Vector> kernel;
        if (rows.empty()) {
            for (std::size_t j = 0; j < unknowns.size(); ++j) {
                Vector v(unknowns.size());
                v[j] = 1;
                kernel.push_back(std::move(v));
            }
        } else {
            kernel = nullspace_basis(Matrix::from_rows(rows, unknowns.size()));
        }
        if (kernel.empty()) continue;

        std::vector<std::size_t> pivots;
        const Matrix r = rref(Matrix::from_rows(kernel, unknowns.size()), &pivots);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            MPoly p(target, nvars);
            for (std::size_t j = 0; j < unknowns.size(); ++j) p.add_term(unknowns[j], r(i, j));
            elements.push_back(std::move(p));
        }
    }
    return make_space_basis(target, nvars, std::move(elements));
}

LeastSpace least_space(const std::vector<Vector>& points, unsigned max_degree) {
    if (points.empty()) throw ContractViolation("least_space: empty point set");
    const std::size_t nvars = points.front().size();
    for (const Vector& v : points)
        if (v.size() != nvars) throw DimensionError("least_space: points of different dimensions");

    // Columns: monomials by ascending degree, printing order within a degree.
    std::vector<Exponent> columns;
    std::vector<std::size_t> block_start;
    for (unsigned d = 0; d <= max_degree; ++d) {
        block_start.push_back(columns.size());
        for (Exponent& e : monomials_of_degree(nvars, d)) columns.push_back(std::move(e));
    }
    block_start.push_back(columns.size());

    // Row of the truncated exponential e^v: coefficient of t^a is v^a / a!.
    std::vector<Vector> rows;
    for (const Vector& v : points) {
        Vector row(columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            Rational c(1);
            for (std::size_t i = 0; i < nvars; ++i) c *= power(v[i], columns[j][i]);
            row[j] = c / exponent_factorial(columns[j]);
        }
        rows.push_back(std::move(row));
    }

    std::vector<MPoly> elements;
    for (unsigned d = 0; d <= max_degree && !rows.empty(); ++d) {
        std::vector<bool> pivoted(rows.size(), false);
        std::vector<std::size_t> pivot_rows;
        for (std::size_t col = block_start[d]; col < block_start[d + 1]; ++col) {
            std::size_t p = 0;
            while (p < rows.size() && (pivoted[p] || rows[p][col] == 0)) ++p;
            if (p == rows.size()) continue;
            pivoted[p] = true;
            pivot_rows.push_back(p);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (pivoted[i] || rows[i][col] == 0) continue;
                const Rational f = rows[i][col] / rows[p][col];
                for (std::size_t j = col; j < columns.size(); ++j) rows[i][j] -= f * rows[p][j];
            }
        }
        std::vector<MPoly> least;
        for (std::size_t p : pivot_rows) {
            MPoly f(Side::T, nvars);
            for (std::size_t j = block_start[d]; j < block_start[d + 1]; ++j) f.add_term(columns[j], rows[p][j]);
            least.push_back(std::move(f));
        }
        for (MPoly& f : echelon_basis(least, Side::T, nvars)) elements.push_back(std::move(f));

        std::vector<Vector> remaining;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!pivoted[i]) remaining.push_back(std::move(rows[i]));
        rows = std::move(remaining);
    }
    if (!rows.empty())
        throw ContractViolation("least_space: truncation degree " + std::to_string(max_degree) +
                                " too low for the given points (or points not distinct)");
    return {make_space_basis(Side::T, nvars, std::move(elements)), max_degree};
}

}  // namespace zonotopal
