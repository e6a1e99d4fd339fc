#include "zonotopal/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace zonotopal {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field \"" + key + "\"");
    return j.at(key);
}

void require_array(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
}

std::size_t positive_index(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 1) throw ParseError(where + ": expected a 1-based index");
    return static_cast<std::size_t>(j.get<long long>() - 1);
}

IndexSet index_set_from_json(const Json& j, const std::string& where) {
    require_array(j, where);
    IndexSet s;
    for (std::size_t k = 0; k < j.size(); ++k) s.push_back(positive_index(j[k], where + "[" + std::to_string(k) + "]"));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ParseError(where + ": repeated index");
    return s;
}

Vector vector_from_json(const Json& j, std::size_t dim, const std::string& where) {
    require_array(j, where);
    if (j.size() != dim)
        throw ParseError(where + ": expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
    Vector v;
    for (std::size_t k = 0; k < j.size(); ++k) v.push_back(rational_from_json(j[k], where + "[" + std::to_string(k) + "]"));
    return v;
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(mpz_class(j.dump()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    throw ParseError(where + ": expected a rational as a string \"p/q\" or an integer");
}

VectorList vector_list_from_json(const Json& j) {
    const Json& rj = field(j, "r", "vectors file");
    if (!rj.is_number_integer() || rj.get<long long>() < 1) throw ParseError("vectors file: \"r\" must be a positive integer");
    const auto r = static_cast<std::size_t>(rj.get<long long>());
    const Json& vs = field(j, "vectors", "vectors file");
    require_array(vs, "vectors");
    std::vector<Vector> out;
    for (std::size_t k = 0; k < vs.size(); ++k) out.push_back(vector_from_json(vs[k], r, "vectors[" + std::to_string(k) + "]"));
    if (out.empty()) throw ParseError("vectors: list is empty");
    return VectorList(r, std::move(out));
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const Rational& q : v) out.push_back(to_json(q));
    return out;
}

Json to_json(const VectorList& X) {
    Json out;
    out["r"] = X.dim();
    out["vectors"] = Json::array();
    for (const Vector& v : X.vectors()) out["vectors"].push_back(to_json(v));
    return out;
}

std::vector<BasisId> bases_from_json(const Json& j) {
    const Json& list = j.is_object() ? field(j, "bases", "bases file") : j;
    require_array(list, "bases");
    std::vector<BasisId> out;
    for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string where = "bases[" + std::to_string(k) + "]";
        require_array(list[k], where);
        BasisId b;
        for (std::size_t m = 0; m < list[k].size(); ++m)
            b.indices.push_back(positive_index(list[k][m], where + "[" + std::to_string(m) + "]"));
        out.push_back(std::move(b));
    }
    return out;
}

Json indices_to_json(const IndexSet& s) {
    Json out = Json::array();
    for (std::size_t i : s) out.push_back(i + 1);
    return out;
}

Json to_json(const BasisId& b) { return indices_to_json(b.indices); }

Json to_json(const std::vector<BasisId>& bases) {
    Json out = Json::array();
    for (const BasisId& b : bases) out.push_back(to_json(b));
    return out;
}

std::vector<Vector> points_from_json(const Json& j, std::size_t dim) {
    const Json& p = j.is_object() ? field(j, "points", "points file") : j;
    require_array(p, "points");
    if (!p.empty() && p[0].is_array()) {
        std::vector<Vector> out;
        for (std::size_t k = 0; k < p.size(); ++k) out.push_back(vector_from_json(p[k], dim, "points[" + std::to_string(k) + "]"));
        return out;
    }
    return {vector_from_json(p, dim, "point")};
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

Json to_json(const HilbertVector& h) {
    Json out = Json::array();
    for (std::size_t d : h) out.push_back(d);
    return out;
}

FamilyArgs family_args_from_json(const Json& j, std::size_t dim) {
    FamilyArgs args;
    if (j.is_null()) return args;
    if (!j.is_object()) throw ParseError("family args: expected an object");
    if (j.contains("appended")) {
        const Json& a = j.at("appended");
        require_array(a, "appended");
        for (std::size_t k = 0; k < a.size(); ++k)
            args.appended.push_back(vector_from_json(a[k], dim, "appended[" + std::to_string(k) + "]"));
    }
    if (j.contains("J")) {
        const Json& a = j.at("J");
        require_array(a, "J");
        for (std::size_t k = 0; k < a.size(); ++k) args.upper_set.push_back(index_set_from_json(a[k], "J[" + std::to_string(k) + "]"));
    }
    if (j.contains("I0")) args.independent_set = index_set_from_json(j.at("I0"), "I0");
    if (j.contains("kappa")) {
        const Json& a = j.at("kappa");
        require_array(a, "kappa");
        for (std::size_t k = 0; k < a.size(); ++k) {
            const std::string where = "kappa[" + std::to_string(k) + "]";
            const Json& v = field(a[k], "value", where);
            if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError(where + ": value must be a nonnegative integer");
            args.kappa[index_set_from_json(field(a[k], "flat", where), where + ".flat")] = v.get<unsigned>();
        }
    }
    return args;
}

Json to_json(const SpaceBasis& basis) {
    Json out;
    out["side"] = basis.side == Side::S ? "S" : "T";
    out["nvars"] = basis.nvars;
    out["labels"] = to_json(basis.labels);
    out["polynomials"] = Json::array();
    for (const MPoly& p : basis.elements) out["polynomials"].push_back(to_string(p));
    out["hilbert"] = to_json(basis.hilbert);
    return out;
}

SpaceBasis space_basis_from_json(const Json& j) {
    const Json& side = field(j, "side", "space basis");
    if (!side.is_string() || (side != "S" && side != "T")) throw ParseError("space basis: side must be \"S\" or \"T\"");
    const Side s = side == "S" ? Side::S : Side::T;
    const Json& nv = field(j, "nvars", "space basis");
    if (!nv.is_number_integer() || nv.get<long long>() < 1) throw ParseError("space basis: nvars must be positive");
    const auto nvars = nv.get<std::size_t>();
    const Json& polys = field(j, "polynomials", "space basis");
    require_array(polys, "polynomials");
    std::vector<MPoly> elements;
    for (std::size_t k = 0; k < polys.size(); ++k) {
        if (!polys[k].is_string()) throw ParseError("polynomials[" + std::to_string(k) + "]: expected a string");
        elements.push_back(parse_mpoly(polys[k].get<std::string>(), s, nvars));
    }
    std::vector<BasisId> labels = j.contains("labels") ? bases_from_json(j.at("labels")) : std::vector<BasisId>{};
    if (!labels.empty() && labels.size() != elements.size()) throw ParseError("space basis: labels and polynomials differ in length");
    SpaceBasis out = make_space_basis(s, nvars, std::move(elements), std::move(labels));
    if (j.contains("hilbert")) {
        HilbertVector h;
        for (const Json& d : j.at("hilbert")) h.push_back(d.get<std::size_t>());
        if (h != out.hilbert) throw ParseError("space basis: stored Hilbert vector does not match the polynomials");
    }
    return out;
}

}  // namespace zonotopal
