#include "zonotopal/cli.hpp"

#include "zonotopal/io.hpp"
#include "zonotopal/spaces.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

namespace zonotopal::cli {

const std::vector<std::string>& verbs() {
    static const std::vector<std::string> all{
        "bases",     "tutte", "activities",   "flats",         "cocircuits",   "fem-check",
        "fem-family", "pspace", "dspace",     "bcyr",          "gram",         "power-ideal",
        "hilbert-check", "delcon-check", "spline-eval", "boxspline-eval", "least-space", "volume"};
    return all;
}

namespace {

class Job {
public:
    explicit Job(const JobSpec& spec) : spec_(spec) {}

    const VectorList& vectors() {
        if (!X_) {
            if (spec_.vectors_path.empty()) throw ContractViolation(spec_.command + ": missing -i <vectors.json>");
            X_ = vector_list_from_json(read_json_file(spec_.vectors_path));
        }
        return *X_;
    }

    /// -b if given, otherwise every basis of X.
    std::vector<BasisId> bprime() {
        if (spec_.bases_path.empty()) return bases(vectors());
        std::vector<BasisId> b = bases_from_json(read_json_file(spec_.bases_path));
        for (const BasisId& id : b) validate_basis(vectors(), id);
        if (b.empty()) throw ContractViolation("empty set of bases");
        return b;
    }

    std::vector<Vector> points(std::size_t dim) {
        if (spec_.points_path.empty()) throw ContractViolation(spec_.command + ": missing -p <points.json>");
        return points_from_json(read_json_file(spec_.points_path), dim);
    }

    Json family_args_json() {
        const std::string& a = spec_.family_args;
        if (a.empty()) return Json();
        const auto first = a.find_first_not_of(" \t\n");
        if (first != std::string::npos && a[first] == '{') {
            try {
                return Json::parse(a);
            } catch (const nlohmann::json::parse_error& e) {
                throw ParseError(std::string("--args: ") + e.what());
            }
        }
        return read_json_file(a);
    }

    const JobSpec& spec() const { return spec_; }

private:
    const JobSpec& spec_;
    std::optional<VectorList> X_;
};

Json activities_json(const VectorList& X, const BasisId& b) {
    const Activities act = activity_sets(X, b);
    Json j;
    j["basis"] = to_json(b);
    j["internal"] = indices_to_json(act.internal);
    j["external"] = indices_to_json(act.external);
    return j;
}

Json tutte_json(const TuttePolynomial& t) {
    Json j;
    j["tutte"] = to_string(t);
    j["coefficients"] = Json::array();
    for (const auto& [key, c] : t.coefficients()) j["coefficients"].push_back({{"x", key.first}, {"y", key.second}, {"c", c}});
    return j;
}

Json witness_json(const ExchangeViolation& w) {
    Json j;
    j["basis"] = to_json(w.basis);
    j["level"] = w.level + 1;
    j["element"] = w.element + 1;
    return j;
}

Json evaluate_points(Job& job, bool box) {
    const VectorList& X = job.vectors();
    const GenericShift shift = choose_generic_c(X, job.spec().seed);
    Json j;
    j["seed"] = shift.seed;
    j["shift"] = to_json(shift.c);
    j["values"] = Json::array();
    for (const Vector& u : job.points(X.dim())) {
        const Rational v = box ? box_spline_eval(X, u, shift) : t_spline_eval(X, u, shift);
        j["values"].push_back({{"point", to_json(u)}, {"value", to_json(v)}});
    }
    return j;
}

Json dispatch(Job& job) {
    const std::string& verb = job.spec().command;
    Json j;
    if (verb == "bases") {
        const auto b = bases(job.vectors());
        j["count"] = b.size();
        j["bases"] = to_json(b);
    } else if (verb == "tutte") {
        if (job.spec().bases_path.empty()) return tutte_json(tutte(job.vectors()));
        ForwardExchangeMatroid fem(job.vectors(), job.bprime());
        const ForwardExchangeResult r = fem.validate();
        if (!r.holds) throw ContractViolation("tutte: B' does not have the forward exchange property");
        return tutte_json(fem_tutte(fem));
    } else if (verb == "activities") {
        j["activities"] = Json::array();
        for (const BasisId& b : job.bprime()) j["activities"].push_back(activities_json(job.vectors(), b));
    } else if (verb == "flats") {
        j["flats"] = Json::array();
        for (const Flat& f : flats(job.vectors()))
            j["flats"].push_back({{"elements", indices_to_json(f.elements)}, {"rank", f.rank}, {"corank_one", f.corank_one}});
    } else if (verb == "cocircuits") {
        j["cocircuits"] = Json::array();
        for (const IndexSet& c : cocircuits(job.vectors(), job.bprime())) j["cocircuits"].push_back(indices_to_json(c));
    } else if (verb == "fem-check") {
        const auto b = job.bprime();
        const ForwardExchangeResult r = is_forward_exchange(job.vectors(), b);
        j["forward_exchange"] = r.holds;
        if (r.witness) j["witness"] = witness_json(*r.witness);
        j["placible"] = is_placible(job.vectors(), b);
    } else if (verb == "fem-family") {
        if (job.spec().family.empty()) throw ContractViolation("fem-family: missing --family <kind>");
        const FamilyKind kind = parse_family_kind(job.spec().family);
        const BasisFamily fam = standard_family(kind, job.vectors(), family_args_from_json(job.family_args_json(), job.vectors().dim()));
        j["family"] = to_string(kind);
        j["vectors"] = to_json(fam.X);
        j["bases"] = to_json(fam.bases);
        j["forward_exchange"] = is_forward_exchange(fam.X, fam.bases).holds;
        j["warnings"] = fam.warnings;
    } else if (verb == "pspace") {
        return to_json(p_space_basis(job.vectors(), job.bprime()));
    } else if (verb == "dspace") {
        return to_json(d_space_basis(job.vectors(), job.bprime(), job.spec().max_degree));
    } else if (verb == "bcyr") {
        return to_json(bcyr_basis(job.vectors(), job.bprime(), job.spec().seed));
    } else if (verb == "gram") {
        const auto b = job.bprime();
        const Matrix g = gram_matrix(p_space_basis(job.vectors(), b), bcyr_basis(job.vectors(), b, job.spec().seed));
        j["matrix"] = to_json(g);
        j["identity"] = g.is_identity();
    } else if (verb == "power-ideal") {
        const PowerIdealResult r = power_ideal_kernel(job.vectors(), job.bprime());
        j["generators"] = Json::array();
        for (const PowerIdealGenerator& g : r.spec.generators) {
            Json normals = Json::array();
            for (const Vector& v : g.annihilator) normals.push_back(to_json(v));
            j["generators"].push_back({{"flat", indices_to_json(g.flat)}, {"normals", normals}, {"exponent", g.exponent}});
        }
        j["cap"] = r.spec.cap;
        j["kernel"] = to_json(r.kernel);
        j["equal"] = r.equal;
    } else if (verb == "hilbert-check") {
        const HilbertCheck h = hilbert_tutte_check(job.vectors(), job.bprime());
        j["holds"] = h.holds;
        j["p_space"] = to_json(h.p_space);
        j["d_space"] = to_json(h.d_space);
        j["tutte"] = to_json(h.tutte);
    } else if (verb == "delcon-check") {
        const DelconCheck d = delcon_dimension_check(job.vectors(), job.bprime(), job.spec().seed);
        j["holds"] = d.holds();
        j["element"] = d.element + 1;
        j["p_space"] = to_json(d.p_space);
        j["p_deletion"] = to_json(d.p_deletion);
        j["p_contraction"] = to_json(d.p_contraction);
        j["d_space"] = to_json(d.d_space);
        j["d_deletion"] = to_json(d.d_deletion);
        j["d_contraction"] = to_json(d.d_contraction);
        j["derivative_identity"] = d.derivative_holds;
    } else if (verb == "spline-eval") {
        return evaluate_points(job, false);
    } else if (verb == "boxspline-eval") {
        return evaluate_points(job, true);
    } else if (verb == "least-space") {
        std::vector<Vector> pts;
        if (!job.spec().vectors_path.empty()) {
            pts = job.points(job.vectors().dim());
        } else {
            if (job.spec().points_path.empty()) throw ContractViolation("least-space: missing -p <points.json>");
            const Json pj = read_json_file(job.spec().points_path);
            const Json& first = pj.is_array() && !pj.empty() && pj[0].is_array() ? pj[0] : pj;
            pts = points_from_json(pj, first.is_array() ? first.size() : 0);
        }
        const unsigned bound = job.spec().max_degree.value_or(static_cast<unsigned>(pts.size()));
        const LeastSpace ls = least_space(pts, bound);
        j["basis"] = to_json(ls.basis);
        j["truncation_degree"] = ls.truncation_degree;
    } else if (verb == "volume") {
        j["volume"] = to_json(zonotope_volume(job.vectors()));
        j["bases"] = bases(job.vectors()).size();
    } else {
        throw ContractViolation("unknown command \"" + verb + "\"");
    }
    return j;
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool all_scalars(const Json& a) {
    return std::all_of(a.begin(), a.end(), [](const Json& e) { return e.is_primitive(); });
}

void render_text(const Json& j, std::ostream& out, const std::string& indent = "") {
    if (!j.is_object()) {
        out << indent << scalar_text(j) << '\n';
        return;
    }
    std::size_t width = 0;
    for (const auto& [key, value] : j.items()) width = std::max(width, key.size());
    for (const auto& [key, value] : j.items()) {
        out << indent << key << std::string(width - key.size() + 2, ' ');
        if (value.is_primitive()) {
            out << scalar_text(value) << '\n';
        } else if (value.is_array() && all_scalars(value)) {
            for (std::size_t k = 0; k < value.size(); ++k) out << (k ? " " : "") << scalar_text(value[k]);
            out << '\n';
        } else if (value.is_array() && std::all_of(value.begin(), value.end(), [](const Json& e) { return e.is_array() && all_scalars(e); })) {
            out << '\n';
            for (const Json& row : value) {
                out << indent << "  ";
                for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << scalar_text(row[k]);
                out << '\n';
            }
        } else if (value.is_object()) {
            out << '\n';
            render_text(value, out, indent + "  ");
        } else {
            out << '\n';
            for (const Json& e : value) {
                if (e.is_object()) {
                    render_text(e, out, indent + "  ");
                    out << '\n';
                } else {
                    out << indent << "  " << e.dump() << '\n';
                }
            }
        }
    }
}

}  // namespace

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        Job job(spec);
        const Json result = dispatch(job);
        if (spec.format == Format::json)
            out << result.dump(2) << '\n';
        else
            render_text(result, out);
        return 0;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zonotopal algebra toolkit: matroids, P/D-spaces, dual bases and splines over exact rationals"};
    JobSpec spec;
    std::string format = "json";
    unsigned max_degree = 0;
    app.add_option("command", spec.command, "Verb to run")->required()->check(CLI::IsMember(verbs()));
    app.add_option("-i,--input", spec.vectors_path, "Vector list JSON");
    app.add_option("-b,--bases", spec.bases_path, "Basis subset JSON (1-based index tuples)");
    app.add_option("-p,--points", spec.points_path, "Point or point list JSON");
    app.add_option("--family", spec.family, "Basis family kind");
    app.add_option("--args", spec.family_args, "Family arguments: inline JSON or a file");
    app.add_option("--seed", spec.seed, "Seed M for the generic shift c_x = M^i")->capture_default_str();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    auto* md = app.add_option("--max-degree", max_degree, "Degree bound override");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    spec.format = format == "text" ? Format::text : Format::json;
    if (md->count()) spec.max_degree = max_degree;
    return run(spec, out, err);
}

}  // namespace zonotopal::cli
