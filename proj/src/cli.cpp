#include "coxring/cli.hpp"

#include "coxring/abgroup.hpp"
#include "coxring/blowup.hpp"
#include "coxring/collinear.hpp"
#include "coxring/groebner.hpp"
#include "coxring/toric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace coxring::cli {

using Json = nlohmann::ordered_json;

namespace {

/// Bad job description; reported with exit status 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two oracles disagreed; the report is still written.
struct Disagreement {
    Json report;
    std::string message;
};

struct Job {
    Json input;
    Field field;
    std::uint64_t seed = 1;
    std::optional<std::pair<int, int>> box;
};

const Json& require(const Json& doc, const std::string& key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw InputError("missing field '" + key + "'");
    }
    return doc.at(key);
}

Rational json_rational(const Json& v) {
    if (v.is_number_integer()) {
        return Rational(Integer(std::to_string(v.get<long long>())));
    }
    if (v.is_string()) {
        return parse_rational(v.get<std::string>());
    }
    throw InputError("expected an integer or a rational string, got " + v.dump());
}

std::string rational_text(const Rational& q) { return to_string(q); }

std::vector<int> int_list(const Json& v) {
    if (!v.is_array()) {
        throw InputError("expected an integer list, got " + v.dump());
    }
    std::vector<int> out;
    for (const Json& x : v) {
        if (!x.is_number_integer()) {
            throw InputError("expected an integer, got " + x.dump());
        }
        out.push_back(x.get<int>());
    }
    return out;
}

IntVector ll_list(const Json& v) {
    IntVector out;
    for (int x : int_list(v)) {
        out.push_back(x);
    }
    return out;
}

MultiDegree json_multidegree(const Json& v) {
    const std::vector<int> flat = int_list(v);
    if (flat.empty()) {
        throw InputError("multidegree needs at least the entry a");
    }
    return MultiDegree::from_flat(flat);
}

std::vector<MultiDegree> multidegrees(const Json& doc) {
    if (doc.contains("multidegrees")) {
        std::vector<MultiDegree> out;
        for (const Json& d : doc.at("multidegrees")) {
            out.push_back(json_multidegree(d));
        }
        return out;
    }
    return {json_multidegree(require(doc, "multidegree"))};
}

Json multidegree_json(const MultiDegree& d) { return Json(d.flat()); }

std::size_t json_size(const Json& doc, const std::string& key) {
    const Json& v = require(doc, key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw InputError("field '" + key + "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

void require_characteristic_zero(const Job& job, const std::string& command) {
    if (!job.field.is_rational()) {
        throw InputError(command + " uses derivative interpolation, which needs characteristic 0; over " +
                         job.field.name() + " use the Groebner path (gb, intersect) instead");
    }
}

BlowupModel json_blowup(const Job& job) {
    const std::size_t r = json_size(job.input, "r");
    std::vector<ProjectivePoint> points;
    if (job.input.contains("general_points")) {
        points = general_points(r, json_size(job.input, "general_points"), job.seed);
    } else if (job.input.contains("points")) {
        for (const Json& p : job.input.at("points")) {
            ProjectivePoint point;
            for (const Json& x : p) {
                point.push_back(json_rational(x));
            }
            points.push_back(point);
        }
    }
    return BlowupModel(r, points);
}

Json points_json(const BlowupModel& model) {
    Json out = Json::array();
    for (const ProjectivePoint& p : model.points()) {
        Json coords = Json::array();
        for (const Rational& x : p) {
            coords.push_back(rational_text(x));
        }
        out.push_back(coords);
    }
    return out;
}

CollinearConfig json_collinear(const Job& job) {
    const std::size_t r = json_size(job.input, "r");
    std::vector<MultiPoly> forms;
    for (const Json& f : require(job.input, "forms")) {
        forms.push_back(parse_poly(f.get<std::string>(), job.field, r + 1));
    }
    return CollinearConfig(r, forms);
}

std::vector<std::string> variable_names(const Json& doc) {
    if (doc.contains("variables")) {
        return doc.at("variables").get<std::vector<std::string>>();
    }
    return default_variable_names(json_size(doc, "nvars"));
}

TermOrder json_order(const Json& doc, std::size_t nvars) {
    const std::string name = doc.value("order", std::string("grevlex"));
    std::vector<int> weights;
    if (doc.contains("weights")) {
        weights = int_list(doc.at("weights"));
        if (weights.size() != nvars) {
            throw InputError("one weight per variable required");
        }
    }
    if (name == "grevlex") {
        return TermOrder::grevlex(weights);
    }
    if (name == "lex") {
        return TermOrder::lex();
    }
    throw InputError("unknown order '" + name + "' (expected grevlex or lex)");
}

std::vector<MultiPoly> json_polys(const Json& list, const Field& field, const std::vector<std::string>& names) {
    std::vector<MultiPoly> out;
    for (const Json& f : list) {
        out.push_back(parse_poly(f.get<std::string>(), field, names));
    }
    return out;
}

Json basis_json(const GroebnerBasis& g, const std::vector<std::string>& names) {
    Json out = Json::array();
    for (const MultiPoly& f : g.generators) {
        out.push_back(format_poly(f, names));
    }
    return out;
}

std::array<int, 3> curve_weights(const Json& doc) {
    const std::vector<int> w = int_list(require(doc, "weights"));
    if (w.size() != 3) {
        throw InputError("weights must be [a, b, c]");
    }
    return {w[0], w[1], w[2]};
}

Fan json_fan(const Json& doc) {
    std::vector<IntVector> rays;
    for (const Json& ray : require(doc, "rays")) {
        rays.push_back(ll_list(ray));
    }
    return Fan(json_size(doc, "d"), rays, require(doc, "max_cones").get<std::vector<std::vector<std::size_t>>>());
}

Json torsion_json(const std::vector<Integer>& torsion) {
    Json out = Json::array();
    for (const Integer& t : torsion) {
        out.push_back(t.fits_slong_p() ? Json(t.get_si()) : Json(t.get_str()));
    }
    return out;
}

// ---- commands ----------------------------------------------------------------------------

Json cmd_blowup_dim(const Job& job) {
    require_characteristic_zero(job, "blowup-dim");
    const BlowupModel model = json_blowup(job);
    Json results = Json::array();
    for (const MultiDegree& d : multidegrees(job.input)) {
        results.push_back({{"multidegree", multidegree_json(d)}, {"dim", piece_dim(model, d)}});
    }
    Json out;
    out["r"] = model.r();
    out["points"] = points_json(model);
    if (job.input.contains("multidegrees")) {
        out["results"] = results;
    } else {
        out["multidegree"] = results[0]["multidegree"];
        out["dim"] = results[0]["dim"];
    }
    return out;
}

Json cmd_blowup_basis(const Job& job) {
    require_characteristic_zero(job, "blowup-basis");
    const BlowupModel model = json_blowup(job);
    const auto names = default_variable_names(model.r() + 1);
    Json results = Json::array();
    for (const MultiDegree& d : multidegrees(job.input)) {
        const GradedPiece piece = piece_basis(model, d);
        Json basis = Json::array();
        for (const MultiPoly& f : piece.basis) {
            basis.push_back(format_poly(f, names));
        }
        results.push_back({{"multidegree", multidegree_json(d)}, {"dim", piece.dim()}, {"basis", basis}});
    }
    return {{"r", model.r()}, {"points", points_json(model)}, {"pieces", results}};
}

Json cmd_section_ring(const Job& job) {
    require_characteristic_zero(job, "section-ring");
    const BlowupModel model = json_blowup(job);
    const MultiDegree divisor = json_multidegree(require(job.input, "divisor"));
    const int n_max = static_cast<int>(json_size(job.input, "n_max"));
    return {{"divisor", multidegree_json(divisor)},
            {"n_max", n_max},
            {"dims", section_ring_dims(model, divisor, n_max)}};
}

Json cmd_collinear_dim(const Job& job) {
    const CollinearConfig cfg = json_collinear(job);
    Json results = Json::array();
    for (const MultiDegree& d : multidegrees(job.input)) {
        results.push_back({{"multidegree", multidegree_json(d)}, {"dim", collinear_dim(cfg, d)}});
    }
    if (!job.input.contains("multidegrees")) {
        return results[0];
    }
    return {{"results", results}};
}

Json cmd_verify_generators(const Job& job) {
    const CollinearConfig cfg = json_collinear(job);
    const bool reduced = job.input.value("reduced", false);
    std::pair<int, int> box{2, 1};
    if (job.box) {
        box = *job.box;
    } else if (job.input.contains("box")) {
        const std::vector<int> b = int_list(job.input.at("box"));
        if (b.size() != 2) {
            throw InputError("box must be [a_max, b_max]");
        }
        box = {b[0], b[1]};
    }
    if (box.first < 0 || box.second < 0) {
        throw InputError("box bounds must be non-negative");
    }
    const GeneratorReport report = verify_generators(cfg, box.first, box.second, reduced);
    Json generators = Json::array();
    for (const LaurentTerm& g : generator_set(cfg, reduced)) {
        generators.push_back(g.to_string());
    }
    Json checks = Json::array();
    for (const SpanCheck& c : report.checks) {
        checks.push_back({{"multidegree", multidegree_json(c.multidegree)},
                          {"spanned", c.spanned},
                          {"piece_dim", c.piece_dim},
                          {"span_dim", c.span_dim},
                          {"exponent_bound", c.exponent_bound}});
    }
    Json failures = Json::array();
    for (const MultiDegree& d : report.failures()) {
        failures.push_back(multidegree_json(d));
    }
    Json out;
    out["r"] = cfg.r();
    out["m"] = cfg.m();
    out["reduced"] = reduced;
    out["box"] = {box.first, box.second};
    out["generators"] = generators;
    out["all_spanned"] = report.all_spanned();
    if (report.all_spanned()) {
        out["note"] = "generator condition holds on the box; factoriality of the ring is not decided here";
    }
    out["failures"] = failures;
    out["checks"] = checks;
    return out;
}

Json cmd_toric_cl(const Job& job) {
    const ToricClassGroup cl = class_group(json_fan(job.input));
    return {{"rank", cl.free_rank()}, {"torsion", torsion_json(cl.torsion())}};
}

Json cmd_toric_cox_ring(const Job& job) {
    const CoxRingDescription desc = cox_ring_description(json_fan(job.input));
    Json variables = Json::array();
    for (const CoxVariable& v : desc.variables) {
        variables.push_back({{"name", v.name}, {"ray", v.ray}, {"degree", v.degree}});
    }
    return {{"rank", desc.free_rank},
            {"torsion", torsion_json(desc.torsion)},
            {"smooth", desc.smooth},
            {"complete", desc.complete},
            {"completeness_verified", desc.completeness_verified},
            {"variables", variables}};
}

Json cmd_toric_dim(const Job& job) {
    const Fan fan = json_fan(job.input);
    const ToricClassGroup cl(fan);
    std::vector<IntVector> divisors;
    if (job.input.contains("divisors")) {
        for (const Json& d : job.input.at("divisors")) {
            divisors.push_back(ll_list(d));
        }
    } else if (job.input.contains("divisor")) {
        divisors.push_back(ll_list(job.input.at("divisor")));
    }
    std::vector<IntVector> classes;
    if (job.input.contains("classes")) {
        for (const Json& c : job.input.at("classes")) {
            classes.push_back(ll_list(c));
        }
    }
    if (divisors.empty() && classes.empty()) {
        throw InputError("toric-dim needs 'divisor', 'divisors' or 'classes'");
    }
    Json results = Json::array();
    std::optional<std::string> mismatch;
    for (const IntVector& d : divisors) {
        const IntVector cls = cl.degree(d);
        const std::size_t by_polytope = piece_dim_polytope(fan, d);
        const std::size_t by_monomials = piece_dim_monomial(fan, cls);
        results.push_back({{"divisor", d},
                           {"class", cls},
                           {"polytope", by_polytope},
                           {"monomial", by_monomials},
                           {"dim", by_polytope}});
        if (by_polytope != by_monomials && !mismatch) {
            mismatch = "divisor " + Json(d).dump() + ": polytope " + std::to_string(by_polytope) + ", monomial " +
                       std::to_string(by_monomials);
        }
    }
    for (const IntVector& c : classes) {
        if (c.size() != cl.class_length()) {
            throw InputError("class vector has the wrong length");
        }
        const IntVector rep = cl.representative(c);
        const std::size_t by_polytope = piece_dim_polytope(fan, rep);
        const std::size_t by_monomials = piece_dim_monomial(fan, c);
        results.push_back({{"class", c},
                           {"representative", rep},
                           {"polytope", by_polytope},
                           {"monomial", by_monomials},
                           {"dim", by_monomials}});
        if (by_polytope != by_monomials && !mismatch) {
            mismatch = "class " + Json(c).dump() + ": polytope " + std::to_string(by_polytope) + ", monomial " +
                       std::to_string(by_monomials);
        }
    }
    Json out{{"results", results}};
    if (mismatch) {
        throw Disagreement{out, *mismatch};
    }
    return out;
}

IntVector json_class(const Json& v, const std::vector<std::string>& names) {
    if (v.is_string()) {
        return class_of(WeilDivisor::parse(v.get<std::string>()), names);
    }
    IntVector out = ll_list(v);
    if (out.size() != names.size()) {
        throw InputError("vector " + v.dump() + " has the wrong length");
    }
    return out;
}

Json cmd_classgroup_quotient(const Job& job) {
    const Json& gens = require(job.input, "generators");
    std::vector<std::string> names;
    if (gens.is_number_integer()) {
        names = default_variable_names(gens.get<std::size_t>(), "g");
    } else {
        names = gens.get<std::vector<std::string>>();
    }
    std::vector<IntVector> relations;
    for (const Json& rel : job.input.value("relations", Json::array())) {
        relations.push_back(json_class(rel, names));
    }
    const PresentedAbelianGroup group(names, relations);
    std::vector<IntVector> classes;
    for (const Json& c : job.input.value("quotient_by", Json::array())) {
        classes.push_back(json_class(c, names));
    }
    const GroupInvariants before = group.normal_form();
    const GroupInvariants after = group.quotient(classes).normal_form();
    return {{"group", {{"rank", before.free_rank}, {"torsion", torsion_json(before.torsion)}}},
            {"rank", after.free_rank},
            {"torsion", torsion_json(after.torsion)},
            {"generated_by_classes", after.is_trivial()}};
}

Json cmd_gb(const Job& job) {
    const auto names = variable_names(job.input);
    const TermOrder order = json_order(job.input, names.size());
    const std::vector<MultiPoly> gens = json_polys(require(job.input, "generators"), job.field, names);
    const GroebnerBasis g = buchberger(gens, order);
    return {{"field", job.field.name()},
            {"order", order.name()},
            {"variables", names},
            {"basis", basis_json(g, names)},
            {"certificate", verify_certificate(g, gens)}};
}

Json cmd_intersect(const Job& job) {
    const auto names = variable_names(job.input);
    const TermOrder order = json_order(job.input, names.size());
    const Json& ideals = require(job.input, "ideals");
    if (!ideals.is_array() || ideals.empty()) {
        throw InputError("'ideals' must be a non-empty list of generator lists");
    }
    std::optional<Ideal> acc;
    for (const Json& gens : ideals) {
        Ideal next(job.field, names.size(), json_polys(gens, job.field, names), order);
        acc = acc ? intersect(*acc, next) : next;
    }
    return {{"field", job.field.name()},
            {"order", order.name()},
            {"variables", names},
            {"basis", basis_json(acc->basis(), names)},
            {"certificate", verify_certificate(acc->basis())}};
}

Json cmd_symbolic_power(const Job& job) {
    const auto w = curve_weights(job.input);
    const int n = static_cast<int>(json_size(job.input, "n"));
    if (n < 1) {
        throw InputError("n must be at least 1");
    }
    const std::vector<std::string> names{"x", "y", "z"};
    const MonomialCurveIdeal p = monomial_curve_ideal(w[0], w[1], w[2], job.field);
    const Ideal symbolic = symbolic_power(p, n);
    const Ideal ordinary = ideal_power(p.ideal, static_cast<unsigned>(n));
    const int max_degree = job.input.value("max_degree", 0) > 0 ? job.input.value("max_degree", 0)
                                                                 : n * (w[0] + w[1] + w[2]) * 2;
    const std::optional<int> diff = first_hilbert_difference(symbolic, ordinary, max_degree);
    Json out;
    out["field"] = job.field.name();
    out["weights"] = w;
    out["n"] = n;
    out["prime"] = basis_json(p.ideal.basis(), names);
    out["symbolic_power"] = basis_json(symbolic.basis(), names);
    out["contains_ordinary_power"] = symbolic.contains(ordinary);
    out["equals_ordinary_power"] = symbolic == ordinary;
    out["first_hilbert_difference"] = diff ? Json(*diff) : Json(nullptr);
    return out;
}

Json cmd_rees_degrees(const Job& job) {
    const auto w = curve_weights(job.input);
    const int n_max = static_cast<int>(json_size(job.input, "n_max"));
    const MonomialCurveIdeal p = monomial_curve_ideal(w[0], w[1], w[2], job.field);
    Json levels = Json::array();
    for (const ReesLevel& level : rees_generation_degrees(p, n_max)) {
        levels.push_back({{"n", level.n},
                          {"new_generator", level.new_generator},
                          {"witness_degree", level.witness_degree ? Json(*level.witness_degree) : Json(nullptr)},
                          {"generator_count", level.generator_count}});
    }
    return {{"field", job.field.name()},
            {"weights", w},
            {"levels", levels},
            {"verdict", "evidence only: no finite-generation conclusion is drawn from bounded levels"}};
}

Json cmd_cross_check(const Job& job) {
    require_characteristic_zero(job, "cross-check");
    const bool collinear = job.input.contains("forms");
    std::optional<CollinearConfig> cfg;
    std::optional<BlowupModel> model;
    std::vector<Ideal> point_ideals;
    if (collinear) {
        cfg.emplace(json_collinear(job));
        model.emplace(cfg->blowup_model());
        point_ideals = cfg->point_ideals();
    } else {
        model.emplace(json_blowup(job));
        for (const ProjectivePoint& p : model->points()) {
            point_ideals.push_back(point_ideal(p, job.field));
        }
    }
    if (point_ideals.empty()) {
        throw InputError("cross-check needs at least one point");
    }
    Json results = Json::array();
    std::optional<std::string> mismatch;
    GroebnerTrace trace;
    for (const MultiDegree& d : multidegrees(job.input)) {
        if (d.b.size() != model->point_count()) {
            throw InputError("multidegree has the wrong number of point entries");
        }
        Json row;
        row["multidegree"] = multidegree_json(d);
        std::map<std::string, std::size_t> values;
        values["interpolation"] = piece_dim(*model, d);
        if (cfg) {
            values["closed_form"] = collinear_dim(*cfg, d);
        }
        values["groebner"] = hilbert_of_intersection(point_ideals, d.b, d.a, &trace);
        bool agree = true;
        for (const auto& [name, value] : values) {
            row[name] = value;
            agree = agree && value == values.begin()->second;
        }
        row["agree"] = agree;
        if (!agree && !mismatch) {
            mismatch = "oracles disagree at " + multidegree_json(d).dump() + ": " + row.dump();
        }
        results.push_back(row);
    }
    bool certified = true;
    for (const GroebnerBasis& g : trace.bases) {
        certified = certified && verify_certificate(g);
    }
    Json out;
    out["oracles"] = collinear ? Json{"interpolation", "closed_form", "groebner"} : Json{"interpolation", "groebner"};
    out["results"] = results;
    out["groebner_certificates"] = certified;
    out["agree"] = !mismatch.has_value();
    if (!certified && !mismatch) {
        mismatch = "a Groebner basis failed its certificate";
    }
    if (mismatch) {
        throw Disagreement{out, *mismatch};
    }
    return out;
}

using Handler = std::function<Json(const Job&)>;

const std::vector<std::pair<std::string, Handler>>& handlers() {
    static const std::vector<std::pair<std::string, Handler>> table{
        {"blowup-dim", cmd_blowup_dim},
        {"blowup-basis", cmd_blowup_basis},
        {"section-ring", cmd_section_ring},
        {"collinear-dim", cmd_collinear_dim},
        {"verify-generators", cmd_verify_generators},
        {"toric-cl", cmd_toric_cl},
        {"toric-cox-ring", cmd_toric_cox_ring},
        {"toric-dim", cmd_toric_dim},
        {"classgroup-quotient", cmd_classgroup_quotient},
        {"gb", cmd_gb},
        {"intersect", cmd_intersect},
        {"symbolic-power", cmd_symbolic_power},
        {"rees-degrees", cmd_rees_degrees},
        {"cross-check", cmd_cross_check},
    };
    return table;
}

Field parse_field_flag(const std::string& text) {
    // Bare "fp" picks the smallest prime.
    return text == "fp" ? Field::prime(2) : Field::parse(text);
}

void emit(const Json& doc, const std::string& output_path, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
        throw InputError("cannot open output file '" + output_path + "'");
    }
    file << text;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message,
                  std::optional<std::size_t> position = std::nullopt) {
    Json e{{"error", kind}, {"message", message}};
    if (position) {
        e["position"] = *position;
    }
    err << e.dump() << "\n";
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& entry : handlers()) {
            out.push_back(entry.first);
        }
        return out;
    }();
    return names;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact graded-piece, class-group and Groebner computations for Cox rings", "coxring"};
    std::string command, input_path, output_path, field_text = "q";
    std::vector<int> box;
    std::uint64_t seed = 1;
    app.add_option("command", command, "Subcommand to run")->required()->check(CLI::IsMember(commands()));
    app.add_option("--input", input_path, "JSON job file (default: standard input)");
    app.add_option("--output", output_path, "Write the JSON report here (default: standard output)");
    app.add_option("--field", field_text, "Coefficient field: q or fp:<p>");
    app.add_option("--box", box, "a_max b_max for verify-generators")->expected(2);
    app.add_option("--seed", seed, "Seed for general_points");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        for (const std::string& name : commands()) {
            out << "  " << name << "\n";
        }
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        report_error(err, "usage", e.what());
        return kInputError;
    }

    Job job;
    job.seed = seed;
    try {
        job.field = parse_field_flag(field_text);
        if (!box.empty()) {
            job.box = std::make_pair(box[0], box[1]);
        }
        std::string text;
        if (input_path.empty()) {
            std::ostringstream buffer;
            buffer << in.rdbuf();
            text = buffer.str();
        } else {
            std::ifstream file(input_path, std::ios::binary);
            if (!file) {
                throw InputError("cannot open input file '" + input_path + "'");
            }
            std::ostringstream buffer;
            buffer << file.rdbuf();
            text = buffer.str();
        }
        job.input = Json::parse(text);
        if (!job.input.is_object()) {
            throw InputError("job document must be a JSON object");
        }
    } catch (const Json::parse_error& e) {
        report_error(err, "malformed JSON", e.what(), e.byte);
        return kInputError;
    } catch (const std::exception& e) {
        report_error(err, "input", e.what());
        return kInputError;
    }

    const auto it = std::find_if(handlers().begin(), handlers().end(),
                                 [&](const auto& entry) { return entry.first == command; });
    try {
        emit(it->second(job), output_path, out);
        return kSuccess;
    } catch (const Disagreement& d) {
        emit(d.report, output_path, out);
        report_error(err, "disagreement", d.message);
        return kDisagreement;
    } catch (const ParseError& e) {
        report_error(err, "polynomial syntax", e.what(), e.position());
        return kInputError;
    } catch (const InputError& e) {
        report_error(err, "input", e.what());
        return kInputError;
    } catch (const Json::exception& e) {
        report_error(err, "schema", e.what());
        return kInputError;
    } catch (const std::invalid_argument& e) {
        report_error(err, "input", e.what());
        return kInputError;
    } catch (const std::domain_error& e) {
        report_error(err, "input", e.what());
        return kInputError;
    } catch (const std::out_of_range& e) {
        report_error(err, "input", e.what());
        return kInputError;
    } catch (const std::exception& e) {
        report_error(err, "internal", e.what());
        return kInternalError;
    }
}

}  // namespace coxring::cli
