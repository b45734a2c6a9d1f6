// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when all pass.

#include "coxring/abgroup.hpp"
#include "coxring/blowup.hpp"
#include "coxring/cli.hpp"
#include "coxring/collinear.hpp"
#include "coxring/groebner.hpp"
#include "coxring/toric.hpp"

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace coxring;

namespace {

const Field Q = Field::rationals();

struct Verdict {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;  // 0 means untimed
    std::function<Verdict()> body;
};

// Bases produced along the way, keyed by the criterion that produced them.
std::map<int, GroebnerTrace> traces;

CollinearConfig collinear(std::size_t r, const std::vector<std::string>& forms) {
    std::vector<MultiPoly> polys;
    for (const auto& f : forms) {
        polys.push_back(parse_poly(f, Q, r + 1));
    }
    return CollinearConfig(r, polys);
}

std::vector<int> clamped(const std::vector<int>& b) {
    std::vector<int> out(b);
    for (int& x : out) {
        x = std::max(x, 0);
    }
    return out;
}

// Odometer over [lo, hi]^m.
std::vector<std::vector<int>> all_vectors(std::size_t m, int lo, int hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(m, lo);
    while (true) {
        out.push_back(v);
        std::size_t k = 0;
        while (k < m && v[k] == hi) {
            v[k] = lo;
            ++k;
        }
        if (k == m) {
            break;
        }
        ++v[k];
    }
    return out;
}

std::string describe(const MultiDegree& d) {
    std::ostringstream s;
    s << "(" << d.a << ";";
    for (int b : d.b) {
        s << " " << b;
    }
    s << ")";
    return s.str();
}

Verdict projection_formula() {
    std::ostringstream doc;
    doc << R"({"r": 2, "points": [["1", "0", "0"]], "multidegrees": [)";
    for (int n = 0; n <= 10; ++n) {
        doc << (n ? ", " : "") << "[" << n << ", 0]";
    }
    doc << "]}";
    std::istringstream in(doc.str());
    std::ostringstream out, err;
    const int status = cli::run({"blowup-dim"}, in, out, err);
    if (status != 0) {
        return {false, "blowup-dim exited with " + std::to_string(status) + ": " + err.str()};
    }
    const auto report = nlohmann::json::parse(out.str());
    int matched = 0;
    for (int n = 0; n <= 10; ++n) {
        const auto dim = report["results"][static_cast<std::size_t>(n)]["dim"].get<std::int64_t>();
        if (dim != binomial(n + 2, 2)) {
            return {false, "n=" + std::to_string(n) + " gave " + std::to_string(dim)};
        }
        ++matched;
    }
    return {true, std::to_string(matched) + "/11 dimensions equal C(n+2,2)"};
}

Verdict three_oracles() {
    const std::vector<std::vector<std::string>> form_sets{{"Z0"}, {"Z0", "Z1"}, {"Z0", "Z1", "Z0 + 2*Z1"}};
    GroebnerTrace& trace = traces[2];
    std::size_t instances = 0;
    for (const auto& forms : form_sets) {
        const CollinearConfig cfg = collinear(2, forms);
        const BlowupModel model = cfg.blowup_model();
        const std::vector<Ideal> points = cfg.point_ideals();
        std::map<std::vector<int>, FatPointScheme> schemes;
        for (const auto& b : all_vectors(cfg.m(), -3, 5)) {
            const auto key = clamped(b);
            auto it = schemes.find(key);
            if (it == schemes.end()) {
                it = schemes.emplace(key, FatPointScheme(points, key, &trace)).first;
            }
            for (int a = 0; a <= 5; ++a) {
                const MultiDegree d{a, b};
                const std::size_t kernel = piece_dim(model, d);
                const std::size_t closed = collinear_dim(cfg, d);
                const std::size_t hilbert = it->second.degree_dim(a);
                if (kernel != closed || closed != hilbert) {
                    return {false, "m=" + std::to_string(cfg.m()) + " " + describe(d) + ": kernel " +
                                       std::to_string(kernel) + ", closed form " + std::to_string(closed) +
                                       ", Hilbert " + std::to_string(hilbert)};
                }
                ++instances;
            }
        }
    }
    return {instances >= 500, std::to_string(instances) + " instances, all three oracles equal"};
}

struct BoxCase {
    std::size_t r;
    std::vector<std::string> forms;
};

const std::vector<BoxCase> kBoxCases{{2, {"Z0", "Z1"}}, {2, {"Z0", "Z1", "Z0 - Z1"}}, {3, {"Z0", "Z1"}}};

Verdict generator_verification() {
    std::size_t pieces = 0;
    for (const BoxCase& c : kBoxCases) {
        const CollinearConfig cfg = collinear(c.r, c.forms);
        for (bool reduced : {false, true}) {
            const GeneratorReport report = verify_generators(cfg, 4, 3, reduced);
            if (!report.all_spanned()) {
                return {false, "(r,m)=(" + std::to_string(c.r) + "," + std::to_string(cfg.m()) + ") " +
                                   (reduced ? "reduced" : "full") + " fails at " +
                                   describe(report.failures().front())};
            }
            pieces += report.checks.size();
        }
    }
    return {true, std::to_string(pieces) + " graded pieces spanned over 6 runs (no Groebner bases involved)"};
}

Verdict multiplicativity() {
    std::size_t pairs = 0, products = 0;
    for (const BoxCase& c : kBoxCases) {
        const CollinearConfig cfg = collinear(c.r, c.forms);
        const BlowupModel model = cfg.blowup_model();
        // A piece depends only on a and the clamped b; so does the strongest target a1+a2, c1+c2.
        std::vector<GradedPiece> bases;
        for (int a = 0; a <= 4; ++a) {
            for (const auto& cl : all_vectors(cfg.m(), 0, 3)) {
                GradedPiece piece = piece_basis(model, MultiDegree{a, cl});
                if (piece.dim() > 0) {
                    bases.push_back(std::move(piece));
                }
            }
        }
        std::map<MultiDegree, RatMatrix> targets;
        for (std::size_t i = 0; i < bases.size(); ++i) {
            for (std::size_t j = i; j < bases.size(); ++j) {
                const MultiDegree sum = bases[i].multidegree + bases[j].multidegree;
                auto it = targets.find(sum);
                if (it == targets.end()) {
                    it = targets.emplace(sum, *interpolation_matrix(model, sum)).first;
                }
                const auto monos = monomials_of_degree(c.r, sum.a);
                for (const MultiPoly& f : bases[i].basis) {
                    for (const MultiPoly& g : bases[j].basis) {
                        const auto v = coefficient_vector(f * g, monos);
                        for (const Rational& x : it->second * v) {
                            if (x != 0) {
                                return {false, "product of " + describe(bases[i].multidegree) + " and " +
                                                   describe(bases[j].multidegree) + " basis elements leaves " +
                                                   describe(sum)};
                            }
                        }
                        ++products;
                    }
                }
                ++pairs;
            }
        }
    }
    // Every pair in the box maps to one of these: f*g lying in the (a1+a2; c1+c2) piece puts it in
    // the sum-degree piece, since clamp(b1+b2) <= c1+c2 and pieces shrink as b grows.
    return {true, std::to_string(products) + " products over " + std::to_string(pairs) +
                      " clamped degree pairs, 0 violations"};
}

Verdict toric() {
    const std::vector<std::pair<std::string, Fan>> fans{
        {"P2", Fan::projective_plane()}, {"P1xP1", Fan::p1xp1()}, {"F1", Fan::hirzebruch1()}};
    const std::vector<std::size_t> ranks{1, 2, 2};
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> entry(-3, 5);
    std::ostringstream detail;
    for (std::size_t k = 0; k < fans.size(); ++k) {
        const auto& [name, fan] = fans[k];
        const ToricClassGroup cl = class_group(fan);
        if (cl.free_rank() != ranks[k] || !cl.torsion().empty()) {
            return {false, name + " class group has rank " + std::to_string(cl.free_rank())};
        }
        std::size_t agreed = 0;
        for (int trial = 0; trial < 60; ++trial) {
            ToricDivisor d(fan.ray_count());
            for (auto& x : d) {
                x = entry(rng);
            }
            const std::size_t by_monomials = piece_dim_monomial(fan, cl.degree(d));
            const std::size_t by_polytope = piece_dim_polytope(fan, d);
            if (by_monomials != by_polytope) {
                return {false, name + " divisor disagreement: " + std::to_string(by_monomials) + " vs " +
                                   std::to_string(by_polytope)};
            }
            ++agreed;
        }
        detail << name << ": Z^" << ranks[k] << ", " << agreed << " divisors; ";
    }
    return {true, detail.str()};
}

Verdict dictionary() {
    const Fan f1 = Fan::hirzebruch1();
    const ToricClassGroup cl(f1);
    const BlowupModel model(2, {{1, 0, 0}});
    std::size_t count = 0;
    for (int a = -5; a <= 5; ++a) {
        for (int b = -5; b <= 5; ++b) {
            // aA - bE is the toric divisor a*D3 - b*D1
            const ToricDivisor d{0, -b, 0, a};
            const std::size_t toric_dim = piece_dim_polytope(f1, d);
            const std::size_t monomial_dim = piece_dim_monomial(f1, cl.degree(d));
            const std::size_t blowup_dim = piece_dim(model, MultiDegree{a, {b}});
            if (toric_dim != blowup_dim || monomial_dim != blowup_dim) {
                return {false, describe(MultiDegree{a, {b}}) + ": toric " + std::to_string(toric_dim) +
                                   ", blow-up " + std::to_string(blowup_dim)};
            }
            ++count;
        }
    }
    return {true, std::to_string(count) + " classes, toric = blow-up"};
}

Verdict quotient_groups() {
    GroupInvariants z1;
    z1.free_rank = 1;
    GroupInvariants z1_z2 = z1;
    z1_z2.torsion = {2};

    const PresentedAbelianGroup cl({"A", "E"}, {});
    if (!(cl.quotient({{1, 0}}).normal_form() == z1)) {
        return {false, "Cl/<A> is not Z"};
    }
    if (!cl.quotient({{1, 0}, {0, 1}}).normal_form().is_trivial()) {
        return {false, "Cl/<A,E> is not trivial"};
    }
    // the same quotients starting from the toric presentation of F1 (A = D3, E = D1)
    const PresentedAbelianGroup toric = class_group(Fan::hirzebruch1()).group();
    if (!(toric.quotient({{0, 0, 0, 1}}).normal_form() == z1) ||
        !toric.quotient({{0, 0, 0, 1}, {0, 1, 0, 0}}).normal_form().is_trivial()) {
        return {false, "toric presentation quotients differ"};
    }
    if (!(PresentedAbelianGroup(2, {}).quotient({{2, 0}}).normal_form() == z1_z2)) {
        return {false, "Z^2/<(2,0)> is not Z + Z/2"};
    }
    return {true, "Cl/<A> = Z, Cl/<A,E> = 0, Z^2/<(2,0)> = Z + Z/2"};
}

Verdict symbolic_powers() {
    GroebnerTrace& trace = traces[8];
    const MonomialCurveIdeal p = monomial_curve_ideal(3, 4, 5, Q, &trace);
    std::vector<Ideal> symbolic;
    for (int n = 1; n <= 4; ++n) {
        symbolic.push_back(symbolic_power(p, n, &trace));
    }
    if (!(symbolic[0] == p.ideal)) {
        return {false, "p^(1) != p"};
    }
    const Ideal square = ideal_power(p.ideal, 2, &trace);
    if (!symbolic[1].contains(square)) {
        return {false, "p^(2) does not contain p^2"};
    }
    const auto degree = first_hilbert_difference(symbolic[1], square, 60);
    if (!degree) {
        return {false, "no graded-dimension difference between p^(2) and p^2 up to degree 60"};
    }
    const std::size_t h_sym = hilbert_function(symbolic[1], *degree);
    const std::size_t h_sq = hilbert_function(square, *degree);
    for (int i = 1; i <= 3; ++i) {
        for (int j = i; i + j <= 4; ++j) {
            const Ideal product = ideal_product(symbolic[static_cast<std::size_t>(i - 1)],
                                                symbolic[static_cast<std::size_t>(j - 1)], &trace);
            for (const MultiPoly& f : product.generators()) {
                if (!normal_form(f, symbolic[static_cast<std::size_t>(i + j - 1)].basis()).is_zero()) {
                    return {false, "p^(" + std::to_string(i) + ") p^(" + std::to_string(j) + ") not inside p^(" +
                                       std::to_string(i + j) + ")"};
                }
            }
        }
    }
    std::ostringstream s;
    s << "p^(2) != p^2 at weighted degree " << *degree << " (H = " << h_sym << " vs " << h_sq
      << "), products contained for i+j <= 4";
    return {h_sym != h_sq, s.str()};
}

Verdict certificates() {
    std::size_t checked = 0;
    std::ostringstream detail;
    for (const auto& [criterion, trace] : traces) {
        for (const GroebnerBasis& g : trace.bases) {
            if (!is_reduced(g) || !verify_certificate(g)) {
                return {false, "a basis from criterion " + std::to_string(criterion) + " fails its certificate"};
            }
            ++checked;
        }
        detail << "criterion " << criterion << ": " << trace.bases.size() << "; ";
    }
    detail << "criterion 3: 0 (linear algebra only)";
    return {checked > 0, std::to_string(checked) + " reduced bases certified (" + detail.str() + ")"};
}

struct Capture {
    int status;
    std::string out, err;
    bool operator==(const Capture&) const = default;
};

Verdict determinism() {
    const std::filesystem::path dir = COXRING_FIXTURE_DIR;
    const auto previous = std::filesystem::current_path();
    std::filesystem::current_path(dir);
    std::ifstream manifest(dir / "manifest.txt");
    std::string line;
    std::size_t fixtures = 0;
    Verdict verdict{true, ""};
    while (std::getline(manifest, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, '|');) {
            const auto b = f.find_first_not_of(' '), e = f.find_last_not_of(' ');
            fields.push_back(b == std::string::npos ? "" : f.substr(b, e - b + 1));
        }
        std::vector<std::string> args;
        std::istringstream words(fields.at(1));
        for (std::string w; words >> w;) {
            args.push_back(w);
        }
        auto once = [&] {
            std::istringstream in;
            std::ostringstream out, err;
            const int status = cli::run(args, in, out, err);
            return Capture{status, out.str(), err.str()};
        };
        const Capture first = once(), second = once();
        std::ifstream golden_file(dir / "expected" / (fields[0] + ".out"), std::ios::binary);
        std::stringstream golden;
        golden << golden_file.rdbuf();
        if (!(first == second) || first.status != std::stoi(fields.at(2)) || golden.str() != first.out) {
            verdict = {false, "fixture " + fields[0] + " is not reproducible"};
            break;
        }
        ++fixtures;
    }
    std::filesystem::current_path(previous);
    if (verdict.pass) {
        verdict.detail = std::to_string(fixtures) + " fixtures rerun byte-identical and match stored reports";
    }
    return verdict;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "projection-formula dimensions on Bl_pt P2", 1.0, projection_formula},
        {2, "three-oracle agreement on collinear points", 300.0, three_oracles},
        {3, "generator verification on the a<=4, |b|<=3 boxes", 600.0, generator_verification},
        {4, "ring multiplicativity on the same boxes", 0.0, multiplicativity},
        {5, "toric class groups and two dimension counts", 0.0, toric},
        {6, "F1 / Bl_pt P2 dictionary for |a|,|b| <= 5", 0.0, dictionary},
        {7, "class-group quotients", 0.0, quotient_groups},
        {8, "symbolic powers of p(3,4,5)", 120.0, symbolic_powers},
        {9, "Groebner certificates for criteria 2, 3, 8", 0.0, certificates},
        {10, "CLI fixture determinism", 0.0, determinism},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.body();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream timing;
        timing << std::fixed << std::setprecision(2) << seconds << " s";
        if (c.limit_seconds > 0) {
            timing << " / limit " << c.limit_seconds << " s";
            if (seconds > c.limit_seconds) {
                v.pass = false;
                v.detail += " (time limit exceeded)";
            }
        }
        failures += v.pass ? 0 : 1;
        std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.number << "  " << c.title
                  << "  [" << timing.str() << "]  " << v.detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
