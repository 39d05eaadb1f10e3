#include "minkgeo/cli.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "minkgeo/cosine.hpp"
#include "minkgeo/crofton2d.hpp"
#include "minkgeo/crofton3d.hpp"
#include "minkgeo/geodesics.hpp"
#include "minkgeo/htarea2d.hpp"
#include "minkgeo/jsonio.hpp"
#include "minkgeo/lines.hpp"
#include "minkgeo/norms.hpp"
#include "minkgeo/symplectic2d.hpp"

namespace minkgeo::cli {

namespace {

/// Ordered report emitted as JSON or CSV. Values are preformatted strings so
/// both formats are byte-stable.
class Report {
public:
    void add(const std::string& key, double v) { fields_.emplace_back(key, format_double_17(v)); }
    void add(const std::string& key, uint64_t v) { fields_.emplace_back(key, std::to_string(v)); }
    void add(const std::string& key, int v) { fields_.emplace_back(key, std::to_string(v)); }
    void add(const std::string& key, bool v) { fields_.emplace_back(key, v ? "true" : "false"); }
    void add_string(const std::string& key, const std::string& v) {
        fields_.emplace_back(key, "\"" + v + "\"");
        raw_.insert(fields_.size() - 1);
    }
    void add_array(const std::string& key, const std::vector<double>& v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += format_double_17(v[i]);
        }
        s += "]";
        fields_.emplace_back(key, s);
        arrays_.insert(fields_.size() - 1);
    }

    std::string to_json() const {
        std::string out = "{";
        for (size_t i = 0; i < fields_.size(); ++i) {
            if (i) out += ",";
            out += "\"" + fields_[i].first + "\":" + fields_[i].second;
        }
        out += "}\n";
        return out;
    }
    std::string to_csv() const {
        std::string out;
        for (size_t i = 0; i < fields_.size(); ++i) {
            std::string v = fields_[i].second;
            if (raw_.count(i)) v = v.substr(1, v.size() - 2);
            if (arrays_.count(i)) {
                v = v.substr(1, v.size() - 2);
                for (auto& ch : v)
                    if (ch == ',') ch = ';';
            }
            out += fields_[i].first + "," + v + "\n";
        }
        return out;
    }

private:
    std::vector<std::pair<std::string, std::string>> fields_;
    std::set<size_t> raw_;
    std::set<size_t> arrays_;
};

struct Args {
    std::map<std::string, std::string> kv;
    std::set<std::string> flags;

    bool has(const std::string& k) const { return kv.count(k) || flags.count(k); }
    std::string get(const std::string& k) const {
        auto it = kv.find(k);
        if (it == kv.end()) throw std::invalid_argument("missing required option --" + k);
        return it->second;
    }
    std::string get_or(const std::string& k, const std::string& dflt) const {
        auto it = kv.find(k);
        return it == kv.end() ? dflt : it->second;
    }
    double num(const std::string& k) const { return parse_num(k, get(k)); }
    double num_or(const std::string& k, double dflt) const {
        auto it = kv.find(k);
        return it == kv.end() ? dflt : parse_num(k, it->second);
    }
    uint64_t count_or(const std::string& k, uint64_t dflt) const {
        const double v = num_or(k, static_cast<double>(dflt));
        if (v < 0 || v != std::floor(v))
            throw std::invalid_argument("--" + k + " must be a nonnegative integer");
        return static_cast<uint64_t>(v);
    }
    static double parse_num(const std::string& k, const std::string& s) {
        try {
            size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument("junk");
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("option --" + k + " expects a number, got '" + s + "'");
        }
    }
};

Args parse_args(const std::vector<std::string>& argv, size_t start,
                const std::set<std::string>& known_kv, const std::set<std::string>& known_flags) {
    Args a;
    for (size_t i = start; i < argv.size(); ++i) {
        const std::string& tok = argv[i];
        if (tok.rfind("--", 0) != 0)
            throw std::invalid_argument("unexpected argument '" + tok + "'");
        const std::string name = tok.substr(2);
        if (known_flags.count(name)) {
            a.flags.insert(name);
        } else if (known_kv.count(name)) {
            if (i + 1 >= argv.size())
                throw std::invalid_argument("option --" + name + " needs a value");
            a.kv[name] = argv[++i];
        } else {
            throw std::invalid_argument("unknown option --" + name);
        }
    }
    return a;
}

uint64_t resolve_seed(const Args& a, bool* generated) {
    if (a.has("seed")) {
        *generated = false;
        return a.count_or("seed", 0);
    }
    *generated = true;
    std::random_device rd;
    return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

Vec2 parse_point2(const std::string& s) {
    std::stringstream ss(s);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
        throw std::invalid_argument("point must be x,y: " + s);
    return {Args::parse_num("point", a), Args::parse_num("point", b)};
}

std::string emit(const Report& rep, const Args& a) {
    const std::string fmt = a.get_or("format", "json");
    if (fmt == "json") return rep.to_json();
    if (fmt == "csv") return rep.to_csv();
    throw std::invalid_argument("--format must be json or csv");
}

int workers_of(const Args& a) {
    const uint64_t w = a.count_or("workers", 1);
    if (w < 1 || w > 256) throw std::invalid_argument("--workers must be in 1..256");
    return static_cast<int>(w);
}

std::string cmd_norm_check(const Args& a) {
    const int dim = static_cast<int>(a.count_or("dim", 2));
    if (dim != 2 && dim != 3) throw std::invalid_argument("--dim must be 2 or 3");
    const MinkowskiNorm norm = parse_norm_spec(a.get("norm"), dim);
    bool gen = false;
    const uint64_t seed = resolve_seed(a, &gen);
    const int n = static_cast<int>(a.count_or("n", 1000));
    const AxiomReport rep = norm.check_axioms(n, seed);

    Report out;
    out.add_string("command", "norm-check");
    out.add_string("norm", a.get("norm"));
    out.add("samples", rep.samples);
    out.add("seed", seed);
    out.add("max_positivity_violation", rep.max_positivity_violation);
    out.add("max_homogeneity_residual", rep.max_homogeneity_residual);
    out.add("max_euler_residual", rep.max_euler_residual);
    out.add("min_hessian_eigenvalue", rep.min_hessian_eigenvalue);
    out.add("max_hessian_violation", rep.max_hessian_violation);
    out.add("pass", rep.pass);
    return emit(out, a);
}

std::string cmd_crofton_density(const Args& a) {
    const std::string space = a.get_or("space", "s1");
    const std::string spec = a.get("norm");
    Report out;
    if (space == "s1") {
        const MinkowskiNorm norm = parse_norm_spec(spec, 2);
        const int order = static_cast<int>(a.count_or("order", 128));
        InversionReport rep;
        EvenFourierSeries g = invert_cosine_s1(
            [&](double th) { return norm.evaluate(Vec2{std::cos(th), std::sin(th)}); }, order,
            &rep);
        out.add_string("space", "S1");
        out.add("order", order);
        std::vector<double> coeffs{g.cos_coeffs()[0]};
        for (int k = 1; k <= order; ++k) {
            coeffs.push_back(g.cos_coeffs()[static_cast<size_t>(k)]);
            coeffs.push_back(g.sin_coeffs()[static_cast<size_t>(k)]);
        }
        out.add_array("coefficients", coeffs);
        out.add("roundtrip_residual", rep.roundtrip_sup_error);
        out.add("representation_residual", rep.representation_sup_error);
        out.add("tail_energy_fraction", rep.tail_energy_fraction);
        out.add("tail_warning", rep.tail_warning);
    } else if (space == "s2") {
        const MinkowskiNorm norm = parse_norm_spec(spec, 3);
        const int order = static_cast<int>(a.count_or("order", 16));
        InversionReport rep;
        EvenSphericalExpansion f =
            invert_cosine_s2([&](Vec3 u) { return norm.evaluate(u); }, order, &rep);
        out.add_string("space", "S2");
        out.add("order", order);
        out.add_array("coefficients", f.raw());
        out.add("roundtrip_residual", rep.roundtrip_sup_error);
        out.add("representation_residual", rep.representation_sup_error);
        out.add("tail_energy_fraction", rep.tail_energy_fraction);
        out.add("tail_warning", rep.tail_warning);
    } else {
        throw std::invalid_argument("--space must be s1 or s2");
    }
    return emit(out, a);
}

std::string cmd_length(const Args& a) {
    const MinkowskiNorm norm = parse_norm_spec(a.get("norm"), 2);
    const Polyline poly = Polyline::from_csv(a.get("input"));
    const int order = static_cast<int>(a.count_or("order", 128));
    const CroftonMeasure2D measure = CroftonMeasure2D::from_norm(norm, order);
    Report out;
    if (a.has("mc")) {
        bool gen = false;
        const uint64_t seed = resolve_seed(a, &gen);
        const uint64_t n = a.count_or("n", 1000000);
        const MCEstimate est = crofton_length_mc(measure, poly, n, seed, workers_of(a));
        out.add_string("method", "mc");
        out.add("value", est.value);
        out.add("stderr", est.std_error);
        out.add("n", est.n);
        out.add("seed", seed);
    } else {
        double total = 0.0;
        for (size_t i = 0; i + 1 < poly.vertices.size(); ++i) {
            const Vec2 d = poly.vertices[i + 1] - poly.vertices[i];
            if (d.x == 0.0 && d.y == 0.0) continue;
            total += crofton_length_segment(measure, poly.vertices[i], poly.vertices[i + 1]);
        }
        out.add_string("method", "exact");
        out.add("value", total);
    }
    return emit(out, a);
}

std::string cmd_symplectic_density(const Args& a) {
    const double p = a.num("p");
    const double theta = a.num("theta");
    const double density = psymp_density(p, theta);
    Report out;
    out.add("p", p);
    out.add("theta", theta);
    out.add("omega", std::pow(1.0 - std::pow(theta, p), 1.0 / p));
    out.add("density", density);
    return emit(out, a);
}

std::string cmd_ht_area(const Args& a) {
    const MinkowskiNorm norm = parse_norm_spec(a.get("norm"), 2);
    const Polygon2D region = Polygon2D::from_csv(a.get("polygon"));
    const int order = static_cast<int>(a.count_or("order", 128));
    const HTAreaMeasure measure = HTAreaMeasure::from_norm(norm, order);
    const double oracle = dual_ball_area(norm);
    const double leb = region.shoelace_area();

    Report out;
    out.add("kappa", measure.kappa());
    out.add("lebesgue", leb);
    out.add("ht_area", ht_area_exact(measure, region));
    out.add("oracle_dual_ball", oracle);
    out.add("rel_err", std::abs(measure.kappa() - oracle / M_PI) / (oracle / M_PI));
    if (a.has("mc")) {
        bool gen = false;
        const uint64_t seed = resolve_seed(a, &gen);
        const uint64_t n = a.count_or("n", 1000000);
        const MCEstimate est = ht_area_mc(measure, region, n, seed, workers_of(a));
        out.add("mc_value", est.value);
        out.add("mc_stderr", est.std_error);
        out.add("n", est.n);
        out.add("seed", seed);
    }
    return emit(out, a);
}

std::string cmd_surface3d(const Args& a) {
    const MinkowskiNorm norm = parse_norm_spec(a.get("norm"), 3);
    const TriMesh mesh = TriMesh::from_off(a.get("mesh"));
    bool gen = false;
    const uint64_t seed = resolve_seed(a, &gen);
    const uint64_t n = a.count_or("n", 1000000);
    const int order = static_cast<int>(a.count_or("order", 16));
    const MCEstimate est = surface_area_mc(norm, mesh, n, seed, workers_of(a), order);

    Report out;
    out.add("value", est.value);
    out.add("stderr", est.std_error);
    out.add("n", est.n);
    out.add("seed", seed);
    if (a.has("oracle")) {
        // planar meshes only: HT area of a flat patch in closed form
        const auto& t0 = mesh.triangles.at(0);
        const Vec3 p0 = mesh.vertices[static_cast<size_t>(t0[0])];
        const Vec3 nu = (mesh.vertices[static_cast<size_t>(t0[1])] - p0)
                            .cross(mesh.vertices[static_cast<size_t>(t0[2])] - p0)
                            .normalized();
        for (const auto& v : mesh.vertices)
            if (std::abs((v - p0).dot(nu)) > 1e-9)
                throw std::invalid_argument("--oracle needs a planar mesh");
        Vec3 seed_axis = std::abs(nu.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
        const Vec3 e1 = seed_axis.cross(nu).normalized();
        const Vec3 e2 = nu.cross(e1);
        const double dual = dual_ball_area(MinkowskiNorm::restricted(norm, e1, e2));
        const double oracle = mesh.total_area() * dual / M_PI;
        out.add("oracle", oracle);
        out.add("rel_err", std::abs(est.value - oracle) / oracle);
    }
    return emit(out, a);
}

std::string cmd_geodesic_check(const Args& a) {
    const int dim = static_cast<int>(a.count_or("dim", 2));
    const MinkowskiNorm norm = parse_norm_spec(a.get("norm"), dim);
    Report out;
    if (a.has("input")) {
        const ParamPath path = ParamPath::from_csv(a.get("input"));
        out.add("path_length", path_length(norm, path));
        return emit(out, a);
    }
    bool gen = false;
    const uint64_t seed = resolve_seed(a, &gen);
    const Vec2 from = parse_point2(a.get("from"));
    const Vec2 to = parse_point2(a.get("to"));
    const int n = static_cast<int>(a.count_or("n", 100));
    const ShortestPathReport rep =
        verify_shortest_path(norm, {&from.x, 2}, {&to.x, 2}, n, seed);
    const HessianIdentityReport hess = hessian_identity_check(norm, 100, seed);
    out.add("chord_length", rep.chord_length);
    out.add("trials", rep.trials);
    out.add("min_margin", rep.min_margin);
    out.add("pass", rep.pass);
    out.add("hessian_residual", hess.max_residual);
    out.add("hessian_pass", hess.pass);
    out.add("seed", seed);
    return emit(out, a);
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
    RunResult res;
    if (args.empty()) {
        res.exit_code = 2;
        res.error =
            "usage: minkgeo <norm-check|crofton-density|length|symplectic-density|ht-area|"
            "surface3d|geodesic-check> [options]\n";
        return res;
    }
    const std::string cmd = args[0];
    const std::set<std::string> kv{"norm", "input",  "polygon", "mesh",  "order", "n",
                                   "seed", "format", "dim",     "space", "p",     "theta",
                                   "from", "to",     "workers"};
    const std::set<std::string> flags{"mc", "oracle"};
    try {
        const Args a = parse_args(args, 1, kv, flags);
        if (cmd == "norm-check") res.output = cmd_norm_check(a);
        else if (cmd == "crofton-density") res.output = cmd_crofton_density(a);
        else if (cmd == "length") res.output = cmd_length(a);
        else if (cmd == "symplectic-density") res.output = cmd_symplectic_density(a);
        else if (cmd == "ht-area") res.output = cmd_ht_area(a);
        else if (cmd == "surface3d") res.output = cmd_surface3d(a);
        else if (cmd == "geodesic-check") res.output = cmd_geodesic_check(a);
        else {
            res.exit_code = 2;
            res.error = "unknown command '" + cmd + "'\n";
            return res;
        }
        res.exit_code = 0;
    } catch (const std::invalid_argument& e) {
        res.exit_code = 2;
        res.error = std::string("error: ") + e.what() + "\n";
    } catch (const std::domain_error& e) {
        res.exit_code = 2;
        res.error = std::string("error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        res.exit_code = 1;
        res.error = std::string("runtime error: ") + e.what() + "\n";
    }
    return res;
}

}  // namespace minkgeo::cli
