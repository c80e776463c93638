#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "primpack/construct.hpp"
#include "primpack/counting.hpp"
#include "primpack/io.hpp"
#include "primpack/numtheory.hpp"
#include "primpack/oracle.hpp"
#include "primpack/packing.hpp"
#include "primpack/zonotope.hpp"

using json = nlohmann::ordered_json;
using namespace primpack;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitResource = 4;

// Big integers that fit in 64 bits stay json numbers; anything larger is a
// decimal string so json parsers without big-int support keep working.
json json_int(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

json json_rational(const Rational& r) {
    return json{{"num", json_int(boost::multiprecision::numerator(r))},
                {"den", json_int(boost::multiprecision::denominator(r))}};
}

std::string rational_str(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

struct Output {
    std::string format = "text";

    void emit_json(const std::string& command, const json& parameters, const json& result) const {
        json envelope;
        envelope["command"] = command;
        envelope["parameters"] = parameters;
        envelope["result"] = result;
        std::cout << envelope.dump(2) << "\n";
    }
};

OracleLimits limits_from_env() {
    OracleLimits limits;
    if (const char* cap = std::getenv("PRIMPACK_STATE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(cap, &end, 10);
        if (end && *end == '\0' && v > 0) limits.state_cap = static_cast<std::size_t>(v);
    }
    return limits;
}

// ---- count -----------------------------------------------------------

int cmd_count(const Output& out, long long p, int d, const std::string& method) {
    std::vector<std::pair<std::string, long long>> values;
    if (method == "stirling" || method == "all" || method == "both")
        values.emplace_back("stirling", c_psi(p, d));
    if (method == "moebius" || method == "all" || method == "both")
        values.emplace_back("moebius", c_psi_moebius(p, d));
    if (method == "enumerate" || method == "all")
        values.emplace_back("enumerate", c_psi_enumerate(p, d));

    if (out.format == "json") {
        json result;
        for (const auto& [name, v] : values) result[name] = v;
        out.emit_json("count", {{"p", p}, {"d", d}, {"method", method}}, result);
    } else if (out.format == "csv") {
        std::cout << "method,value\n";
        for (const auto& [name, v] : values) std::cout << name << "," << v << "\n";
    } else {
        for (const auto& [name, v] : values)
            std::cout << "c_psi(" << p << "," << d << ") [" << name << "] = " << v << "\n";
    }
    return kExitOk;
}

// ---- ball ------------------------------------------------------------

int cmd_ball(const Output& out, int d, long long p, bool list) {
    BallStats stats = ball_stats(d, p);
    HalfPointSet pts;
    if (list) pts = enumerate_ball_half(d, p);

    if (out.format == "json") {
        json result{{"d", d}, {"p", p}, {"half_count", stats.half_count}, {"kappa", stats.kappa}};
        if (list) result["points"] = to_json(pts)["points"];
        out.emit_json("ball", {{"d", d}, {"p", p}, {"list", list}}, result);
    } else if (out.format == "csv") {
        std::cout << "d,p,half_count,kappa\n"
                  << d << "," << p << "," << stats.half_count << "," << stats.kappa << "\n";
    } else {
        std::cout << "|B(" << d << "," << p << ") ∩ half lattice| = " << stats.half_count
                  << "\nkappa = " << stats.kappa << "\n";
        if (list)
            for (const Point& x : pts) {
                std::cout << " ";
                for (Coord c : x) std::cout << " " << c;
                std::cout << "\n";
            }
    }
    return kExitOk;
}

// ---- delta -----------------------------------------------------------

int cmd_delta(const Output& out, int d, long long k, bool witness, bool certify) {
    PackingAnswer a = delta_z(d, k);
    ExtremalWitness w{};
    if (witness) w = construct_extremal(d, k);
    long long oracle_max = -1;
    BigInt optimum_count = 0;
    bool agrees = true;
    if (certify) {
        OracleResult r = solve_exact(d, k, limits_from_env());
        oracle_max = r.max_size;
        optimum_count = r.optimum_count;
        agrees = oracle_max == a.delta;
    }

    if (out.format == "json") {
        json result{{"d", d},
                    {"k", k},
                    {"p", a.p},
                    {"lambda", json_rational(a.lambda)},
                    {"exceptional", a.exceptional},
                    {"delta", a.delta}};
        if (witness) result["witness"] = to_json(w.set);
        if (certify)
            result["certified"] = json{{"oracle_max", oracle_max},
                                       {"optimum_count", json_int(optimum_count)},
                                       {"agrees", agrees}};
        out.emit_json("delta", {{"d", d}, {"k", k}, {"witness", witness}, {"certify", certify}},
                      result);
    } else if (out.format == "csv") {
        std::cout << "d,k,p,lambda,exceptional,delta\n"
                  << d << "," << k << "," << a.p << "," << rational_str(a.lambda) << ","
                  << (a.exceptional ? 1 : 0) << "," << a.delta << "\n";
    } else {
        std::cout << "delta_z(" << d << "," << k << ") = " << a.delta << "  [shell p=" << a.p
                  << ", lambda=" << rational_str(a.lambda)
                  << (a.exceptional ? ", exceptional" : "") << "]\n";
        if (witness) {
            std::cout << "witness (" << w.set.size() << " points, kappa=" << w.kappa_achieved
                      << "):\n";
            for (const Point& x : w.set) {
                std::cout << " ";
                for (Coord c : x) std::cout << " " << c;
                std::cout << "\n";
            }
        }
        if (certify)
            std::cout << "oracle max = " << oracle_max << " (" << optimum_count
                      << " optimal sets): " << (agrees ? "agrees" : "MISMATCH") << "\n";
    }
    return agrees ? kExitOk : kExitMismatch;
}

// ---- table1 ----------------------------------------------------------

int cmd_table1(const Output& out) {
    struct Entry {
        int d;
        long long k;
        long long delta;
        bool bold;
        bool star;
    };
    std::vector<Entry> entries;
    for (int d = 2; d <= 6; ++d)
        for (long long k = 2 * d; k <= 2 * d + 14; ++k) {
            PackingAnswer a = delta_z(d, k);
            entries.push_back({d, k, a.delta, is_unique_optimum(d, k), a.exceptional});
        }

    if (out.format == "json") {
        json rows = json::array();
        for (const auto& e : entries)
            rows.push_back(json{{"d", e.d}, {"k", e.k}, {"delta", e.delta},
                                {"bold", e.bold}, {"star", e.star}});
        out.emit_json("table1", json::object(), json{{"entries", rows}});
    } else if (out.format == "csv") {
        std::cout << "d,k,delta,bold,star\n";
        for (const auto& e : entries)
            std::cout << e.d << "," << e.k << "," << e.delta << "," << (e.bold ? 1 : 0) << ","
                      << (e.star ? 1 : 0) << "\n";
    } else {
        std::cout << "d \\ k-2d:";
        for (int i = 0; i <= 14; ++i) std::cout << "\t" << i;
        std::cout << "\n";
        for (int d = 2; d <= 6; ++d) {
            std::cout << d << ":";
            for (const auto& e : entries)
                if (e.d == d)
                    std::cout << "\t" << e.delta << (e.bold ? "b" : "") << (e.star ? "*" : "");
            std::cout << "\n";
        }
    }
    return kExitOk;
}

// ---- verify ----------------------------------------------------------

int cmd_verify(const Output& out, int d, long long kmax) {
    if (kmax < 1) throw std::invalid_argument("verify: kmax must be >= 1");
    OracleLimits limits = limits_from_env();
    std::vector<long long> skipped;
    json mismatches = json::array();
    long long checked = 0;
    for (long long k = 1; k <= kmax; ++k) {
        PackingAnswer a = delta_z(d, k);
        OracleResult r;
        try {
            r = solve_exact(d, k, limits);
        } catch (const resource_limit_error&) {
            skipped.push_back(k);
            continue;
        }
        ++checked;
        if (r.max_size != a.delta)
            mismatches.push_back(json{{"k", k}, {"kind", "delta"},
                                      {"formula", a.delta}, {"oracle", r.max_size}});
        const bool unique_formula = is_unique_optimum(d, k);
        if (unique_formula != (r.optimum_count == 1))
            mismatches.push_back(json{{"k", k}, {"kind", "uniqueness"},
                                      {"formula", unique_formula},
                                      {"oracle_count", json_int(r.optimum_count)}});
        const bool sandwich_formula = sandwich_exists(d, k);
        const long long sandwiched = max_sandwiched(d, k, limits);
        if (sandwich_formula != (sandwiched == r.max_size))
            mismatches.push_back(json{{"k", k}, {"kind", "sandwich"},
                                      {"formula", sandwich_formula},
                                      {"oracle_sandwiched", sandwiched},
                                      {"oracle_max", r.max_size}});
    }

    if (out.format == "json") {
        out.emit_json("verify", {{"d", d}, {"kmax", kmax}},
                      json{{"checked", checked},
                           {"skipped", skipped},
                           {"mismatches", mismatches}});
    } else if (out.format == "csv") {
        std::cout << "d,kmax,checked,skipped,mismatches\n"
                  << d << "," << kmax << "," << checked << "," << skipped.size() << ","
                  << mismatches.size() << "\n";
    } else {
        std::cout << "verified d=" << d << " for k=1.." << kmax << ": " << checked
                  << " instances, " << mismatches.size() << " mismatches";
        if (!skipped.empty()) {
            std::cout << ", skipped (cap):";
            for (long long k : skipped) std::cout << " " << k;
        }
        std::cout << "\n";
        for (const auto& m : mismatches) std::cout << "  mismatch: " << m.dump() << "\n";
    }
    return mismatches.empty() ? kExitOk : kExitMismatch;
}

// ---- exceptions ------------------------------------------------------

int cmd_exceptions(const Output& out, int d, long long upto) {
    auto values = exceptions_up_to(d, upto);
    if (out.format == "json") {
        out.emit_json("exceptions", {{"d", d}, {"upto", upto}}, json{{"values", values}});
    } else if (out.format == "csv") {
        std::cout << "k\n";
        for (long long v : values) std::cout << v << "\n";
    } else {
        std::cout << "exceptional k <= " << upto << " for d=" << d << ":";
        for (long long v : values) std::cout << " " << v;
        std::cout << "\n";
    }
    return kExitOk;
}

// ---- asymptotics -----------------------------------------------------

int cmd_asymptotics(const Output& out, const std::string& mode, int d, long long p,
                    const std::vector<int>& dims, long long upto) {
    if (mode == "cpsi") {
        double ratio = cpsi_ratio(d, p);
        if (out.format == "json") {
            out.emit_json("asymptotics", {{"mode", mode}, {"d", d}, {"p", p}},
                          json{{"ratio", ratio}});
        } else if (out.format == "csv") {
            std::cout << "d,p,ratio\n" << d << "," << p << "," << ratio << "\n";
        } else {
            std::cout << "c_psi(" << p << "," << d << ") * (d-1)! * zeta(d) / p^(d-1) = "
                      << ratio << "\n";
        }
        return kExitOk;
    }
    if (mode == "dimension") {
        auto rows = dimension_growth_report(p, dims);
        if (out.format == "json") {
            json jrows = json::array();
            for (const auto& r : rows)
                jrows.push_back(json{{"d", r.d},
                                     {"ball_ratio", json_rational(r.ball_ratio)},
                                     {"kappa_ratio", json_rational(r.kappa_ratio)},
                                     {"combined_ratio", json_rational(r.combined_ratio)}});
            out.emit_json("asymptotics", {{"mode", mode}, {"p", p}}, json{{"rows", jrows}});
        } else if (out.format == "csv") {
            std::cout << "d,ball_ratio,kappa_ratio,combined_ratio\n";
            for (const auto& r : rows)
                std::cout << r.d << "," << r.ball_ratio.convert_to<double>() << ","
                          << r.kappa_ratio.convert_to<double>() << ","
                          << r.combined_ratio.convert_to<double>() << "\n";
        } else {
            for (const auto& r : rows)
                std::cout << "d=" << r.d << "  ball=" << rational_str(r.ball_ratio)
                          << "  kappa=" << rational_str(r.kappa_ratio)
                          << "  combined=" << rational_str(r.combined_ratio) << "\n";
        }
        return kExitOk;
    }
    if (mode == "exceptions") {
        auto rep = exception_density_report(d, upto);
        if (out.format == "json") {
            out.emit_json("asymptotics", {{"mode", mode}, {"d", d}, {"upto", upto}},
                          json{{"count", rep.count}, {"normalized_ratio", rep.normalized_ratio}});
        } else if (out.format == "csv") {
            std::cout << "d,upto,count,normalized_ratio\n"
                      << d << "," << upto << "," << rep.count << "," << rep.normalized_ratio
                      << "\n";
        } else {
            std::cout << "|E ∩ [1," << upto << "]| = " << rep.count
                      << ", normalized ratio = " << rep.normalized_ratio << "\n";
        }
        return kExitOk;
    }
    throw std::invalid_argument("asymptotics: unknown mode " + mode);
}

// ---- zonotope --------------------------------------------------------

int cmd_zonotope(const Output& out, int d, long long k, const std::string& set_file,
                 const std::string& svg_file, bool want_vertices) {
    HalfPointSet X;
    if (!set_file.empty()) {
        std::ifstream in(set_file);
        if (!in) throw std::invalid_argument("zonotope: cannot open " + set_file);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument("zonotope: " + set_file + " is not valid json: " +
                                        e.what());
        }
        X = half_point_set_from_json(j);
        d = X.dim();
    } else {
        X = construct_extremal(d, k).set;
    }
    ZonotopeSummary s = zonotope_summary(X, k);
    std::vector<Point> vertices;
    const bool emit_vertices = (want_vertices || !svg_file.empty()) && d == 2;
    if (emit_vertices) vertices = polygon_vertices_2d(X);
    if (!svg_file.empty()) {
        if (d != 2) throw std::invalid_argument("zonotope: --svg needs dimension 2");
        std::ofstream outf(svg_file);
        if (!outf) throw std::invalid_argument("zonotope: cannot write " + svg_file);
        outf << polygon_svg(vertices, k);
    }

    if (out.format == "json") {
        json result{{"d", d},
                    {"k", k},
                    {"diameter", s.diameter},
                    {"box_widths", s.box_widths},
                    {"fits_in_cube", s.fits_in_cube},
                    {"translation", s.translation},
                    {"generators", to_json(s.generators)}};
        if (emit_vertices) {
            json verts = json::array();
            for (const Point& v : vertices) verts.push_back(v);
            result["vertices"] = verts;
        }
        if (!svg_file.empty()) result["svg"] = svg_file;
        out.emit_json("zonotope",
                      {{"d", d}, {"k", k}, {"set_file", set_file}, {"svg", svg_file}}, result);
    } else if (out.format == "csv") {
        std::cout << "d,k,diameter,fits_in_cube\n"
                  << d << "," << k << "," << s.diameter << "," << (s.fits_in_cube ? 1 : 0)
                  << "\n";
    } else {
        std::cout << "zonotope with " << s.diameter << " generators, diameter " << s.diameter
                  << ", widths";
        for (long long w : s.box_widths) std::cout << " " << w;
        std::cout << ", " << (s.fits_in_cube ? "fits" : "does not fit") << " in [0," << k << "]^"
                  << d << "\n";
        if (emit_vertices) {
            for (const Point& v : vertices)
                std::cout << "  (" << v[0] << "," << v[1] << ")\n";
        }
        if (!svg_file.empty()) std::cout << "svg written to " << svg_file << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact primitive point packing and lattice zonotope diameters"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    long long p = 0, k = 0, kmax = 0, upto = 0;
    int d = 0;
    std::string method = "both", mode = "cpsi", set_file, svg_file;
    std::vector<int> dims;
    bool list = false, witness = false, certify = false, want_vertices = false;

    auto* count = app.add_subcommand("count", "primitive orthant points of 1-norm p");
    count->add_option("--p", p)->required();
    count->add_option("--d", d)->required();
    count->add_option("--method", method, "default: both closed forms")
        ->check(CLI::IsMember({"stirling", "moebius", "enumerate", "all"}));

    auto* ball = app.add_subcommand("ball", "half-lattice ball cardinality and kappa");
    ball->add_option("--d", d)->required();
    ball->add_option("--p", p)->required();
    ball->add_flag("--list", list, "also print the points");

    auto* delta = app.add_subcommand("delta", "the packing maximum delta_z(d,k)");
    delta->add_option("--d", d)->required();
    delta->add_option("--k", k)->required();
    delta->add_flag("--witness", witness, "construct an achieving set");
    delta->add_flag("--certify", certify, "cross-check against the exact oracle");

    auto* table1 = app.add_subcommand("table1", "the 5x15 reference grid of delta_z values");

    auto* verify = app.add_subcommand("verify", "formula vs oracle over a k range");
    verify->add_option("--d", d)->required();
    verify->add_option("--kmax", kmax)->required();

    auto* exceptions = app.add_subcommand("exceptions", "exceptional k up to a bound");
    exceptions->add_option("--d", d)->required();
    exceptions->add_option("--upto", upto)->required();

    auto* asym = app.add_subcommand("asymptotics", "normalized growth ratios");
    asym->add_option("--mode", mode)->check(CLI::IsMember({"cpsi", "dimension", "exceptions"}));
    asym->add_option("--d", d);
    asym->add_option("--p", p);
    asym->add_option("--dims", dims)->delimiter(',');
    asym->add_option("--upto", upto);

    auto* zono = app.add_subcommand("zonotope", "diameter-maximal zonotope summary");
    zono->add_option("--d", d);
    zono->add_option("--k", k)->required();
    zono->add_option("--set-file", set_file, "json point set instead of the built witness");
    zono->add_option("--svg", svg_file, "write a 2-D figure");
    zono->add_flag("--vertices", want_vertices, "print the zonogon vertex cycle");

    for (auto* sub : {count, ball, delta, table1, verify, exceptions, asym, zono})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(out, p, d, method);
        if (ball->parsed()) return cmd_ball(out, d, p, list);
        if (delta->parsed()) return cmd_delta(out, d, k, witness, certify);
        if (table1->parsed()) return cmd_table1(out);
        if (verify->parsed()) return cmd_verify(out, d, kmax);
        if (exceptions->parsed()) return cmd_exceptions(out, d, upto);
        if (asym->parsed()) return cmd_asymptotics(out, mode, d, p, dims, upto);
        if (zono->parsed()) return cmd_zonotope(out, d, k, set_file, svg_file, want_vertices);
    } catch (const resource_limit_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
