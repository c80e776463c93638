#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "primpack/construct.hpp"
#include "primpack/counting.hpp"
#include "primpack/lattice.hpp"
#include "primpack/numtheory.hpp"
#include "primpack/oracle.hpp"
#include "primpack/packing.hpp"
#include "primpack/zonotope.hpp"

namespace py = pybind11;
using namespace primpack;

namespace {

py::object big_to_py(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

py::object rational_to_py(const Rational& r) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(big_to_py(boost::multiprecision::numerator(r)),
                    big_to_py(boost::multiprecision::denominator(r)));
}

py::list points_to_py(const HalfPointSet& X) {
    py::list out;
    for (const Point& x : X) out.append(py::cast(x));
    return out;
}

HalfPointSet set_from_py(int d, const std::vector<Point>& points) {
    return HalfPointSet::of(d, points);
}

py::dict ball_stats_py(int d, long long p) {
    BallStats s = ball_stats(d, p);
    return py::dict(py::arg("d") = s.d, py::arg("p") = s.p,
                    py::arg("half_count") = s.half_count, py::arg("kappa") = s.kappa);
}

py::dict delta_py(int d, long long k) {
    PackingAnswer a = delta_z(d, k);
    return py::dict(py::arg("d") = a.d, py::arg("k") = a.k, py::arg("p") = a.p,
                    py::arg("lam") = rational_to_py(a.lambda),
                    py::arg("exceptional") = a.exceptional, py::arg("delta") = a.delta);
}

py::dict witness_py(int d, long long k) {
    ExtremalWitness w = construct_extremal(d, k);
    return py::dict(py::arg("d") = w.d, py::arg("k") = w.k,
                    py::arg("delta") = w.claimed_delta, py::arg("kappa") = w.kappa_achieved,
                    py::arg("points") = points_to_py(w.set));
}

py::dict solve_py(int d, long long k, std::size_t state_cap, std::size_t candidate_cap) {
    OracleLimits limits;
    limits.state_cap = state_cap;
    limits.candidate_cap = candidate_cap;
    OracleResult r = solve_exact(d, k, limits);
    return py::dict(py::arg("max_size") = r.max_size,
                    py::arg("optimum_count") = big_to_py(r.optimum_count),
                    py::arg("witness") = points_to_py(r.witness));
}

py::dict zonotope_py(int d, const std::vector<Point>& points, long long k) {
    ZonotopeSummary s = zonotope_summary(HalfPointSet::of(d, points), k);
    return py::dict(py::arg("diameter") = s.diameter, py::arg("box_widths") = s.box_widths,
                    py::arg("fits_in_cube") = s.fits_in_cube,
                    py::arg("translation") = s.translation);
}

py::list replacement_py(const Point& z) {
    ReplacementFamily fam = replacement_family(z);
    py::list blocks;
    for (const auto& block : fam.blocks) blocks.append(points_to_py(block));
    return blocks;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact primitive point packing: counts, delta_z, witnesses, oracle";

    py::register_exception<resource_limit_error>(m, "ResourceLimitError");

    // number theory
    m.def("moebius", &moebius, py::arg("n"));
    m.def("jordan_totient", &jordan_totient, py::arg("q"), py::arg("p"));
    m.def("stirling_first",
          [](int d, int i) { return big_to_py(stirling_first(d, i)); },
          py::arg("d"), py::arg("i"));
    m.def("binomial",
          [](long long n, long long k) { return big_to_py(binomial(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("factorize",
          [](long long n) {
              std::vector<std::pair<long long, int>> out;
              for (const auto& f : factorize(n)) out.emplace_back(f.prime, f.exponent);
              return out;
          },
          py::arg("n"));
    m.def("zeta_approx", &zeta_approx, py::arg("d"), py::arg("tol"));

    // lattice
    m.def("norm1", &norm1, py::arg("x"));
    m.def("is_primitive", &is_primitive, py::arg("x"));
    m.def("in_half_set", &in_half_set, py::arg("x"));
    m.def("tau", &tau, py::arg("x"));
    m.def("orbit", [](const Point& x) { return points_to_py(orbit(x)); }, py::arg("x"));
    m.def("enumerate_shell_half",
          [](int d, long long p) { return points_to_py(enumerate_shell_half(d, p)); },
          py::arg("d"), py::arg("p"));
    m.def("enumerate_ball_half",
          [](int d, long long p) { return points_to_py(enumerate_ball_half(d, p)); },
          py::arg("d"), py::arg("p"));
    m.def("kappa",
          [](int d, const std::vector<Point>& pts) { return kappa(set_from_py(d, pts)); },
          py::arg("d"), py::arg("points"));

    // counting
    m.def("c_psi", &c_psi, py::arg("p"), py::arg("d"));
    m.def("c_psi_moebius", &c_psi_moebius, py::arg("p"), py::arg("d"));
    m.def("c_psi_enumerate", &c_psi_enumerate, py::arg("p"), py::arg("d"));
    m.def("shell_half_count", &shell_half_count, py::arg("d"), py::arg("p"));
    m.def("ball_stats", &ball_stats_py, py::arg("d"), py::arg("p"));
    m.def("cpsi_ratio", &cpsi_ratio, py::arg("d"), py::arg("p"), py::arg("zeta_tol") = 1e-9);
    m.def("dimension_growth_report",
          [](long long p, const std::vector<int>& dims) {
              py::list rows;
              for (const auto& r : dimension_growth_report(p, dims))
                  rows.append(py::dict(py::arg("d") = r.d,
                                       py::arg("ball_ratio") = rational_to_py(r.ball_ratio),
                                       py::arg("kappa_ratio") = rational_to_py(r.kappa_ratio),
                                       py::arg("combined_ratio") =
                                           rational_to_py(r.combined_ratio)));
              return rows;
          },
          py::arg("p"), py::arg("dims"));

    // packing
    m.def("locate_shell", &locate_shell, py::arg("d"), py::arg("k"));
    m.def("lambda_value",
          [](int d, long long k) { return rational_to_py(lambda_value(d, k)); },
          py::arg("d"), py::arg("k"));
    m.def("is_exceptional", &is_exceptional, py::arg("d"), py::arg("k"));
    m.def("delta_z", &delta_py, py::arg("d"), py::arg("k"));
    m.def("exceptions_up_to", &exceptions_up_to, py::arg("d"), py::arg("upto"));
    m.def("exception_density_report",
          [](int d, long long upto) {
              auto rep = exception_density_report(d, upto);
              return py::make_tuple(rep.count, rep.normalized_ratio);
          },
          py::arg("d"), py::arg("upto"));

    // constructions
    m.def("staircase_point", &staircase_point, py::arg("d"), py::arg("p"));
    m.def("s_chain",
          [](int d, long long p, int j) { return points_to_py(s_chain(d, p, j)); },
          py::arg("d"), py::arg("p"), py::arg("j"));
    m.def("construct_extremal", &witness_py, py::arg("d"), py::arg("k"));
    m.def("sandwich_holds",
          [](int d, const std::vector<Point>& pts, long long k) {
              return sandwich_holds(set_from_py(d, pts), d, k);
          },
          py::arg("d"), py::arg("points"), py::arg("k"));
    m.def("sandwich_exists", &sandwich_exists, py::arg("d"), py::arg("k"));
    m.def("is_unique_optimum", &is_unique_optimum, py::arg("d"), py::arg("k"));
    m.def("replacement_family", &replacement_py, py::arg("z"));

    // oracle
    m.def("candidate_points",
          [](int d, long long k) { return points_to_py(candidate_points(d, k)); },
          py::arg("d"), py::arg("k"));
    m.def("solve_exact", &solve_py, py::arg("d"), py::arg("k"),
          py::arg("state_cap") = OracleLimits{}.state_cap,
          py::arg("candidate_cap") = OracleLimits{}.candidate_cap);
    m.def("max_sandwiched",
          [](int d, long long k) { return max_sandwiched(d, k); },
          py::arg("d"), py::arg("k"));

    // zonotope
    m.def("zonotope_summary", &zonotope_py, py::arg("d"), py::arg("points"), py::arg("k"));
    m.def("polygon_vertices_2d",
          [](const std::vector<Point>& pts) {
              return polygon_vertices_2d(HalfPointSet::of(2, pts));
          },
          py::arg("points"));
}
