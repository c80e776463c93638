#include "primpack/io.hpp"

#include <sstream>
#include <stdexcept>

namespace primpack {

nlohmann::ordered_json to_json(const HalfPointSet& X) {
    nlohmann::ordered_json j;
    j["d"] = X.dim();
    auto pts = nlohmann::ordered_json::array();
    for (const Point& x : X) pts.push_back(x);
    j["points"] = std::move(pts);
    return j;
}

HalfPointSet half_point_set_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("points"))
        throw std::invalid_argument("point set json must carry \"d\" and \"points\"");
    int d = j.at("d").get<int>();
    std::vector<Point> pts;
    for (const auto& row : j.at("points")) pts.push_back(row.get<Point>());
    return HalfPointSet::of(d, std::move(pts));
}

std::string polygon_svg(const std::vector<Point>& vertices, long long k) {
    if (vertices.empty()) throw std::invalid_argument("polygon_svg: no vertices");
    long long max_x = k, max_y = k;
    for (const Point& v : vertices) {
        max_x = std::max(max_x, v[0]);
        max_y = std::max(max_y, v[1]);
    }
    const int scale = 24, margin = 12;
    auto sx = [&](long long x) { return margin + x * scale; };
    auto sy = [&](long long y) { return margin + (max_y - y) * scale; };  // flip y

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << sx(max_x) + margin << "\" height=\"" << sy(0) + margin << "\">\n";
    if (k >= 0)
        out << "  <rect x=\"" << sx(0) << "\" y=\"" << sy(k) << "\" width=\"" << k * scale
            << "\" height=\"" << k * scale
            << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
    out << "  <polygon points=\"";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) out << ' ';
        out << sx(vertices[i][0]) << ',' << sy(vertices[i][1]);
    }
    out << "\" fill=\"#cfe3ff\" stroke=\"#2255aa\" stroke-width=\"2\"/>\n";
    for (const Point& v : vertices)
        out << "  <circle cx=\"" << sx(v[0]) << "\" cy=\"" << sy(v[1])
            << "\" r=\"3\" fill=\"#2255aa\"/>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace primpack
