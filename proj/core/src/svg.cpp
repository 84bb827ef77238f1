#include "flipbraid/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace flipbraid {

namespace {

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const Configuration& config, const Triangulation& triangulation, const SvgOptions& options) {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    for (const auto& p : config.points()) {
        const double x = p.position.x.to_double();
        const double y = p.position.y.to_double();
        if (first) {
            min_x = max_x = x;
            min_y = max_y = y;
            first = false;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    const double margin = 24.0;
    const double span_x = std::max(max_x - min_x, 1e-9);
    const double span_y = std::max(max_y - min_y, 1e-9);
    const double scale = (options.width - 2 * margin) / span_x;
    const double height = span_y * scale + 2 * margin + (options.caption.empty() ? 0 : 20);
    // y grows downwards in SVG
    const auto px = [&](const Point2& p) { return margin + (p.x.to_double() - min_x) * scale; };
    const auto py = [&](const Point2& p) { return margin + (max_y - p.y.to_double()) * scale; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\"" << fixed(height)
        << "\" viewBox=\"0 0 " << options.width << " " << fixed(height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& t : triangulation.triangles()) {
        out << "<polygon class=\"triangle\" data-triangle=\"" << t.a << " " << t.b << " " << t.c << "\" points=\"";
        for (int v : t.vertices()) {
            const Point2& p = config.position(v);
            out << fixed(px(p)) << "," << fixed(py(p)) << (v == t.c ? "" : " ");
        }
        out << "\" fill=\"#eef3fb\" stroke=\"#34495e\" stroke-width=\"1\"/>\n";
    }
    for (const auto& p : config.points()) {
        const bool fixed_point = config.is_boundary(p.index);
        out << "<circle cx=\"" << fixed(px(p.position)) << "\" cy=\"" << fixed(py(p.position)) << "\" r=\"3\" fill=\""
            << (fixed_point ? "#7f8c8d" : "#c0392b") << "\"/>\n";
        out << "<text x=\"" << fixed(px(p.position) + 5) << "\" y=\"" << fixed(py(p.position) - 5)
            << "\" font-family=\"monospace\" font-size=\"12\">" << p.index << "</text>\n";
    }
    if (!options.caption.empty())
        out << "<text x=\"" << fixed(margin) << "\" y=\"" << fixed(height - 8)
            << "\" font-family=\"monospace\" font-size=\"12\">" << escape(options.caption) << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace flipbraid
