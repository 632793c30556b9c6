#pragma once

#include <sstream>
#include <variant>
#include <vector>

#include "bm2d/polygon.hpp"

namespace bm2d {

// Deterministic SVG emission: fixed canvas, 6-decimal coordinates, elements
// in input order, so figures can be golden-file tested byte for byte.

struct SvgSegment {
    PointD a, b;
};

struct SvgLabel {
    PointD at;
    std::string text;
};

struct SvgItem {
    std::variant<PolygonD, PointD, SvgSegment, SvgLabel> shape;
    std::string style;  // SVG presentation attributes
};

namespace detail {

inline std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s = buf;
    if (s == "-0.000000") s = "0.000000";
    return s;
}

} // namespace detail

inline std::string render_svg(const std::vector<SvgItem>& items, int canvas = 640) {
    // world bounding box
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto grow = [&](const PointD& p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    };
    for (const auto& it : items) {
        if (auto* poly = std::get_if<PolygonD>(&it.shape))
            for (const auto& v : poly->vertices()) grow(v);
        else if (auto* pt = std::get_if<PointD>(&it.shape))
            grow(*pt);
        else if (auto* seg = std::get_if<SvgSegment>(&it.shape)) {
            grow(seg->a);
            grow(seg->b);
        } else if (auto* lb = std::get_if<SvgLabel>(&it.shape))
            grow(lb->at);
    }
    if (xmin > xmax) {  // empty scene
        xmin = ymin = -1;
        xmax = ymax = 1;
    }
    double span = std::max(xmax - xmin, ymax - ymin);
    if (span <= 0) span = 1;
    double margin = 0.05 * span;
    double scale = canvas / (span + 2 * margin);
    // center the (possibly non-square) bounding box in the square canvas
    double ox = xmin - margin - 0.5 * (span - (xmax - xmin));
    double oy = ymin - margin - 0.5 * (span - (ymax - ymin));
    auto X = [&](double x) { return detail::fmt6((x - ox) * scale); };
    auto Y = [&](double y) { return detail::fmt6(double(canvas) - (y - oy) * scale); };  // y up

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas << "\" height=\""
        << canvas << "\" viewBox=\"0 0 " << canvas << " " << canvas << "\">\n";
    for (const auto& it : items) {
        if (auto* poly = std::get_if<PolygonD>(&it.shape)) {
            out << "  <polygon points=\"";
            bool first = true;
            for (const auto& v : poly->vertices()) {
                if (!first) out << " ";
                out << X(v.x) << "," << Y(v.y);
                first = false;
            }
            out << "\" " << it.style << "/>\n";
        } else if (auto* pt = std::get_if<PointD>(&it.shape)) {
            out << "  <circle cx=\"" << X(pt->x) << "\" cy=\"" << Y(pt->y) << "\" r=\"3\" "
                << it.style << "/>\n";
        } else if (auto* seg = std::get_if<SvgSegment>(&it.shape)) {
            out << "  <line x1=\"" << X(seg->a.x) << "\" y1=\"" << Y(seg->a.y) << "\" x2=\""
                << X(seg->b.x) << "\" y2=\"" << Y(seg->b.y) << "\" " << it.style << "/>\n";
        } else if (auto* lb = std::get_if<SvgLabel>(&it.shape)) {
            out << "  <text x=\"" << X(lb->at.x) << "\" y=\"" << Y(lb->at.y) << "\" " << it.style
                << ">" << lb->text << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace bm2d
