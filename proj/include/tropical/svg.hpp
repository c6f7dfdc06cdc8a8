#pragma once

#include <tropical/cells.hpp>
#include <tropical/hull.hpp>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

// SVG rendering of planar complexes. Points of three-coordinate
// projective space are drawn at (x_2 - x_1, x_3 - x_1); every rendered
// cell becomes exactly one path element. Unbounded edges are drawn as
// rays reaching the padded viewport, which clips them.
namespace tropical {

namespace svgdetail {

struct XY {
    double x, y;
};

inline XY plane(const ProjectivePoint& p) {
    return {static_cast<double>(p[1] - p[0]), static_cast<double>(p[2] - p[0])};
}

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

inline std::string circle_path(XY c, double r) {
    // A dot drawn as a path so that cells and markers share one element kind.
    std::string s = "M " + num(c.x - r) + " " + num(c.y);
    s += " a " + num(r) + " " + num(r) + " 0 1 0 " + num(2 * r) + " 0";
    s += " a " + num(r) + " " + num(r) + " 0 1 0 " + num(-2 * r) + " 0 Z";
    return s;
}

struct Box {
    double lo_x = 0, lo_y = 0, hi_x = 0, hi_y = 0;
    void grow(XY p) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
};

}  // namespace svgdetail

/// Renders the cells of a three-coordinate complex: shaded bounded
/// two-cells, bounded edges, unbounded edges clipped at the viewport,
/// and one dot per vertex.
inline std::string render_svg(const TropicalComplex& complex) {
    using namespace svgdetail;
    if (complex.config.cols() != 3)
        throw std::invalid_argument("svg rendering is defined for three coordinates only");

    std::vector<XY> pts;
    Box box;
    bool first = true;
    for (const auto& p : complex.vertices) {
        XY q = plane(p);
        if (first) {
            box = Box{q.x, q.y, q.x, q.y};
            first = false;
        } else {
            box.grow(q);
        }
        pts.push_back(q);
    }
    if (first) box = Box{-1, -1, 1, 1};
    const double span = std::max({box.hi_x - box.lo_x, box.hi_y - box.lo_y, 1.0});
    const double pad = span / 4;
    const double reach = 4 * span;  // rays are drawn past the viewport and clipped
    const double width = box.hi_x - box.lo_x + 2 * pad, height = box.hi_y - box.lo_y + 2 * pad;

    std::string body;
    auto path = [&](const std::string& d, const std::string& style) {
        body += "  <path d=\"" + d + "\" " + style + "/>\n";
    };

    // Shaded bounded two-cells first, vertices sorted by angle around the centroid.
    for (const auto& c : complex.cells) {
        if (c.dim != 2 || !c.bounded) continue;
        std::vector<XY> poly;
        XY centroid{0, 0};
        for (int vid : c.vertex_ids) {
            poly.push_back(pts[static_cast<std::size_t>(vid)]);
            centroid.x += poly.back().x;
            centroid.y += poly.back().y;
        }
        centroid.x /= static_cast<double>(poly.size());
        centroid.y /= static_cast<double>(poly.size());
        std::sort(poly.begin(), poly.end(), [&](XY a, XY b) {
            return std::atan2(a.y - centroid.y, a.x - centroid.x) <
                   std::atan2(b.y - centroid.y, b.x - centroid.x);
        });
        std::string d;
        for (std::size_t t = 0; t < poly.size(); ++t)
            d += (t ? " L " : "M ") + num(poly[t].x) + " " + num(poly[t].y);
        d += " Z";
        path(d, "fill=\"#cfe3f7\" stroke=\"none\"");
    }

    for (const auto& c : complex.cells) {
        if (c.dim != 1) continue;
        if (c.bounded) {
            XY a = pts[static_cast<std::size_t>(c.vertex_ids[0])];
            XY b = pts[static_cast<std::size_t>(c.vertex_ids[1])];
            path("M " + num(a.x) + " " + num(a.y) + " L " + num(b.x) + " " + num(b.y),
                 "stroke=\"#1f3552\" stroke-width=\"0.03\" fill=\"none\"");
        } else if (!c.vertex_ids.empty() && !c.rays.empty()) {
            XY a = pts[static_cast<std::size_t>(c.vertex_ids[0])];
            const RatVec& ray = c.rays[0];
            double dx = static_cast<double>(ray[1] - ray[0]);
            double dy = static_cast<double>(ray[2] - ray[0]);
            const double norm = std::max(std::abs(dx), std::abs(dy));
            if (norm == 0) continue;
            XY b{a.x + dx / norm * reach, a.y + dy / norm * reach};
            path("M " + num(a.x) + " " + num(a.y) + " L " + num(b.x) + " " + num(b.y),
                 "stroke=\"#7d93ad\" stroke-width=\"0.02\" fill=\"none\"");
        }
    }

    for (const auto& c : complex.cells) {
        if (c.dim != 0) continue;
        XY a = pts[static_cast<std::size_t>(c.vertex_ids[0])];
        path(circle_path(a, span / 80), "fill=\"#13263d\" stroke=\"none\"");
    }

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(box.lo_x - pad) + " " +
           num(-(box.hi_y + pad)) + " " + num(width) + " " + num(height) + "\" width=\"480\">\n";
    svg += " <g transform=\"scale(1,-1)\">\n";
    svg += body;
    svg += " </g>\n</svg>\n";
    return svg;
}

/// Renders a tropical segment as a single polyline path with its
/// breakpoints marked.
inline std::string render_svg(const SegmentChain& chain) {
    using namespace svgdetail;
    if (chain.breakpoints.empty() || chain.breakpoints[0].dim() != 3)
        throw std::invalid_argument("svg rendering is defined for three coordinates only");
    Box box;
    bool first = true;
    std::vector<XY> pts;
    for (const auto& p : chain.breakpoints) {
        XY q = plane(p);
        if (first) {
            box = Box{q.x, q.y, q.x, q.y};
            first = false;
        } else {
            box.grow(q);
        }
        pts.push_back(q);
    }
    const double span = std::max({box.hi_x - box.lo_x, box.hi_y - box.lo_y, 1.0});
    const double pad = span / 4;

    std::string d;
    for (std::size_t t = 0; t < pts.size(); ++t)
        d += (t ? " L " : "M ") + num(pts[t].x) + " " + num(pts[t].y);

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(box.lo_x - pad) + " " +
           num(-(box.hi_y + pad)) + " " + num(box.hi_x - box.lo_x + 2 * pad) + " " +
           num(box.hi_y - box.lo_y + 2 * pad) + "\" width=\"480\">\n";
    svg += " <g transform=\"scale(1,-1)\">\n";
    svg += "  <path d=\"" + d + "\" stroke=\"#1f3552\" stroke-width=\"0.03\" fill=\"none\"/>\n";
    for (const auto& p : pts)
        svg += "  <path d=\"" + circle_path(p, span / 80) + "\" fill=\"#13263d\" stroke=\"none\"/>\n";
    svg += " </g>\n</svg>\n";
    return svg;
}

}  // namespace tropical
