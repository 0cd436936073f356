#include "render.hpp"

#include <cmath>
#include <cstdio>
#include <set>

namespace excseq {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

struct Geometry {
    double cx, cy, r_outer, r_inner;
    int n;

    double angle(double pos) const {  // clockwise with increasing position
        return M_PI / 2.0 - 2.0 * M_PI * pos / n;
    }
    std::pair<double, double> at(double pos, double radius) const {
        double a = angle(pos);
        return {cx + radius * std::cos(a), cy - radius * std::sin(a)};
    }
};

// Radial profile of a strand: endpoints sit on their circles, interior
// marked points are dodged just inside the outer circle (sign plus) or just
// outside the inner one (sign minus).
std::string strand_path(const Quiver& q, const Geometry& g, pos_t lo, pos_t hi) {
    auto radius_at = [&](pos_t x, bool endpoint) {
        bool outer = q.lifted_sign(x) == Sign::plus;
        double skirt = (g.r_outer - g.r_inner) * 0.18;
        if (endpoint) return outer ? g.r_outer : g.r_inner;
        return outer ? g.r_outer - skirt : g.r_inner + skirt;
    };
    const int steps_per_unit = 16;
    std::string path;
    bool first = true;
    for (pos_t seg = lo; seg < hi; ++seg) {
        double r0 = radius_at(seg, seg == lo);
        double r1 = radius_at(seg + 1, seg + 1 == hi);
        for (int s = first ? 0 : 1; s <= steps_per_unit; ++s) {
            double t = static_cast<double>(s) / steps_per_unit;
            double rr = r0 + (r1 - r0) * (0.5 - 0.5 * std::cos(M_PI * t));
            auto [x, y] = g.at(static_cast<double>(seg) + t, rr);
            path += first ? "M" : " L";
            path += fmt(x) + "," + fmt(y);
            first = false;
        }
    }
    return path;
}

const char* stroke_for(StringClass c) {
    switch (c) {
        case StringClass::preprojective: return "#2c63c9";  // blue
        case StringClass::preinjective: return "#c92c2c";   // red
        default: return "#222222";                          // regulars black
    }
}

}  // namespace

std::string render_svg(const ArcDiagram& d, const RenderOptions& opts) {
    const Quiver& q = d.quiver;
    Geometry g;
    g.n = q.n;
    g.cx = g.cy = opts.size / 2.0;
    g.r_outer = opts.size * 0.42;
    g.r_inner = opts.size * 0.16;

    std::set<size_t> bad;
    for (size_t i = 0; i < d.modules.size(); ++i) {
        if (!is_exceptional(d.modules[i])) bad.insert(i);
        for (size_t j = i + 1; j < d.modules.size(); ++j) {
            if (!is_exceptional(d.modules[i]) || !is_exceptional(d.modules[j])) continue;
            if (d.modules[i] == d.modules[j]) {
                bad.insert(i);
                bad.insert(j);
                continue;
            }
            PairRelation r = pair_relation(d.modules[i], d.modules[j]);
            if (r == PairRelation::cross || r == PairRelation::two_cycle) {
                bad.insert(i);
                bad.insert(j);
            }
        }
    }

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opts.size) +
           "\" height=\"" + std::to_string(opts.size) + "\" viewBox=\"0 0 " +
           std::to_string(opts.size) + " " + std::to_string(opts.size) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (double r : {g.r_outer, g.r_inner})
        svg += "<circle cx=\"" + fmt(g.cx) + "\" cy=\"" + fmt(g.cy) + "\" r=\"" + fmt(r) +
               "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

    for (size_t i = 0; i < d.modules.size(); ++i) {
        const StringModule& m = d.modules[i];
        Strand s = strand_of(m);
        const char* color = bad.count(i) ? "#e07800" : stroke_for(classify(m));
        svg += "<path d=\"" + strand_path(q, g, s.lo, s.hi) + "\" fill=\"none\" stroke=\"" +
               color + "\" stroke-width=\"1.6\"/>\n";
    }

    for (int v = 0; v < q.n; ++v) {
        double r = q.eps[v] == Sign::plus ? g.r_outer : g.r_inner;
        auto [x, y] = g.at(v, r);
        svg += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) +
               "\" r=\"3\" fill=\"#000000\"/>\n";
        if (opts.labels) {
            auto [lx, ly] = g.at(v, r + (q.eps[v] == Sign::plus ? 14.0 : -14.0));
            svg += "<text x=\"" + fmt(lx) + "\" y=\"" + fmt(ly) +
                   "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#333333\">" +
                   std::to_string(v) + "</text>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace excseq
