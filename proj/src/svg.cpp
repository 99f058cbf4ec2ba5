#include "coarseness/svg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace coarseness {

namespace {

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(3);
    ss << std::fixed << v;
    return ss.str();
}

}  // namespace

std::string svg_instance(const ColoredPointSet& ps, const std::vector<Halfplane>& lines,
                         const ConvexPartition* partition) {
    double min_x = -1, max_x = 1, min_y = -1, max_y = 1;
    if (ps.size() > 0) {
        min_x = max_x = static_cast<double>(ps.points[0].x);
        min_y = max_y = static_cast<double>(ps.points[0].y);
        for (const Point& p : ps.points) {
            min_x = std::min(min_x, static_cast<double>(p.x));
            max_x = std::max(max_x, static_cast<double>(p.x));
            min_y = std::min(min_y, static_cast<double>(p.y));
            max_y = std::max(max_y, static_cast<double>(p.y));
        }
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
    const double margin = 0.08 * span;
    const double w = 640.0;
    const double scale = w / (span + 2 * margin);
    auto sx = [&](double x) { return (x - min_x + margin) * scale; };
    auto sy = [&](double y) { return w - (y - min_y + margin) * scale; };  // y up

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << w
        << "\" viewBox=\"0 0 " << w << " " << w << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (partition) {
        for (const Island& blk : partition->blocks) {
            std::vector<Point> pts;
            for (int i : blk.members) pts.push_back(ps.points[i]);
            ConvexPolygon hull = convex_hull(pts);
            if (hull.vertices.size() < 2) continue;
            out << "<polygon points=\"";
            for (const Point& v : hull.vertices)
                out << fmt(sx(static_cast<double>(v.x))) << ','
                    << fmt(sy(static_cast<double>(v.y))) << ' ';
            out << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1.5\"/>\n";
        }
    }

    const double diag = 2.0 * (span + 2 * margin);
    for (const Halfplane& h : lines) {
        const double a = static_cast<double>(h.a), b = static_cast<double>(h.b),
                     c = static_cast<double>(h.c);
        const double nn = a * a + b * b;
        if (nn == 0) continue;
        // Foot of the perpendicular from the view center onto the line.
        const double cx = (min_x + max_x) / 2, cy = (min_y + max_y) / 2;
        const double t = (a * cx + b * cy + c) / nn;
        const double fx = cx - a * t, fy = cy - b * t;
        const double len = std::sqrt(nn);
        const double dx = b / len, dy = -a / len;
        out << "<line x1=\"" << fmt(sx(fx - dx * diag)) << "\" y1=\"" << fmt(sy(fy - dy * diag))
            << "\" x2=\"" << fmt(sx(fx + dx * diag)) << "\" y2=\"" << fmt(sy(fy + dy * diag))
            << "\" stroke=\"#2a7\" stroke-width=\"1\""
            << (h.closed ? "" : " stroke-dasharray=\"6 4\"") << "/>\n";
    }

    for (int i = 0; i < ps.size(); ++i) {
        out << "<circle cx=\"" << fmt(sx(static_cast<double>(ps.points[i].x))) << "\" cy=\""
            << fmt(sy(static_cast<double>(ps.points[i].y))) << "\" r=\"4\" fill=\""
            << (ps.colors[i] == Color::Red ? "#d22" : "#24c") << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string scaling_csv(const std::vector<ScalingRow>& rows) {
    std::ostringstream out;
    out << "n,seed,kind,d1,d2,certified_upper,elapsed_ms,status\n";
    for (const ScalingRow& r : rows) {
        out << r.n << ',' << r.seed << ',' << r.kind << ',';
        if (r.d1 >= 0) out << r.d1;
        out << ',';
        if (r.d2 >= 0) out << r.d2;
        out << ',';
        if (r.certified_upper >= 0) out << r.certified_upper;
        out << ',' << fmt(r.elapsed_ms) << ','
            << (r.d2 >= 0 || r.d1 >= 0 ? "ok" : "budget-exceeded") << '\n';
    }
    return out.str();
}

std::string svg_scaling_plot(const std::vector<ScalingRow>& rows) {
    const double w = 640.0, h = 480.0, pad = 60.0;
    double min_lx = 1e9, max_lx = -1e9, min_ly = 0.0, max_ly = 1.0;
    for (const ScalingRow& r : rows) {
        if (r.d2 < 0) continue;
        min_lx = std::min(min_lx, std::log10(static_cast<double>(r.n)));
        max_lx = std::max(max_lx, std::log10(static_cast<double>(r.n)));
        max_ly = std::max(max_ly, std::log10(std::max(r.d2, 1) + 0.0));
    }
    if (min_lx > max_lx) {
        min_lx = 1.0;
        max_lx = 3.0;
    }
    if (max_lx - min_lx < 1e-9) max_lx = min_lx + 1.0;
    max_ly = std::max(max_ly, (max_lx - min_lx) * 0.5) + 0.1;
    auto px = [&](double lx) { return pad + (lx - min_lx) / (max_lx - min_lx) * (w - 2 * pad); };
    auto py = [&](double ly) { return h - pad - (ly - min_ly) / (max_ly - min_ly) * (h - 2 * pad); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << w - pad << "\" y2=\""
        << h - pad << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << pad << "\" y2=\"" << pad
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << w / 2 << "\" y=\"" << h - 15
        << "\" text-anchor=\"middle\" font-size=\"13\">log10 n</text>\n"
        << "<text x=\"15\" y=\"" << h / 2 << "\" font-size=\"13\" transform=\"rotate(-90 15 "
        << h / 2 << ")\" text-anchor=\"middle\">log10 d2</text>\n";

    // Reference slopes anchored at the left edge, d2 = 1 at the smallest n.
    for (double slope : {0.25, 0.5}) {
        out << "<line x1=\"" << fmt(px(min_lx)) << "\" y1=\"" << fmt(py(0.0)) << "\" x2=\""
            << fmt(px(max_lx)) << "\" y2=\"" << fmt(py(slope * (max_lx - min_lx)))
            << "\" stroke=\"#aaa\" stroke-dasharray=\"5 4\"/>\n"
            << "<text x=\"" << fmt(px(max_lx) - 60) << "\" y=\""
            << fmt(py(slope * (max_lx - min_lx)) - 5) << "\" font-size=\"11\" fill=\"#888\">slope "
            << (slope == 0.25 ? "1/4" : "1/2") << "</text>\n";
    }

    const std::map<std::string, std::string> palette{
        {"random", "#d22"}, {"balanced", "#24c"}, {"optimized", "#2a7"}};
    double ly_legend = pad;
    for (const auto& [kind, color] : palette) {
        out << "<circle cx=\"" << w - pad - 90 << "\" cy=\"" << ly_legend << "\" r=\"4\" fill=\""
            << color << "\"/><text x=\"" << w - pad - 80 << "\" y=\"" << ly_legend + 4
            << "\" font-size=\"12\">" << kind << "</text>\n";
        ly_legend += 18;
    }
    for (const ScalingRow& r : rows) {
        if (r.d2 < 0) continue;
        auto it = palette.find(r.kind);
        const std::string& color = it == palette.end() ? std::string("#000") : it->second;
        out << "<circle cx=\"" << fmt(px(std::log10(static_cast<double>(r.n)))) << "\" cy=\""
            << fmt(py(std::log10(std::max(r.d2, 1) + 0.0))) << "\" r=\"4\" fill=\"" << color
            << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace coarseness
