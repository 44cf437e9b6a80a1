#include "hyperfrac/render.hpp"

#include <cstdio>
#include <string>

namespace hyperfrac {

namespace {

constexpr double kWidth = 1000.0;
constexpr double kMarginX = 40.0;
constexpr double kRowHeight = 34.0;
constexpr double kBarHeight = 14.0;

double xpix(double unit) { return kMarginX + unit * (kWidth - 2 * kMarginX); }

std::string fmt(const char* pattern, double a, double b, double c, double d) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
    return buf;
}

std::string svg_open(double height) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
                  "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  kWidth, height, kWidth, height);
    return std::string(buf) + "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string bar(double lo, double hi, double row, const char* color) {
    double x = xpix(lo);
    double w = xpix(hi) - x;
    if (w < 0.75) w = 0.75;  // hairline visibility for near-degenerate pieces
    double y = row * kRowHeight + (kRowHeight - kBarHeight) / 2;
    return fmt("<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"", x,
               y, w, kBarHeight) +
           color + "\"/>\n";
}

std::string tick(double at, double row, const char* color) {
    double x = xpix(at);
    double y = row * kRowHeight + (kRowHeight - kBarHeight) / 2;
    return fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"", x, y,
               x, y + kBarHeight) +
           color + "\" stroke-width=\"1.4\"/>\n";
}

std::string label(const std::string& text, double row) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "<text x=\"4\" y=\"%.2f\" font-size=\"11\" "
                                   "font-family=\"monospace\">",
                  row * kRowHeight + kRowHeight / 2 + 4);
    return buf + text + "</text>\n";
}

std::string row_of_set(const CompactSet1D& s, double row, const char* color) {
    std::string out;
    if (s.is_points()) {
        for (const auto& p : s.points()) out += tick(p.to_double(), row, color);
    } else {
        for (const auto& iv : s.intervals())
            out += bar(iv.lo.to_double(), iv.hi.to_double(), row, color);
    }
    return out;
}

}  // namespace

std::string render_set_svg(const CompactSet1D& s) {
    std::string out = svg_open(kRowHeight * 1.0 + 8);
    out += row_of_set(s, 0, "#1f6fb2");
    return out + "</svg>\n";
}

std::string render_set_svg(const CompactSetD& s) {
    if (s.dim() == 1) {
        std::string out = svg_open(kRowHeight + 8);
        for (const auto& p : s.points()) out += tick(p[0].to_double(), 0, "#1f6fb2");
        return out + "</svg>\n";
    }
    // first two coordinates as a scatter
    const double side = kWidth;
    std::string out = svg_open(side);
    for (const auto& p : s.points()) {
        double cx = xpix(p[0].to_double());
        double cy = side - (kMarginX + p[1].to_double() * (side - 2 * kMarginX));
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2.5\" fill=\"#1f6fb2\"/>\n",
                      cx, cy);
        out += buf;
    }
    return out + "</svg>\n";
}

std::string render_code_svg(const Code& c) {
    const int depth = c.depth();
    std::string out = svg_open(kRowHeight * depth + 8);
    for (int d = 1; d <= depth; ++d) {
        out += label("level " + std::to_string(d), d - 1);
        out += row_of_set(expand(c, d), d - 1, "#1f6fb2");
    }
    return out + "</svg>\n";
}

std::string render_thm41_svg(const Thm41Certificate& c) {
    std::string out = svg_open(kRowHeight * 4 + 8);
    out += label("Y", 0);
    out += row_of_set(c.y, 0, "#333333");
    out += label("dilate(Y, .99 delta)", 1);
    out += row_of_set(dilate(c.y, c.delta * Rational(99, 100)), 1, "#9ecbe8");
    out += label("E level j+2", 2);
    for (const auto& iv : c.level_intervals)
        out += bar(iv.lo.to_double(), iv.hi.to_double(), 2, "#c24f1f");
    out += label("H level j+2", 3);
    if (!c.trivial && c.ok)
        out += row_of_set(expand(c.h_code, c.j + 2), 3, "#2c8a4b");
    return out + "</svg>\n";
}

std::string render_prop32_svg(const AnnulusConstruction& c) {
    std::string out = svg_open(kRowHeight * 2 + 8);
    out += label("I_n = [0, t_n]", 0);
    for (std::size_t i = 0; i < c.interval_tops.size(); ++i)
        out += tick(c.interval_tops[i].to_double(), 0, "#c24f1f");
    out += label("X (annulus points)", 1);
    for (const auto& p : c.points) out += tick(p.to_double(), 1, "#1f6fb2");
    return out + "</svg>\n";
}

std::string render_prop33_svg(const StrongPorosityWitness& w) {
    const std::size_t rows = w.radii.size() + 1;
    std::string out = svg_open(kRowHeight * static_cast<double>(rows) + 8);
    out += label("F (axis " + std::to_string(w.axis) + ")", 0);
    for (const auto& p : w.base.points()) out += tick(p[w.axis].to_double(), 0, "#333333");
    for (std::size_t i = 0; i < w.radii.size(); ++i) {
        double r = w.radii[i].to_double();
        double y = w.y_points[i][w.axis].to_double();
        double z = w.z_points[i][w.axis].to_double();
        double row = static_cast<double>(i) + 1;
        out += label("B(y_" + std::to_string(i + 1) + "), B(z_" + std::to_string(i + 1) +
                         ") r=" + w.radii[i].to_string(),
                     row);
        out += bar(y - r, y + r, row, "#9ecbe8");
        out += bar(z - r, z + r, row, "#f2c19b");
        out += tick(y, row, "#1f6fb2");
        out += tick(z, row, "#c24f1f");
    }
    return out + "</svg>\n";
}

}  // namespace hyperfrac
