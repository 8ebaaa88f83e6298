#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "gchn/report.hpp"

namespace gchn {
namespace {

constexpr int kWidth = 720, kHeight = 480;
constexpr int kMarginL = 80, kMarginR = 30, kMarginT = 50, kMarginB = 60;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Axis {
    double lo = 0.0, hi = 1.0;
    bool log = false;

    double place(double v, double pix_lo, double pix_hi) const {
        double t = log ? (std::log10(v) - lo) / (hi - lo) : (v - lo) / (hi - lo);
        return pix_lo + t * (pix_hi - pix_lo);
    }
};

Axis fit(const std::vector<const std::vector<double>*>& cols, bool log) {
    Axis ax;
    ax.log = log;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto* col : cols)
        for (double v : *col) {
            if (log && !(v > 0.0)) continue;
            const double u = log ? std::log10(v) : v;
            lo = std::min(lo, u);
            hi = std::max(hi, u);
        }
    if (!(lo <= hi)) {
        lo = log ? 0.0 : -1.0;
        hi = 1.0;
    }
    if (hi - lo < 1e-12) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double pad = 0.05 * (hi - lo);
    ax.lo = lo - pad;
    ax.hi = hi + pad;
    return ax;
}

} // namespace

void write_svg(const std::string& path, const std::string& title,
               const std::string& x_label, const std::string& y_label,
               const std::vector<SvgSeries>& series, bool log_x, bool log_y) {
    std::vector<const std::vector<double>*> xs, ys;
    for (const auto& s : series) {
        xs.push_back(&s.x);
        ys.push_back(&s.y);
    }
    const Axis ax = fit(xs, log_x);
    const Axis ay = fit(ys, log_y);

    const double px0 = kMarginL, px1 = kWidth - kMarginR;
    const double py0 = kHeight - kMarginB, py1 = kMarginT; // y grows upward

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_svg: cannot open " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
        << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">"
        << title << "</text>\n";

    // frame
    out << "<rect x=\"" << px0 << "\" y=\"" << py1 << "\" width=\"" << px1 - px0
        << "\" height=\"" << py0 - py1 << "\" fill=\"none\" stroke=\"#333\"/>\n";

    // 5 ticks per axis at round positions in plot units
    for (int i = 0; i <= 4; ++i) {
        const double t = i / 4.0;
        const double ux = ax.lo + t * (ax.hi - ax.lo);
        const double uy = ay.lo + t * (ay.hi - ay.lo);
        const double X = px0 + t * (px1 - px0);
        const double Y = py0 + t * (py1 - py0);
        const double vx = log_x ? std::pow(10.0, ux) : ux;
        const double vy = log_y ? std::pow(10.0, uy) : uy;
        out << "<line x1=\"" << X << "\" y1=\"" << py0 << "\" x2=\"" << X << "\" y2=\""
            << py0 + 6 << "\" stroke=\"#333\"/>\n"
            << "<text x=\"" << X << "\" y=\"" << py0 + 22
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << num(vx) << "</text>\n"
            << "<line x1=\"" << px0 - 6 << "\" y1=\"" << Y << "\" x2=\"" << px0
            << "\" y2=\"" << Y << "\" stroke=\"#333\"/>\n"
            << "<text x=\"" << px0 - 10 << "\" y=\"" << Y + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << num(vy) << "</text>\n";
    }

    out << "<text x=\"" << (px0 + px1) / 2 << "\" y=\"" << kHeight - 14
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << x_label << (log_x ? " (log)" : "") << "</text>\n"
        << "<text x=\"18\" y=\"" << (py0 + py1) / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 "
        << (py0 + py1) / 2 << ")\">" << y_label << (log_y ? " (log)" : "")
        << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.8\" points=\"";
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if ((log_x && !(s.x[i] > 0.0)) || (log_y && !(s.y[i] > 0.0))) continue;
            out << num(ax.place(s.x[i], px0, px1)) << ","
                << num(ay.place(s.y[i], py0, py1)) << " ";
        }
        out << "\"/>\n";
        // legend swatch
        const double ly = py1 + 16 + 18.0 * si;
        out << "<line x1=\"" << px1 - 150 << "\" y1=\"" << ly << "\" x2=\"" << px1 - 120
            << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << px1 - 112 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label
            << "</text>\n";
    }
    out << "</svg>\n";
}

} // namespace gchn
