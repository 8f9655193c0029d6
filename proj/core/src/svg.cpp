#include "plawbg/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace plawbg {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 56.0;

struct Scale {
    double lo_x, hi_x, lo_y, hi_y;

    double x(double degree) const {
        const double t = (std::log10(degree) - lo_x) / std::max(hi_x - lo_x, 1e-9);
        return kMargin + t * (kWidth - 2 * kMargin);
    }
    double y(double count) const {
        const double t = (std::log10(count) - lo_y) / std::max(hi_y - lo_y, 1e-9);
        return kHeight - kMargin - t * (kHeight - 2 * kMargin);
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void extend(Scale& s, std::uint64_t degree, std::uint64_t count) {
    if (degree == 0 || count == 0) return;
    s.lo_x = std::min(s.lo_x, std::log10(static_cast<double>(degree)));
    s.hi_x = std::max(s.hi_x, std::log10(static_cast<double>(degree)));
    s.lo_y = std::min(s.lo_y, std::log10(static_cast<double>(count)));
    s.hi_y = std::max(s.hi_y, std::log10(static_cast<double>(count)));
}

}  // namespace

std::string render_fit_svg(const PipelineResult& r) {
    Scale s{0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < r.observed.bins.size(); ++i) {
        extend(s, r.observed.bins[i], r.observed.counts[i]);
    }
    for (std::size_t i = 0; i < r.fit.model.bins.size(); ++i) {
        extend(s, r.fit.model.bins[i], r.fit.model.counts[i]);
        extend(s, r.rebinned.bins[i], r.rebinned.counts[i]);
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kHeight - kMargin)
        << "\" x2=\"" << num(kWidth - kMargin) << "\" y2=\"" << num(kHeight - kMargin)
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kMargin) << "\" x2=\""
        << num(kMargin) << "\" y2=\"" << num(kHeight - kMargin)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 16)
        << "\" font-size=\"13\" text-anchor=\"middle\">degree (log10)</text>\n";
    out << "<text x=\"18\" y=\"" << num(kHeight / 2)
        << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << num(kHeight / 2) << ")\">count (log10)</text>\n";

    // Observed: grey circles.
    for (std::size_t i = 0; i < r.observed.bins.size(); ++i) {
        if (r.observed.counts[i] == 0) continue;
        out << "<circle cx=\"" << num(s.x(static_cast<double>(r.observed.bins[i])))
            << "\" cy=\"" << num(s.y(static_cast<double>(r.observed.counts[i])))
            << "\" r=\"3\" fill=\"#888888\"/>\n";
    }
    // Model: blue line with square markers.
    std::vector<std::pair<double, double>> model_pts;
    for (std::size_t i = 0; i < r.fit.model.bins.size(); ++i) {
        model_pts.emplace_back(s.x(static_cast<double>(r.fit.model.bins[i])),
                               s.y(static_cast<double>(r.fit.model.counts[i])));
    }
    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (const auto& [px, py] : model_pts) out << num(px) << ',' << num(py) << ' ';
    out << "\"/>\n";
    for (const auto& [px, py] : model_pts) {
        out << "<rect x=\"" << num(px - 3) << "\" y=\"" << num(py - 3)
            << "\" width=\"6\" height=\"6\" fill=\"#1f77b4\"/>\n";
    }
    // Rebinned: red crosses.
    for (std::size_t i = 0; i < r.rebinned.bins.size(); ++i) {
        if (r.rebinned.counts[i] == 0) continue;
        const double px = s.x(static_cast<double>(r.rebinned.bins[i]));
        const double py = s.y(static_cast<double>(r.rebinned.counts[i]));
        out << "<path d=\"M " << num(px - 4) << ' ' << num(py - 4) << " L " << num(px + 4)
            << ' ' << num(py + 4) << " M " << num(px - 4) << ' ' << num(py + 4) << " L "
            << num(px + 4) << ' ' << num(py - 4)
            << "\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
    }

    const double lx = kWidth - kMargin - 130;
    out << "<circle cx=\"" << num(lx) << "\" cy=\"" << num(kMargin + 4)
        << "\" r=\"3\" fill=\"#888888\"/>"
        << "<text x=\"" << num(lx + 10) << "\" y=\"" << num(kMargin + 8)
        << "\" font-size=\"12\">observed</text>\n";
    out << "<rect x=\"" << num(lx - 3) << "\" y=\"" << num(kMargin + 17)
        << "\" width=\"6\" height=\"6\" fill=\"#1f77b4\"/>"
        << "<text x=\"" << num(lx + 10) << "\" y=\"" << num(kMargin + 24)
        << "\" font-size=\"12\">model</text>\n";
    out << "<path d=\"M " << num(lx - 4) << ' ' << num(kMargin + 32) << " L "
        << num(lx + 4) << ' ' << num(kMargin + 40) << " M " << num(lx - 4) << ' '
        << num(kMargin + 40) << " L " << num(lx + 4) << ' ' << num(kMargin + 32)
        << "\" stroke=\"#d62728\" stroke-width=\"1.5\"/>"
        << "<text x=\"" << num(lx + 10) << "\" y=\"" << num(kMargin + 40)
        << "\" font-size=\"12\">rebinned</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace plawbg
