#include "oscillab/cli/plot.hpp"

#include "oscillab/cli/manifest.hpp"
#include "oscillab/core/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace oscillab::cli {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 72, kRight = 24, kTop = 36, kBottom = 52;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string decade_label(int e) {
    if (e == 0) return "1";
    if (e == 1) return "10";
    return "1e" + std::to_string(e);
}

}  // namespace

std::string render_plot(const expsum::SumProfile& profile, const std::string& title) {
    if (profile.results.empty()) fail(ErrorKind::precondition, "emit_plot: empty profile");
    std::vector<double> xs, ys;
    double min_pos = HUGE_VAL;
    for (const auto& r : profile.results) {
        const double m = std::abs(r.value);
        if (m > 0 && std::isfinite(m)) min_pos = std::min(min_pos, m);
    }
    if (!std::isfinite(min_pos)) min_pos = 1e-16;
    const double floor_y = std::log10(min_pos) - 1;
    for (const auto& r : profile.results) {
        xs.push_back(std::log10(static_cast<double>(std::max<std::size_t>(r.N, 1))));
        const double m = std::abs(r.value);
        ys.push_back(m > 0 && std::isfinite(m) ? std::log10(m) : floor_y);
    }
    // whole decades, at least one wide
    double x0 = std::floor(*std::min_element(xs.begin(), xs.end()));
    double x1 = std::ceil(*std::max_element(xs.begin(), xs.end()));
    if (x1 <= x0) x1 = x0 + 1;
    double y0 = std::floor(*std::min_element(ys.begin(), ys.end()));
    double y1 = std::ceil(*std::max_element(ys.begin(), ys.end()));
    if (y1 <= y0) {
        y0 -= 1;
        y1 += 1;
    }
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return kTop + (y1 - y) / (y1 - y0) * ph; };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(kHeight)
      << "\" viewBox=\"0 0 " << fmt(kWidth) << ' ' << fmt(kHeight) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty()) s << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\">" << escape(title) << "</text>\n";
    // grid and tick labels
    const int xstep = std::max(1, static_cast<int>((x1 - x0) / 8));
    for (int e = static_cast<int>(x0); e <= static_cast<int>(x1); e += xstep) {
        const double x = px(e);
        s << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(x) << "\" y2=\"" << fmt(kTop + ph)
          << "\" stroke=\"#ddd\"/>\n";
        s << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kTop + ph + 18) << "\" text-anchor=\"middle\">" << decade_label(e) << "</text>\n";
    }
    const int ystep = std::max(1, static_cast<int>((y1 - y0) / 8));
    for (int e = static_cast<int>(y0); e <= static_cast<int>(y1); e += ystep) {
        const double y = py(e);
        s << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(kLeft + pw) << "\" y2=\"" << fmt(y)
          << "\" stroke=\"#ddd\"/>\n";
        s << "<text x=\"" << fmt(kLeft - 6) << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\">" << decade_label(e) << "</text>\n";
    }
    s << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(pw) << "\" height=\"" << fmt(ph)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    s << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"" << fmt(kHeight - 12) << "\" text-anchor=\"middle\">N</text>\n";
    s << "<text x=\"16\" y=\"" << fmt(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << fmt(kTop + ph / 2)
      << ")\">|value|</text>\n";
    if (xs.size() > 1) {
        s << "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? " " : "") << fmt(px(xs[i])) << ',' << fmt(py(ys[i]));
        s << "\"/>\n";
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
        s << "<circle cx=\"" << fmt(px(xs[i])) << "\" cy=\"" << fmt(py(ys[i])) << "\" r=\"3\" fill=\"#1f5fa8\"/>\n";
    s << "</svg>\n";
    return s.str();
}

void emit_plot(const expsum::SumProfile& profile, const std::string& path, const std::string& title) {
    write_atomic(path, render_plot(profile, title));
}

}  // namespace oscillab::cli
