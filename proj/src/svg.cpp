#include "ecosim/svg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ecosim/text.hpp"

namespace ecosim {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 780.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 350.0;

std::string escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

std::string render_chart_svg(std::span<const double> series, ChartKind kind,
                             std::string_view x_label, std::string_view y_label) {
    if (series.empty()) throw std::invalid_argument("render_chart_svg: empty series");

    const auto [min_it, max_it] = std::minmax_element(series.begin(), series.end());
    double lo = std::min(0.0, *min_it);
    double hi = std::max(0.0, *max_it);
    if (hi == lo) hi = lo + 1.0; // degenerate flat series still gets a frame

    const double plot_w = kRight - kLeft;
    const double plot_h = kBottom - kTop;
    const auto n = static_cast<double>(series.size());
    auto y_of = [&](double value) { return kTop + (hi - value) / (hi - lo) * plot_h; };
    auto x_of = [&](std::size_t index) {
        return kLeft + (static_cast<double>(index) + 0.5) * plot_w / n;
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\" "
           "viewBox=\"0 0 800 400\">\n"
        << "<rect width=\"800\" height=\"400\" fill=\"white\"/>\n";

    if (kind == ChartKind::bar) {
        const double slot = plot_w / n;
        const double bar_w = slot * 0.8;
        const double base = y_of(0.0);
        for (std::size_t i = 0; i < series.size(); ++i) {
            const double top = y_of(series[i]);
            const double y = std::min(top, base);
            const double h = std::max(top, base) - y;
            out << "<rect x=\"" << format_double(kLeft + static_cast<double>(i) * slot + slot * 0.1)
                << "\" y=\"" << format_double(y) << "\" width=\"" << format_double(bar_w)
                << "\" height=\"" << format_double(h) << "\" fill=\"steelblue\"/>\n";
        }
    } else {
        out << "<polyline fill=\"none\" stroke=\"firebrick\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < series.size(); ++i) {
            if (i > 0) out << ' ';
            out << format_double(x_of(i)) << ',' << format_double(y_of(series[i]));
        }
        out << "\"/>\n";
    }

    // axes: y axis at the left edge, x axis at the zero line
    out << "<line x1=\"" << format_double(kLeft) << "\" y1=\"" << format_double(kTop)
        << "\" x2=\"" << format_double(kLeft) << "\" y2=\"" << format_double(kBottom)
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << format_double(kLeft) << "\" y1=\"" << format_double(y_of(0.0))
        << "\" x2=\"" << format_double(kRight) << "\" y2=\"" << format_double(y_of(0.0))
        << "\" stroke=\"black\"/>\n";

    // y ticks at min / 0 / max (deduplicated)
    std::vector<double> ticks{lo, 0.0, hi};
    ticks.erase(std::unique(ticks.begin(), ticks.end()), ticks.end());
    for (double tick : ticks) {
        const double y = y_of(tick);
        out << "<line x1=\"" << format_double(kLeft - 5.0) << "\" y1=\"" << format_double(y)
            << "\" x2=\"" << format_double(kLeft) << "\" y2=\"" << format_double(y)
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << format_double(kLeft - 8.0) << "\" y=\"" << format_double(y + 4.0)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
            << format_double(tick) << "</text>\n";
    }

    // x ticks at the first and last week
    for (std::size_t index : {std::size_t{0}, series.size() - 1}) {
        const double x = x_of(index);
        out << "<line x1=\"" << format_double(x) << "\" y1=\"" << format_double(kBottom)
            << "\" x2=\"" << format_double(x) << "\" y2=\"" << format_double(kBottom + 5.0)
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << format_double(x) << "\" y=\"" << format_double(kBottom + 18.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << (index + 1) << "</text>\n";
    }

    out << "<text x=\"" << format_double((kLeft + kRight) / 2.0) << "\" y=\""
        << format_double(kHeight - 10.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
        << escape(x_label) << "</text>\n";
    out << "<text x=\"18\" y=\"" << format_double((kTop + kBottom) / 2.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "transform=\"rotate(-90 18 "
        << format_double((kTop + kBottom) / 2.0) << ")\">" << escape(y_label) << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace ecosim
