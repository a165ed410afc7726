#pragma once
// Minimal dependency-free SVG charts: bar charts for counts, line charts for
// balances. Fixed 800x400 viewport, numeric ticks at the series minimum,
// zero, and maximum.

#include <span>
#include <string>
#include <string_view>

namespace ecosim {

enum class ChartKind { bar, line };

// Standalone SVG document plotting the series in index order (index i is
// labeled week i+1). Throws std::invalid_argument on an empty series.
std::string render_chart_svg(std::span<const double> series, ChartKind kind,
                             std::string_view x_label, std::string_view y_label);

} // namespace ecosim
