#pragma once

#include <string>
#include <vector>

#include "riesz/report.hpp"

namespace riesz {

/// Parameter used as the abscissa of a report family: the first of
/// n, omega, K, r, N, degree, eps present with a positive numeric value.
std::string plot_axis(const std::vector<CheckReport>& reports);

/// SVG 1.1 log-log plot of ratio against plot_axis, one polyline per
/// combination of the remaining parameters.
std::string ratio_plot_svg(const std::string& title, const std::vector<CheckReport>& reports);

}  // namespace riesz
