#include "riesz/svg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace riesz {

namespace {

constexpr double kWidth = 640, kHeight = 420, kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;
const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                               "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
const char* const kAxisCandidates[] = {"n", "omega", "K", "r", "N", "degree", "eps"};

bool positive_number(const nlohmann::ordered_json& j, const char* key, double& out) {
  if (!j.contains(key) || !j[key].is_number()) return false;
  out = j[key].get<double>();
  return out > 0.0 && std::isfinite(out);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

std::string plot_axis(const std::vector<CheckReport>& reports) {
  for (const char* key : kAxisCandidates) {
    double v = 0.0;
    for (const CheckReport& r : reports)
      if (positive_number(r.params, key, v)) return key;
  }
  return {};
}

std::string ratio_plot_svg(const std::string& title, const std::vector<CheckReport>& reports) {
  const std::string axis = plot_axis(reports);
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  for (const CheckReport& r : reports) {
    double x = 0.0;
    if (axis.empty() || !positive_number(r.params, axis.c_str(), x)) continue;
    if (!(r.ratio > 0.0) || !std::isfinite(r.ratio)) continue;
    nlohmann::ordered_json key = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params.items())
      if (k != axis && k != "seed" && k != "centers") key[k] = v;
    series[key.dump()].emplace_back(x, r.ratio);
  }

  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& [key, pts] : series)
    for (const auto& [x, y] : pts) {
      xmin = std::min(xmin, std::log10(x));
      xmax = std::max(xmax, std::log10(x));
      ymin = std::min(ymin, std::log10(y));
      ymax = std::max(ymax, std::log10(y));
    }
  if (series.empty()) xmin = ymin = 0.0, xmax = ymax = 1.0;
  xmin = std::floor(xmin), ymin = std::floor(ymin);
  xmax = std::max(std::ceil(xmax), xmin + 1.0), ymax = std::max(std::ceil(ymax), ymin + 1.0);
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto sx = [&](double lx) { return kLeft + (lx - xmin) / (xmax - xmin) * pw; };
  auto sy = [&](double ly) { return kTop + ph - (ly - ymin) / (ymax - ymin) * ph; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
     << "</text>\n"
     << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double e = xmin; e <= xmax + 1e-9; e += 1.0)
    os << "<text x=\"" << fmt(sx(e)) << "\" y=\"" << kTop + ph + 16 << "\" text-anchor=\"middle\">1e" << e
       << "</text>\n";
  for (double e = ymin; e <= ymax + 1e-9; e += 1.0) {
    os << "<line x1=\"" << kLeft << "\" x2=\"" << kLeft + pw << "\" y1=\"" << fmt(sy(e)) << "\" y2=\"" << fmt(sy(e))
       << "\" stroke=\"#dddddd\"/>\n";
    os << "<text x=\"" << kLeft - 6 << "\" y=\"" << fmt(sy(e) + 4) << "\" text-anchor=\"end\">1e" << e << "</text>\n";
  }
  if (0.0 >= ymin && 0.0 <= ymax)
    os << "<line x1=\"" << kLeft << "\" x2=\"" << kLeft + pw << "\" y1=\"" << fmt(sy(0.0)) << "\" y2=\""
       << fmt(sy(0.0)) << "\" stroke=\"black\" stroke-dasharray=\"4,3\"/>\n";
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\">"
     << escape(axis.empty() ? "(no numeric parameter)" : axis) << "</text>\n"
     << "<text x=\"16\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << kTop + ph / 2 << ")\">ratio</text>\n";

  std::size_t color = 0;
  for (auto& [key, pts] : series) {
    std::sort(pts.begin(), pts.end());
    const char* c = kColors[color++ % std::size(kColors)];
    os << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.2\" points=\"";
    for (const auto& [x, y] : pts) os << fmt(sx(std::log10(x))) << ',' << fmt(sy(std::log10(y))) << ' ';
    os << "\"><title>" << escape(key) << "</title></polyline>\n";
    for (const auto& [x, y] : pts)
      os << "<circle cx=\"" << fmt(sx(std::log10(x))) << "\" cy=\"" << fmt(sy(std::log10(y))) << "\" r=\"2\" fill=\""
         << c << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace riesz
