#include "msrs/gantt.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace msrs {

namespace {

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

std::string fixed(double v) {
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(2);
    ss << v;
    return ss.str();
}

std::string colour(int k) {
    // golden-angle hue walk
    int hue = static_cast<int>(std::fmod(k * 137.508, 360.0));
    if (hue < 0) hue += 360;
    return "hsl(" + std::to_string(hue) + ",65%,62%)";
}

}  // namespace

std::string render_gantt(const std::vector<GanttBar>& bars, int lanes, const GanttOptions& options) {
    const double lane_h = 28, left = 48, top = options.title.empty() ? 10 : 30, width = 720;
    double horizon = 1;
    for (auto& b : bars) horizon = std::max(horizon, to_double(b.start) + static_cast<double>(b.p));
    if (options.T) {
        double t = to_double(*options.T);
        horizon = std::max(horizon, options.ratio ? t * to_double(*options.ratio) : t);
    }
    const double scale = width / horizon;
    const double height = top + lanes * lane_h + 40;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(left + width + 20) << "\" height=\""
        << fixed(height) << "\" font-family=\"monospace\" font-size=\"11\">\n";
    if (!options.title.empty()) svg << "<text x=\"" << fixed(left) << "\" y=\"18\">" << escape(options.title) << "</text>\n";
    for (int i = 0; i < lanes; ++i) {
        double y = top + i * lane_h;
        svg << "<g class=\"lane\"><rect x=\"" << fixed(left) << "\" y=\"" << fixed(y) << "\" width=\"" << fixed(width)
            << "\" height=\"" << fixed(lane_h) << "\" fill=\"" << (i % 2 ? "#f4f4f4" : "#fafafa") << "\"/>"
            << "<text x=\"4\" y=\"" << fixed(y + lane_h / 2 + 4) << "\">M" << i << "</text></g>\n";
    }
    std::vector<GanttBar> sorted = bars;
    std::stable_sort(sorted.begin(), sorted.end(), [](const GanttBar& a, const GanttBar& b) {
        return std::tie(a.machine, a.start) < std::tie(b.machine, b.start);
    });
    for (auto& b : sorted) {
        if (b.p == 0) continue;
        double x = left + to_double(b.start) * scale, y = top + b.machine * lane_h + 3;
        double w = static_cast<double>(b.p) * scale;
        svg << "<g class=\"job\"><rect x=\"" << fixed(x) << "\" y=\"" << fixed(y) << "\" width=\"" << fixed(w)
            << "\" height=\"" << fixed(lane_h - 6) << "\" fill=\"" << colour(b.color)
            << "\" stroke=\"#333\" stroke-width=\"0.6\"><title>" << escape(b.label) << " start " << to_string(b.start)
            << " p " << b.p << "</title></rect>";
        if (w > 7.0 * static_cast<double>(b.label.size()))
            svg << "<text x=\"" << fixed(x + 3) << "\" y=\"" << fixed(y + lane_h / 2 + 1) << "\">" << escape(b.label)
                << "</text>";
        svg << "</g>\n";
    }
    const double axis_y = top + lanes * lane_h + 4;
    svg << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(axis_y) << "\" x2=\"" << fixed(left + width)
        << "\" y2=\"" << fixed(axis_y) << "\" stroke=\"#000\"/>\n";
    const double step = std::max(1.0, std::pow(10.0, std::floor(std::log10(horizon))) / (horizon < 20 ? 10 : 1));
    for (double t = 0; t <= horizon + 1e-9; t += step) {
        double x = left + t * scale;
        svg << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(axis_y) << "\" x2=\"" << fixed(x) << "\" y2=\""
            << fixed(axis_y + 4) << "\" stroke=\"#000\"/><text x=\"" << fixed(x - 3) << "\" y=\"" << fixed(axis_y + 16)
            << "\">" << static_cast<long long>(t) << "</text>\n";
    }
    auto marker = [&](double t, const std::string& name, const char* colour_name) {
        double x = left + t * scale;
        svg << "<line class=\"marker\" x1=\"" << fixed(x) << "\" y1=\"" << fixed(top) << "\" x2=\"" << fixed(x)
            << "\" y2=\"" << fixed(axis_y) << "\" stroke=\"" << colour_name << "\" stroke-dasharray=\"4 3\"/><text x=\""
            << fixed(x + 2) << "\" y=\"" << fixed(axis_y + 30) << "\" fill=\"" << colour_name << "\">" << escape(name)
            << "</text>\n";
    };
    if (options.T) {
        marker(to_double(*options.T), "T", "#c00");
        if (options.ratio) marker(to_double(*options.T * *options.ratio), to_string(*options.ratio) + "T", "#06c");
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_gantt(const Instance& inst, const Schedule& s, const GanttOptions& options) {
    ValidationReport rep = validate(inst, s, true);
    if (!rep.valid) throw ContractError("render_gantt: schedule is not valid");
    std::vector<GanttBar> bars;
    int lanes = inst.num_jobs() == 0 ? 0 : inst.m;
    for (auto& j : inst.jobs()) {
        const auto& pl = s.at(j.id);
        bars.push_back({pl.machine, pl.start, j.p, j.class_id, "c" + std::to_string(j.class_id) + "/j" + std::to_string(j.id)});
        lanes = std::max(lanes, pl.machine + 1);
    }
    return render_gantt(bars, lanes, options);
}

std::string render_gantt(const MultiResourceInstance& inst, const Schedule& s, const GanttOptions& options) {
    ValidationReport rep = validate(inst, s);
    if (!rep.valid) throw ContractError("render_gantt: schedule is not valid");
    std::vector<GanttBar> bars;
    for (auto& j : inst.jobs) {
        const auto& pl = s.at(j.id);
        bars.push_back({pl.machine, pl.start, j.p, j.resources.empty() ? 0 : j.resources[0],
                        j.name.empty() ? "j" + std::to_string(j.id) : j.name});
    }
    return render_gantt(bars, inst.jobs.empty() ? 0 : inst.m, options);
}

}  // namespace msrs
