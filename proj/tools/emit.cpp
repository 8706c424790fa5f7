#include "emit.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace locstate::cli {

namespace {

std::string full_precision(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::string pixel(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", v);
    return buffer;
}

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    return out;
}

void close_or_throw(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace

std::string regime_name(diffraction::Regime regime) {
    switch (regime) {
        case diffraction::Regime::Fresnel: return "Fresnel";
        case diffraction::Regime::Transition: return "Transition";
        case diffraction::Regime::Fraunhofer: return "Fraunhofer";
    }
    return "Transition";
}

void emit_csv(const SampledDensity& density, const std::string& path) {
    auto out = open_or_throw(path);
    out << "y,density\n";
    for (std::size_t i = 0; i < density.grid_y.size(); ++i)
        out << full_precision(density.grid_y[i]) << ',' << full_precision(density.density[i])
            << '\n';
    close_or_throw(out, path);
}

void emit_json(const diffraction::ComparisonReport& report, const std::string& path) {
    nlohmann::ordered_json j;
    j["fresnel_number"] = report.fresnel_number;
    j["l2_distance"] = report.l2_distance;
    j["linf_distance"] = report.linf_distance;
    j["peak_ratio"] = report.peak_ratio;
    j["regime"] = regime_name(report.regime);
    auto out = open_or_throw(path);
    out << j.dump(2) << '\n';
    close_or_throw(out, path);
}

void emit_svg(const SampledDensity& observed, const SampledDensity* reference,
              const std::string& path) {
    constexpr double width = 900.0, height = 560.0;
    constexpr double left = 72.0, right = 16.0, top = 16.0, bottom = 56.0;

    double x_lo = observed.grid_y.front(), x_hi = observed.grid_y.back();
    double y_hi = *std::max_element(observed.density.begin(), observed.density.end());
    if (reference)
        y_hi = std::max(y_hi,
                        *std::max_element(reference->density.begin(), reference->density.end()));
    if (y_hi <= 0.0) y_hi = 1.0;
    // 5% margins around the data box
    const double x_pad = 0.05 * (x_hi - x_lo);
    x_lo -= x_pad;
    x_hi += x_pad;
    const double y_lo = 0.0;
    y_hi *= 1.05;

    const auto to_px = [&](double x, double y) {
        const double px = left + (x - x_lo) / (x_hi - x_lo) * (width - left - right);
        const double py = height - bottom - (y - y_lo) / (y_hi - y_lo) * (height - top - bottom);
        return std::pair<double, double>(px, py);
    };
    const auto polyline = [&](const SampledDensity& d) {
        std::string points;
        for (std::size_t i = 0; i < d.grid_y.size(); ++i) {
            const auto [px, py] = to_px(d.grid_y[i], d.density[i]);
            points += pixel(px);
            points += ',';
            points += pixel(py);
            if (i + 1 < d.grid_y.size()) points += ' ';
        }
        return points;
    };

    auto out = open_or_throw(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height
        << "\">\n";
    out << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    const auto [ox, oy] = to_px(x_lo, 0.0);
    const auto [ax, ay] = to_px(x_hi, 0.0);
    const auto [tx, ty] = to_px(x_lo, y_hi);
    out << "  <line x1=\"" << pixel(ox) << "\" y1=\"" << pixel(oy) << "\" x2=\"" << pixel(ax)
        << "\" y2=\"" << pixel(ay) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "  <line x1=\"" << pixel(ox) << "\" y1=\"" << pixel(oy) << "\" x2=\"" << pixel(tx)
        << "\" y2=\"" << pixel(ty) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    // axis tick labels at the box corners
    out << "  <text x=\"" << pixel(ox) << "\" y=\"" << pixel(oy + 20.0)
        << "\" font-size=\"13\" text-anchor=\"middle\">" << pixel(x_lo) << "</text>\n";
    out << "  <text x=\"" << pixel(ax) << "\" y=\"" << pixel(ay + 20.0)
        << "\" font-size=\"13\" text-anchor=\"middle\">" << pixel(x_hi) << "</text>\n";
    out << "  <text x=\"" << pixel((ox + ax) / 2.0) << "\" y=\"" << pixel(height - 14.0)
        << "\" font-size=\"15\" text-anchor=\"middle\">y</text>\n";
    out << "  <text x=\"" << pixel(18.0) << "\" y=\"" << pixel((oy + ty) / 2.0)
        << "\" font-size=\"15\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << pixel((oy + ty) / 2.0) << ")\">|\xCE\xA8|\xC2\xB2</text>\n";
    if (reference)
        out << "  <polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" "
               "stroke-dasharray=\"7 5\" points=\""
            << polyline(*reference) << "\"/>\n";
    out << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\""
        << polyline(observed) << "\"/>\n";
    out << "</svg>\n";
    close_or_throw(out, path);
}

void emit_trajectories_csv(const diffraction::TrajectoryFan& fan, const std::string& path) {
    auto out = open_or_throw(path);
    out << "t";
    for (std::size_t j = 0; j < fan.paths.size(); ++j) {
        char header[24];
        std::snprintf(header, sizeof(header), ",traj_%02zu", j);
        out << header;
    }
    out << '\n';
    for (std::size_t i = 0; i < fan.times.size(); ++i) {
        out << full_precision(fan.times[i]);
        for (const auto& path_j : fan.paths) out << ',' << full_precision(path_j[i]);
        out << '\n';
    }
    close_or_throw(out, path);
}

}  // namespace locstate::cli
