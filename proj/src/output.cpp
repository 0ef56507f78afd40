#include "fracpde/output.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace fracpde {

namespace {

std::string fmt(const char* pattern, double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), pattern, v);
    return buf;
}

std::string rate_cell(const std::optional<double>& r) {
    return r ? fmt("%.4f", *r) : "*";
}

const char* axis_name(RateAxis axis) {
    return axis == RateAxis::Temporal ? "temporal" : "spatial";
}

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write file '" + path + "'");
    return f;
}

}  // namespace

std::string format_scientific(double v) { return fmt("%.4e", v); }

void write_rate_csv(const RateTable& table, std::ostream& os) {
    os << "step,e_inf,rate_inf,e_l2,rate_l2\n";
    for (const RateRow& row : table.rows)
        os << format_scientific(row.step) << ',' << format_scientific(row.e_inf) << ','
           << rate_cell(row.rate_inf) << ',' << format_scientific(row.e_l2) << ','
           << rate_cell(row.rate_l2) << '\n';
}

void write_rate_json(const RateTable& table, std::ostream& os) {
    nlohmann::ordered_json j;
    j["axis"] = axis_name(table.axis);
    j["rows"] = nlohmann::ordered_json::array();
    for (const RateRow& row : table.rows) {
        nlohmann::ordered_json r;
        r["step"] = row.step;
        r["e_inf"] = row.e_inf;
        r["rate_inf"] = row.rate_inf ? nlohmann::ordered_json(*row.rate_inf)
                                     : nlohmann::ordered_json(nullptr);
        r["e_l2"] = row.e_l2;
        r["rate_l2"] = row.rate_l2 ? nlohmann::ordered_json(*row.rate_l2)
                                   : nlohmann::ordered_json(nullptr);
        j["rows"].push_back(std::move(r));
    }
    os << j.dump(2) << '\n';
}

void write_solve_csv(const SolutionHistory& history,
                     const std::optional<ErrorReport>& report, std::ostream& os) {
    const Grid& g = history.grid;
    const Field& last = history.levels.back();
    os << "x,u\n";
    for (int i = 0; i <= g.M; ++i)
        os << format_scientific(g.x(i)) << ',' << format_scientific(last[i]) << '\n';
    if (report) {
        os << "# e_inf," << format_scientific(report->e_inf) << '\n';
        os << "# e_l2," << format_scientific(report->e_l2) << '\n';
    }
}

void write_solve_json(const SolutionHistory& history,
                      const std::optional<ErrorReport>& report, std::ostream& os) {
    const Grid& g = history.grid;
    nlohmann::ordered_json j;
    j["x"] = nlohmann::ordered_json::array();
    j["u"] = nlohmann::ordered_json::array();
    for (int i = 0; i <= g.M; ++i) {
        j["x"].push_back(g.x(i));
        j["u"].push_back(history.levels.back()[i]);
    }
    if (report) {
        j["e_inf"] = report->e_inf;
        j["e_l2"] = report->e_l2;
    }
    os << j.dump(2) << '\n';
}

namespace {

struct Rgb {
    int r, g, b;
};

// Two-segment linear map: cold blue through light gray to warm red.
Rgb colormap(double t) {
    const auto mix = [](int a, int b, double s) { return static_cast<int>(std::lround(a + (b - a) * s)); };
    if (t < 0.5) {
        const double s = t * 2.0;
        return {mix(59, 221, s), mix(76, 221, s), mix(192, 221, s)};
    }
    const double s = (t - 0.5) * 2.0;
    return {mix(221, 180, s), mix(221, 4, s), mix(221, 38, s)};
}

void svg_text(std::ostream& os, double x, double y, const std::string& body,
              const char* anchor = "middle") {
    os << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"12\" font-family=\"sans-serif\" text-anchor=\""
       << anchor << "\">" << body << "</text>\n";
}

}  // namespace

void emit_heatmap_svg(const SolutionHistory& history, const std::string& path) {
    std::ofstream f = open_or_throw(path);
    const Grid& g = history.grid;

    double vmin = history.levels[0][0], vmax = vmin;
    for (const Field& level : history.levels)
        for (double v : level) {
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
    const double span = vmax > vmin ? vmax - vmin : 1.0;

    const int sx = (g.M + 160) / 160;
    const int st = (g.N + 160) / 160;
    const int nx = g.M / sx + 1;
    const int nt = g.N / st + 1;

    const double px = 70.0, py = 20.0, pw = 530.0, ph = 400.0;
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n";
    f << "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
    const double cw = pw / nx, chh = ph / nt;
    for (int kt = 0; kt < nt; ++kt) {
        const Field& level = history.levels[static_cast<size_t>(kt) * st];
        for (int ci = 0; ci < nx; ++ci) {
            const double v = level[static_cast<size_t>(ci) * sx];
            const Rgb c = colormap((v - vmin) / span);
            f << "<rect x=\"" << fmt("%.2f", px + ci * cw) << "\" y=\""
              << fmt("%.2f", py + ph - (kt + 1) * chh) << "\" width=\"" << fmt("%.2f", cw + 0.5)
              << "\" height=\"" << fmt("%.2f", chh + 0.5) << "\" fill=\"rgb(" << c.r << ',' << c.g
              << ',' << c.b << ")\"/>\n";
        }
    }
    f << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg_text(f, px + pw / 2, py + ph + 35, "x");
    svg_text(f, px - 45, py + ph / 2, "t", "middle");
    svg_text(f, px, py + ph + 18, "0");
    svg_text(f, px + pw, py + ph + 18, fmt("%g", g.L));
    svg_text(f, px - 25, py + ph + 4, "0");
    svg_text(f, px - 25, py + 10, fmt("%g", g.T));
    svg_text(f, px + pw / 2, py + ph + 55,
             "u range [" + format_scientific(vmin) + ", " + format_scientific(vmax) + "]");
    f << "</svg>\n";
}

void emit_rate_svg(const RateTable& table, const std::string& path) {
    std::ofstream f = open_or_throw(path);
    if (table.rows.empty()) throw std::invalid_argument("rate table has no rows to plot");

    const double slope = table.axis == RateAxis::Temporal ? 2.0 : 4.0;
    const double s0 = table.rows.front().step;
    const double e0 = std::max(table.rows.front().e_inf, 1e-300);

    double lx_min = 1e300, lx_max = -1e300, ly_min = 1e300, ly_max = -1e300;
    const auto include = [&](double step, double err) {
        if (err <= 0.0) return;
        lx_min = std::min(lx_min, std::log10(step));
        lx_max = std::max(lx_max, std::log10(step));
        ly_min = std::min(ly_min, std::log10(err));
        ly_max = std::max(ly_max, std::log10(err));
    };
    for (const RateRow& row : table.rows) {
        include(row.step, row.e_inf);
        include(row.step, row.e_l2);
        include(row.step, 0.6 * e0 * std::pow(row.step / s0, slope));
    }
    if (lx_min > lx_max) throw std::invalid_argument("rate table has no positive errors to plot");
    if (lx_max - lx_min < 1e-12) lx_max = lx_min + 1.0;
    if (ly_max - ly_min < 1e-12) ly_max = ly_min + 1.0;

    const double px = 80.0, py = 20.0, pw = 520.0, ph = 390.0;
    const auto X = [&](double step) {
        return px + (std::log10(step) - lx_min) / (lx_max - lx_min) * pw;
    };
    const auto Y = [&](double err) {
        return py + ph - (std::log10(err) - ly_min) / (ly_max - ly_min) * ph;
    };

    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n";
    f << "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
    f << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";

    const auto polyline = [&](const char* color, const char* dash, auto value) {
        f << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
        if (dash) f << " stroke-dasharray=\"" << dash << "\"";
        f << " points=\"";
        for (const RateRow& row : table.rows) {
            const double v = value(row);
            if (v <= 0.0) continue;
            f << fmt("%.2f", X(row.step)) << ',' << fmt("%.2f", Y(v)) << ' ';
        }
        f << "\"/>\n";
    };
    polyline("#888888", "6,4",
             [&](const RateRow& r) { return 0.6 * e0 * std::pow(r.step / s0, slope); });
    polyline("#1f77b4", nullptr, [](const RateRow& r) { return r.e_inf; });
    polyline("#d62728", nullptr, [](const RateRow& r) { return r.e_l2; });
    for (const RateRow& row : table.rows) {
        if (row.e_inf > 0.0)
            f << "<circle cx=\"" << fmt("%.2f", X(row.step)) << "\" cy=\"" << fmt("%.2f", Y(row.e_inf))
              << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
        if (row.e_l2 > 0.0)
            f << "<circle cx=\"" << fmt("%.2f", X(row.step)) << "\" cy=\"" << fmt("%.2f", Y(row.e_l2))
              << "\" r=\"3\" fill=\"#d62728\"/>\n";
        svg_text(f, X(row.step), py + ph + 18, fmt("%g", row.step));
    }
    svg_text(f, px + pw / 2, py + ph + 40,
             table.axis == RateAxis::Temporal ? "time step" : "mesh size");
    svg_text(f, px - 10, Y(std::pow(10.0, ly_min)) + 4, format_scientific(std::pow(10.0, ly_min)), "end");
    svg_text(f, px - 10, Y(std::pow(10.0, ly_max)) + 4, format_scientific(std::pow(10.0, ly_max)), "end");
    svg_text(f, px + 15, py + 20, "max-norm error", "start");
    svg_text(f, px + 15, py + 38, "L2 error", "start");
    svg_text(f, px + 15, py + 56, fmt("slope-%g guide", slope), "start");
    f << "</svg>\n";
}

}  // namespace fracpde
