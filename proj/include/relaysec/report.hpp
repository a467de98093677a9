#ifndef RELAYSEC_REPORT_HPP
#define RELAYSEC_REPORT_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "relaysec/bounds.hpp"
#include "relaysec/montecarlo.hpp"
#include "relaysec/params.hpp"

namespace relaysec {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric CSV fields carry 9 significant digits.
inline std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

inline const std::string& csv_header() {
    static const std::string header =
        "n,m,k,tau,gamma_r,gamma_e,es,n0,epsilon_t,epsilon_s,"
        "trials,block_length,seed,"
        "p_out_t_hat,p_out_t_lo,p_out_t_hi,p_out_s_hat,p_out_s_lo,p_out_s_hi,"
        "jain_index,mean_jam1,mean_jam2,"
        "psi,p_out_t_bound,p_out_s_bound,tau_min,tau_max,m_max,feasible,diagnostics";
    return header;
}

// One row of the fixed 30-column schema. Simulation columns are empty for
// bounds-only rows; undefined bound values are empty fields.
inline std::string format_csv_row(const SystemParams& p, const SimConfig& cfg,
                                  const SimResult* sim, const BoundsReport& bounds) {
    std::ostringstream os;
    auto opt = [](const std::optional<double>& v) {
        return v ? format_number(*v) : std::string();
    };
    os << p.n << ',' << p.m << ',' << p.k << ',' << format_number(p.tau) << ','
       << format_number(p.gamma_r) << ',' << format_number(p.gamma_e) << ','
       << format_number(p.es) << ',' << format_number(p.n0) << ','
       << format_number(p.epsilon_t) << ',' << format_number(p.epsilon_s) << ','
       << cfg.trials << ',' << cfg.block_length << ',' << cfg.seed << ',';
    if (sim) {
        os << format_number(sim->p_out_t_hat) << ',' << format_number(sim->ci_t.lo)
           << ',' << format_number(sim->ci_t.hi) << ','
           << format_number(sim->p_out_s_hat) << ',' << format_number(sim->ci_s.lo)
           << ',' << format_number(sim->ci_s.hi) << ','
           << format_number(sim->jain_index) << ',' << format_number(sim->mean_jam1)
           << ',' << format_number(sim->mean_jam2) << ',';
    } else {
        os << ",,,,,,,,,";
    }
    os << format_number(bounds.psi) << ',' << format_number(bounds.p_out_t_bound)
       << ',' << format_number(bounds.p_out_s_bound) << ',' << opt(bounds.tau_min)
       << ',' << opt(bounds.tau_max) << ',' << opt(bounds.m_max) << ','
       << (bounds.feasible ? "true" : "false") << ',' << bounds.diagnostics_joined();
    return os.str();
}

// Appends rows, writing the header first when the file is new or empty.
inline void append_csv_rows(const std::string& path,
                            const std::vector<std::string>& rows) {
    bool need_header = true;
    {
        std::ifstream probe(path, std::ios::binary | std::ios::ate);
        if (probe && probe.tellg() > 0) need_header = false;
    }
    std::ofstream out(path, std::ios::app);
    if (!out) throw IoError("cannot open output file: " + path);
    if (need_header) out << csv_header() << '\n';
    for (const auto& row : rows) out << row << '\n';
    if (!out) throw IoError("write failed: " + path);
}

// ---- sweep descriptor ----

struct SweepSpec {
    std::string param;           // one of k, tau, n, m
    std::vector<double> values;  // evaluation points, in order
};

// Accepts "PARAM:START:STOP:STEP" or an explicit list "PARAM:V1,V2,...".
inline SweepSpec parse_sweep(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0) {
        throw std::invalid_argument("sweep: expected PARAM:START:STOP:STEP or PARAM:V1,V2,...");
    }
    SweepSpec spec;
    spec.param = text.substr(0, colon);
    if (spec.param != "k" && spec.param != "tau" && spec.param != "n" &&
        spec.param != "m") {
        throw std::invalid_argument("sweep: parameter must be one of k, tau, n, m");
    }
    const std::string rest = text.substr(colon + 1);
    auto parse_num = [](const std::string& s) {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("sweep: bad number '" + s + "'");
        return v;
    };
    if (rest.find(',') != std::string::npos) {
        std::istringstream is(rest);
        std::string item;
        while (std::getline(is, item, ',')) spec.values.push_back(parse_num(item));
    } else {
        std::vector<std::string> parts;
        std::istringstream is(rest);
        std::string item;
        while (std::getline(is, item, ':')) parts.push_back(item);
        if (parts.size() == 1) {
            spec.values.push_back(parse_num(parts[0]));
        } else if (parts.size() == 3) {
            const double start = parse_num(parts[0]);
            const double stop = parse_num(parts[1]);
            const double step = parse_num(parts[2]);
            if (step <= 0.0) throw std::invalid_argument("sweep: step must be > 0");
            for (double v = start; v <= stop + step * 1e-9; v += step) {
                spec.values.push_back(v);
            }
        } else {
            throw std::invalid_argument("sweep: expected PARAM:START:STOP:STEP");
        }
    }
    if (spec.values.empty()) throw std::invalid_argument("sweep: produced zero points");
    return spec;
}

// ---- SVG line chart ----

struct SvgSeries {
    std::string name;
    std::string color;
    std::vector<double> y;  // NaN entries are skipped
};

// Self-contained SVG 1.1 line chart, 800x600, linear axes, y fixed to [0,1]
// (every plotted series is a probability or a fairness index).
inline void write_svg_chart(const std::string& path, const std::string& x_label,
                            const std::vector<double>& xs,
                            const std::vector<SvgSeries>& series) {
    if (xs.empty()) throw std::invalid_argument("svg: no points");
    const double width = 800, height = 600;
    const double ml = 70, mr = 160, mt = 30, mb = 60;
    double xmin = xs.front(), xmax = xs.front();
    for (double x : xs) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
    }
    if (xmax == xmin) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    auto sx = [&](double x) {
        return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr);
    };
    auto sy = [&](double y) { return height - mb - y * (height - mt - mb); };

    std::ofstream out(path);
    if (!out) throw IoError("cannot open SVG output file: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n"
        << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << sy(0) << "\" x2=\"" << width - mr
        << "\" y2=\"" << sy(0) << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << ml << "\" y1=\"" << sy(0) << "\" x2=\"" << ml
        << "\" y2=\"" << sy(1) << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 5; ++t) {
        const double xv = xmin + (xmax - xmin) * t / 5.0;
        const double yv = t / 5.0;
        out << "<line x1=\"" << sx(xv) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(xv)
            << "\" y2=\"" << sy(0) + 5 << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << sx(xv) << "\" y=\"" << sy(0) + 20
            << "\" font-size=\"12\" text-anchor=\"middle\">" << format_number(xv)
            << "</text>\n"
            << "<line x1=\"" << ml - 5 << "\" y1=\"" << sy(yv) << "\" x2=\"" << ml
            << "\" y2=\"" << sy(yv) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << ml - 8 << "\" y=\"" << sy(yv) + 4
            << "\" font-size=\"12\" text-anchor=\"end\">" << format_number(yv)
            << "</text>\n";
    }
    out << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 15
        << "\" font-size=\"14\" text-anchor=\"middle\">" << x_label << "</text>\n";
    // series
    double legend_y = mt + 10;
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < xs.size() && i < s.y.size(); ++i) {
            if (std::isnan(s.y[i])) continue;
            out << sx(xs[i]) << ',' << sy(s.y[i]) << ' ';
        }
        out << "\"/>\n";
        out << "<rect x=\"" << width - mr + 10 << "\" y=\"" << legend_y - 9
            << "\" width=\"12\" height=\"12\" fill=\"" << s.color << "\"/>\n"
            << "<text x=\"" << width - mr + 28 << "\" y=\"" << legend_y + 2
            << "\" font-size=\"12\">" << s.name << "</text>\n";
        legend_y += 18;
    }
    out << "</svg>\n";
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace relaysec

#endif
