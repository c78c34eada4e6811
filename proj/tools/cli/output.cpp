#include "cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace exocalc::cli {

std::string format_number(double v)
{
    if (v == 0.0)
        return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

CsvTable& CsvTable::row(const std::vector<std::string>& cells)
{
    if (cells.size() != header_.size())
        throw std::logic_error("csv row width differs from the header");
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            line += ',';
        line += cells[i];
    }
    rows_.push_back(std::move(line));
    return *this;
}

std::string CsvTable::str() const
{
    std::string out = "# schema=1\n";
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (i)
            out += ',';
        out += header_[i];
    }
    out += '\n';
    for (const auto& r : rows_) {
        out += r;
        out += '\n';
    }
    return out;
}

namespace {

std::string escape(const std::string& s)
{
    std::string o;
    for (char c : s) {
        switch (c) {
        case '<':
            o += "&lt;";
            break;
        case '>':
            o += "&gt;";
            break;
        case '&':
            o += "&amp;";
            break;
        default:
            o += c;
        }
    }
    return o;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

} // namespace

std::string line_chart_svg(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                           const std::vector<Series>& series)
{
    const double W = 640, H = 420, left = 70, right = 150, top = 40, bottom = 50;
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
                continue;
            x0 = std::min(x0, s.x[i]);
            x1 = std::max(x1, s.x[i]);
            y0 = std::min(y0, s.y[i]);
            y1 = std::max(y1, s.y[i]);
        }
    if (!std::isfinite(x0)) {
        x0 = 0;
        x1 = 1;
        y0 = 0;
        y1 = 1;
    }
    if (x1 == x0)
        x1 = x0 + 1;
    if (y1 == y0) {
        y0 -= 0.5;
        y1 += 0.5;
    }
    const double pw = W - left - right, ph = H - top - bottom;
    auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return top + (1.0 - (y - y0) / (y1 - y0)) * ph; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(title) << "</text>\n";
    o << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double xv = x0 + (x1 - x0) * k / 4.0, yv = y0 + (y1 - y0) * k / 4.0;
        o << "<text x=\"" << px(xv) << "\" y=\"" << top + ph + 16 << "\" text-anchor=\"middle\">" << format_number(xv) << "</text>\n";
        o << "<text x=\"" << left - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">" << format_number(yv) << "</text>\n";
    }
    o << "<text x=\"" << left + pw / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\">" << escape(xlabel) << "</text>\n";
    o << "<text transform=\"translate(16," << top + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">" << escape(ylabel) << "</text>\n";
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* colour = kPalette[s % (sizeof kPalette / sizeof *kPalette)];
        o << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < series[s].x.size() && i < series[s].y.size(); ++i)
            if (std::isfinite(series[s].x[i]) && std::isfinite(series[s].y[i]))
                o << px(series[s].x[i]) << ',' << py(series[s].y[i]) << ' ';
        o << "\"/>\n";
        const double ly = top + 14 + 16.0 * static_cast<double>(s);
        o << "<line x1=\"" << left + pw + 10 << "\" y1=\"" << ly - 4 << "\" x2=\"" << left + pw + 28 << "\" y2=\"" << ly - 4
          << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        o << "<text x=\"" << left + pw + 32 << "\" y=\"" << ly << "\">" << escape(series[s].label) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

} // namespace exocalc::cli
