#pragma once

#include <string>
#include <vector>

namespace exocalc::cli {

/// %.12g, with -0 printed as 0 so sign noise on zeros never breaks byte equality.
std::string format_number(double v);

/// CSV text with a leading `# schema=1` line and a fixed header.
class CsvTable
{
  public:
    explicit CsvTable(std::vector<std::string> header);

    CsvTable& row(const std::vector<std::string>& cells);
    std::size_t size() const { return rows_.size(); }
    const std::vector<std::string>& header() const { return header_; }
    std::string str() const;

  private:
    std::vector<std::string> header_;
    std::vector<std::string> rows_;
};

struct Series
{
    std::string label;
    std::vector<double> x, y;
};

/// Minimal static line chart; non-finite points are skipped.
std::string line_chart_svg(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                           const std::vector<Series>& series);

} // namespace exocalc::cli
