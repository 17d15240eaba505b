#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace gtrellis::cli {

void Report::heading(std::string const &title)
{
  if (!machine_)
    out_ << "\n== " << title << " ==\n";
}

void Report::field(std::string const &key, std::string const &label,
                   std::string const &value)
{
  if (machine_)
    out_ << key << "=" << value << "\n";
  else
    out_ << label << ": " << value << "\n";
}

void Report::line(std::string const &text)
{
  if (!machine_)
    out_ << text << "\n";
}

void Report::record(std::string const &key, std::string const &value)
{
  if (machine_)
    out_ << key << "=" << value << "\n";
}

void Report::grid(std::string const &key, std::string const &title,
                  std::string const &corner,
                  std::vector<std::string> const &rows,
                  std::vector<std::string> const &cols,
                  std::vector<std::vector<std::string>> const &cells,
                  std::string const &legend)
{
  if (machine_) {
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (!cells[r][c].empty())
          out_ << key << "." << rows[r] << "." << cols[c] << "=" << cells[r][c]
               << "\n";
    return;
  }

  std::size_t width = corner.size();
  for (auto const &s : rows)
    width = std::max(width, s.size());
  std::size_t cell_width = 1;
  for (auto const &s : cols)
    cell_width = std::max(cell_width, s.size());
  for (auto const &row : cells)
    for (auto const &s : row)
      cell_width = std::max(cell_width, s.size());

  out_ << "\n" << title << "\n";
  out_ << std::setw(static_cast<int>(width)) << std::left << corner << " |";
  for (auto const &c : cols)
    out_ << " " << std::setw(static_cast<int>(cell_width)) << std::right << c;
  out_ << "\n" << std::string(width + 2 + cols.size() * (cell_width + 1), '-')
       << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out_ << std::setw(static_cast<int>(width)) << std::left << rows[r] << " |";
    for (std::size_t c = 0; c < cols.size(); ++c)
      out_ << " " << std::setw(static_cast<int>(cell_width)) << std::right
           << (cells[r][c].empty() ? "." : cells[r][c]);
    out_ << "\n";
  }
  out_ << std::left << legend << "\n";
}

std::string join(std::vector<std::size_t> const &values, std::string const &sep)
{
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i)
    out << (i ? sep : "") << values[i];
  return out.str();
}

} // namespace gtrellis::cli
