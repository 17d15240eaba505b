#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gtrellis::cli {

/// Writes either aligned human-readable text or flat key=value lines.
class Report
{
public:
  Report(std::ostream &out, bool machine) : out_(out), machine_(machine) {}

  bool machine() const { return machine_; }

  void heading(std::string const &title);
  /// `label: value` in text mode, `key=value` in machine mode.
  void field(std::string const &key, std::string const &label,
             std::string const &value);
  /// Free text, suppressed in machine mode.
  void line(std::string const &text);
  /// Machine-only record.
  void record(std::string const &key, std::string const &value);

  /// A table of cell strings with row and column labels. Empty cells print
  /// as '.'. In machine mode each cell becomes `key.<row>.<col>=value`.
  void grid(std::string const &key, std::string const &title,
            std::string const &corner, std::vector<std::string> const &rows,
            std::vector<std::string> const &cols,
            std::vector<std::vector<std::string>> const &cells,
            std::string const &legend);

private:
  std::ostream &out_;
  bool machine_;
};

std::string join(std::vector<std::size_t> const &values,
                 std::string const &sep = " ");

} // namespace gtrellis::cli
