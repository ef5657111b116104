#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace holo {

/// Tabular output of a CLI scan. Rows are doubles; NaN marks a failed cell.
struct ScanResult {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  /// Ordered key/value pairs recording every flag needed to rerun the scan.
  std::vector<std::pair<std::string, std::string>> metadata;

  void add_row(std::vector<double> row);
  void set_meta(const std::string& key, const std::string& value);
  const std::string* meta(const std::string& key) const;
  std::size_t column(const std::string& name) const;
};

/// CSV with RFC-4180 quoting and %.16e numbers. With `header_comments`, each
/// metadata entry is written first as a "#key=value" line.
void write_csv(std::ostream& os, const ScanResult& scan, bool header_comments);
std::string to_csv(const ScanResult& scan, bool header_comments);
/// Inverse of to_csv (either form).
ScanResult parse_csv(const std::string& text);

/// Shortest %.17g form of a double, for metadata.
std::string format_number(double v);

struct Grid {
  double from = 0.0;
  double to = 1.0;
  int steps = 1;
  bool log = false;

  /// `steps` points including both ends (a single point is `from`).
  std::vector<double> points() const;
};

/// Evaluates fn(i) for i in [0, n) on up to `threads` workers (0 = hardware
/// concurrency) and returns the results in index order. An exception from
/// any row is rethrown after all workers finish, lowest index first.
std::vector<std::vector<double>> parallel_rows(std::size_t n,
                                               const std::function<std::vector<double>(std::size_t)>& fn,
                                               unsigned threads = 0);

}  // namespace holo
