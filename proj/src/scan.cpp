#include "holo/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <ostream>
#include <sstream>
#include <thread>

#include "holo/error.hpp"

namespace holo {

namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string cell(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

// Splits one CSV record starting at `pos`; advances pos past the line break.
std::vector<std::string> read_record(const std::string& text, std::size_t& pos) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  while (pos < text.size()) {
    const char c = text[pos++];
    if (quoted) {
      if (c == '"') {
        if (pos < text.size() && text[pos] == '"') {
          cur += '"';
          ++pos;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && pos < text.size() && text[pos] == '\n') ++pos;
      break;
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

double parse_cell(const std::string& s) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  // strtod rather than stod: subnormals must round-trip too.
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size())
    throw Error(ErrorKind::InvalidArgument, "bad CSV number '" + s + "'");
  return v;
}

}  // namespace

void ScanResult::add_row(std::vector<double> row) {
  if (row.size() != header.size()) {
    std::ostringstream os;
    os << "row has " << row.size() << " cells, header has " << header.size();
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
  rows.push_back(std::move(row));
}

void ScanResult::set_meta(const std::string& key, const std::string& value) {
  for (auto& kv : metadata) {
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  }
  metadata.emplace_back(key, value);
}

const std::string* ScanResult::meta(const std::string& key) const {
  for (const auto& kv : metadata)
    if (kv.first == key) return &kv.second;
  return nullptr;
}

std::size_t ScanResult::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw Error(ErrorKind::InvalidArgument, "no column '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

void write_csv(std::ostream& os, const ScanResult& scan, bool header_comments) {
  if (header_comments) {
    for (const auto& [k, v] : scan.metadata) os << '#' << k << '=' << v << '\n';
  }
  for (std::size_t i = 0; i < scan.header.size(); ++i) os << (i ? "," : "") << quote(scan.header[i]);
  os << '\n';
  for (const auto& row : scan.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell(row[i]);
    os << '\n';
  }
}

std::string to_csv(const ScanResult& scan, bool header_comments) {
  std::ostringstream os;
  write_csv(os, scan, header_comments);
  return os.str();
}

ScanResult parse_csv(const std::string& text) {
  ScanResult r;
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == '#') {
    const std::size_t end = text.find('\n', pos);
    const std::string line = text.substr(pos + 1, (end == std::string::npos ? text.size() : end) - pos - 1);
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "bad metadata line '#" + line + "'");
    r.metadata.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    pos = end == std::string::npos ? text.size() : end + 1;
  }
  if (pos >= text.size()) throw Error(ErrorKind::InvalidArgument, "CSV has no header");
  r.header = read_record(text, pos);
  while (pos < text.size()) {
    const auto fields = read_record(text, pos);
    if (fields.size() == 1 && fields[0].empty()) continue;
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_cell(f));
    r.add_row(std::move(row));
  }
  return r;
}

std::string format_number(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::vector<double> Grid::points() const {
  if (steps < 1) throw Error(ErrorKind::InvalidArgument, "grid needs at least one step");
  if (!std::isfinite(from) || !std::isfinite(to)) throw Error(ErrorKind::InvalidArgument, "grid ends must be finite");
  if (log && !(from > 0.0 && to > 0.0))
    throw Error(ErrorKind::InvalidArgument, "log grid needs positive ends");
  std::vector<double> p(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double f = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
    p[static_cast<std::size_t>(i)] =
        log ? std::exp(std::log(from) + f * (std::log(to) - std::log(from))) : from + f * (to - from);
  }
  // Land exactly on the requested ends.
  p.front() = from;
  if (steps > 1) p.back() = to;
  return p;
}

std::vector<std::vector<double>> parallel_rows(std::size_t n,
                                               const std::function<std::vector<double>(std::size_t)>& fn,
                                               unsigned threads) {
  std::vector<std::vector<double>> out(n);
  std::vector<std::exception_ptr> errors(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace holo
