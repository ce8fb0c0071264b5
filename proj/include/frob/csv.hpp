#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "frob/bounds.hpp"
#include "frob/counterexamples.hpp"
#include "frob/montecarlo.hpp"
#include "frob/subquadratic.hpp"

namespace frob::csv {

inline constexpr std::string_view kNA = "NA";

inline constexpr std::string_view kTrialsHeader =
    "trial,n,vector,frobenius,erdos,schur,vitek,fukrob,selmer,beck,whcorr,whminsyl,ratio_an_a1,best,best_tie";
inline constexpr std::string_view kSummaryHeader = "n,bound,count,mean,min,q1,median,q3,max";
inline constexpr std::string_view kRatiosHeader = "trial,n,r_n,flag";
inline constexpr std::string_view kCounterexamplesHeader = "a1,a2,a3,frobenius,selmer,fails,pairwise_coprime";
inline constexpr std::string_view kSubquadraticHeader = "p,epsilon,c,frobenius,bound,violated";
inline constexpr std::string_view kPrimeRatiosHeader = "p,epsilon,c,ratio";

/// Fixed-point real; 6 decimals unless told otherwise.
inline std::string real(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

/// Shortest round-trip form for parameters such as epsilon (0.005, not 0.005000).
inline std::string param(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

inline std::string boolean(bool b) { return b ? "true" : "false"; }

/// `# key=value` lines written atop every artifact.
class ConfigEcho {
 public:
  ConfigEcho& add(std::string key, std::string value) {
    entries_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  void write(std::ostream& out) const {
    for (const auto& [k, v] : entries_) out << "# " << k << '=' << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

inline void write_trials(std::ostream& out, const ConfigEcho& echo, std::span<const TrialRecord> records) {
  echo.write(out);
  out << kTrialsHeader << '\n';
  for (const auto& r : records) {
    out << r.trial_index << ',' << r.n << ',' << format_vector(r.vector) << ',' << r.frobenius;
    for (auto k : kAllBounds) {
      const auto& b = r.bounds[bound_index(k)];
      out << ',' << (b ? b->to_string() : std::string(kNA));
    }
    out << ',' << real(r.ratio_an_a1) << ',' << bound_name(r.best.kind) << ',' << boolean(r.best.tie) << '\n';
  }
}

inline void write_summary(std::ostream& out, const ConfigEcho& echo, std::span<const SummaryRow> rows) {
  echo.write(out);
  out << kSummaryHeader << '\n';
  for (const auto& row : rows) {
    const auto& s = row.stats;
    out << row.n << ',' << bound_name(row.kind) << ',' << s.count << ',' << real(s.mean) << ',' << real(s.min)
        << ',' << real(s.q1) << ',' << real(s.median) << ',' << real(s.q3) << ',' << real(s.max) << '\n';
  }
}

inline void write_ratios(std::ostream& out, const ConfigEcho& echo, std::span<const RatioRecord> rows) {
  echo.write(out);
  out << kRatiosHeader << '\n';
  for (const auto& r : rows) {
    out << r.trial_index << ',' << r.n << ',' << (r.r_n ? real(*r.r_n) : std::string(kNA)) << ','
        << to_string(r.flag) << '\n';
  }
}

inline void write_counterexamples(std::ostream& out, const ConfigEcho& echo, std::span<const FailureRow> rows) {
  echo.write(out);
  out << kCounterexamplesHeader << '\n';
  for (const auto& r : rows) {
    out << r.vector[0] << ',' << r.vector[1] << ',' << r.vector[2] << ',' << r.frobenius << ',' << r.selmer_value
        << ',' << boolean(r.fails) << ',' << boolean(r.pairwise_coprime) << '\n';
  }
}

inline void write_subquadratic(std::ostream& out, const ConfigEcho& echo, std::span<const SubquadraticRow> rows) {
  echo.write(out);
  out << kSubquadraticHeader << '\n';
  for (const auto& r : rows) {
    out << r.p << ',' << param(r.epsilon) << ',' << param(r.c_const) << ',' << r.frobenius << ','
        << real(r.test_bound) << ',' << boolean(r.violated) << '\n';
  }
}

inline void write_prime_ratios(std::ostream& out, const ConfigEcho& echo, std::span<const PrimeRatioRow> rows) {
  echo.write(out);
  out << kPrimeRatiosHeader << '\n';
  for (const auto& r : rows) {
    out << r.p << ',' << param(r.epsilon) << ',' << param(r.c_const) << ',' << real(r.ratio) << '\n';
  }
}

/// Writes `content` next to `path` and renames it into place, so readers
/// never see a half-written artifact.
inline void write_file(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    if (!f.flush()) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> echo;

  /// Column index by name; throws naming the missing column.
  std::size_t column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw std::runtime_error("missing column '" + std::string(name) + "'");
  }
};

inline std::vector<std::string> split(const std::string& line, char sep = ',') {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

/// Reads the artifacts written above: `# key=value` echo lines, a header,
/// then plain comma-separated rows (no quoting is ever needed).
inline Table read(std::istream& in) {
  Table t;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!have_header && line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq != std::string::npos) t.echo.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
      continue;
    }
    auto cells = split(line);
    if (!have_header) {
      t.header = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != t.header.size()) {
      throw std::runtime_error("row has " + std::to_string(cells.size()) + " cells, header has " +
                               std::to_string(t.header.size()));
    }
    t.rows.push_back(std::move(cells));
  }
  if (!have_header) throw std::runtime_error("no header line");
  return t;
}

}  // namespace frob::csv
