// frob: command-line front end for the Frobenius toolkit.
//
//   frob compute --vector 8,32,59
//   frob bounds --vector 3,5,7 --regime coprime
//   frob simulate --n 3:10 --m 100 --trials 1000 --regime gcd --seed 42 --out DIR
//   frob counterexamples --a1 4:8 --max 60 --out DIR
//   frob subquadratic --c 1 --eps 0.005,0.01,0.02 --primes 59 --out DIR
//   frob ratio --c 2 --eps 0.05,0.1,0.2 --primes 59 --out DIR
//
// Exit status: 0 success, 1 validation error, 2 runtime error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "frob/frob.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;
constexpr std::uint64_t kDefaultSeed = 42;

struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

// "lo:hi" (inclusive) or a single value.
Range parse_range(const std::string& text, const char* what) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const auto v = std::stoull(text, &used);
      if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
      return {v, v};
    }
    const auto lo_text = text.substr(0, colon);
    const auto hi_text = text.substr(colon + 1);
    const auto lo = std::stoull(lo_text, &used);
    if (used != lo_text.size() || lo_text.front() == '-') throw std::invalid_argument(text);
    const auto hi = std::stoull(hi_text, &used);
    if (used != hi_text.size() || hi_text.front() == '-') throw std::invalid_argument(text);
    if (lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw frob::ValidationError(std::string("malformed ") + what + " range '" + text + "' (expected lo:hi)");
  }
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw frob::ValidationError("malformed number '" + cell + "' in list '" + text + "'");
    }
  }
  if (out.empty()) throw frob::ValidationError("empty list");
  return out;
}

frob::ConditionKind parse_regime(const std::string& text) {
  if (text == "gcd") return frob::ConditionKind::GcdOne;
  if (text == "coprime") return frob::ConditionKind::PairwiseCoprime;
  throw frob::ValidationError("regime must be 'gcd' or 'coprime', got '" + text + "'");
}

// Left-aligned first column, right-aligned rest.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (std::size_t ri = 0; ri < rows_.size(); ++ri) {
      const auto& r = rows_[ri];
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out << "  ";
        const auto pad = std::string(width[i] - r[i].size(), ' ');
        out << (i == 0 ? r[i] + pad : pad + r[i]);
      }
      out << '\n';
      if (ri == 0) {
        std::size_t total = 0;
        for (auto w : width) total += w;
        out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string title_bool(bool b) { return b ? "True" : "False"; }

std::optional<fs::path> prepare_out(const std::string& out) {
  if (out.empty()) return std::nullopt;
  fs::create_directories(out);
  return fs::path(out);
}

std::string render(const auto& writer, const frob::csv::ConfigEcho& echo, const auto& rows) {
  std::ostringstream s;
  writer(s, echo, rows);
  return s.str();
}

// ---------------------------------------------------------------------------

int run_compute(const std::string& vector_text, bool check) {
  const auto v = frob::make_coin_vector(frob::parse_entries(vector_text));
  const auto result = frob::frobenius_exact(v);
  std::cout << "a = (" << frob::format_vector(v, ',') << "), n = " << v.size() << '\n';
  std::cout << "pairwise coprime: " << (v.satisfies(frob::ConditionKind::PairwiseCoprime) ? "yes" : "no") << '\n';
  std::cout << "F = " << result.value << '\n';
  if (check) {
    const auto oracle = frob::frobenius_bruteforce(v);
    std::cout << "brute force: " << oracle << (oracle == result.value ? " (agrees)" : " (MISMATCH)") << '\n';
    if (oracle != result.value) return kExitRuntime;
  }
  return 0;
}

int run_bounds(const std::string& vector_text, const std::string& regime_text) {
  const auto regime = parse_regime(regime_text);
  const auto v = frob::make_coin_vector(frob::parse_entries(vector_text));
  const auto evals = frob::evaluate_all(v, regime);
  const auto f = frob::frobenius_exact(v).value;
  std::cout << "a = (" << frob::format_vector(v, ',') << "), F = " << f << '\n';
  TextTable table({"bound", "value", "applicable", "bound - F", "note"});
  for (const auto& e : evals) {
    table.add({std::string(frob::bound_name(e.kind)), e.value ? e.value->to_string() : "NA",
               e.applicable ? "yes" : "no", e.value ? frob::csv::real(e.value->minus(f), 3) : "NA", e.reason});
  }
  table.print(std::cout);
  return 0;
}

struct SimulateArgs {
  std::string n_range = "3:10";
  std::uint64_t m = 100;
  std::uint64_t k = 0;
  std::uint64_t trials = 1000;
  std::string regime = "gcd";
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::uint64_t max_attempts = 10'000;
  std::string out;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("FROB_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw frob::ValidationError(std::string("FROB_SEED is not an unsigned integer: '") + env + "'");
  }
  return kDefaultSeed;
}

int run_simulate(const SimulateArgs& a) {
  const auto range = parse_range(a.n_range, "dimension");
  frob::SamplerConfig cfg;
  cfg.m = a.m;
  cfg.condition = parse_regime(a.regime);
  cfg.master_seed = resolve_seed(a.seed);
  cfg.max_attempts_per_trial = a.max_attempts;
  if (a.trials == 0) throw frob::ValidationError("--trials must be >= 1");
  for (auto n = range.lo; n <= range.hi; ++n) {
    auto probe = cfg;
    probe.n = n;
    probe.k = a.k == 0 ? n : a.k;
    probe.validate();
  }
  const auto out_dir = prepare_out(a.out);

  const auto records = frob::run_dimension_sweep(cfg, range.lo, range.hi, a.k, a.trials, a.threads);
  const auto summary = frob::summary_table(records);

  frob::csv::ConfigEcho echo;
  echo.add("tool", "frob simulate")
      .add("seed", std::to_string(cfg.master_seed))
      .add("n", std::to_string(range.lo) + ":" + std::to_string(range.hi))
      .add("k", a.k == 0 ? "n" : std::to_string(a.k))
      .add("m", std::to_string(cfg.m))
      .add("condition", std::string(frob::to_string(cfg.condition)))
      .add("trials", std::to_string(a.trials));

  TextTable table({"n", "bound", "count", "mean", "min", "q1", "median", "q3", "max"});
  for (const auto& row : summary) {
    const auto& s = row.stats;
    table.add({std::to_string(row.n), std::string(frob::bound_name(row.kind)), std::to_string(s.count),
               frob::csv::real(s.mean, 2), frob::csv::real(s.min, 2), frob::csv::real(s.q1, 2),
               frob::csv::real(s.median, 2), frob::csv::real(s.q3, 2), frob::csv::real(s.max, 2)});
  }
  table.print(std::cout);

  std::vector<frob::RatioRecord> ratios;
  if (cfg.condition == frob::ConditionKind::PairwiseCoprime) {
    ratios = frob::ratio_table(records);
    std::uint64_t excluded = 0;
    for (const auto& r : ratios) excluded += r.flag == frob::RatioFlag::ZeroDenominator;
    std::cout << "selmer violations (F > bound): " << frob::count_violations(records, frob::BoundKind::Selmer)
              << " of " << records.size() << '\n';
    std::cout << "R_n excluded (zero denominator): " << excluded << '\n';
  }

  if (out_dir) {
    frob::csv::write_file(*out_dir / "trials.csv", render(frob::csv::write_trials, echo, records));
    frob::csv::write_file(*out_dir / "summary.csv", render(frob::csv::write_summary, echo, summary));
    if (cfg.condition == frob::ConditionKind::PairwiseCoprime) {
      frob::csv::write_file(*out_dir / "ratios.csv", render(frob::csv::write_ratios, echo, ratios));
    }
  }
  return 0;
}

int run_counterexamples(const std::string& a1_text, std::uint64_t max_entry, const std::string& out) {
  const auto range = parse_range(a1_text, "a1");
  std::set<std::uint64_t> a1_values;
  for (auto a = range.lo; a <= range.hi; ++a) a1_values.insert(a);
  const auto rows = frob::search_selmer_failures(a1_values, max_entry);
  const auto out_dir = prepare_out(out);

  TextTable table({"a", "F(a)", "selmer", "pairwise coprime"});
  for (const auto& r : rows) {
    table.add({"(" + frob::format_vector(r.vector, ',') + ")", std::to_string(r.frobenius),
               std::to_string(r.selmer_value), r.pairwise_coprime ? "yes" : "no"});
  }
  table.print(std::cout);
  std::cout << rows.size() << " triples where F exceeds the Selmer value\n";

  if (out_dir) {
    frob::csv::ConfigEcho echo;
    echo.add("tool", "frob counterexamples").add("a1", a1_text).add("max", std::to_string(max_entry));
    frob::csv::write_file(*out_dir / "counterexamples.csv", render(frob::csv::write_counterexamples, echo, rows));
  }
  return 0;
}

int run_subquadratic(double c, const std::string& eps_text, std::uint64_t primes, const std::string& out) {
  const auto rows = frob::build_table(primes, c, parse_doubles(eps_text));
  const auto out_dir = prepare_out(out);
  TextTable table({"p", "epsilon", "F(p,p+1)", "bound", "F > bound"});
  for (const auto& r : rows) {
    table.add({std::to_string(r.p), frob::csv::param(r.epsilon), std::to_string(r.frobenius),
               frob::csv::real(r.test_bound, 2), title_bool(r.violated)});
  }
  table.print(std::cout);
  if (out_dir) {
    frob::csv::ConfigEcho echo;
    echo.add("tool", "frob subquadratic").add("c", frob::csv::param(c)).add("eps", eps_text).add("primes",
                                                                                               std::to_string(primes));
    frob::csv::write_file(*out_dir / "subquadratic.csv", render(frob::csv::write_subquadratic, echo, rows));
  }
  return 0;
}

int run_ratio(double c, const std::string& eps_text, std::uint64_t primes, const std::string& out) {
  const auto eps = parse_doubles(eps_text);
  const auto rows = frob::ratio_series(primes, c, eps);
  const auto out_dir = prepare_out(out);
  TextTable table({"p", "epsilon", "ratio"});
  for (const auto& r : rows) {
    table.add({std::to_string(r.p), frob::csv::param(r.epsilon), frob::csv::real(r.ratio, 4)});
  }
  table.print(std::cout);
  std::set<double> distinct(eps.begin(), eps.end());
  for (double e : distinct) {
    const auto p = frob::first_crossing(rows, e);
    std::cout << "epsilon " << frob::csv::param(e) << ": first ratio > 1 at "
              << (p ? "p = " + std::to_string(*p) : std::string("none in range")) << '\n';
  }
  if (out_dir) {
    frob::csv::ConfigEcho echo;
    echo.add("tool", "frob ratio").add("c", frob::csv::param(c)).add("eps", eps_text).add("primes",
                                                                                       std::to_string(primes));
    frob::csv::write_file(*out_dir / "ratios_primes.csv", render(frob::csv::write_prime_ratios, echo, rows));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius numbers, upper bounds and Monte Carlo comparisons"};
  app.require_subcommand(1);

  std::string vector_text;
  bool check = false;
  auto* compute = app.add_subcommand("compute", "Exact Frobenius number of a vector");
  compute->add_option("--vector", vector_text, "Comma-separated positive entries, e.g. 8,32,59")->required();
  compute->add_flag("--check", check, "Cross-check against the brute-force oracle");

  std::string regime = "gcd";
  auto* bounds = app.add_subcommand("bounds", "Evaluate the upper bounds of one regime");
  bounds->add_option("--vector", vector_text, "Comma-separated positive entries")->required();
  bounds->add_option("--regime", regime, "gcd (4 bounds) or coprime (all 8)")->capture_default_str();

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo comparison of the bounds");
  simulate->add_option("--n", sim.n_range, "Dimension range lo:hi (inclusive)")->capture_default_str();
  simulate->add_option("--m", sim.m, "Upper entry bound m")->capture_default_str();
  simulate->add_option("--k", sim.k, "Lower entry bound k (default: n)");
  simulate->add_option("--trials", sim.trials, "Trials per dimension")->capture_default_str();
  simulate->add_option("--regime", sim.regime, "gcd or coprime")->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Master seed (fallback: $FROB_SEED, then 42)");
  simulate->add_option("--threads", sim.threads, "Worker threads (0 = all cores); output does not depend on it");
  simulate->add_option("--max-attempts", sim.max_attempts, "Rejection attempts per trial")->capture_default_str();
  simulate->add_option("--out", sim.out, "Output directory for trials.csv, summary.csv, ratios.csv");

  std::string a1_text = "4:8";
  std::uint64_t max_entry = 60;
  std::string out;
  auto* counter = app.add_subcommand("counterexamples", "Search triples where Selmer's formula falls below F");
  counter->add_option("--a1", a1_text, "Range of a_1 values lo:hi")->capture_default_str();
  counter->add_option("--max", max_entry, "Largest entry")->capture_default_str();
  counter->add_option("--out", out, "Output directory for counterexamples.csv");

  double c_sub = 1.0;
  std::string eps_text = "0.005,0.01,0.02,0.05,0.1,0.2";
  std::uint64_t prime_limit = 59;
  auto* subq = app.add_subcommand("subquadratic", "F(p,p+1) against C (p(p+1))^(1-eps)");
  subq->add_option("--c", c_sub, "Constant C")->capture_default_str();
  subq->add_option("--eps", eps_text, "Comma-separated epsilons in (0,1)")->capture_default_str();
  subq->add_option("--primes", prime_limit, "Largest prime considered")->capture_default_str();
  subq->add_option("--out", out, "Output directory for subquadratic.csv");

  double c_ratio = 2.0;
  auto* ratio = app.add_subcommand("ratio", "F(p,p+1) / (C (p(p+1))^(1-eps)) per prime");
  ratio->add_option("--c", c_ratio, "Constant C")->capture_default_str();
  ratio->add_option("--eps", eps_text, "Comma-separated epsilons in (0,1)")->capture_default_str();
  ratio->add_option("--primes", prime_limit, "Largest prime considered")->capture_default_str();
  ratio->add_option("--out", out, "Output directory for ratios_primes.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*compute) return run_compute(vector_text, check);
    if (*bounds) return run_bounds(vector_text, regime);
    if (*simulate) return run_simulate(sim);
    if (*counter) return run_counterexamples(a1_text, max_entry, out);
    if (*subq) return run_subquadratic(c_sub, eps_text, prime_limit, out);
    if (*ratio) return run_ratio(c_ratio, eps_text, prime_limit, out);
  } catch (const frob::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitValidation;
}
