#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "frob/bounds.hpp"
#include "frob/error.hpp"
#include "frob/frobenius.hpp"
#include "frob/sampling.hpp"
#include "frob/vectors.hpp"

namespace frob {

template <typename T>
using PerBound = std::array<std::optional<T>, kAllBounds.size()>;

/// Bound kinds competing for "tightest" in each regime. Beck is left out of
/// the coprime ranking: it beats WHCorr only finitely often.
inline std::span<const BoundKind> best_candidates(ConditionKind regime) {
  static constexpr std::array<BoundKind, 3> kCoprime = {BoundKind::Selmer, BoundKind::WHCorr, BoundKind::WHMinSyl};
  if (regime == ConditionKind::PairwiseCoprime) return kCoprime;
  return kGcdRegimeBounds;
}

/// Tie precedence: Selmer < WHCorr < WHMinSyl < Beck, then the gcd-regime
/// kinds in column order.
inline int tie_rank(BoundKind kind) {
  switch (kind) {
    case BoundKind::Selmer: return 0;
    case BoundKind::WHCorr: return 1;
    case BoundKind::WHMinSyl: return 2;
    case BoundKind::Beck: return 3;
    case BoundKind::ErdosGraham: return 4;
    case BoundKind::Schur: return 5;
    case BoundKind::Vitek: return 6;
    case BoundKind::FukshanskyRobins: return 7;
  }
  return 8;
}

struct BestBound {
  BoundKind kind;
  bool tie = false;
};

/// Kind with the smallest diff among `kinds`; inapplicable (absent) diffs are skipped.
inline BestBound classify_best(const PerBound<double>& diffs, std::span<const BoundKind> kinds) {
  std::optional<BoundKind> best;
  bool tie = false;
  for (auto k : kinds) {
    const auto& d = diffs[bound_index(k)];
    if (!d) continue;
    if (!best) {
      best = k;
      continue;
    }
    const double current = *diffs[bound_index(*best)];
    if (*d < current) {
      best = k;
      tie = false;
    } else if (*d == current) {
      tie = true;
      if (tie_rank(k) < tie_rank(*best)) best = k;
    }
  }
  if (!best) throw ValidationError("no applicable bound to classify");
  return {*best, tie};
}

struct TrialRecord {
  std::uint64_t trial_index = 0;
  std::uint64_t n = 0;
  ConditionKind regime = ConditionKind::GcdOne;
  CoinVector vector;
  std::int64_t frobenius = 0;
  PerBound<BoundValue> bounds;  // applicable bounds only
  PerBound<double> diffs;       // bound - F, same slots as bounds
  double ratio_an_a1 = 1.0;
  BestBound best{BoundKind::ErdosGraham, false};
};

inline BestBound classify_best(const TrialRecord& record, std::span<const BoundKind> kinds) {
  return classify_best(record.diffs, kinds);
}

inline TrialRecord make_trial_record(const CoinVector& v, std::uint64_t trial_index, ConditionKind regime) {
  TrialRecord r{trial_index, v.size(), regime, v, frobenius_exact(v).value, {}, {}, 1.0, {}};
  for (const auto& eval : evaluate_all(v, regime)) {
    if (!eval.applicable || !eval.value) continue;
    r.bounds[bound_index(eval.kind)] = *eval.value;
    r.diffs[bound_index(eval.kind)] = eval.value->minus(r.frobenius);
  }
  r.ratio_an_a1 = static_cast<double>(v.back()) / static_cast<double>(v.front());
  r.best = classify_best(r.diffs, best_candidates(regime));
  return r;
}

/// One record per trial, ordered by trial index. Workers pull indices from a
/// shared counter; every trial owns its random stream, so the output does not
/// depend on `threads` (0 = hardware concurrency).
inline std::vector<TrialRecord> run_experiment(const SamplerConfig& cfg, std::uint64_t trials,
                                               unsigned threads = 0) {
  cfg.validate();
  if (trials == 0) throw ValidationError("trials must be >= 1");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));

  std::vector<std::optional<TrialRecord>> slots(trials);
  std::vector<std::exception_ptr> errors(trials);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};

  auto work = [&] {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= trials || failed.load()) return;
      try {
        slots[i] = make_trial_record(sample_vector(cfg, i), i, cfg.condition);
      } catch (...) {
        errors[i] = std::current_exception();
        failed.store(true);
      }
    }
  };

  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<TrialRecord> out;
  out.reserve(trials);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Runs dimensions n_lo..n_hi one after another. k = 0 means "k = n" for
/// each dimension.
inline std::vector<TrialRecord> run_dimension_sweep(SamplerConfig base, std::uint64_t n_lo, std::uint64_t n_hi,
                                                    std::uint64_t k, std::uint64_t trials, unsigned threads = 0) {
  if (n_lo > n_hi) throw ValidationError("empty dimension range");
  std::vector<TrialRecord> out;
  for (auto n = n_lo; n <= n_hi; ++n) {
    base.n = n;
    base.k = k == 0 ? n : k;
    auto part = run_experiment(base, trials, threads);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Summary statistics

struct SummaryStats {
  std::uint64_t count = 0;
  double mean = 0, min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

/// Sample quantile by linear interpolation between order statistics
/// (Hyndman-Fan type 7). `sorted` must be nonempty and ascending.
inline double quantile_type7(std::span<const double> sorted, double p) {
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

inline SummaryStats summarize_values(std::vector<double> values) {
  if (values.empty()) throw ValidationError("cannot summarize an empty sample");
  std::sort(values.begin(), values.end());
  SummaryStats s;
  s.count = values.size();
  long double total = 0;
  for (double x : values) total += x;
  s.mean = static_cast<double>(total / static_cast<long double>(values.size()));
  s.min = values.front();
  s.max = values.back();
  s.q1 = quantile_type7(values, 0.25);
  s.median = quantile_type7(values, 0.5);
  s.q3 = quantile_type7(values, 0.75);
  return s;
}

/// Statistics of bound - F over the records where `kind` applies.
inline SummaryStats summarize(std::span<const TrialRecord> records, BoundKind kind) {
  std::vector<double> diffs;
  for (const auto& r : records) {
    if (const auto& d = r.diffs[bound_index(kind)]) diffs.push_back(*d);
  }
  if (diffs.empty()) {
    throw ValidationError("no applicable records for bound " + std::string(bound_name(kind)));
  }
  return summarize_values(std::move(diffs));
}

struct SummaryRow {
  std::uint64_t n;
  BoundKind kind;
  SummaryStats stats;
};

/// summarize() per (n, kind), n ascending then column order; kinds without
/// applicable records are skipped.
inline std::vector<SummaryRow> summary_table(std::span<const TrialRecord> records) {
  std::vector<std::uint64_t> dims;
  for (const auto& r : records) dims.push_back(r.n);
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

  std::vector<SummaryRow> out;
  for (auto n : dims) {
    std::vector<TrialRecord> subset;
    for (const auto& r : records) {
      if (r.n == n) subset.push_back(r);
    }
    for (auto k : kAllBounds) {
      const bool any = std::any_of(subset.begin(), subset.end(),
                                   [&](const TrialRecord& r) { return r.diffs[bound_index(k)].has_value(); });
      if (any) out.push_back({n, k, summarize(subset, k)});
    }
  }
  return out;
}

/// Number of records whose `kind` value lies strictly below F.
inline std::uint64_t count_violations(std::span<const TrialRecord> records, BoundKind kind) {
  return static_cast<std::uint64_t>(std::count_if(records.begin(), records.end(), [&](const TrialRecord& r) {
    const auto& d = r.diffs[bound_index(kind)];
    return d && *d < 0;
  }));
}

// ---------------------------------------------------------------------------
// WHCorr / Selmer error ratio and relative error

enum class RatioFlag { Ok, NegativeDenominator, ZeroDenominator };

inline std::string_view to_string(RatioFlag flag) {
  switch (flag) {
    case RatioFlag::Ok: return "ok";
    case RatioFlag::NegativeDenominator: return "neg_denominator";
    case RatioFlag::ZeroDenominator: return "zero_denominator";
  }
  return "?";
}

struct RatioRecord {
  std::uint64_t trial_index = 0;
  std::uint64_t n = 0;
  std::optional<double> r_n;  // absent when excluded
  RatioFlag flag = RatioFlag::Ok;
};

/// R_n = (WHCorr - F) / (Selmer - F). A zero denominator excludes the record;
/// a negative one (Selmer below F) is kept and flagged.
inline RatioRecord ratio_whcorr_selmer(std::int64_t frobenius, const BoundValue& whcorr, const BoundValue& selmer) {
  RatioRecord out;
  const double denominator = selmer.minus(frobenius);
  if (denominator == 0) {
    out.flag = RatioFlag::ZeroDenominator;
    return out;
  }
  out.r_n = whcorr.minus(frobenius) / denominator;
  out.flag = denominator < 0 ? RatioFlag::NegativeDenominator : RatioFlag::Ok;
  return out;
}

inline RatioRecord ratio_whcorr_selmer(const TrialRecord& record) {
  const auto& wh = record.bounds[bound_index(BoundKind::WHCorr)];
  const auto& se = record.bounds[bound_index(BoundKind::Selmer)];
  if (!wh || !se) throw ValidationError("R_n needs both WHCorr and Selmer to apply");
  auto out = ratio_whcorr_selmer(record.frobenius, *wh, *se);
  out.trial_index = record.trial_index;
  out.n = record.n;
  return out;
}

/// Ratios for every record where both bounds apply, in record order.
inline std::vector<RatioRecord> ratio_table(std::span<const TrialRecord> records) {
  std::vector<RatioRecord> out;
  for (const auto& r : records) {
    if (r.bounds[bound_index(BoundKind::WHCorr)] && r.bounds[bound_index(BoundKind::Selmer)]) {
      out.push_back(ratio_whcorr_selmer(r));
    }
  }
  return out;
}

/// (bound - F) / F; nullopt when F <= 0.
inline std::optional<double> relative_error(std::int64_t frobenius, const BoundValue& bound) {
  if (frobenius <= 0) return std::nullopt;
  return bound.minus(frobenius) / static_cast<double>(frobenius);
}

inline std::optional<double> relative_error(const TrialRecord& record, BoundKind kind) {
  const auto& b = record.bounds[bound_index(kind)];
  if (!b) throw ValidationError("bound " + std::string(bound_name(kind)) + " does not apply to this record");
  return relative_error(record.frobenius, *b);
}

}  // namespace frob
