#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frob/checked.hpp"
#include "frob/error.hpp"
#include "frob/vectors.hpp"

namespace frob {

// Order matters: it is the CSV column order and the gcd-regime tie order.
enum class BoundKind { ErdosGraham, Schur, Vitek, FukshanskyRobins, Selmer, Beck, WHCorr, WHMinSyl };

inline constexpr std::array<BoundKind, 8> kAllBounds = {
    BoundKind::ErdosGraham, BoundKind::Schur, BoundKind::Vitek, BoundKind::FukshanskyRobins,
    BoundKind::Selmer,      BoundKind::Beck,  BoundKind::WHCorr, BoundKind::WHMinSyl};

inline constexpr std::array<BoundKind, 4> kGcdRegimeBounds = {
    BoundKind::ErdosGraham, BoundKind::Schur, BoundKind::Vitek, BoundKind::FukshanskyRobins};

/// CSV column name.
inline std::string_view bound_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::ErdosGraham: return "erdos";
    case BoundKind::Schur: return "schur";
    case BoundKind::Vitek: return "vitek";
    case BoundKind::FukshanskyRobins: return "fukrob";
    case BoundKind::Selmer: return "selmer";
    case BoundKind::Beck: return "beck";
    case BoundKind::WHCorr: return "whcorr";
    case BoundKind::WHMinSyl: return "whminsyl";
  }
  return "?";
}

inline std::optional<BoundKind> bound_from_name(std::string_view name) {
  for (auto k : kAllBounds) {
    if (bound_name(k) == name) return k;
  }
  return std::nullopt;
}

inline std::size_t bound_index(BoundKind kind) { return static_cast<std::size_t>(kind); }

/// A bound's value. Integer and half-integer values are exact
/// (numerator / denominator with denominator 1 or 2); square-root bounds and
/// saturated values are real.
class BoundValue {
 public:
  static BoundValue integer(std::int64_t v) { return BoundValue(v, 1, static_cast<double>(v), true); }

  /// Exact value twice_value / 2, reduced when even.
  static BoundValue half(std::int64_t twice_value) {
    if (twice_value % 2 == 0) return integer(twice_value / 2);
    return BoundValue(twice_value, 2, static_cast<double>(twice_value) / 2.0, true);
  }

  static BoundValue real(double v) { return BoundValue(0, 1, v, false); }

  bool is_exact() const { return exact_; }
  std::int64_t numerator() const { return numerator_; }
  std::int64_t denominator() const { return denominator_; }
  double to_double() const { return real_; }

  /// Sign of (value - f); exact whenever the value is.
  int compare(std::int64_t f) const {
    if (exact_) {
      const auto lhs = static_cast<__int128>(numerator_);
      const auto rhs = static_cast<__int128>(f) * denominator_;
      return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }
    const double d = real_ - static_cast<double>(f);
    return d < 0 ? -1 : (d > 0 ? 1 : 0);
  }

  /// value - f. Exact values give an exactly representable double for
  /// magnitudes below 2^52.
  double minus(std::int64_t f) const {
    if (exact_) {
      const auto twice = static_cast<__int128>(numerator_) * (2 / denominator_) - static_cast<__int128>(f) * 2;
      return static_cast<double>(twice) / 2.0;
    }
    return real_ - static_cast<double>(f);
  }

  std::string to_string(int real_digits = 6) const;

  friend bool operator==(const BoundValue&, const BoundValue&) = default;

 private:
  BoundValue(std::int64_t num, std::int64_t den, double real, bool exact)
      : numerator_(num), denominator_(den), real_(real), exact_(exact) {}

  std::int64_t numerator_;
  std::int64_t denominator_;
  double real_;
  bool exact_;
};

inline std::string BoundValue::to_string(int real_digits) const {
  if (exact_) {
    if (denominator_ == 1) return std::to_string(numerator_);
    const auto magnitude = static_cast<std::uint64_t>(numerator_ < 0 ? -numerator_ : numerator_);
    return (numerator_ < 0 ? "-" : "") + std::to_string(magnitude / 2) + ".5";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", real_digits, real_);
  return buf;
}

struct BoundEvaluation {
  BoundKind kind;
  // Absent only where the formula is undefined (e.g. three-entry bounds at n = 2).
  std::optional<BoundValue> value;
  bool applicable = false;
  std::string reason;
  // Fukshansky-Robins beyond the signed 64-bit range: value kept as a real.
  bool saturated = false;
};

namespace detail {

inline std::int64_t s64(std::uint64_t v) { return checked::to_signed(v); }

inline BoundEvaluation applicable(BoundKind kind, BoundValue value) {
  return BoundEvaluation{kind, value, true, {}, false};
}

inline BoundEvaluation inapplicable(BoundKind kind, std::optional<BoundValue> value, std::string reason) {
  return BoundEvaluation{kind, value, false, std::move(reason), false};
}

inline bool first_three_coprime(const CoinVector& v) {
  return pairwise_coprime(v.entries().subspan(0, 3));
}

inline bool strictly_increasing(const CoinVector& v) {
  return std::adjacent_find(v.entries().begin(), v.entries().end()) == v.entries().end();
}

}  // namespace detail

// 2 a_{n-1} floor(a_n / n) - a_n
inline BoundEvaluation bound_erdos_graham(const CoinVector& v) {
  const auto n = static_cast<std::int64_t>(v.size());
  const auto an = detail::s64(v.back());
  const auto an1 = detail::s64(v[v.size() - 2]);
  const auto value = BoundValue::integer(checked::sub(checked::mul(checked::mul(2, an1), an / n), an));
  // fails on repeated entries, e.g. (5,7,7)
  if (!detail::strictly_increasing(v)) return detail::inapplicable(BoundKind::ErdosGraham, value, "requires distinct entries");
  return detail::applicable(BoundKind::ErdosGraham, value);
}

// (a_1 - 1)(a_n - 1) - 1
inline BoundEvaluation bound_schur(const CoinVector& v) {
  const auto value = checked::sub(checked::mul(detail::s64(v.front()) - 1, detail::s64(v.back()) - 1), 1);
  return detail::applicable(BoundKind::Schur, BoundValue::integer(value));
}

// (a_2 - 1)(a_n - 2) / 2 - 1, kept exact.
inline BoundEvaluation bound_vitek(const CoinVector& v) {
  if (v.size() < 3) return detail::inapplicable(BoundKind::Vitek, std::nullopt, "requires n >= 3");
  const auto twice = checked::sub(checked::mul(detail::s64(v[1]) - 1, detail::s64(v.back()) - 2), 2);
  if (!detail::strictly_increasing(v)) {
    return detail::inapplicable(BoundKind::Vitek, BoundValue::half(twice), "requires distinct entries");
  }
  return detail::applicable(BoundKind::Vitek, BoundValue::half(twice));
}

/// Gamma(twice_x / 2) from the factorial and half-integer closed forms.
/// Throws OverflowError past the double range; use log_gamma_half_integer there.
inline double gamma_half_integer(std::uint64_t twice_x) {
  if (twice_x == 0) throw ValidationError("gamma argument must be positive");
  long double acc;
  if (twice_x % 2 == 0) {
    acc = 1;  // (x-1)!
    for (std::uint64_t j = 2; j < twice_x / 2; ++j) acc *= static_cast<long double>(j);
  } else {
    acc = std::sqrt(std::numbers::pi_v<long double>);  // sqrt(pi) * prod (j - 1/2)
    for (std::uint64_t j = 1; j <= twice_x / 2; ++j) acc *= static_cast<long double>(j) - 0.5L;
  }
  const auto out = static_cast<double>(acc);
  if (!std::isfinite(out)) {
    throw OverflowError("Gamma(" + std::to_string(twice_x) + "/2) overflows double; use the log-space form");
  }
  return out;
}

inline double log_gamma_half_integer(std::uint64_t twice_x) {
  if (twice_x == 0) throw ValidationError("gamma argument must be positive");
  long double acc = 0;
  if (twice_x % 2 == 0) {
    for (std::uint64_t j = 2; j < twice_x / 2; ++j) acc += std::log(static_cast<long double>(j));
  } else {
    acc = 0.5L * std::log(std::numbers::pi_v<long double>);
    for (std::uint64_t j = 1; j <= twice_x / 2; ++j) acc += std::log(static_cast<long double>(j) - 0.5L);
  }
  return static_cast<double>(acc);
}

namespace detail {

// C(n) with the powers of sqrt(pi) cancelled symbolically:
//   n odd,  n = 2k+1: (n-1)^2 k! / pi^k
//   n even, n = 2k:   (n-1)^2 prod_{j<=k}(j - 1/2) / pi^(k-1)
inline long double c_of_n_ld(std::uint64_t n) {
  const long double pi = std::numbers::pi_v<long double>;
  const long double lead = static_cast<long double>(n - 1) * static_cast<long double>(n - 1);
  const std::uint64_t k = n / 2;
  long double acc = lead;
  if (n % 2 == 1) {
    for (std::uint64_t j = 1; j <= k; ++j) acc *= static_cast<long double>(j) / pi;
  } else {
    acc *= 0.5L;  // j = 1 term
    for (std::uint64_t j = 2; j <= k; ++j) acc *= (static_cast<long double>(j) - 0.5L) / pi;
  }
  return acc;
}

}  // namespace detail

/// C(n) = (n-1)^2 Gamma((n+1)/2) / pi^((n-1)/2), the Fukshansky-Robins factor.
inline double c_of_n(std::uint64_t n) {
  if (n < 2) throw ValidationError("C(n) needs n >= 2");
  return static_cast<double>(detail::c_of_n_ld(n));
}

inline double log_c_of_n(std::uint64_t n) {
  if (n < 2) throw ValidationError("C(n) needs n >= 2");
  const double x = static_cast<double>(n - 1) / 2.0;
  return 2.0 * std::log(static_cast<double>(n - 1)) + log_gamma_half_integer(n + 1) -
         x * std::log(std::numbers::pi);
}

/// ln C(n) with Gamma(x + 1) replaced by Stirling's sqrt(2 pi x) (x/e)^x,
/// x = (n-1)/2.
inline double log_c_of_n_stirling(std::uint64_t n) {
  if (n < 2) throw ValidationError("C(n) needs n >= 2");
  const double x = static_cast<double>(n - 1) / 2.0;
  return 2.0 * std::log(static_cast<double>(n - 1)) + 0.5 * std::log(2.0 * std::numbers::pi * x) +
         x * (std::log(x) - 1.0) - x * std::log(std::numbers::pi);
}

inline double c_of_n_stirling(std::uint64_t n) { return std::exp(log_c_of_n_stirling(n)); }

namespace detail {

inline long double s_of_a_ld(const CoinVector& v) {
  long double sq = 0;
  for (auto e : v.entries()) sq += static_cast<long double>(e) * e;
  long double sum = 0;
  for (auto e : v.entries()) {
    const auto a = static_cast<long double>(e);
    sum += a * std::sqrt(sq - a * a);
  }
  return sum;
}

}  // namespace detail

/// S(a) = sum_i a_i sqrt(||a||^2 - a_i^2)
inline double s_of_a(const CoinVector& v) { return static_cast<double>(detail::s_of_a_ld(v)); }

// floor(C(n) S(a) + 1)
inline BoundEvaluation bound_fukshansky_robins(const CoinVector& v) {
  const long double raw = std::floor(detail::c_of_n_ld(v.size()) * detail::s_of_a_ld(v) + 1.0L);
  if (!(raw < 9.2e18L)) {
    BoundEvaluation out = detail::applicable(BoundKind::FukshanskyRobins, BoundValue::real(static_cast<double>(raw)));
    out.saturated = true;
    out.reason = "value exceeds representable range";
    return out;
  }
  return detail::applicable(BoundKind::FukshanskyRobins, BoundValue::integer(static_cast<std::int64_t>(raw)));
}

// 2 a_n floor(a_1 / n) - a_1; only a valid bound for pairwise coprime a with a_1 >= n.
inline BoundEvaluation bound_selmer(const CoinVector& v) {
  const auto n = static_cast<std::int64_t>(v.size());
  const auto a1 = detail::s64(v.front());
  const auto value = BoundValue::integer(
      checked::sub(checked::mul(checked::mul(2, detail::s64(v.back())), a1 / n), a1));
  if (!pairwise_coprime(v.entries())) {
    return detail::inapplicable(BoundKind::Selmer, value, "entries not pairwise coprime");
  }
  if (a1 < n) return detail::inapplicable(BoundKind::Selmer, value, "requires a_1 >= n");
  return detail::applicable(BoundKind::Selmer, value);
}

// The two three-generator bounds use (a_1, a_2, a_3); extra generators can
// only lower F, so the bound carries over to n > 3.
inline BoundEvaluation bound_beck(const CoinVector& v) {
  if (v.size() < 3) return detail::inapplicable(BoundKind::Beck, std::nullopt, "requires n >= 3");
  const long double a = v[0], b = v[1], c = v[2];
  const long double s = a + b + c;
  const auto value = BoundValue::real(static_cast<double>(0.5L * (std::sqrt(a * b * c * s) - s)));
  if (!detail::first_three_coprime(v)) {
    return detail::inapplicable(BoundKind::Beck, value, "a_1, a_2, a_3 not pairwise coprime");
  }
  return detail::applicable(BoundKind::Beck, value);
}

inline BoundEvaluation bound_wh_corrected(const CoinVector& v) {
  if (v.size() < 3) return detail::inapplicable(BoundKind::WHCorr, std::nullopt, "requires n >= 3");
  const long double a = v[0], b = v[1], c = v[2];
  const long double s = a + b + c;
  const long double radicand = s * (s + 2.0L * a * b * c) / 3.0L + 8.0L * (a * b + b * c + c * a) / 3.0L;
  const auto value = BoundValue::real(static_cast<double>(0.5L * (std::sqrt(radicand) - s)));
  if (!detail::first_three_coprime(v)) {
    return detail::inapplicable(BoundKind::WHCorr, value, "a_1, a_2, a_3 not pairwise coprime");
  }
  return detail::applicable(BoundKind::WHCorr, value);
}

// min over pairs of (a_i - 1)(a_j - 1) - 1; on sorted entries the minimum
// is attained by the two smallest.
inline BoundEvaluation bound_wh_min_sylvester(const CoinVector& v) {
  const auto value = BoundValue::integer(
      checked::sub(checked::mul(detail::s64(v[0]) - 1, detail::s64(v[1]) - 1), 1));
  if (!pairwise_coprime(v.entries())) {
    return detail::inapplicable(BoundKind::WHMinSyl, value, "entries not pairwise coprime");
  }
  return detail::applicable(BoundKind::WHMinSyl, value);
}

inline BoundEvaluation evaluate_bound(const CoinVector& v, BoundKind kind) {
  switch (kind) {
    case BoundKind::ErdosGraham: return bound_erdos_graham(v);
    case BoundKind::Schur: return bound_schur(v);
    case BoundKind::Vitek: return bound_vitek(v);
    case BoundKind::FukshanskyRobins: return bound_fukshansky_robins(v);
    case BoundKind::Selmer: return bound_selmer(v);
    case BoundKind::Beck: return bound_beck(v);
    case BoundKind::WHCorr: return bound_wh_corrected(v);
    case BoundKind::WHMinSyl: return bound_wh_min_sylvester(v);
  }
  throw ValidationError("unknown bound kind");
}

/// Every bound of the regime, in column order; inapplicable kinds are
/// flagged, never dropped.
inline std::vector<BoundEvaluation> evaluate_all(const CoinVector& v, ConditionKind regime) {
  std::vector<BoundEvaluation> out;
  if (regime == ConditionKind::GcdOne) {
    for (auto k : kGcdRegimeBounds) out.push_back(evaluate_bound(v, k));
    return out;
  }
  if (!v.satisfies(ConditionKind::PairwiseCoprime)) {
    throw ValidationError("regime mismatch: (" + format_vector(v, ',') + ") is not pairwise coprime");
  }
  for (auto k : kAllBounds) out.push_back(evaluate_bound(v, k));
  return out;
}

}  // namespace frob
