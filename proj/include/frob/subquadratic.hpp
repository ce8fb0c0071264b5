#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "frob/error.hpp"
#include "frob/frobenius.hpp"
#include "frob/vectors.hpp"

namespace frob {

/// Sieve of Eratosthenes; empty for limit < 2.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline void check_test_bound_args(double c_const, double epsilon) {
  if (!(c_const > 0)) throw ValidationError("C must be positive");
  if (!(epsilon > 0 && epsilon < 1)) {
    throw ValidationError(
        "epsilon must lie in (0, 1): for epsilon >= 1 the test bound is constant or vanishing, "
        "and F(p, p+1) exceeds it trivially");
  }
}

/// C * (p (p+1))^(1 - epsilon)
inline double test_bound(std::uint64_t p, double c_const, double epsilon) {
  if (p < 2) throw ValidationError("p must be >= 2");
  check_test_bound_args(c_const, epsilon);
  const double product = static_cast<double>(p) * static_cast<double>(p + 1);
  return c_const * std::pow(product, 1.0 - epsilon);
}

struct SubquadraticRow {
  std::uint64_t p = 0;
  double epsilon = 0;
  double c_const = 0;
  std::int64_t frobenius = 0;  // p^2 - p - 1
  double test_bound = 0;
  bool violated = false;  // frobenius > test_bound
};

/// Rows for every prime <= prime_limit and every epsilon, ordered by epsilon
/// then p.
inline std::vector<SubquadraticRow> build_table(std::uint64_t prime_limit, double c_const,
                                                std::vector<double> epsilons) {
  for (double e : epsilons) check_test_bound_args(c_const, e);
  std::sort(epsilons.begin(), epsilons.end());
  const auto primes = primes_up_to(prime_limit);
  std::vector<SubquadraticRow> out;
  out.reserve(primes.size() * epsilons.size());
  for (double eps : epsilons) {
    for (auto p : primes) {
      SubquadraticRow row{p, eps, c_const, frobenius_sylvester(p, p + 1), test_bound(p, c_const, eps), false};
      row.violated = static_cast<double>(row.frobenius) > row.test_bound;
      out.push_back(row);
    }
  }
  return out;
}

struct PrimeRatioRow {
  std::uint64_t p = 0;
  double epsilon = 0;
  double c_const = 0;
  double ratio = 0;  // F(p, p+1) / test bound
};

inline std::vector<PrimeRatioRow> ratio_series(std::uint64_t prime_limit, double c_const,
                                               std::vector<double> epsilons) {
  std::vector<PrimeRatioRow> out;
  for (const auto& row : build_table(prime_limit, c_const, std::move(epsilons))) {
    out.push_back({row.p, row.epsilon, row.c_const, static_cast<double>(row.frobenius) / row.test_bound});
  }
  return out;
}

/// Smallest prime whose ratio exceeds 1 for the given epsilon, if any.
inline std::optional<std::uint64_t> first_crossing(const std::vector<PrimeRatioRow>& rows, double epsilon) {
  for (const auto& r : rows) {
    if (r.epsilon == epsilon && r.ratio > 1.0) return r.p;
  }
  return std::nullopt;
}

/// (p, p+1, r, ..., r) with n-2 copies of r = p + (p+1), which is
/// representable by {p, p+1}; F equals F(p, p+1) = p^2 - p - 1.
inline CoinVector construct_thm2_instance(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (n < 3) throw ValidationError("n must be >= 3");
  const std::uint64_t r = 2 * p + 1;
  std::vector<std::uint64_t> entries{p, p + 1};
  entries.insert(entries.end(), n - 2, r);
  return make_coin_vector(std::move(entries));
}

}  // namespace frob
