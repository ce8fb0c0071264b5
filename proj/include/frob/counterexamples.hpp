#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "frob/bounds.hpp"
#include "frob/error.hpp"
#include "frob/frobenius.hpp"
#include "frob/vectors.hpp"

namespace frob {

/// F(a) against Selmer's formula value for one vector.
struct FailureRow {
  CoinVector vector;
  std::int64_t frobenius = 0;
  std::int64_t selmer_value = 0;
  bool fails = false;  // frobenius > selmer_value
  bool pairwise_coprime = false;
  bool applicable = true;  // false when n < 3 or a_1 < n
  std::string reason;
};

inline FailureRow verify_failure(const CoinVector& v) {
  const auto selmer = bound_selmer(v);
  FailureRow row{v, frobenius_exact(v).value, selmer.value->numerator(), false,
                 v.satisfies(ConditionKind::PairwiseCoprime), true, {}};
  if (v.size() < 3) {
    row.applicable = false;
    row.reason = "requires n >= 3";
  } else if (v.front() < v.size()) {
    row.applicable = false;
    row.reason = "requires a_1 >= n";
  }
  row.fails = row.applicable && row.frobenius > row.selmer_value;
  return row;
}

/// Every sorted gcd-one triple with a_1 in `a1_values` and a_3 <= max_entry
/// on which Selmer's formula falls below F, lexicographically ordered.
inline std::vector<FailureRow> search_selmer_failures(const std::set<std::uint64_t>& a1_values,
                                                      std::uint64_t max_entry) {
  if (a1_values.empty()) throw ValidationError("no a_1 values given");
  if (*a1_values.begin() < 3) throw ValidationError("a_1 must be >= 3 (Selmer needs a_1 >= n = 3)");
  if (max_entry < *a1_values.rbegin()) throw ValidationError("max entry must be >= every a_1");

  std::vector<FailureRow> out;
  for (auto a1 : a1_values) {
    for (auto a2 = a1; a2 <= max_entry; ++a2) {
      for (auto a3 = a2; a3 <= max_entry; ++a3) {
        if (std::gcd(std::gcd(a1, a2), a3) != 1) continue;
        auto row = verify_failure(make_coin_vector({a1, a2, a3}));
        if (row.fails) out.push_back(std::move(row));
      }
    }
  }
  return out;
}

/// (a1, a1*k_2, ..., a1*k_{n-1}, an): the extra generators are multiples of
/// a1, so F stays F(a1, an).
inline CoinVector embed_multiples(std::uint64_t a1, std::uint64_t an, const std::vector<std::uint64_t>& multipliers) {
  if (a1 == 0 || an == 0) throw ValidationError("entries must be positive");
  if (std::gcd(a1, an) != 1) throw ValidationError("a1 and an must be coprime");
  const auto k_max = an / a1;
  std::vector<std::uint64_t> entries{a1};
  for (auto k : multipliers) {
    if (k < 1 || k > k_max) {
      throw ValidationError("multiplier " + std::to_string(k) + " outside [1, " + std::to_string(k_max) + "]");
    }
    entries.push_back(a1 * k);
  }
  entries.push_back(an);
  return make_coin_vector(std::move(entries));
}

}  // namespace frob
