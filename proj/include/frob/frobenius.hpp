#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "frob/checked.hpp"
#include "frob/error.hpp"
#include "frob/vectors.hpp"

namespace frob {

/// Exact Frobenius number with its witness table.
///
/// residue_minima[l] is the smallest representable integer congruent to l
/// modulo a_1 (the Apery set of a_1). The Frobenius number is the largest of
/// these minus a_1, and -1 when a_1 == 1.
struct FrobeniusResult {
  std::int64_t value = -1;
  std::vector<std::uint64_t> residue_minima;
};

/// Two-generator closed form a1*a2 - a1 - a2.
inline std::int64_t frobenius_sylvester(std::uint64_t a1, std::uint64_t a2) {
  if (a1 == 0 || a2 == 0) throw ValidationError("entries must be positive");
  if (std::gcd(a1, a2) != 1) {
    throw ValidationError("(" + std::to_string(a1) + ", " + std::to_string(a2) + ") is not coprime");
  }
  const auto x = checked::to_signed(a1);
  const auto y = checked::to_signed(a2);
  return checked::sub(checked::sub(checked::mul(x, y), x), y);
}

// Shortest paths on the residue graph Z/a_1: an edge l -> (l + a_i) mod a_1
// of weight a_i for every other generator. Distances are the residue minima.
inline FrobeniusResult frobenius_exact(const CoinVector& v) {
  const std::uint64_t a1 = v.front();
  FrobeniusResult result;
  if (a1 == 1) {
    result.residue_minima = {0};
    result.value = -1;
    return result;
  }

  std::vector<std::uint64_t> steps(v.entries().begin() + 1, v.entries().end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());

  constexpr auto kUnreached = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> dist(a1, kUnreached);
  dist[0] = 0;

  using Item = std::pair<std::uint64_t, std::uint64_t>;  // (distance, residue)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[r]) continue;
    for (auto step : steps) {
      const std::uint64_t next = (r + step % a1) % a1;
      const std::uint64_t nd = checked::add(d, step);
      if (nd < dist[next]) {
        dist[next] = nd;
        queue.emplace(nd, next);
      }
    }
  }

  const auto largest = *std::max_element(dist.begin(), dist.end());
  // gcd one guarantees every residue is reached
  result.value = checked::sub(checked::to_signed(largest), checked::to_signed(a1));
  result.residue_minima = std::move(dist);
  return result;
}

inline bool is_representable(const FrobeniusResult& witness, std::uint64_t b) {
  const auto a1 = witness.residue_minima.size();
  return b >= witness.residue_minima[b % a1];
}

inline bool is_representable(const CoinVector& v, std::uint64_t b) {
  return is_representable(frobenius_exact(v), b);
}

inline constexpr std::uint64_t kDefaultBruteforceCells = std::uint64_t{1} << 27;

/// Independent oracle: marks every b in [0, (a_1-1)(a_n-1)-1] representable
/// or not by a forward sweep and returns the largest gap. Meant for small
/// inputs; refuses tables larger than max_cells.
inline std::int64_t frobenius_bruteforce(const CoinVector& v,
                                         std::uint64_t max_cells = kDefaultBruteforceCells) {
  const auto lo = checked::to_signed(v.front()) - 1;
  const auto hi = checked::to_signed(v.back()) - 1;
  const std::int64_t cap = checked::sub(checked::mul(lo, hi), 1);
  if (cap < 0) return -1;
  const auto cells = static_cast<std::uint64_t>(cap) + 1;
  if (cells > max_cells) {
    throw ValidationError("brute-force table of " + std::to_string(cells) +
                          " cells exceeds the budget of " + std::to_string(max_cells) +
                          "; use the exact solver");
  }
  std::vector<char> reachable(cells, 0);
  reachable[0] = 1;
  for (std::uint64_t b = 1; b < cells; ++b) {
    for (auto e : v.entries()) {
      if (e > b) break;
      if (reachable[b - e]) {
        reachable[b] = 1;
        break;
      }
    }
  }
  for (std::uint64_t b = cells; b-- > 0;) {
    if (!reachable[b]) return static_cast<std::int64_t>(b);
  }
  return -1;
}

}  // namespace frob
