#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frob/error.hpp"

namespace frob {

enum class ConditionKind { GcdOne, PairwiseCoprime };

inline std::string_view to_string(ConditionKind kind) {
  return kind == ConditionKind::GcdOne ? "gcd" : "coprime";
}

inline std::uint64_t gcd_all(std::span<const std::uint64_t> entries) {
  if (entries.empty()) {
    throw ValidationError("gcd of an empty sequence is undefined");
  }
  std::uint64_t g = 0;
  for (auto e : entries) {
    if (e == 0) {
      throw ValidationError("entries must be positive");
    }
    g = std::gcd(g, e);
    if (g == 1) break;
  }
  return g;
}

inline bool pairwise_coprime(std::span<const std::uint64_t> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (std::gcd(entries[i], entries[j]) != 1) return false;
    }
  }
  return true;
}

/// A validated generator vector: n >= 2 positive entries, sorted
/// nondecreasing, gcd one. Duplicates are kept since n itself enters several
/// bounds. Immutable once built.
class CoinVector {
 public:
  std::span<const std::uint64_t> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::uint64_t operator[](std::size_t i) const { return entries_[i]; }
  std::uint64_t front() const { return entries_.front(); }
  std::uint64_t back() const { return entries_.back(); }
  std::uint64_t max_norm() const { return entries_.back(); }

  double euclidean_norm() const {
    long double sq = 0;
    for (auto e : entries_) sq += static_cast<long double>(e) * e;
    return static_cast<double>(std::sqrt(sq));
  }

  bool satisfies(ConditionKind kind) const {
    // gcd one holds by construction
    return kind == ConditionKind::GcdOne || pairwise_coprime(entries_);
  }

  friend bool operator==(const CoinVector&, const CoinVector&) = default;

 private:
  explicit CoinVector(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {}
  friend CoinVector make_coin_vector(std::vector<std::uint64_t> raw);

  std::vector<std::uint64_t> entries_;
};

inline CoinVector make_coin_vector(std::vector<std::uint64_t> raw) {
  if (raw.size() < 2) {
    throw ValidationError("a coin vector needs at least 2 entries, got " + std::to_string(raw.size()));
  }
  for (auto e : raw) {
    if (e == 0) throw ValidationError("entries must be positive");
    if (e > static_cast<std::uint64_t>(INT64_MAX)) {
      throw ValidationError("entry " + std::to_string(e) + " exceeds the signed 64-bit range");
    }
  }
  std::sort(raw.begin(), raw.end());
  if (auto g = gcd_all(raw); g != 1) {
    throw ValidationError("gcd of entries is " + std::to_string(g) + "; no Frobenius number exists");
  }
  return CoinVector(std::move(raw));
}

inline CoinVector make_coin_vector(std::span<const std::uint64_t> raw) {
  return make_coin_vector(std::vector<std::uint64_t>(raw.begin(), raw.end()));
}

inline CoinVector make_coin_vector(std::initializer_list<std::uint64_t> raw) {
  return make_coin_vector(std::vector<std::uint64_t>(raw));
}

inline bool satisfies_condition(const CoinVector& v, ConditionKind kind) { return v.satisfies(kind); }

/// Parses "8,32,59" (or any single-character separator) into raw entries.
inline std::vector<std::uint64_t> parse_entries(std::string_view text, char sep = ',') {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(sep, start);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty() || token.front() == '-' || token.front() == '+') {
      throw ValidationError("malformed vector '" + std::string(text) + "'");
    }
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
      value = std::stoull(std::string(token), &used);
    } catch (const std::exception&) {
      throw ValidationError("malformed vector '" + std::string(text) + "'");
    }
    if (used != token.size()) {
      throw ValidationError("malformed vector '" + std::string(text) + "'");
    }
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

/// CSV cell form: "8;32;59".
inline std::string format_vector(const CoinVector& v, char sep = ';') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace frob
