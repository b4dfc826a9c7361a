#pragma once

// Exhaustive and randomized exploration of set families: full enumeration of
// membership tables at small d, union closure, Monte Carlo measure estimates
// and a hill-climbing search for small Frankl ratios.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ucube/cube.hpp"
#include "ucube/random.hpp"

namespace ucube {

inline constexpr int kMaxEnumerationDimension = 4;

enum class FamilyFilter : unsigned {
  none = 0,
  union_closed = 1U << 0,
  simply_rooted = 1U << 1,
  contains_empty = 1U << 2,
  has_nonempty_member = 1U << 3,
};

constexpr FamilyFilter operator|(FamilyFilter a, FamilyFilter b) {
  return static_cast<FamilyFilter>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool has_flag(FamilyFilter set, FamilyFilter flag) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(flag)) != 0;
}

/// Comma-separated flag names: union-closed, simply-rooted, contains-empty,
/// has-nonempty-member (or "all" for no filter).
FamilyFilter parse_filter(std::string_view text);

bool passes(const SetFamily& family, FamilyFilter filter);

/// Every family on [d] passing `filter`, each once, in ascending table order.
class EnumerationStream {
 public:
  /// Requires 1 <= d <= kMaxEnumerationDimension.
  EnumerationStream(int d, FamilyFilter filter);

  std::optional<SetFamily> next();

  int dimension() const { return d_; }

 private:
  int d_;
  FamilyFilter filter_;
  std::uint64_t cursor_ = 0;
  std::uint64_t end_;
};

/// Collects an enumeration; `jobs` partitions the table range.
std::vector<SetFamily> enumerate_families(int d, FamilyFilter filter, unsigned jobs = 1);

/// Smallest union-closed family containing the generators.
SetFamily union_closure(int d, std::span<const Mask> generators);

Mask sample_point(const WeightVector& w, std::uint64_t seed);

struct MonteCarloEstimate {
  std::uint64_t draws = 0;
  std::uint64_t hits = 0;
  double estimate = 0;
  double standard_error = 0;  ///< sqrt(p^(1 - p^) / n)
};

/// Requires draws >= 1.
MonteCarloEstimate monte_carlo_measure(const SetFamily& family, const WeightVector& w, std::uint64_t draws,
                                       std::uint64_t seed);

struct SearchOptions {
  /// Only accept families with mu(F) >= q_max.
  bool require_hypothesis = false;
  /// Add the empty set to every closure.
  bool include_empty = true;
  /// Non-improving moves before a restart from fresh random generators.
  std::size_t patience = 200;
};

struct SearchResult {
  SetFamily best;
  std::vector<Mask> generators;
  /// max_i mu(F_i) / mu(F); nullopt when no feasible family was seen.
  std::optional<Rational> objective;
  std::uint64_t seed = 0;
  std::size_t moves = 0;
  std::size_t restarts = 0;
};

/// Hill climbing over generator lists (add / remove / replace one generator,
/// then close under unions), minimising the weighted Frankl ratio among
/// families with a nonempty member. Deterministic per seed; budget counts
/// moves. Requires 0 < p_i < 1.
SearchResult search_min_ratio(const WeightVector& w, std::size_t budget, std::uint64_t seed,
                              const SearchOptions& options = {});

}  // namespace ucube
