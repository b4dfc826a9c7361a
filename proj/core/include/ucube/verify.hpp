#pragma once

// Theorem verifiers on the weighted cube. Every check is exact except the
// weighted logarithmic ratio bound (and the margins, not the status, of the
// uniform one), which compare logarithms at 128-bit precision.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ucube/cube.hpp"

namespace ucube {

enum class Hypothesis { met, not_met, degenerate };
enum class Conclusion { holds, fails, indeterminate };

std::string_view to_string(Hypothesis h);
std::string_view to_string(Conclusion c);

/// Tolerance for the log-based ratio bound; margins with smaller magnitude
/// are reported as indeterminate.
Rational log_bound_tolerance();

/// One coordinate's side of the claimed inequality. `margin` is oriented so
/// that margin >= 0 means the inequality holds at this coordinate.
struct CoordinateCheck {
  int coordinate = 0;
  Rational lhs;
  Rational rhs;
  Rational margin;
};

struct Witness {
  int coordinate = 0;
  Rational margin;
};

struct VerificationReport {
  std::string theorem;
  Hypothesis hypothesis = Hypothesis::not_met;
  Conclusion conclusion = Conclusion::indeterminate;
  std::vector<std::string> notes;
  /// Named exact quantities entering the hypothesis (mu(F), q_max, ...).
  std::vector<std::pair<std::string, Rational>> quantities;
  /// Ascending by coordinate.
  std::vector<Witness> witnesses;
  std::vector<CoordinateCheck> values;
  /// Set for the per-hitting-set ratio bound.
  std::optional<Mask> hitting_set;
  /// False for checks that are reported but not asserted.
  bool asserted = true;

  /// An asserted check whose (non-degenerate) hypothesis holds but whose
  /// conclusion fails.
  bool asserted_failure() const {
    return asserted && hypothesis == Hypothesis::met && conclusion == Conclusion::fails;
  }
};

struct FranklRatio {
  Rational ratio;            ///< max_i |F_i| / |F|
  std::vector<int> argmax;   ///< empty when no member contains any element
  bool degenerate = false;
};

/// Requires F nonempty.
FranklRatio verify_frankl_ratio(const SetFamily& family);

/// max_i mu(F_i) / mu(F); nullopt when mu(F) = 0.
std::optional<Rational> weighted_frankl_ratio(const SetFamily& family, const MeasureTable& mu);

/// |F| >= 2^{d-1}  =>  exists i: |F_i| >= |F|/2. Requires union-closed.
VerificationReport verify_karpas_uniform(const SetFamily& family);

struct WeightedKarpasReport {
  VerificationReport printed;  ///< mu(F_i) >= q_i mu(F), reported only
  VerificationReport derived;  ///< mu(F_i) >= p_i mu(F), asserted
};

/// mu(F) >= q_max  =>  exists i with the per-form conclusion.
/// Requires union-closed and 0 < p_i < 1.
WeightedKarpasReport verify_weighted_karpas(const SetFamily& family, const WeightVector& w);
WeightedKarpasReport verify_weighted_karpas(const SetFamily& family, const WeightVector& w, const MeasureTable& mu);

/// mu(F) <= p_min  =>  exists i: mu(F_i) <= p_i mu(F).
/// Requires simply rooted and 0 < p_i < 1.
VerificationReport verify_simply_rooted(const SetFamily& family, const WeightVector& w);
VerificationReport verify_simply_rooted(const SetFamily& family, const WeightVector& w, const MeasureTable& mu);

/// Every quantity of the influence argument behind the simply-rooted bound.
struct KarpasDiagnostic {
  Rational measure;        ///< mu(F)
  Rational delta;          ///< p_min - mu(F)
  Rational plus_total;     ///< weighted I^+
  Rational minus_total;    ///< weighted I^-
  Rational influence_total;
  Rational upper_bound;    ///< 4 q_max mu(F)
  Rational lower_bound;    ///< 4 (p - delta)(q + delta)
  Rational level_one;      ///< W^1
  Rational empty_kernel;   ///< f^(empty) = 2 mu(F) - 1

  bool upper_holds = false;       ///< I^+ <= upper_bound
  bool level_one_strict = false;  ///< W^1 < I^+ - I^-
  bool lower_strict = false;      ///< I^+ > lower_bound
  /// mu(F_i) > p_i mu(F) for every i (the assumption refuted by the argument).
  bool all_coordinates_exceed = false;
};

/// Requires simply rooted and 0 < p_i < 1.
KarpasDiagnostic karpas_diagnostics(const SetFamily& family, const WeightVector& w);

/// exists i: |F_i| >= (|F| - 1) / log2 |F|, decided exactly as
/// |F|^{|F_i|} >= 2^{|F|-1}. Requires union-closed; the empty set in F and
/// |F| >= 2 form the hypothesis.
VerificationReport verify_knill_uniform(const SetFamily& family);

/// For each minimal hitting set S: exists i in S with
/// (mu(F) - 1/Q) / log(Q mu(F)) <= mu(F_i) / log Q_i.
/// Requires union-closed and 1/2 <= p_i < 1; the empty set in F and F != {empty}
/// form the hypothesis. One report per minimal hitting set, or a single
/// not-met report.
std::vector<VerificationReport> verify_weighted_knill(const SetFamily& family, const WeightVector& w);

// ---------------------------------------------------------------------------
// Corpus sweeps

enum class Theorem { karpas_uniform, karpas_weighted, simply_rooted, knill_uniform, knill_weighted };

std::string_view theorem_name(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);
bool theorem_uses_weights(Theorem t);

/// All reports a theorem check produces for one (family, weights) input.
std::vector<VerificationReport> run_theorem(Theorem t, const SetFamily& family, const WeightVector& w);

struct SweepFailure {
  SetFamily family;
  std::optional<WeightVector> weights;
  VerificationReport report;
};

struct SweepSummary {
  std::size_t inputs = 0;          ///< (family, weights) pairs examined
  std::size_t reports = 0;
  std::size_t hypothesis_met = 0;
  std::size_t degenerate = 0;
  std::size_t not_met = 0;
  std::size_t holds = 0;
  std::size_t indeterminate = 0;
  std::size_t fails = 0;           ///< any conclusion failure, degenerate or not
  std::vector<SweepFailure> failures;  ///< every report with conclusion == fails, asserted or not
  /// Smallest margin among held reports' best witnesses.
  std::optional<Rational> tightest_margin;
};

/// Runs `t` on every family x weight vector pair (weights ignored for the
/// uniform theorems). Output is independent of `jobs`.
SweepSummary sweep(Theorem t, std::span<const SetFamily> families, std::span<const WeightVector> weights,
                   unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Witness dumps

/// Self-contained text: '#'-prefixed theorem id, weight line and per-coordinate
/// exact values, followed by the family file. The result parses as a family
/// file.
std::string format_witness(const VerificationReport& report, const SetFamily& family,
                           const std::optional<WeightVector>& weights);

/// Writes the dump under `dir` (created if needed); returns the file path.
std::filesystem::path write_witness(const std::filesystem::path& dir, const VerificationReport& report,
                                    const SetFamily& family, const std::optional<WeightVector>& weights);

}  // namespace ucube
