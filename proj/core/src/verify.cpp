#include "ucube/verify.hpp"

#include <algorithm>

#include "precise.hpp"
#include "ucube/hitting.hpp"
#include "ucube/parallel.hpp"
#include "ucube/spectral.hpp"

namespace ucube {

std::string_view to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::met: return "met";
    case Hypothesis::not_met: return "not_met";
    case Hypothesis::degenerate: return "degenerate";
  }
  return "?";
}

std::string_view to_string(Conclusion c) {
  switch (c) {
    case Conclusion::holds: return "holds";
    case Conclusion::fails: return "fails";
    case Conclusion::indeterminate: return "indeterminate";
  }
  return "?";
}

Rational log_bound_tolerance() {
  Integer ten20;
  mpz_ui_pow_ui(ten20.get_mpz_t(), 10, 20);
  return Rational(Integer(1), ten20);
}

namespace {

void require_union_closed(const SetFamily& family) {
  if (!is_union_closed(family)) throw PreconditionError("family is not union-closed");
}

void require_interior(const WeightVector& w, int d) {
  if (w.dimension() != d) {
    throw PreconditionError("dimension mismatch: family d=" + std::to_string(d) + ", weights d=" +
                            std::to_string(w.dimension()));
  }
  if (!w.is_interior()) throw PreconditionError("weights must satisfy 0 < p_i < 1");
}

/// Witnesses are the coordinates with non-negative margin; the conclusion
/// follows from them unless the hypothesis is not met.
void settle(VerificationReport& r) {
  r.witnesses.clear();
  for (const auto& v : r.values) {
    if (v.margin >= 0) r.witnesses.push_back({v.coordinate, v.margin});
  }
  if (r.hypothesis == Hypothesis::not_met) {
    r.conclusion = Conclusion::indeterminate;
  } else {
    r.conclusion = r.witnesses.empty() ? Conclusion::fails : Conclusion::holds;
  }
}

std::string describe(const Rational& a, std::string_view op, const Rational& b) {
  return to_short_string(a) + " " + std::string(op) + " " + to_short_string(b);
}

}  // namespace

// ---------------------------------------------------------------------------

FranklRatio verify_frankl_ratio(const SetFamily& family) {
  if (family.empty()) throw PreconditionError("family is empty");
  const auto counts = containing_counts(family);
  const std::size_t best = *std::max_element(counts.begin(), counts.end());
  FranklRatio out;
  out.ratio = Rational(best, family.size());
  out.ratio.canonicalize();
  if (best == 0) {
    out.degenerate = true;
    return out;
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == best) out.argmax.push_back(static_cast<int>(i));
  }
  return out;
}

std::optional<Rational> weighted_frankl_ratio(const SetFamily& family, const MeasureTable& mu) {
  const Rational total = mu.measure(family);
  if (total == 0) return std::nullopt;
  const auto parts = mu.containing_measures(family);
  return *std::max_element(parts.begin(), parts.end()) / total;
}

VerificationReport verify_karpas_uniform(const SetFamily& family) {
  require_union_closed(family);
  const int d = family.dimension();
  const Rational size(family.size());
  const Rational threshold = pow2(static_cast<unsigned>(d - 1));

  VerificationReport r;
  r.theorem = "karpas-uniform";
  r.quantities = {{"|F|", size}, {"2^(d-1)", threshold}};
  if (size >= threshold) {
    r.hypothesis = Hypothesis::met;
    r.notes.push_back("|F| >= 2^(d-1): " + describe(size, ">=", threshold));
    if (!family.has_nonempty_member()) {
      r.hypothesis = Hypothesis::degenerate;
      r.notes.push_back("degenerate: family has no nonempty member");
    }
  } else {
    r.notes.push_back("|F| < 2^(d-1): " + describe(size, "<", threshold));
  }

  const auto counts = containing_counts(family);
  const Rational half = size / 2;
  for (int i = 0; i < d; ++i) {
    const Rational lhs(counts[static_cast<std::size_t>(i)]);
    r.values.push_back({i, lhs, half, lhs - half});
  }
  settle(r);
  return r;
}

WeightedKarpasReport verify_weighted_karpas(const SetFamily& family, const WeightVector& w) {
  require_interior(w, family.dimension());
  return verify_weighted_karpas(family, w, MeasureTable(w));
}

WeightedKarpasReport verify_weighted_karpas(const SetFamily& family, const WeightVector& w, const MeasureTable& mu) {
  require_union_closed(family);
  require_interior(w, family.dimension());
  const Rational measure = mu.measure(family);
  const auto parts = mu.containing_measures(family);

  VerificationReport base;
  base.quantities = {{"mu(F)", measure}, {"q_max", w.q_max()}};
  if (measure >= w.q_max()) {
    base.hypothesis = Hypothesis::met;
    base.notes.push_back("mu(F) >= q_max: " + describe(measure, ">=", w.q_max()));
    if (!family.has_nonempty_member()) {
      base.hypothesis = Hypothesis::degenerate;
      base.notes.push_back("degenerate: family has no nonempty member");
    }
  } else {
    base.notes.push_back("mu(F) < q_max: " + describe(measure, "<", w.q_max()));
  }

  WeightedKarpasReport out{base, base};
  out.printed.theorem = "karpas-weighted/printed";
  out.printed.asserted = false;
  out.printed.notes.push_back("printed form mu(F_i) >= q_i mu(F); reported, not asserted");
  out.derived.theorem = "karpas-weighted/derived";
  out.derived.notes.push_back("derived form mu(F_i) >= p_i mu(F)");

  for (int i = 0; i < w.dimension(); ++i) {
    const Rational& lhs = parts[static_cast<std::size_t>(i)];
    const Rational printed_rhs = w.q(i) * measure;
    const Rational derived_rhs = w.p(i) * measure;
    out.printed.values.push_back({i, lhs, printed_rhs, lhs - printed_rhs});
    out.derived.values.push_back({i, lhs, derived_rhs, lhs - derived_rhs});
  }
  settle(out.printed);
  settle(out.derived);
  return out;
}

VerificationReport verify_simply_rooted(const SetFamily& family, const WeightVector& w) {
  require_interior(w, family.dimension());
  return verify_simply_rooted(family, w, MeasureTable(w));
}

VerificationReport verify_simply_rooted(const SetFamily& family, const WeightVector& w, const MeasureTable& mu) {
  if (!is_simply_rooted(family)) throw PreconditionError("family is not simply rooted");
  require_interior(w, family.dimension());
  const Rational measure = mu.measure(family);
  const auto parts = mu.containing_measures(family);

  VerificationReport r;
  r.theorem = "simply-rooted";
  r.quantities = {{"mu(F)", measure}, {"p_min", w.p_min()}};
  if (measure <= w.p_min()) {
    r.hypothesis = Hypothesis::met;
    r.notes.push_back("mu(F) <= p_min: " + describe(measure, "<=", w.p_min()));
    if (family.empty()) {
      r.hypothesis = Hypothesis::degenerate;
      r.notes.push_back("degenerate: empty family");
    } else if (auto i = dictator_coordinate(family)) {
      r.hypothesis = Hypothesis::degenerate;
      r.notes.push_back("degenerate: dictator family {x : x_" + std::to_string(*i + 1) + " = 1}");
    }
  } else {
    r.notes.push_back("mu(F) > p_min: " + describe(measure, ">", w.p_min()));
  }

  for (int i = 0; i < w.dimension(); ++i) {
    const Rational& lhs = parts[static_cast<std::size_t>(i)];
    const Rational rhs = w.p(i) * measure;
    r.values.push_back({i, lhs, rhs, rhs - lhs});
  }
  settle(r);
  return r;
}

KarpasDiagnostic karpas_diagnostics(const SetFamily& family, const WeightVector& w) {
  if (!is_simply_rooted(family)) throw PreconditionError("family is not simply rooted");
  require_interior(w, family.dimension());

  const MeasureTable mu(w);
  const BooleanFunction f = indicator(family);
  const Spectrum spectrum = transform(f, w);
  const InfluenceProfile inf = influences(f, w);

  KarpasDiagnostic k;
  k.measure = mu.measure(family);
  k.delta = w.p_min() - k.measure;
  k.plus_total = inf.weighted_plus;
  k.minus_total = inf.weighted_minus;
  k.influence_total = inf.weighted_total;
  k.upper_bound = 4 * w.q_max() * k.measure;
  k.lower_bound = 4 * (w.p_min() - k.delta) * (w.q_max() + k.delta);
  k.level_one = level_weight(spectrum, 1);
  k.empty_kernel = spectrum.kernel(0);

  k.upper_holds = k.plus_total <= k.upper_bound;
  k.level_one_strict = k.level_one < k.plus_total - k.minus_total;
  k.lower_strict = k.plus_total > k.lower_bound;

  const auto parts = mu.containing_measures(family);
  k.all_coordinates_exceed = true;
  for (int i = 0; i < w.dimension(); ++i) {
    if (!(parts[static_cast<std::size_t>(i)] > w.p(i) * k.measure)) k.all_coordinates_exceed = false;
  }
  return k;
}

VerificationReport verify_knill_uniform(const SetFamily& family) {
  require_union_closed(family);
  const int d = family.dimension();
  const std::size_t size = family.size();

  VerificationReport r;
  r.theorem = "knill-uniform";
  r.quantities = {{"|F|", Rational(size)}};
  r.hypothesis = Hypothesis::met;
  if (!family.contains(0)) {
    r.hypothesis = Hypothesis::not_met;
    r.notes.push_back("empty set not in family");
  }
  if (size < 2) {
    r.hypothesis = Hypothesis::not_met;
    r.notes.push_back("|F| < 2");
  }
  if (r.hypothesis == Hypothesis::not_met) {
    r.conclusion = Conclusion::indeterminate;
    return r;
  }

  const Rational bound = detail::ratio_over_log2(Rational(size - 1), Rational(size));
  r.quantities.emplace_back("(|F|-1)/log2|F|", bound);
  const auto counts = containing_counts(family);
  const Integer two_pow = [&] {
    Integer z;
    mpz_ui_pow_ui(z.get_mpz_t(), 2, size - 1);
    return z;
  }();

  for (int i = 0; i < d; ++i) {
    const std::size_t c = counts[static_cast<std::size_t>(i)];
    // |F_i| log2|F| >= |F| - 1  <=>  |F|^{|F_i|} >= 2^{|F|-1}.
    Integer lhs_pow;
    mpz_ui_pow_ui(lhs_pow.get_mpz_t(), size, c);
    const bool holds = lhs_pow >= two_pow;
    const Rational lhs(c);
    Rational margin = lhs - bound;
    // The dyadic margin only rounds; the exact test decides.
    if (holds && margin < 0) margin = 0;
    if (!holds && margin >= 0) margin = -log_bound_tolerance();
    r.values.push_back({i, lhs, bound, margin});
  }
  settle(r);

  const auto minimal = enumerate_minimal_hitting_sets(family);
  if (!minimal.empty()) {
    const Mask s = minimal.front();
    r.hitting_set = s;
    const bool inside = std::any_of(r.witnesses.begin(), r.witnesses.end(),
                                    [&](const Witness& wt) { return has_bit(s, wt.coordinate); });
    r.notes.push_back(inside ? "a witness lies in the first minimal hitting set"
                             : "no witness in the first minimal hitting set");
  }
  return r;
}

std::vector<VerificationReport> verify_weighted_knill(const SetFamily& family, const WeightVector& w) {
  require_union_closed(family);
  const int d = family.dimension();
  if (w.dimension() != d) throw PreconditionError("dimension mismatch between family and weights");
  if (!w.all_at_least_half()) throw PreconditionError("weights must satisfy p_i >= 1/2");
  if (!w.all_below_one()) throw PreconditionError("weights must satisfy p_i < 1");

  VerificationReport base;
  base.theorem = "knill-weighted";
  base.hypothesis = Hypothesis::met;
  if (!family.contains(0)) {
    base.hypothesis = Hypothesis::not_met;
    base.notes.push_back("empty set not in family");
  } else if (!family.has_nonempty_member()) {
    base.hypothesis = Hypothesis::not_met;
    base.notes.push_back("family is {empty set}: bound is 0/0");
  }
  if (base.hypothesis == Hypothesis::not_met) {
    base.conclusion = Conclusion::indeterminate;
    return {base};
  }

  const MeasureTable mu(w);
  const Rational measure = mu.measure(family);
  const Rational empty_measure = mu[0];  // = 1/Q
  const Rational big_q = w.big_q_total();
  const Rational bound = detail::ratio_over_log(measure - empty_measure, big_q * measure);
  base.quantities = {{"mu(F)", measure}, {"1/Q", empty_measure}, {"bound", bound}};

  const auto parts = mu.containing_measures(family);
  std::vector<Rational> per_coordinate(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    per_coordinate[static_cast<std::size_t>(i)] =
        detail::ratio_over_log(parts[static_cast<std::size_t>(i)], w.big_q(i));
  }

  const Rational tol = log_bound_tolerance();
  std::vector<VerificationReport> out;
  for (Mask s : enumerate_minimal_hitting_sets(family)) {
    VerificationReport r = base;
    r.hitting_set = s;
    for (int i = 0; i < d; ++i) {
      if (!has_bit(s, i)) continue;
      const Rational& lhs = per_coordinate[static_cast<std::size_t>(i)];
      r.values.push_back({i, lhs, bound, lhs - bound});
    }
    bool near_tie = false;
    for (const auto& v : r.values) {
      if (v.margin >= tol) {
        r.witnesses.push_back({v.coordinate, v.margin});
      } else if (abs(v.margin) < tol) {
        near_tie = true;
      }
    }
    if (!r.witnesses.empty()) {
      r.conclusion = Conclusion::holds;
    } else if (near_tie) {
      r.conclusion = Conclusion::indeterminate;
      r.notes.push_back("best margin within tolerance 1e-20");
      for (const auto& v : r.values) {
        if (abs(v.margin) < tol) r.witnesses.push_back({v.coordinate, v.margin});
      }
    } else {
      r.conclusion = Conclusion::fails;
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::karpas_uniform: return "karpas-uniform";
    case Theorem::karpas_weighted: return "karpas-weighted";
    case Theorem::simply_rooted: return "simply-rooted";
    case Theorem::knill_uniform: return "knill-uniform";
    case Theorem::knill_weighted: return "knill-weighted";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (Theorem t : {Theorem::karpas_uniform, Theorem::karpas_weighted, Theorem::simply_rooted,
                    Theorem::knill_uniform, Theorem::knill_weighted}) {
    if (theorem_name(t) == name) return t;
  }
  return std::nullopt;
}

bool theorem_uses_weights(Theorem t) {
  return t == Theorem::karpas_weighted || t == Theorem::simply_rooted || t == Theorem::knill_weighted;
}

namespace {

std::vector<VerificationReport> run_with_table(Theorem t, const SetFamily& family, const WeightVector& w,
                                               const MeasureTable& mu) {
  switch (t) {
    case Theorem::karpas_uniform: return {verify_karpas_uniform(family)};
    case Theorem::karpas_weighted: {
      auto r = verify_weighted_karpas(family, w, mu);
      return {std::move(r.printed), std::move(r.derived)};
    }
    case Theorem::simply_rooted: return {verify_simply_rooted(family, w, mu)};
    case Theorem::knill_uniform: return {verify_knill_uniform(family)};
    case Theorem::knill_weighted: return verify_weighted_knill(family, w);
  }
  return {};
}

void tally(SweepSummary& s, const VerificationReport& r, const SetFamily& family,
           const std::optional<WeightVector>& w) {
  ++s.reports;
  switch (r.hypothesis) {
    case Hypothesis::met: ++s.hypothesis_met; break;
    case Hypothesis::degenerate: ++s.degenerate; break;
    case Hypothesis::not_met: ++s.not_met; break;
  }
  switch (r.conclusion) {
    case Conclusion::holds: {
      ++s.holds;
      Rational best = r.witnesses.front().margin;
      for (const auto& wt : r.witnesses) best = std::max(best, wt.margin);
      if (!s.tightest_margin || best < *s.tightest_margin) s.tightest_margin = best;
      break;
    }
    case Conclusion::indeterminate: ++s.indeterminate; break;
    case Conclusion::fails:
      ++s.fails;
      s.failures.push_back({family, w, r});
      break;
  }
}

void merge(SweepSummary& into, SweepSummary&& part) {
  into.inputs += part.inputs;
  into.reports += part.reports;
  into.hypothesis_met += part.hypothesis_met;
  into.degenerate += part.degenerate;
  into.not_met += part.not_met;
  into.holds += part.holds;
  into.indeterminate += part.indeterminate;
  into.fails += part.fails;
  for (auto& f : part.failures) into.failures.push_back(std::move(f));
  if (part.tightest_margin && (!into.tightest_margin || *part.tightest_margin < *into.tightest_margin)) {
    into.tightest_margin = std::move(part.tightest_margin);
  }
}

}  // namespace

std::vector<VerificationReport> run_theorem(Theorem t, const SetFamily& family, const WeightVector& w) {
  if (w.dimension() != family.dimension()) {
    throw PreconditionError("dimension mismatch: family d=" + std::to_string(family.dimension()) +
                            ", weights d=" + std::to_string(w.dimension()));
  }
  return run_with_table(t, family, w, MeasureTable(w));
}

SweepSummary sweep(Theorem t, std::span<const SetFamily> families, std::span<const WeightVector> weights,
                   unsigned jobs) {
  const bool weighted = theorem_uses_weights(t);
  std::vector<MeasureTable> tables;
  if (weighted) {
    for (const auto& w : weights) tables.emplace_back(w);
  }

  auto parts = parallel_map(families.size(), jobs, [&](std::size_t idx) {
    const SetFamily& family = families[idx];
    SweepSummary s;
    if (!weighted) {
      ++s.inputs;
      const WeightVector dummy = WeightVector::uniform(family.dimension());
      for (const auto& r : run_with_table(t, family, dummy, MeasureTable(dummy))) {
        tally(s, r, family, std::nullopt);
      }
      return s;
    }
    for (std::size_t k = 0; k < weights.size(); ++k) {
      ++s.inputs;
      for (const auto& r : run_with_table(t, family, weights[k], tables[k])) tally(s, r, family, weights[k]);
    }
    return s;
  });

  SweepSummary total;
  for (auto& p : parts) merge(total, std::move(p));
  return total;
}

}  // namespace ucube
