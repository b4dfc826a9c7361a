#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

#include "ucube/explore.hpp"
#include "ucube/family_io.hpp"
#include "ucube/hitting.hpp"
#include "ucube/spectral.hpp"
#include "ucube/verify.hpp"

namespace ucube::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { human, json_lines };

struct Options {
  Format format = Format::human;
  unsigned jobs = 1;
  std::string family_path;
  std::string weights;
  std::string theorem = "all";
  std::string dump_dir = "ucube-witnesses";
  int d = 0;
  std::string filter = "union-closed";
  bool emit = false;
  std::string sweep_theorem;
  std::size_t random_weights = 0;
  std::string weight_range = "interior";
  std::size_t budget = 1000;
  std::optional<std::uint64_t> seed;
  bool constrained = false;
  bool no_empty = false;
  std::size_t patience = 200;
  std::uint64_t count = 1;
  std::uint64_t draws = 100000;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Formatting helpers

std::string decimal(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

/// `a/b (0.xyz)` for humans; integers stay bare. Dyadic values from the
/// 128-bit log computations print as a 25-digit decimal instead.
std::string human(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  if (mpz_sizeinbase(r.get_den().get_mpz_t(), 2) > 64) {
    std::ostringstream s;
    s << "~" << std::setprecision(25) << mpf_class(r, 160);
    return s.str();
  }
  return to_string(r) + " (" + decimal(r.get_d()) + ")";
}

json rational_list(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a;
}

std::string elements(const std::vector<int>& coords) {
  std::string s;
  for (int c : coords) {
    if (!s.empty()) s += ',';
    s += std::to_string(c + 1);
  }
  return s.empty() ? "-" : s;
}

class Printer {
 public:
  Printer(Format format, std::ostream& out) : format_(format), out_(out) {}

  bool json_mode() const { return format_ == Format::json_lines; }
  void record(const json& j) { out_ << j.dump() << '\n'; }
  std::ostream& text() { return out_; }

 private:
  Format format_;
  std::ostream& out_;
};

// ---------------------------------------------------------------------------
// Inputs

SetFamily load_family(const Options& o) {
  if (o.family_path.empty()) throw UsageError("a family file is required");
  return read_family_file(o.family_path);
}

WeightVector weights_for(const Options& o, int d) {
  if (o.weights.empty()) return WeightVector::uniform(d);
  WeightVector w = read_weights(o.weights);
  if (w.dimension() != d) {
    throw UsageError("weight dimension " + std::to_string(w.dimension()) + " does not match family dimension " +
                     std::to_string(d));
  }
  return w;
}

std::uint64_t seed_for(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv(kSeedEnvVar); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string_view(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kSeedEnvVar) + " is not an unsigned integer");
  }
  return 1;
}

// ---------------------------------------------------------------------------
// Reports

json report_json(const VerificationReport& r) {
  json j;
  j["record"] = "verification";
  j["theorem"] = r.theorem;
  j["asserted"] = r.asserted;
  j["hypothesis"] = std::string(to_string(r.hypothesis));
  j["conclusion"] = std::string(to_string(r.conclusion));
  if (r.hitting_set) j["hitting_set"] = format_set(*r.hitting_set);
  json q = json::object();
  for (const auto& [name, value] : r.quantities) q[name] = to_string(value);
  j["quantities"] = q;
  j["notes"] = r.notes;
  json w = json::array();
  for (const auto& wt : r.witnesses) w.push_back({{"element", wt.coordinate + 1}, {"margin", to_string(wt.margin)}});
  j["witnesses"] = w;
  json v = json::array();
  for (const auto& c : r.values) {
    v.push_back({{"element", c.coordinate + 1},
                 {"lhs", to_string(c.lhs)},
                 {"rhs", to_string(c.rhs)},
                 {"margin", to_string(c.margin)}});
  }
  j["values"] = v;
  return j;
}

void report_human(std::ostream& out, const VerificationReport& r) {
  out << "[" << r.theorem << "]";
  if (r.hitting_set) out << " S=" << format_set(*r.hitting_set);
  out << " hypothesis: " << to_string(r.hypothesis) << ", conclusion: " << to_string(r.conclusion);
  if (!r.asserted) out << " (reported only)";
  out << '\n';
  for (const auto& [name, value] : r.quantities) out << "  " << name << " = " << human(value) << '\n';
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
  for (const auto& c : r.values) {
    out << "  i=" << c.coordinate + 1 << "  lhs=" << human(c.lhs) << "  rhs=" << human(c.rhs)
        << "  margin=" << human(c.margin) << '\n';
  }
  std::vector<int> coords;
  for (const auto& w : r.witnesses) coords.push_back(w.coordinate);
  out << "  witnesses: " << elements(coords) << '\n';
}

/// Prints the report and dumps a witness file for asserted failures.
/// Returns true for an asserted failure.
bool emit_report(Printer& p, const Options& o, const VerificationReport& r, const SetFamily& family,
                 const std::optional<WeightVector>& w) {
  const bool failed = r.asserted_failure();
  std::optional<std::filesystem::path> dumped;
  if (failed) dumped = write_witness(o.dump_dir, r, family, w);
  if (p.json_mode()) {
    json j = report_json(r);
    if (dumped) j["witness_file"] = dumped->string();
    p.record(j);
  } else {
    report_human(p.text(), r);
    if (dumped) p.text() << "  witness dumped: " << dumped->string() << '\n';
  }
  return failed;
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_check(const Options& o, Printer& p) {
  const SetFamily f = load_family(o);
  const bool uc = is_union_closed(f);
  const bool sr = is_simply_rooted(f);
  std::optional<FranklRatio> ratio;
  if (!f.empty()) ratio = verify_frankl_ratio(f);

  if (p.json_mode()) {
    json j{{"record", "check"},
           {"d", f.dimension()},
           {"size", f.size()},
           {"union_closed", uc},
           {"simply_rooted", sr},
           {"contains_empty", f.contains(0)}};
    if (ratio) {
      j["frankl_ratio"] = to_string(ratio->ratio);
      json am = json::array();
      for (int i : ratio->argmax) am.push_back(i + 1);
      j["frankl_argmax"] = am;
      j["frankl_degenerate"] = ratio->degenerate;
    }
    p.record(j);
  } else {
    auto& out = p.text();
    out << "d: " << f.dimension() << "\nsize: " << f.size() << "\nunion-closed: " << std::boolalpha << uc
        << "\nsimply-rooted: " << sr << "\ncontains empty set: " << f.contains(0) << '\n';
    if (ratio) {
      out << "max_i |F_i|/|F|: " << human(ratio->ratio) << " at " << elements(ratio->argmax)
          << (ratio->degenerate ? " (degenerate: no member contains any element)" : "") << '\n';
    }
  }
  return kOk;
}

int cmd_measure(const Options& o, Printer& p) {
  const SetFamily f = load_family(o);
  const WeightVector w = weights_for(o, f.dimension());
  const MeasureTable mu(w);
  const Rational total = mu.measure(f);
  const auto parts = mu.containing_measures(f);

  if (p.json_mode()) {
    json per = json::array();
    for (int i = 0; i < w.dimension(); ++i) {
      json e{{"element", i + 1}, {"measure", to_string(parts[static_cast<std::size_t>(i)])}};
      if (total != 0) e["ratio"] = to_string(Rational(parts[static_cast<std::size_t>(i)] / total));
      per.push_back(e);
    }
    p.record({{"record", "measure"}, {"weights", format_weights(w)}, {"measure", to_string(total)}, {"elements", per}});
  } else {
    auto& out = p.text();
    out << "weights: " << format_weights(w) << "\nmu(F) = " << human(total) << '\n';
    for (int i = 0; i < w.dimension(); ++i) {
      const Rational& m = parts[static_cast<std::size_t>(i)];
      out << "  mu(F_" << i + 1 << ") = " << human(m);
      if (total != 0) out << "   mu(F_" << i + 1 << ")/mu(F) = " << human(Rational(m / total));
      out << '\n';
    }
  }
  return kOk;
}

int cmd_spectrum(const Options& o, Printer& p) {
  const SetFamily f = load_family(o);
  const WeightVector w = weights_for(o, f.dimension());
  const BooleanFunction fn = indicator(f);
  const Spectrum s = transform(fn, w);
  const auto levels = level_weights(s);
  const Rational defect = parseval_defect(fn, w, s);

  if (p.json_mode()) {
    json coeffs = json::array();
    for (Mask m = 0; m < cube_size(f.dimension()); ++m) {
      coeffs.push_back({{"set", format_set(m)},
                        {"kernel", to_string(s.kernel(m))},
                        {"coeff_sq", to_string(s.coeff_sq(m))},
                        {"coeff", s.coeff_float(m)}});
    }
    p.record({{"record", "spectrum"},
              {"weights", format_weights(w)},
              {"coefficients", coeffs},
              {"levels", rational_list(levels)},
              {"parseval_defect", to_string(defect)}});
  } else {
    auto& out = p.text();
    out << "weights: " << format_weights(w) << '\n';
    for (Mask m = 0; m < cube_size(f.dimension()); ++m) {
      out << "  S=" << std::left << std::setw(10) << format_set(m) << " m_S=" << human(s.kernel(m))
          << "  f^(S)^2=" << human(s.coeff_sq(m)) << "  f^(S)=" << decimal(s.coeff_float(m)) << '\n';
    }
    for (std::size_t k = 0; k < levels.size(); ++k) out << "W^" << k << " = " << human(levels[k]) << '\n';
    out << "Parseval defect: " << human(defect) << '\n';
  }
  return kOk;
}

int cmd_influence(const Options& o, Printer& p) {
  const SetFamily f = load_family(o);
  const WeightVector w = weights_for(o, f.dimension());
  const BooleanFunction fn = indicator(f);
  const InfluenceProfile inf = influences(fn, w);

  std::optional<DegreeOneReport> deg1;
  std::optional<InfluenceLevelCheck> levels_check;
  std::vector<Rational> margins;
  if (w.is_interior()) {
    const Spectrum s = transform(fn, w);
    deg1 = degree_one_identities(fn, w, s, inf);
    levels_check = influence_level_identity_defect(s, inf, w);
    const auto levels = level_weights(s);
    for (int k = 1; k <= f.dimension(); ++k) margins.push_back(low_degree_bound_margin(levels, inf, k));
  }

  if (p.json_mode()) {
    json per = json::array();
    for (int i = 0; i < w.dimension(); ++i) {
      const auto ui = static_cast<std::size_t>(i);
      per.push_back({{"element", i + 1},
                     {"plus", to_string(inf.plus[ui])},
                     {"minus", to_string(inf.minus[ui])},
                     {"total", to_string(inf.total[ui])},
                     {"derivative_energy", to_string(derivative_energy(fn, w, i))}});
    }
    json j{{"record", "influence"},
           {"weights", format_weights(w)},
           {"elements", per},
           {"weighted_total", to_string(inf.weighted_total)},
           {"weighted_plus", to_string(inf.weighted_plus)},
           {"weighted_minus", to_string(inf.weighted_minus)}};
    if (deg1) {
      std::vector<Rational> residuals;
      for (std::size_t i = 0; i < deg1->scaled_singletons.size(); ++i) {
        residuals.emplace_back(deg1->scaled_singletons[i] - deg1->influence_gaps[i]);
      }
      j["degree_one_empty_residual"] = to_string(Rational(deg1->empty_kernel - deg1->empty_expected));
      j["degree_one_singleton_residuals"] = rational_list(residuals);
      j["influence_level_defect"] = to_string(levels_check->defect);
      j["influence_level_coordinate_defects"] = rational_list(levels_check->coordinate_defects);
      j["low_degree_margins"] = rational_list(margins);
    }
    p.record(j);
  } else {
    auto& out = p.text();
    out << "weights: " << format_weights(w) << '\n';
    for (int i = 0; i < w.dimension(); ++i) {
      const auto ui = static_cast<std::size_t>(i);
      out << "  i=" << i + 1 << "  I+=" << human(inf.plus[ui]) << "  I-=" << human(inf.minus[ui])
          << "  I=" << human(inf.total[ui]) << "  mu((D_i f)^2)=" << human(derivative_energy(fn, w, i)) << '\n';
    }
    out << "I(f) = " << human(inf.weighted_total) << "  I+(f) = " << human(inf.weighted_plus)
        << "  I-(f) = " << human(inf.weighted_minus) << '\n';
    if (deg1) {
      out << "f^(empty) = " << human(deg1->empty_kernel) << ", 2 mu(f=1) - 1 = " << human(deg1->empty_expected)
          << '\n';
      for (std::size_t i = 0; i < deg1->scaled_singletons.size(); ++i) {
        out << "  alpha_" << i + 1 << " f^({" << i + 1 << "}) = " << human(deg1->scaled_singletons[i])
            << ", 2(I+ - I-) = " << human(deg1->influence_gaps[i]) << '\n';
      }
      out << "I(f) - sum k W^k = " << human(levels_check->defect) << '\n';
      for (std::size_t k = 0; k < margins.size(); ++k) {
        out << "  low-degree margin k=" << k + 1 << ": " << human(margins[k]) << '\n';
      }
    } else {
      out << "(Fourier identities skipped: boundary weights)\n";
    }
  }
  return kOk;
}

int cmd_hitting(const Options& o, Printer& p) {
  const SetFamily f = load_family(o);
  const WeightVector w = weights_for(o, f.dimension());
  const bool uc = is_union_closed(f);
  int status = kOk;

  for (Mask s : enumerate_minimal_hitting_sets(f)) {
    const HittingCertificate cert = build_certificate(f, s);
    const CertificateCheck check = check_certificate(f, cert);
    std::optional<SizeMargin> size_margin;
    if (!f.empty()) size_margin = knill_size_margin(f, s);
    const auto violations = weighted_size_violations(f, s, w);
    std::optional<WeightedSizeMargin> weighted;
    if (violations.empty()) weighted = weighted_size_margin(f, s, w);

    // Asserted only where the hypotheses apply: union-closed, and the size
    // bound also needs the empty set as a member.
    if (uc && !check.all()) status = kAssertedFailure;
    if (uc && f.contains(0) && size_margin && !size_margin->holds()) status = kAssertedFailure;
    if (weighted && !weighted->exact.holds()) status = kAssertedFailure;

    if (p.json_mode()) {
      json reps = json::array();
      for (const auto& [i, a] : cert.representatives) reps.push_back({{"element", i + 1}, {"set", format_set(a)}});
      json unions = json::array();
      for (const auto& [t, a] : cert.unions()) unions.push_back({{"T", format_set(t)}, {"A_T", format_set(a)}});
      json j{{"record", "hitting_set"},
             {"set", format_set(s)},
             {"representatives", reps},
             {"unions", unions},
             {"certificate_valid", check.all()}};
      if (size_margin) {
        j["size_bound"] = {{"two_pow_size", to_string(size_margin->bound)},
                           {"family_size", to_string(size_margin->value)},
                           {"holds", size_margin->holds()}};
      }
      if (weighted) {
        j["weighted_size_bound"] = {{"q_complement", to_string(weighted->exact.bound)},
                                    {"measure", to_string(weighted->exact.value)},
                                    {"holds", weighted->exact.holds()},
                                    {"log_lhs", weighted->log_lhs},
                                    {"log_rhs", weighted->log_rhs}};
      } else {
        j["weighted_size_bound_skipped"] = violations;
      }
      p.record(j);
    } else {
      auto& out = p.text();
      out << "minimal hitting set S=" << format_set(s) << '\n';
      for (const auto& [i, a] : cert.representatives) out << "  A_" << i + 1 << " = " << format_set(a) << '\n';
      for (const auto& [t, a] : cert.unions()) out << "  A_T for T=" << format_set(t) << ": " << format_set(a) << '\n';
      out << "  certificate: " << (check.all() ? "valid" : "INVALID") << (uc ? "" : " (family not union-closed)")
          << '\n';
      if (size_margin) {
        out << "  2^|S| = " << human(size_margin->bound) << " <= |F| = " << human(size_margin->value) << ": "
            << std::boolalpha << size_margin->holds() << '\n';
      }
      if (weighted) {
        out << "  q_{S^c} = " << human(weighted->exact.bound) << " <= mu(F) = " << human(weighted->exact.value)
            << ": " << std::boolalpha << weighted->exact.holds() << "  (log form " << decimal(weighted->log_lhs)
            << " <= " << decimal(weighted->log_rhs) << ")\n";
      } else {
        out << "  weighted size bound skipped:";
        for (const auto& v : violations) out << ' ' << v << ';';
        out << '\n';
      }
    }
  }
  return status;
}

int cmd_verify(const Options& o, Printer& p) {
  const SetFamily f = load_family(o);
  const WeightVector w = weights_for(o, f.dimension());

  std::vector<Theorem> theorems;
  const bool all = o.theorem == "all";
  if (all) {
    theorems = {Theorem::karpas_uniform, Theorem::karpas_weighted, Theorem::simply_rooted, Theorem::knill_uniform,
                Theorem::knill_weighted};
  } else if (auto t = parse_theorem(o.theorem)) {
    theorems = {*t};
  } else {
    throw UsageError("unknown theorem '" + o.theorem + "'");
  }

  bool failed = false;
  for (Theorem t : theorems) {
    std::vector<VerificationReport> reports;
    try {
      reports = run_theorem(t, f, w);
    } catch (const PreconditionError& e) {
      if (!all) throw;
      if (p.json_mode()) {
        p.record({{"record", "skipped"}, {"theorem", std::string(theorem_name(t))}, {"reason", e.what()}});
      } else {
        p.text() << "[" << theorem_name(t) << "] skipped: " << e.what() << '\n';
      }
      continue;
    }
    const std::optional<WeightVector> wopt =
        theorem_uses_weights(t) ? std::optional<WeightVector>(w) : std::nullopt;
    for (const auto& r : reports) failed = emit_report(p, o, r, f, wopt) || failed;
  }
  return failed ? kAssertedFailure : kOk;
}

WeightRange parse_range(const std::string& s) {
  if (s == "interior") return WeightRange::interior;
  if (s == "at-least-half") return WeightRange::at_least_half;
  throw UsageError("unknown weight range '" + s + "'");
}

int cmd_enumerate(const Options& o, Printer& p) {
  if (o.d < 1 || o.d > kMaxEnumerationDimension) {
    throw UsageError("--d must be in 1.." + std::to_string(kMaxEnumerationDimension));
  }
  const FamilyFilter filter = parse_filter(o.filter);
  const std::vector<SetFamily> families = enumerate_families(o.d, filter, o.jobs);

  if (p.json_mode()) {
    p.record({{"record", "enumeration"}, {"d", o.d}, {"filter", o.filter}, {"count", families.size()}});
  } else {
    // '#' keeps the human stream parseable as a family list under --emit.
    p.text() << "# d=" << o.d << " filter=" << o.filter << " count=" << families.size() << '\n';
  }
  if (o.emit) {
    for (const auto& f : families) {
      if (p.json_mode()) {
        json members = json::array();
        f.for_each([&](Mask x) { members.push_back(format_point(x, f.dimension())); });
        p.record({{"record", "family"}, {"d", f.dimension()}, {"members", members}});
      } else {
        write_family(p.text(), f);
      }
    }
  }
  if (o.sweep_theorem.empty()) return kOk;

  const auto theorem = parse_theorem(o.sweep_theorem);
  if (!theorem) throw UsageError("unknown theorem '" + o.sweep_theorem + "'");
  std::vector<WeightVector> corpus;
  if (!o.weights.empty()) corpus.push_back(weights_for(o, o.d));
  if (o.random_weights > 0) {
    Rng rng(seed_for(o));
    for (std::size_t k = 0; k < o.random_weights; ++k) {
      corpus.push_back(random_weights(o.d, rng, parse_range(o.weight_range)));
    }
  }
  if (corpus.empty()) corpus.push_back(WeightVector::uniform(o.d));

  const SweepSummary s = sweep(*theorem, families, corpus, o.jobs);
  std::size_t asserted = 0;
  std::vector<std::string> dumped;
  for (const auto& fail : s.failures) {
    if (!fail.report.asserted_failure()) continue;
    ++asserted;
    dumped.push_back(write_witness(o.dump_dir, fail.report, fail.family, fail.weights).string());
  }

  if (p.json_mode()) {
    json j{{"record", "sweep"},
           {"theorem", o.sweep_theorem},
           {"weight_vectors", corpus.size()},
           {"inputs", s.inputs},
           {"reports", s.reports},
           {"hypothesis_met", s.hypothesis_met},
           {"degenerate", s.degenerate},
           {"not_met", s.not_met},
           {"holds", s.holds},
           {"indeterminate", s.indeterminate},
           {"fails", s.fails},
           {"asserted_failures", asserted},
           {"witness_files", dumped}};
    if (s.tightest_margin) j["tightest_margin"] = to_string(*s.tightest_margin);
    p.record(j);
  } else {
    auto& out = p.text();
    out << "# sweep " << o.sweep_theorem << " over " << corpus.size() << " weight vector(s): inputs=" << s.inputs
        << " reports=" << s.reports << " met=" << s.hypothesis_met << " degenerate=" << s.degenerate
        << " not_met=" << s.not_met << " holds=" << s.holds << " indeterminate=" << s.indeterminate
        << " fails=" << s.fails << " asserted_failures=" << asserted << '\n';
    if (s.tightest_margin) out << "# tightest witness margin: " << human(*s.tightest_margin) << '\n';
    for (const auto& path : dumped) out << "# witness dumped: " << path << '\n';
  }
  return asserted > 0 ? kAssertedFailure : kOk;
}

int cmd_search(const Options& o, Printer& p) {
  WeightVector w = o.weights.empty() ? WeightVector::uniform(o.d > 0 ? o.d : 3) : read_weights(o.weights);
  if (o.d > 0 && w.dimension() != o.d) throw UsageError("--d does not match the weight dimension");
  SearchOptions opts;
  opts.require_hypothesis = o.constrained;
  opts.include_empty = !o.no_empty;
  opts.patience = o.patience;
  const std::uint64_t seed = seed_for(o);
  const SearchResult r = search_min_ratio(w, o.budget, seed, opts);

  if (p.json_mode()) {
    json members = json::array();
    r.best.for_each([&](Mask x) { members.push_back(format_point(x, r.best.dimension())); });
    json gens = json::array();
    for (Mask g : r.generators) gens.push_back(format_set(g));
    json j{{"record", "search"},
           {"weights", format_weights(w)},
           {"seed", seed},
           {"moves", r.moves},
           {"restarts", r.restarts},
           {"generators", gens},
           {"members", members}};
    j["objective"] = r.objective ? json(to_string(*r.objective)) : json(nullptr);
    p.record(j);
  } else {
    auto& out = p.text();
    out << "weights: " << format_weights(w) << "  seed: " << seed << "  moves: " << r.moves
        << "  restarts: " << r.restarts << '\n';
    if (r.objective) {
      out << "best max_i mu(F_i)/mu(F) = " << human(*r.objective) << '\n';
    } else {
      out << "no feasible family found\n";
    }
    out << "generators:";
    for (Mask g : r.generators) out << ' ' << format_set(g);
    out << '\n';
    write_family(out, r.best);
  }
  return kOk;
}

int cmd_sample(const Options& o, Printer& p) {
  std::optional<SetFamily> family;
  if (!o.family_path.empty()) family = load_family(o);
  const int d = family ? family->dimension() : (o.d > 0 ? o.d : 0);
  WeightVector w = o.weights.empty() ? WeightVector::uniform(d > 0 ? d : 1)
                                     : (d > 0 ? weights_for(o, d) : read_weights(o.weights));
  const std::uint64_t seed = seed_for(o);

  Rng rng(seed);
  const PointSampler sampler(w);
  std::vector<std::string> points;
  for (std::uint64_t k = 0; k < o.count; ++k) points.push_back(format_point(sampler(rng), w.dimension()));

  if (p.json_mode()) {
    p.record({{"record", "sample"}, {"weights", format_weights(w)}, {"seed", seed}, {"points", points}});
  } else {
    p.text() << "weights: " << format_weights(w) << "  seed: " << seed << '\n';
    for (const auto& s : points) p.text() << s << '\n';
  }

  if (family) {
    const MonteCarloEstimate est = monte_carlo_measure(*family, w, o.draws, seed);
    const Rational exact = family_measure(*family, w);
    const double diff = std::abs(est.estimate - exact.get_d());
    if (p.json_mode()) {
      p.record({{"record", "monte_carlo"},
                {"draws", est.draws},
                {"hits", est.hits},
                {"estimate", est.estimate},
                {"standard_error", est.standard_error},
                {"exact", to_string(exact)},
                {"abs_error", diff}});
    } else {
      p.text() << "Monte Carlo: " << est.hits << "/" << est.draws << " = " << decimal(est.estimate)
               << " +/- " << decimal(est.standard_error) << "  exact mu(F) = " << human(exact)
               << "  |error| = " << decimal(diff) << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact analysis of set families on the p-biased Boolean cube", "ucube"};
  app.require_subcommand(1);

  std::string format = "human";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json-lines"}));
  app.add_option("--jobs", o.jobs, "Worker threads for enumeration and sweeps")->check(CLI::Range(1U, 256U));

  auto add_family = [&](CLI::App* sub) { sub->add_option("family", o.family_path, "Family file")->required(); };
  auto add_weights = [&](CLI::App* sub) {
    sub->add_option("--weights,-w", o.weights, "Bias vector literal `r1,...,rd` or a file holding one");
  };

  auto* check = app.add_subcommand("check", "Union-closed / simply-rooted predicates");
  add_family(check);

  auto* measure = app.add_subcommand("measure", "Exact mu(F) and mu(F_i)");
  add_family(measure);
  add_weights(measure);

  auto* spectrum = app.add_subcommand("spectrum", "Biased Fourier spectrum of the indicator");
  add_family(spectrum);
  add_weights(spectrum);

  auto* influence = app.add_subcommand("influence", "Influences and degree-one / level identities");
  add_family(influence);
  add_weights(influence);

  auto* hitting = app.add_subcommand("hitting", "Minimal hitting sets, certificates and size bounds");
  add_family(hitting);
  add_weights(hitting);

  auto* verify = app.add_subcommand("verify", "Theorem verification reports");
  add_family(verify);
  add_weights(verify);
  verify->add_option("--theorem,-t", o.theorem,
                     "karpas-uniform | karpas-weighted | simply-rooted | knill-uniform | knill-weighted | all");
  verify->add_option("--dump-dir", o.dump_dir, "Directory for witness files");

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive family enumeration (d <= 4)");
  enumerate->add_option("--d", o.d, "Dimension")->required();
  enumerate->add_option("--filter", o.filter,
                        "Comma list: union-closed, simply-rooted, contains-empty, has-nonempty-member, all");
  enumerate->add_flag("--emit", o.emit, "Stream every family");
  enumerate->add_option("--verify", o.sweep_theorem, "Run a theorem over every enumerated family");
  add_weights(enumerate);
  enumerate->add_option("--random-weights", o.random_weights, "Number of random weight vectors for --verify");
  enumerate->add_option("--weight-range", o.weight_range, "interior | at-least-half");
  enumerate->add_option("--seed", o.seed, "Seed for random weights");
  enumerate->add_option("--dump-dir", o.dump_dir, "Directory for witness files");

  auto* search = app.add_subcommand("search", "Hill-climbing search for small Frankl ratios");
  add_weights(search);
  search->add_option("--d", o.d, "Dimension (uniform weights when --weights is absent)");
  search->add_option("--budget", o.budget, "Number of moves");
  search->add_option("--seed", o.seed, "Seed");
  search->add_option("--patience", o.patience, "Non-improving moves before restart");
  search->add_flag("--constrained", o.constrained, "Require mu(F) >= q_max");
  search->add_flag("--no-empty", o.no_empty, "Do not add the empty set to families");

  auto* sample = app.add_subcommand("sample", "Draw points from mu_p; with --family, a Monte Carlo estimate");
  add_weights(sample);
  sample->add_option("--d", o.d, "Dimension (uniform weights when --weights is absent)");
  sample->add_option("--count", o.count, "Points to print");
  sample->add_option("--seed", o.seed, "Seed");
  sample->add_option("--family", o.family_path, "Family file for the Monte Carlo estimate");
  sample->add_option("--draws", o.draws, "Monte Carlo draws")->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> argv_storage{"ucube"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  o.format = format == "json-lines" ? Format::json_lines : Format::human;

  std::ostringstream buffer;
  Printer printer(o.format, buffer);
  int code = kOk;
  try {
    if (*check) code = cmd_check(o, printer);
    else if (*measure) code = cmd_measure(o, printer);
    else if (*spectrum) code = cmd_spectrum(o, printer);
    else if (*influence) code = cmd_influence(o, printer);
    else if (*hitting) code = cmd_hitting(o, printer);
    else if (*verify) code = cmd_verify(o, printer);
    else if (*enumerate) code = cmd_enumerate(o, printer);
    else if (*search) code = cmd_search(o, printer);
    else if (*sample) code = cmd_sample(o, printer);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  out << buffer.str();
  return code;
}

}  // namespace ucube::cli
