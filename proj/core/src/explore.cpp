#include "ucube/explore.hpp"

#include <cmath>
#include <string>

#include "ucube/parallel.hpp"
#include "ucube/verify.hpp"

namespace ucube {

FamilyFilter parse_filter(std::string_view text) {
  FamilyFilter f = FamilyFilter::none;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view name = text.substr(0, comma);
    if (name == "union-closed") {
      f = f | FamilyFilter::union_closed;
    } else if (name == "simply-rooted") {
      f = f | FamilyFilter::simply_rooted;
    } else if (name == "contains-empty") {
      f = f | FamilyFilter::contains_empty;
    } else if (name == "has-nonempty-member") {
      f = f | FamilyFilter::has_nonempty_member;
    } else if (name != "all" && !name.empty()) {
      throw ParseError("unknown filter '" + std::string(name) + "'");
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return f;
}

bool passes(const SetFamily& family, FamilyFilter filter) {
  if (has_flag(filter, FamilyFilter::contains_empty) && !family.contains(0)) return false;
  if (has_flag(filter, FamilyFilter::has_nonempty_member) && !family.has_nonempty_member()) return false;
  if (has_flag(filter, FamilyFilter::union_closed) && !is_union_closed(family)) return false;
  if (has_flag(filter, FamilyFilter::simply_rooted) && !is_simply_rooted(family)) return false;
  return true;
}

namespace {

void check_enumeration_dimension(int d) {
  if (d < 1 || d > kMaxEnumerationDimension) {
    throw PreconditionError("exhaustive enumeration supports 1 <= d <= " +
                            std::to_string(kMaxEnumerationDimension) + ", got " + std::to_string(d));
  }
}

std::uint64_t table_count(int d) { return std::uint64_t{1} << cube_size(d); }

}  // namespace

EnumerationStream::EnumerationStream(int d, FamilyFilter filter) : d_(d), filter_(filter) {
  check_enumeration_dimension(d);
  end_ = table_count(d);
}

std::optional<SetFamily> EnumerationStream::next() {
  while (cursor_ < end_) {
    SetFamily f = SetFamily::from_table(d_, cursor_++);
    if (passes(f, filter_)) return f;
  }
  return std::nullopt;
}

std::vector<SetFamily> enumerate_families(int d, FamilyFilter filter, unsigned jobs) {
  check_enumeration_dimension(d);
  const std::uint64_t total = table_count(d);
  constexpr std::size_t kChunk = 1024;
  const std::size_t chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);
  auto parts = parallel_map(chunks, jobs, [&](std::size_t c) {
    std::vector<SetFamily> out;
    const std::uint64_t begin = c * kChunk;
    const std::uint64_t end = std::min<std::uint64_t>(total, begin + kChunk);
    for (std::uint64_t t = begin; t < end; ++t) {
      SetFamily f = SetFamily::from_table(d, t);
      if (passes(f, filter)) out.push_back(std::move(f));
    }
    return out;
  });
  std::vector<SetFamily> all;
  for (auto& p : parts) {
    for (auto& f : p) all.push_back(std::move(f));
  }
  return all;
}

SetFamily union_closure(int d, std::span<const Mask> generators) {
  SetFamily closed(d);
  std::vector<Mask> members;
  for (Mask g : generators) {
    if (closed.contains(g)) continue;
    // Adding g: the new unions are g itself and g | m for current members m.
    const std::size_t before = members.size();
    closed.insert(g);
    members.push_back(g);
    for (std::size_t k = 0; k < before; ++k) {
      const Mask u = members[k] | g;
      if (!closed.contains(u)) {
        closed.insert(u);
        members.push_back(u);
      }
    }
  }
  return closed;
}

Mask sample_point(const WeightVector& w, std::uint64_t seed) {
  Rng rng(seed);
  return PointSampler(w)(rng);
}

MonteCarloEstimate monte_carlo_measure(const SetFamily& family, const WeightVector& w, std::uint64_t draws,
                                       std::uint64_t seed) {
  if (draws == 0) throw PreconditionError("Monte Carlo needs at least one draw");
  if (family.dimension() != w.dimension()) throw PreconditionError("dimension mismatch between family and weights");
  Rng rng(seed);
  const PointSampler sample(w);
  MonteCarloEstimate est;
  est.draws = draws;
  for (std::uint64_t k = 0; k < draws; ++k) {
    if (family.contains(sample(rng))) ++est.hits;
  }
  const double n = static_cast<double>(draws);
  est.estimate = static_cast<double>(est.hits) / n;
  est.standard_error = std::sqrt(est.estimate * (1 - est.estimate) / n);
  return est;
}

// ---------------------------------------------------------------------------

namespace {

struct Candidate {
  std::vector<Mask> generators;
  SetFamily family;
  std::optional<Rational> objective;  // nullopt: infeasible
};

class Searcher {
 public:
  Searcher(const WeightVector& w, std::uint64_t seed, const SearchOptions& options)
      : w_(w), mu_(w), rng_(seed), options_(options), d_(w.dimension()) {}

  Candidate evaluate(std::vector<Mask> generators) const {
    SetFamily f = union_closure(d_, generators);
    if (options_.include_empty) f.insert(0);
    Candidate c{std::move(generators), f, std::nullopt};
    if (!f.has_nonempty_member()) return c;
    if (options_.require_hypothesis && mu_.measure(f) < w_.q_max()) return c;
    c.objective = weighted_frankl_ratio(f, mu_);
    return c;
  }

  Mask random_generator() { return static_cast<Mask>(1 + rng_.below(cube_size(d_) - 1)); }

  Candidate random_start() {
    const std::size_t count = 1 + rng_.below(static_cast<std::uint64_t>(d_) + 1);
    std::vector<Mask> g;
    for (std::size_t k = 0; k < count; ++k) g.push_back(random_generator());
    return evaluate(std::move(g));
  }

  Candidate neighbour(const Candidate& from) {
    std::vector<Mask> g = from.generators;
    const std::uint64_t kind = rng_.below(3);
    if (kind == 0 || g.empty()) {
      g.push_back(random_generator());
    } else if (kind == 1 && g.size() > 1) {
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(rng_.below(g.size())));
    } else {
      g[rng_.below(g.size())] = random_generator();
    }
    return evaluate(std::move(g));
  }

 private:
  const WeightVector& w_;
  MeasureTable mu_;
  Rng rng_;
  SearchOptions options_;
  int d_;
};

bool better(const Candidate& a, const Candidate& b) {
  if (!a.objective) return false;
  if (!b.objective) return true;
  return *a.objective < *b.objective;
}

bool no_worse(const Candidate& a, const Candidate& b) {
  if (!a.objective) return !b.objective;
  if (!b.objective) return true;
  return *a.objective <= *b.objective;
}

}  // namespace

SearchResult search_min_ratio(const WeightVector& w, std::size_t budget, std::uint64_t seed,
                              const SearchOptions& options) {
  if (!w.is_interior()) throw PreconditionError("search needs 0 < p_i < 1");
  Searcher searcher(w, seed, options);

  Candidate current = searcher.random_start();
  Candidate best = current;
  SearchResult result{best.family, {}, std::nullopt, seed, 0, 0};
  std::size_t stale = 0;

  for (std::size_t move = 0; move < budget; ++move) {
    Candidate next = searcher.neighbour(current);
    ++result.moves;
    if (no_worse(next, current)) current = std::move(next);
    if (better(current, best)) {
      best = current;
      stale = 0;
    } else if (++stale >= options.patience) {
      current = searcher.random_start();
      ++result.restarts;
      stale = 0;
      if (better(current, best)) best = current;
    }
  }

  result.best = best.family;
  result.generators = best.generators;
  result.objective = best.objective;
  return result;
}

}  // namespace ucube
