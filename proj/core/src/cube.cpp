#include "ucube/cube.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ucube {

int popcount(Mask x) { return std::popcount(x); }

void check_dimension(int d) {
  if (d < 1 || d > kMaxDimension) {
    throw PreconditionError("dimension " + std::to_string(d) + " outside supported range 1.." +
                            std::to_string(kMaxDimension));
  }
}

void check_coordinate(int coordinate, int d) {
  if (coordinate < 0 || coordinate >= d) {
    throw PreconditionError("coordinate " + std::to_string(coordinate + 1) + " out of range for d=" +
                            std::to_string(d));
  }
}

// ---------------------------------------------------------------------------
// WeightVector

WeightVector::WeightVector(std::vector<Rational> p) : p_(std::move(p)) {
  check_dimension(static_cast<int>(p_.size()));
  q_.reserve(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] < 0 || p_[i] > 1) {
      throw PreconditionError("weight p_" + std::to_string(i + 1) + " = " + to_string(p_[i]) +
                              " outside [0,1]");
    }
    q_.emplace_back(1 - p_[i]);
  }
  p_min_ = *std::min_element(p_.begin(), p_.end());
  q_max_ = 1 - p_min_;
}

WeightVector WeightVector::uniform(int d) {
  check_dimension(d);
  return WeightVector(std::vector<Rational>(static_cast<std::size_t>(d), Rational(1, 2)));
}

Rational WeightVector::alpha_sq(int i) const {
  const Rational& pi = p(i);
  if (pi <= 0 || pi >= 1) {
    throw PreconditionError("alpha_" + std::to_string(i + 1) + " undefined for boundary weight " +
                            to_string(pi));
  }
  return 1 / (pi * q(i));
}

Rational WeightVector::big_q(int i) const {
  if (q(i) == 0) throw PreconditionError("Q_" + std::to_string(i + 1) + " undefined for p_i = 1");
  return 1 / q(i);
}

Rational WeightVector::big_q_total() const {
  Rational prod = 1;
  for (int i = 0; i < dimension(); ++i) prod *= big_q(i);
  return prod;
}

bool WeightVector::is_interior() const {
  return std::all_of(p_.begin(), p_.end(), [](const Rational& x) { return x > 0 && x < 1; });
}

bool WeightVector::all_at_least_half() const {
  return std::all_of(p_.begin(), p_.end(), [](const Rational& x) { return x >= Rational(1, 2); });
}

bool WeightVector::all_below_one() const {
  return std::all_of(p_.begin(), p_.end(), [](const Rational& x) { return x < 1; });
}

Rational WeightVector::q_product(Mask s) const {
  Rational prod = 1;
  for (int i = 0; i < dimension(); ++i) {
    if (has_bit(s, i)) prod *= q_[static_cast<std::size_t>(i)];
  }
  return prod;
}

Rational WeightVector::p_product(Mask s) const {
  Rational prod = 1;
  for (int i = 0; i < dimension(); ++i) {
    if (has_bit(s, i)) prod *= p_[static_cast<std::size_t>(i)];
  }
  return prod;
}

// ---------------------------------------------------------------------------
// SetFamily

SetFamily::SetFamily(int d) : d_(d) {
  check_dimension(d);
  words_.assign((cube_size(d) + 63) / 64, 0);
}

SetFamily SetFamily::full(int d) {
  SetFamily f(d);
  const std::size_t n = cube_size(d);
  for (std::size_t w = 0; w < f.words_.size(); ++w) {
    std::size_t remaining = n - w * 64;
    f.words_[w] = remaining >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << remaining) - 1);
  }
  f.size_ = n;
  return f;
}

SetFamily SetFamily::from_members(int d, std::span<const Mask> members) {
  SetFamily f(d);
  for (Mask x : members) f.insert(x);
  return f;
}

SetFamily SetFamily::from_members(int d, std::initializer_list<Mask> members) {
  return from_members(d, std::span<const Mask>(members.begin(), members.size()));
}

SetFamily SetFamily::from_table(int d, std::uint64_t table) {
  if (d > 6) throw PreconditionError("from_table supports d <= 6");
  SetFamily f(d);
  if (d < 6 && (table >> cube_size(d)) != 0) {
    throw PreconditionError("table has bits beyond the cube");
  }
  f.words_[0] = table;
  f.size_ = static_cast<std::size_t>(std::popcount(table));
  return f;
}

void SetFamily::check_point(Mask x) const {
  if (x >= cube_size(d_)) {
    throw PreconditionError("point " + std::to_string(x) + " not in cube of dimension " + std::to_string(d_));
  }
}

void SetFamily::insert(Mask x) {
  check_point(x);
  std::uint64_t& word = words_[x >> 6];
  const std::uint64_t b = std::uint64_t{1} << (x & 63U);
  if (!(word & b)) {
    word |= b;
    ++size_;
  }
}

void SetFamily::erase(Mask x) {
  check_point(x);
  std::uint64_t& word = words_[x >> 6];
  const std::uint64_t b = std::uint64_t{1} << (x & 63U);
  if (word & b) {
    word &= ~b;
    --size_;
  }
}

std::vector<Mask> SetFamily::members() const {
  std::vector<Mask> out;
  out.reserve(size_);
  for_each([&](Mask x) { out.push_back(x); });
  return out;
}

bool operator<(const SetFamily& a, const SetFamily& b) {
  if (a.d_ != b.d_) return a.d_ < b.d_;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
  }
  return false;
}

// ---------------------------------------------------------------------------
// Measures

namespace {

void check_same_dimension(int a, int b) {
  if (a != b) {
    throw PreconditionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Rational point_measure(Mask x, const WeightVector& w) {
  const int d = w.dimension();
  if (x >= cube_size(d)) {
    throw PreconditionError("point " + std::to_string(x) + " not in cube of dimension " + std::to_string(d));
  }
  Rational prod = 1;
  for (int i = 0; i < d; ++i) prod *= has_bit(x, i) ? w.p(i) : w.q(i);
  return prod;
}

Rational family_measure(const SetFamily& family, const WeightVector& w) {
  check_same_dimension(family.dimension(), w.dimension());
  Rational total = 0;
  family.for_each([&](Mask x) { total += point_measure(x, w); });
  return total;
}

MeasureTable::MeasureTable(const WeightVector& w) : d_(w.dimension()) {
  // Doubling: extend the table one coordinate at a time.
  table_.assign(cube_size(d_), Rational(0));
  table_[0] = 1;
  for (int i = 0; i < d_; ++i) {
    const std::size_t half = cube_size(i);
    for (std::size_t x = 0; x < half; ++x) {
      table_[x + half] = table_[x] * w.p(i);
      table_[x] *= w.q(i);
    }
  }
}

Rational MeasureTable::measure(const SetFamily& family) const {
  check_same_dimension(family.dimension(), d_);
  Rational total = 0;
  family.for_each([&](Mask x) { total += table_[x]; });
  return total;
}

std::vector<Rational> MeasureTable::containing_measures(const SetFamily& family) const {
  check_same_dimension(family.dimension(), d_);
  std::vector<Rational> out(static_cast<std::size_t>(d_), Rational(0));
  family.for_each([&](Mask x) {
    for (int i = 0; i < d_; ++i) {
      if (has_bit(x, i)) out[static_cast<std::size_t>(i)] += table_[x];
    }
  });
  return out;
}

// ---------------------------------------------------------------------------
// Structure

SetFamily subfamily_containing(const SetFamily& family, int coordinate) {
  check_coordinate(coordinate, family.dimension());
  SetFamily out(family.dimension());
  family.for_each([&](Mask x) {
    if (has_bit(x, coordinate)) out.insert(x);
  });
  return out;
}

std::vector<std::size_t> containing_counts(const SetFamily& family) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(family.dimension()), 0);
  family.for_each([&](Mask x) {
    for (int i = 0; i < family.dimension(); ++i) {
      if (has_bit(x, i)) ++counts[static_cast<std::size_t>(i)];
    }
  });
  return counts;
}

Mask set_coordinate(Mask x, int coordinate, bool value, int d) {
  check_coordinate(coordinate, d);
  if (x >= cube_size(d)) {
    throw PreconditionError("point " + std::to_string(x) + " not in cube of dimension " + std::to_string(d));
  }
  return value ? (x | bit(coordinate)) : (x & ~bit(coordinate));
}

bool is_union_closed(const SetFamily& family) {
  const std::vector<Mask> m = family.members();
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      const Mask u = m[a] | m[b];
      if (u != m[b] && u != m[a] && !family.contains(u)) return false;
    }
  }
  return true;
}

bool is_simply_rooted(const SetFamily& family) { return is_union_closed(complement_family(family)); }

SetFamily complement_family(const SetFamily& family) {
  const int d = family.dimension();
  SetFamily out = SetFamily::full(d);
  family.for_each([&](Mask x) { out.erase(x); });
  return out;
}

std::vector<int> missing_lower_neighbors(const SetFamily& family, Mask x) {
  if (!family.contains(x)) {
    throw PreconditionError("point " + std::to_string(x) + " is not a member of the family");
  }
  std::vector<int> out;
  for (int i = 0; i < family.dimension(); ++i) {
    if (has_bit(x, i) && !family.contains(x & ~bit(i))) out.push_back(i);
  }
  return out;
}

std::optional<int> dictator_coordinate(const SetFamily& family) {
  const int d = family.dimension();
  if (family.size() != cube_size(d - 1)) return std::nullopt;
  for (int i = 0; i < d; ++i) {
    bool all = true;
    family.for_each([&](Mask x) { all = all && has_bit(x, i); });
    if (all) return i;
  }
  return std::nullopt;
}

}  // namespace ucube
