#pragma once

// Ground types for the p-biased Boolean cube: bias vectors, points (as
// bitmasks), dense set families, the product measure and the structural
// predicates on families.
//
// Coordinates are zero-based bit positions: element k of the ground set
// [d] = {1..d} is bit k-1 of a mask. Human-facing output (CLI, witness
// dumps) converts back to one-based element names.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ucube/rational.hpp"

namespace ucube {

inline constexpr int kMaxDimension = 16;

/// A point of the cube, equivalently a subset of [d].
using Mask = std::uint32_t;

/// Raised when an argument violates a documented precondition
/// (dimension mismatch, coordinate out of range, non-union-closed input...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr std::size_t cube_size(int d) { return std::size_t{1} << d; }
constexpr Mask full_mask(int d) { return static_cast<Mask>(cube_size(d) - 1); }
constexpr Mask bit(int coordinate) { return Mask{1} << coordinate; }
constexpr bool has_bit(Mask x, int coordinate) { return (x >> coordinate) & 1U; }

int popcount(Mask x);

/// The bias sequence (p_1..p_d) with its derived quantities.
class WeightVector {
 public:
  /// Requires 1 <= d <= kMaxDimension and every p_i in [0,1].
  explicit WeightVector(std::vector<Rational> p);

  static WeightVector uniform(int d);

  int dimension() const { return static_cast<int>(p_.size()); }
  const Rational& p(int i) const { return p_.at(static_cast<std::size_t>(i)); }
  const Rational& q(int i) const { return q_.at(static_cast<std::size_t>(i)); }
  std::span<const Rational> ps() const { return p_; }

  /// 1/(p_i q_i); requires 0 < p_i < 1.
  Rational alpha_sq(int i) const;
  /// 1/q_i; requires p_i < 1.
  Rational big_q(int i) const;
  /// Product of all Q_i; requires every p_i < 1.
  Rational big_q_total() const;

  const Rational& p_min() const { return p_min_; }
  const Rational& q_max() const { return q_max_; }

  /// All 0 < p_i < 1 (required by the Fourier machinery).
  bool is_interior() const;
  bool all_at_least_half() const;
  bool all_below_one() const;

  /// Product of q_i over the elements of `s`.
  Rational q_product(Mask s) const;
  /// Product of p_i over the elements of `s`.
  Rational p_product(Mask s) const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Rational> p_;
  std::vector<Rational> q_;
  Rational p_min_;
  Rational q_max_;
};

/// Dense membership table over the 2^d points of the cube.
class SetFamily {
 public:
  /// The empty family on [d].
  explicit SetFamily(int d);

  static SetFamily full(int d);
  static SetFamily from_members(int d, std::span<const Mask> members);
  static SetFamily from_members(int d, std::initializer_list<Mask> members);
  /// Family whose table, read as a 2^d-bit integer, equals `table`
  /// (bit x set iff point x is a member). Requires d <= 6.
  static SetFamily from_table(int d, std::uint64_t table);

  int dimension() const { return d_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(Mask x) const {
    return x < cube_size(d_) && ((words_[x >> 6] >> (x & 63U)) & 1U);
  }
  /// True when the family has a member other than the empty set.
  bool has_nonempty_member() const { return size_ > (contains(0) ? 1U : 0U); }

  void insert(Mask x);
  void erase(Mask x);

  /// Members in ascending mask order.
  std::vector<Mask> members() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        int b = std::countr_zero(word);
        fn(static_cast<Mask>(w * 64 + static_cast<std::size_t>(b)));
        word &= word - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;
  /// Orders by dimension, then by the table read as an integer.
  friend bool operator<(const SetFamily& a, const SetFamily& b);

 private:
  void check_point(Mask x) const;

  int d_;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

void check_dimension(int d);
void check_coordinate(int coordinate, int d);

/// mu({x}) = prod_{i in x} p_i * prod_{i not in x} q_i.
Rational point_measure(Mask x, const WeightVector& w);

Rational family_measure(const SetFamily& family, const WeightVector& w);

/// Point measures for the whole cube, built once per weight vector.
class MeasureTable {
 public:
  explicit MeasureTable(const WeightVector& w);

  int dimension() const { return d_; }
  const Rational& operator[](Mask x) const { return table_[x]; }
  Rational measure(const SetFamily& family) const;
  /// mu(F_i) for every coordinate i, in one pass.
  std::vector<Rational> containing_measures(const SetFamily& family) const;

 private:
  int d_;
  std::vector<Rational> table_;
};

/// F_i: the members of F that contain coordinate i.
SetFamily subfamily_containing(const SetFamily& family, int coordinate);

/// |F_i| for every coordinate.
std::vector<std::size_t> containing_counts(const SetFamily& family);

/// x with coordinate i forced to `value`.
Mask set_coordinate(Mask x, int coordinate, bool value, int d);

bool is_union_closed(const SetFamily& family);
/// The complement of F is union-closed.
bool is_simply_rooted(const SetFamily& family);
SetFamily complement_family(const SetFamily& family);

/// Coordinates i in supp(x) whose lower neighbour x_{i->0} is not in F,
/// ascending. Requires x in F.
std::vector<int> missing_lower_neighbors(const SetFamily& family, Mask x);

/// {x : x_i = 1} for some i, i.e. a dictator family; returns that i.
std::optional<int> dictator_coordinate(const SetFamily& family);

}  // namespace ucube
