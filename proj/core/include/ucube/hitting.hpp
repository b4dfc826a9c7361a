#pragma once

// Hitting sets of a family, inclusion-minimal enumeration and the A_T
// certificate: for a minimal hitting set S every s in S has a member A_s
// with A_s & S == {s}, and the unions A_T = U_{s in T} A_s (T a nonempty
// subset of S) are distinct members of any union-closed family, since
// A_T & S == T.

#include <string>
#include <utility>
#include <vector>

#include "ucube/cube.hpp"

namespace ucube {

/// Every nonempty member of F meets S. Vacuously true when F has no
/// nonempty member.
bool is_hitting(const SetFamily& family, Mask s);

/// Hitting, and no single element can be dropped.
bool is_minimal_hitting(const SetFamily& family, Mask s);

/// All inclusion-minimal hitting sets, ascending by mask. Uses a subset-sum
/// table over the 2^d points, so it runs in O(d 2^d) for any family.
std::vector<Mask> enumerate_minimal_hitting_sets(const SetFamily& family);

struct HittingCertificate {
  Mask hitting_set = 0;
  /// (s, A_s) ascending in s; A_s is the smallest-mask member with A_s & S == {s}.
  std::vector<std::pair<int, Mask>> representatives;

  /// A_T for a nonempty T subset of S.
  Mask union_for(Mask t) const;
  /// (T, A_T) for every nonempty T subset of S, ascending in T.
  std::vector<std::pair<Mask, Mask>> unions() const;
};

/// Requires S to be a minimal hitting set of F (throws PreconditionError
/// naming the element without a representative otherwise).
HittingCertificate build_certificate(const SetFamily& family, Mask s);

struct CertificateCheck {
  bool representatives_isolated = true;  ///< A_s & S == {s}
  bool unions_trace = true;              ///< A_T & S == T
  bool unions_distinct = true;
  bool unions_members = true;            ///< every A_T in F

  bool all() const { return representatives_isolated && unions_trace && unions_distinct && unions_members; }
};

CertificateCheck check_certificate(const SetFamily& family, const HittingCertificate& cert);

/// Exponentiated exact comparison `bound <= value`.
struct SizeMargin {
  Rational bound;
  Rational value;
  bool holds() const { return bound <= value; }
};

/// 2^|S| <= |F| (the uniform size bound). Requires S minimal hitting, F nonempty.
SizeMargin knill_size_margin(const SetFamily& family, Mask s);

struct WeightedSizeMargin {
  SizeMargin exact;  ///< bound = q_{S^c}, value = mu(F)
  double log_lhs = 0;  ///< sum_{i in S} log Q_i, display only
  double log_rhs = 0;  ///< log(Q mu(F)), display only
};

/// Preconditions of the weighted size bound that fail for (F, S, w); empty
/// when all hold.
std::vector<std::string> weighted_size_violations(const SetFamily& family, Mask s, const WeightVector& w);

/// mu(F) >= prod_{i not in S} q_i. Throws PreconditionError listing every
/// violated precondition (p_i >= 1/2, empty set in F, union-closed, minimal).
WeightedSizeMargin weighted_size_margin(const SetFamily& family, Mask s, const WeightVector& w);

}  // namespace ucube
