#include "ucube/hitting.hpp"

#include <algorithm>
#include <cmath>

#include "ucube/family_io.hpp"

namespace ucube {

namespace {

void check_subset(Mask s, int d) {
  if (s > full_mask(d)) {
    throw PreconditionError("set " + std::to_string(s) + " not a subset of [" + std::to_string(d) + "]");
  }
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

bool is_hitting(const SetFamily& family, Mask s) {
  check_subset(s, family.dimension());
  bool hit = true;
  family.for_each([&](Mask a) { hit = hit && (a == 0 || (a & s) != 0); });
  return hit;
}

bool is_minimal_hitting(const SetFamily& family, Mask s) {
  if (!is_hitting(family, s)) return false;
  for (int i = 0; i < family.dimension(); ++i) {
    if (has_bit(s, i) && is_hitting(family, s & ~bit(i))) return false;
  }
  return true;
}

std::vector<Mask> enumerate_minimal_hitting_sets(const SetFamily& family) {
  const int d = family.dimension();
  const std::size_t n = cube_size(d);
  // below[t]: some nonempty member is a subset of t. S hits iff !below[~S].
  std::vector<char> below(n, 0);
  family.for_each([&](Mask a) {
    if (a != 0) below[a] = 1;
  });
  for (int i = 0; i < d; ++i) {
    for (Mask t = 0; t < n; ++t) {
      if (has_bit(t, i) && below[t & ~bit(i)]) below[t] = 1;
    }
  }
  const Mask all = full_mask(d);
  auto hits = [&](Mask s) { return !below[all & ~s]; };

  std::vector<Mask> out;
  for (Mask s = 0; s < n; ++s) {
    if (!hits(s)) continue;
    bool minimal = true;
    for (int i = 0; i < d && minimal; ++i) {
      if (has_bit(s, i) && hits(s & ~bit(i))) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

Mask HittingCertificate::union_for(Mask t) const {
  Mask u = 0;
  for (const auto& [s, a] : representatives) {
    if (has_bit(t, s)) u |= a;
  }
  return u;
}

std::vector<std::pair<Mask, Mask>> HittingCertificate::unions() const {
  std::vector<std::pair<Mask, Mask>> out;
  // Subsets of S in ascending mask order.
  std::vector<Mask> subsets;
  for (Mask t = hitting_set; t != 0; t = (t - 1) & hitting_set) subsets.push_back(t);
  std::reverse(subsets.begin(), subsets.end());
  out.reserve(subsets.size());
  for (Mask t : subsets) out.emplace_back(t, union_for(t));
  return out;
}

HittingCertificate build_certificate(const SetFamily& family, Mask s) {
  if (!is_hitting(family, s)) {
    throw PreconditionError(format_set(s) + " is not a hitting set");
  }
  HittingCertificate cert;
  cert.hitting_set = s;
  for (int i = 0; i < family.dimension(); ++i) {
    if (!has_bit(s, i)) continue;
    bool found = false;
    Mask rep = 0;
    family.for_each([&](Mask a) {
      if (!found && (a & s) == bit(i)) {
        found = true;
        rep = a;
      }
    });
    if (!found) {
      throw PreconditionError("hitting set is not minimal: element " + std::to_string(i + 1) +
                              " has no member meeting the set only there");
    }
    cert.representatives.emplace_back(i, rep);
  }
  return cert;
}

CertificateCheck check_certificate(const SetFamily& family, const HittingCertificate& cert) {
  CertificateCheck check;
  const Mask s = cert.hitting_set;
  for (const auto& [i, a] : cert.representatives) {
    if ((a & s) != bit(i)) check.representatives_isolated = false;
  }
  std::vector<Mask> seen;
  for (const auto& [t, a] : cert.unions()) {
    if ((a & s) != t) check.unions_trace = false;
    if (!family.contains(a)) check.unions_members = false;
    seen.push_back(a);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) check.unions_distinct = false;
  return check;
}

SizeMargin knill_size_margin(const SetFamily& family, Mask s) {
  if (family.empty()) throw PreconditionError("family is empty");
  if (!is_minimal_hitting(family, s)) throw PreconditionError("not a minimal hitting set");
  return SizeMargin{pow2(static_cast<unsigned>(popcount(s))), Rational(family.size())};
}

std::vector<std::string> weighted_size_violations(const SetFamily& family, Mask s, const WeightVector& w) {
  std::vector<std::string> v;
  if (family.dimension() != w.dimension()) {
    v.push_back("dimension mismatch");
    return v;
  }
  if (!w.all_at_least_half()) v.push_back("some p_i < 1/2");
  if (!family.contains(0)) v.push_back("empty set not in family");
  if (!is_union_closed(family)) v.push_back("family not union-closed");
  if (!is_minimal_hitting(family, s)) v.push_back("not a minimal hitting set");
  return v;
}

WeightedSizeMargin weighted_size_margin(const SetFamily& family, Mask s, const WeightVector& w) {
  check_subset(s, family.dimension());
  if (auto v = weighted_size_violations(family, s, w); !v.empty()) throw PreconditionError(join(v));

  const int d = w.dimension();
  WeightedSizeMargin m;
  m.exact.value = family_measure(family, w);
  m.exact.bound = w.q_product(full_mask(d) & ~s);

  // Log form; Q_i is infinite when p_i = 1.
  double lhs = 0;
  double log_q_total = 0;
  for (int i = 0; i < d; ++i) {
    const double qi = w.q(i).get_d();
    const double log_qi = qi > 0 ? -std::log(qi) : INFINITY;
    log_q_total += log_qi;
    if (has_bit(s, i)) lhs += log_qi;
  }
  m.log_lhs = lhs;
  m.log_rhs = log_q_total + std::log(m.exact.value.get_d());
  return m;
}

}  // namespace ucube
