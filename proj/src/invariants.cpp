#include "bidouble/invariants.hpp"

#include <numeric>

namespace bidouble {

namespace {

Int total_n(const CoverType& t) {
  return t.branches[0].first + t.branches[1].first + t.branches[2].first;
}

Int total_m(const CoverType& t) {
  return t.branches[0].second + t.branches[1].second + t.branches[2].second;
}

bool all_even(const CoverType& t) {
  for (const auto& d : t.branches)
    if (d.first % 2 != 0 || d.second % 2 != 0) return false;
  return true;
}

}  // namespace

std::string_view pi1_name(Pi1 p) {
  return p == Pi1::SimplyConnected ? "simply_connected" : "Z2";
}

Int chi(const CoverType& t) {
  Int n = total_n(t), m = total_m(t);
  Int cross = 0;
  for (const auto& d : t.branches) cross += d.first * d.second;
  Int num = (n - 4) * (m - 4) + cross;
  if (num % 4 != 0)
    throw domain_error(errc::non_integral_chi,
                       "(n-4)(m-4) + sum n_j m_j = " + std::to_string(num) +
                           " is not divisible by 4");
  return num / 4;
}

Int k_squared(const CoverType& t) {
  return 2 * (total_n(t) - 4) * (total_m(t) - 4);
}

bool general_type(const CoverType& t) {
  return total_n(t) >= 5 && total_m(t) >= 5;
}

std::pair<Int, Int> irregularity_and_pg(const CoverType& t) {
  for (const auto& l : line_bundle_degrees(t)) {
    if (l.first < 1 || l.second < 1)
      throw domain_error(errc::irregularity_undetermined,
                         "L_i = " + to_string(l) +
                             " has a coordinate <= 0; q = 0 not established");
  }
  return {0, chi(t) - 1};
}

DivisibilityVerdict divisibility(const CoverType& t) {
  if (!general_type(t))
    throw domain_error(errc::not_general_type,
                       "divisibility is defined only for n >= 5, m >= 5");
  Int n = total_n(t), m = total_m(t);
  if (all_even(t))
    return DivisibilityVerdict::exact(std::gcd(n / 2 - 2, m / 2 - 2));
  Int k2 = k_squared(t);
  std::vector<Int> rs;
  for (Int r = 1; r * r <= k2; ++r) {
    if (k2 % (r * r) != 0) continue;
    if (r % 2 == 0 && k2 % 8 != 0) continue;
    rs.push_back(r);
  }
  if (rs.size() == 1 && rs[0] == 1) return DivisibilityVerdict::exact(1);
  return DivisibilityVerdict::candidate_set(std::move(rs));
}

Pi1 pi1_class(const CoverType& t) {
  return classify(t) == CoverClass::EvenNonSimple ? Pi1::Z2
                                                  : Pi1::SimplyConnected;
}

HomeoSignature homeo_signature(const CoverType& t) {
  Pi1 p = pi1_class(t);
  if (p != Pi1::SimplyConnected)
    throw domain_error(errc::signature_undetermined,
                       "fundamental group is Z/2; the homeomorphism "
                       "criterion needs simple connectivity");
  DivisibilityVerdict div = divisibility(t);  // throws when not general type
  if (div.kind != DivisibilityVerdict::Kind::Exact)
    throw domain_error(errc::signature_undetermined,
                       "divisibility is only a candidate set");
  auto [q, pg] = irregularity_and_pg(t);
  (void)q;
  if (pg < 1)
    throw domain_error(errc::signature_undetermined, "p_g < 1");
  return {p, pg, k_squared(t), div.r};
}

std::optional<HomeoSignature> try_homeo_signature(const CoverType& t) {
  try {
    return homeo_signature(t);
  } catch (const domain_error&) {
    return std::nullopt;
  }
}

InvariantRecord invariant_record(const CoverType& t) {
  InvariantRecord rec;
  rec.n = total_n(t);
  rec.m = total_m(t);
  rec.chi = chi(t);
  rec.k2 = k_squared(t);
  rec.k_bidegree_first = HalfInt::of_halves(rec.n - 4);
  rec.k_bidegree_second = HalfInt::of_halves(rec.m - 4);
  rec.general_type = general_type(t);
  rec.pi1 = pi1_class(t);
  try {
    auto [q, pg] = irregularity_and_pg(t);
    rec.q = q;
    rec.pg = pg;
  } catch (const domain_error&) {
    // q = 0 criterion failed; leave both unset
  }
  if (rec.general_type) rec.divisibility = divisibility(t);
  return rec;
}

}  // namespace bidouble
