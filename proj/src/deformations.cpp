#include "bidouble/deformations.hpp"

#include <algorithm>

namespace bidouble {

Int section_count(const BiDegree& d) {
  if (d.first < 0 || d.second < 0) return 0;
  return (d.first + 1) * (d.second + 1);
}

NaturalDeformationProfile natural_deformation_profile(const CoverType& t) {
  NaturalDeformationProfile p;
  const auto& b = t.branches;
  for (int j = 0; j < 3; ++j) {
    int i = (j + 1) % 3, k = (j + 2) % 3;
    p.f_degrees[j] = b[j];
    p.phi_degrees[j] = {b[j].first - (b[i].first + b[k].first) / 2,
                        b[j].second - (b[i].second + b[k].second) / 2};
    p.f_dims[j] = section_count(p.f_degrees[j]);
    p.phi_dims[j] = section_count(p.phi_degrees[j]);
    p.total_params += p.f_dims[j] + p.phi_dims[j];
  }
  return p;
}

ManettiCertificate manetti_check(Int a, Int b, Int c, Int k) {
  ManettiCertificate cert;
  cert.a = a;
  cert.b = b;
  cert.c = c;
  cert.k = k;
  auto require = [&](bool ok, const char* name) {
    if (!ok) cert.violated_conditions.emplace_back(name);
  };
  require(a % 2 == 0, "a even");
  require(b % 2 == 0, "b even");
  require(c % 2 == 0, "c even");
  require(a >= 4, "a >= 4");
  require(b >= 4, "b >= 4");
  require(c >= 4, "c >= 4");
  require(a >= 2 * c + 1, "a >= 2c+1");
  require(a >= b + 2, "a >= b+2");
  require(c >= b + 2, "c >= b+2");
  require(c >= k + 4, "c >= k+4");
  require(k >= 1, "k >= 1");
  cert.satisfied = cert.violated_conditions.empty();
  return cert;
}

namespace {

// Nontrivial branches of a simple type, or empty when not simple.
std::optional<std::array<BiDegree, 2>> simple_branches(const CoverType& t) {
  std::vector<BiDegree> nontrivial;
  for (const auto& d : t.branches)
    if (!d.trivial()) nontrivial.push_back(d);
  if (nontrivial.size() != 2) return std::nullopt;
  return std::array<BiDegree, 2>{nontrivial[0], nontrivial[1]};
}

CoverType swap_orientation(const CoverType& t) {
  CoverType s;
  for (int i = 0; i < 3; ++i) s.branches[i] = t.branches[i].swapped();
  return s;
}

// Reads one oriented pair as (base, base shifted by k); all coordinates must
// already be even with a common second coordinate 2b.
std::optional<ManettiCertificate> match_oriented(const CoverType& base,
                                                const CoverType& shifted) {
  auto bb = simple_branches(base);
  auto sb = simple_branches(shifted);
  if (!bb || !sb) return std::nullopt;
  for (const auto& d : *bb)
    if (d.first % 2 != 0 || d.second % 2 != 0) return std::nullopt;
  for (const auto& d : *sb)
    if (d.first % 2 != 0 || d.second % 2 != 0) return std::nullopt;
  Int twob = (*bb)[0].second;
  if ((*bb)[1].second != twob || (*sb)[0].second != twob ||
      (*sb)[1].second != twob)
    return std::nullopt;
  Int b = twob / 2;
  Int a = std::max((*bb)[0].first, (*bb)[1].first) / 2;
  Int c = std::min((*bb)[0].first, (*bb)[1].first) / 2;
  // The shifted member carries {2a+2k, 2c-2k}; try both coordinates as the
  // grown one.
  for (int pick = 0; pick < 2; ++pick) {
    Int grown = (*sb)[pick].first, other = (*sb)[1 - pick].first;
    if ((grown - 2 * a) % 2 != 0) continue;
    Int k = (grown - 2 * a) / 2;
    if (other != 2 * c - 2 * k) continue;
    ManettiCertificate cert = manetti_check(a, b, c, k);
    if (cert.satisfied) return cert;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ManettiCertificate> match_shift_pattern(const CoverType& t1,
                                                      const CoverType& t2) {
  auto sorted = [](CoverType t) {
    std::sort(t.branches.begin(), t.branches.end());
    return t;
  };
  // canonicalize() collapses the swap, so the two orientations are kept
  // apart explicitly here.
  const CoverType o1[2] = {sorted(t1), sorted(swap_orientation(t1))};
  const CoverType o2[2] = {sorted(t2), sorted(swap_orientation(t2))};
  for (const auto& u : o1)
    for (const auto& v : o2) {
      if (auto cert = match_oriented(u, v)) return cert;
      if (auto cert = match_oriented(v, u)) return cert;
    }
  return std::nullopt;
}

PairVerdict pair_verdict(const CoverType& t1, const CoverType& t2) {
  PairVerdict v;
  auto s1 = try_homeo_signature(t1);
  auto s2 = try_homeo_signature(t2);
  if (s1 && s2 && *s1 == *s2) {
    v.homeo = HomeoStatus::Yes;
    v.signature = *s1;
  }
  if (auto cert = match_shift_pattern(t1, t2)) {
    v.nondef = NondefStatus::Certified;
    v.certificate = *cert;
  }
  return v;
}

}  // namespace bidouble
