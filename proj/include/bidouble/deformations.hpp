#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bidouble/covers.hpp"
#include "bidouble/invariants.hpp"

namespace bidouble {

/// Degree data of the natural deformations: the f_j of bidegree (n_j, m_j)
/// and the phi_j of bidegree (n_j - (n_i+n_k)/2, m_j - (m_i+m_k)/2), with
/// section counts (p+1)(q+1) for p, q >= 0 and 0 otherwise.
struct NaturalDeformationProfile {
  std::array<BiDegree, 3> f_degrees{};
  std::array<BiDegree, 3> phi_degrees{};  // entries may be negative
  std::array<Int, 3> f_dims{};
  std::array<Int, 3> phi_dims{};
  Int total_params = 0;
};

Int section_count(const BiDegree& d);

NaturalDeformationProfile natural_deformation_profile(const CoverType& t);

/// Hypothesis check for the non-deformation-equivalence theorem on the pair
/// of simple covers ((2a,2b),(2c,2b)) and ((2a+2k,2b),(2c-2k,2b)).
struct ManettiCertificate {
  Int a = 0, b = 0, c = 0, k = 0;
  bool satisfied = false;
  std::vector<std::string> violated_conditions;
};

/// Conditions: a, b, c even and >= 4; a >= 2c+1; a >= b+2; c >= b+2;
/// c >= k+4; k >= 1. Never throws; failures are listed by name.
ManettiCertificate manetti_check(Int a, Int b, Int c, Int k);

enum class HomeoStatus { Yes, Unknown };
enum class NondefStatus { Certified, Unknown };

struct PairVerdict {
  HomeoStatus homeo = HomeoStatus::Unknown;
  NondefStatus nondef = NondefStatus::Unknown;
  std::optional<ManettiCertificate> certificate;
  std::optional<HomeoSignature> signature;  // the common signature when homeo
};

/// Tries to present {t1, t2} as the shifted pair of the theorem for some
/// (a,b,c,k) passing manetti_check; both swap orientations and both role
/// assignments are tried. Empty when no presentation works.
std::optional<ManettiCertificate> match_shift_pattern(const CoverType& t1,
                                                      const CoverType& t2);

PairVerdict pair_verdict(const CoverType& t1, const CoverType& t2);

}  // namespace bidouble
