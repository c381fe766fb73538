#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bidouble/covers.hpp"

namespace bidouble {

enum class Pi1 { SimplyConnected, Z2 };

std::string_view pi1_name(Pi1 p);

/// Divisibility of the canonical class. Exact(r) when the type is all even
/// (K is the pullback of an integral class, r = gcd(n/2-2, m/2-2)); otherwise
/// a candidate set cut out by r^2 | K^2 and the mod-8 obstruction for even r,
/// promoted to Exact(1) when the set collapses to {1}.
struct DivisibilityVerdict {
  enum class Kind { Exact, CandidateSet };
  Kind kind = Kind::Exact;
  Int r = 0;                    // meaningful when Exact
  std::vector<Int> candidates;  // sorted, meaningful when CandidateSet

  friend bool operator==(const DivisibilityVerdict&,
                         const DivisibilityVerdict&) = default;

  static DivisibilityVerdict exact(Int r) { return {Kind::Exact, r, {}}; }
  static DivisibilityVerdict candidate_set(std::vector<Int> rs) {
    return {Kind::CandidateSet, 0, std::move(rs)};
  }
};

/// Exact rational with denominator 1 or 2, reduced.
struct HalfInt {
  Int num = 0;
  Int den = 1;

  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;

  static HalfInt of_halves(Int twice) {
    return twice % 2 == 0 ? HalfInt{twice / 2, 1} : HalfInt{twice, 2};
  }
};

/// The homeomorphism signature: two simply connected minimal surfaces of
/// general type with equal signatures are homeomorphic by a homeomorphism
/// matching canonical classes.
struct HomeoSignature {
  Pi1 pi1 = Pi1::SimplyConnected;
  Int pg = 0;
  Int k2 = 0;
  Int divisibility = 0;

  friend auto operator<=>(const HomeoSignature&, const HomeoSignature&) = default;
};

struct InvariantRecord {
  Int n = 0;  // sum of the n_j
  Int m = 0;  // sum of the m_j
  Int chi = 0;
  Int k2 = 0;
  std::optional<Int> q;   // empty when the vanishing criterion fails
  std::optional<Int> pg;  // chi - 1 when q = 0
  HalfInt k_bidegree_first;   // (n-4)/2
  HalfInt k_bidegree_second;  // (m-4)/2
  std::optional<DivisibilityVerdict> divisibility;  // empty unless general type
  Pi1 pi1 = Pi1::SimplyConnected;
  bool general_type = false;
};

/// chi = ((n-4)(m-4) + sum n_j m_j) / 4, asserting exact divisibility.
Int chi(const CoverType& t);

/// K^2 = 2(n-4)(m-4); may be <= 0 outside general type.
Int k_squared(const CoverType& t);

bool general_type(const CoverType& t);  // n >= 5 and m >= 5

/// q = 0 and p_g = chi - 1 when every L_i has both coordinates >= 1;
/// throws irregularity_undetermined otherwise.
std::pair<Int, Int> irregularity_and_pg(const CoverType& t);

/// Throws not_general_type when n <= 4 or m <= 4.
DivisibilityVerdict divisibility(const CoverType& t);

/// Z2 iff the cover is even non-simple.
Pi1 pi1_class(const CoverType& t);

/// Throws signature_undetermined when divisibility is only a candidate set,
/// p_g is refused or zero, or the cover is not simply connected.
HomeoSignature homeo_signature(const CoverType& t);

std::optional<HomeoSignature> try_homeo_signature(const CoverType& t);

InvariantRecord invariant_record(const CoverType& t);

}  // namespace bidouble
