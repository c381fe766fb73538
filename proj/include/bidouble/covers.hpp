#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bidouble {

using Int = long long;

enum class errc {
  parity_violation,
  too_many_trivial_branches,
  branch_below_minimum,
  non_integral_chi,
  irregularity_undetermined,
  not_general_type,
  signature_undetermined,
  invalid_input,
  parse_error,
};

std::string_view errc_name(errc code);

/// Error carrying the violated invariant. CLI maps non_integral_chi to an
/// internal-inconsistency exit status, everything else to invalid input.
class domain_error : public std::runtime_error {
public:
  domain_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

/// Bidegree of a curve or line bundle on P^1 x P^1.
struct BiDegree {
  Int first = 0;
  Int second = 0;

  friend auto operator<=>(const BiDegree&, const BiDegree&) = default;

  bool trivial() const { return first == 0 && second == 0; }
  BiDegree swapped() const { return {second, first}; }
};

/// Branch data of a bidouble cover: three branch bidegrees, (0,0) = trivial.
/// Construct via validate_type / parse_cover_type to get the invariants
/// checked; the struct itself is a plain aggregate.
struct CoverType {
  std::array<BiDegree, 3> branches{};

  friend auto operator<=>(const CoverType&, const CoverType&) = default;
};

enum class CoverClass { Simple, NonSimple, EvenNonSimple };

std::string_view cover_class_name(CoverClass c);

/// Checks the triple against the structural constraints:
/// at most one trivial branch, one parity per coordinate slot, and both
/// coordinates >= 1 on every nontrivial branch. Throws domain_error with
/// parity_violation, too_many_trivial_branches or branch_below_minimum.
CoverType validate_type(const std::array<BiDegree, 3>& raw);

/// Simple = one trivial branch; EvenNonSimple = no trivial branch, all six
/// coordinates even; NonSimple = the rest.
CoverClass classify(const CoverType& t);

/// L_i = ((n_j+n_k)/2, (m_j+m_k)/2); integral by the parity invariant.
std::array<BiDegree, 3> line_bundle_degrees(const CoverType& t);

/// Canonical representative under S3 (branch permutation) x Z/2 (simultaneous
/// coordinate swap): sort the triple for each orientation, take the
/// lexicographically smaller result.
CoverType canonicalize(const CoverType& t);

/// Parses "((n1,m1),(n2,m2),(n3,m3))" with arbitrary whitespace; a two-branch
/// form "((n1,m1),(n2,m2))" gets a trivial third branch. Validates.
CoverType parse_cover_type(std::string_view text);

std::string to_string(const BiDegree& d);
std::string to_string(const CoverType& t);

}  // namespace bidouble
