#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bidouble/covers.hpp"

namespace bidouble {

/// The cyclic quotient singularity 1/m(1,q); needs gcd(q, m) = 1.
struct CyclicQuotient {
  Int m = 1;
  Int q = 0;

  friend auto operator<=>(const CyclicQuotient&, const CyclicQuotient&) = default;
};

/// Parameters of a class-T singularity 1/(dn^2)(1, dna-1) = A_{dn-1}/mu_n,
/// with 1 <= a <= n and gcd(a, n) = 1.
struct ClassTDatum {
  Int d = 1;
  Int n = 1;
  Int a = 1;

  friend auto operator<=>(const ClassTDatum&, const ClassTDatum&) = default;
};

/// One-parameter-per-monomial description of the Q-Gorenstein smoothing
/// family uv - z^{dn} = sum_{k=0}^{d-1} t_k z^{kn}, with mu_n acting by
/// weights (1, -1, a) on (u, v, z).
struct SmoothingFamilyDescriptor {
  Int exponent = 0;     // dn
  Int modulus = 1;      // n; only exponents divisible by n appear
  Int param_count = 0;  // d
  std::array<Int, 3> action_weights{1, -1, 1};
  std::vector<Int> rhs_exponents;  // 0, n, ..., (d-1)n
  std::string equation;            // ASCII rendering
};

/// Validates the presentation; throws domain_error(invalid_input) unless
/// 1 <= q <= m-1 and gcd(q, m) = 1.
CyclicQuotient make_cyclic_quotient(Int m, Int q);

/// Searches all n with n^2 | m and a in [1, n] coprime to n for
/// dna - 1 = q (mod m), accepting either weight presentation (q or its
/// inverse mod m). Returns the solution with smallest n, or empty.
std::optional<ClassTDatum> recognize_class_T(const CyclicQuotient& s);

SmoothingFamilyDescriptor smoothing_family(const ClassTDatum& t);

/// The link of 1/m(1,q) is the lens space L(m,q); here (dn^2, dna-1 mod dn^2).
std::pair<Int, Int> link_lens_space(const ClassTDatum& t);

/// Lens space homeomorphism classification: equal orders and
/// q2 = +-q1^{+-1} (mod m).
bool lens_equivalent(std::pair<Int, Int> l1, std::pair<Int, Int> l2);

/// Parses "1/m(1,q)" with arbitrary whitespace.
CyclicQuotient parse_cyclic_quotient(std::string_view text);

std::string to_string(const CyclicQuotient& s);

}  // namespace bidouble
