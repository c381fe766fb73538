#include "bidouble/singularities.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace bidouble {

namespace {

Int mod(Int x, Int m) { return ((x % m) + m) % m; }

// Multiplicative inverse of q mod m for gcd(q, m) = 1.
Int inverse_mod(Int q, Int m) {
  Int t = 0, new_t = 1, r = m, new_r = mod(q, m);
  while (new_r != 0) {
    Int quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  return mod(t, m);
}

}  // namespace

CyclicQuotient make_cyclic_quotient(Int m, Int q) {
  if (m < 2 || q < 1 || q > m - 1)
    throw domain_error(errc::invalid_input,
                       "need m >= 2 and 1 <= q <= m-1");
  if (std::gcd(q, m) != 1)
    throw domain_error(errc::invalid_input,
                       "gcd(q, m) must be 1 for 1/" + std::to_string(m) +
                           "(1," + std::to_string(q) + ")");
  return {m, q};
}

std::optional<ClassTDatum> recognize_class_T(const CyclicQuotient& s) {
  make_cyclic_quotient(s.m, s.q);  // revalidate
  Int qbar = inverse_mod(s.q, s.m);
  for (Int n = 1; n * n <= s.m; ++n) {
    if (s.m % (n * n) != 0) continue;
    Int d = s.m / (n * n);
    for (Int a = 1; a <= n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      Int w = mod(d * n * a - 1, s.m);
      if (w == s.q || w == qbar) return ClassTDatum{d, n, a};
    }
  }
  return std::nullopt;
}

SmoothingFamilyDescriptor smoothing_family(const ClassTDatum& t) {
  SmoothingFamilyDescriptor f;
  f.exponent = t.d * t.n;
  f.modulus = t.n;
  f.param_count = t.d;
  f.action_weights = {1, -1, mod(t.a, t.n) == 0 ? t.n : t.a};
  std::ostringstream eq;
  eq << "uv - z";
  if (f.exponent != 1) eq << "^" << f.exponent;
  eq << " = ";
  for (Int k = 0; k < t.d; ++k) {
    f.rhs_exponents.push_back(k * t.n);
    if (k > 0) eq << " + ";
    eq << "t" << k;
    Int e = k * t.n;
    if (e == 1) eq << " z";
    else if (e > 1) eq << " z^" << e;
  }
  f.equation = eq.str();
  return f;
}

std::pair<Int, Int> link_lens_space(const ClassTDatum& t) {
  Int m = t.d * t.n * t.n;
  return {m, mod(t.d * t.n * t.a - 1, m)};
}

bool lens_equivalent(std::pair<Int, Int> l1, std::pair<Int, Int> l2) {
  auto [m1, q1] = l1;
  auto [m2, q2] = l2;
  make_cyclic_quotient(m1, q1);
  make_cyclic_quotient(m2, q2);
  if (m1 != m2) return false;
  Int inv = inverse_mod(q1, m1);
  Int r = mod(q2, m1);
  return r == mod(q1, m1) || r == mod(-q1, m1) || r == inv ||
         r == mod(-inv, m1);
}

CyclicQuotient parse_cyclic_quotient(std::string_view text) {
  struct Cursor {
    std::string_view s;
    std::size_t pos = 0;
    void skip_ws() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
    }
    void expect(char c) {
      skip_ws();
      if (pos >= s.size() || s[pos] != c)
        throw domain_error(errc::parse_error,
                           std::string("expected '") + c + "' in singularity");
      ++pos;
    }
    Int number() {
      skip_ws();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (pos == start)
        throw domain_error(errc::parse_error, "expected an integer");
      return std::stoll(std::string(s.substr(start, pos - start)));
    }
  } c{text};
  c.expect('1');
  c.expect('/');
  Int m = c.number();
  c.expect('(');
  Int one = c.number();
  if (one != 1)
    throw domain_error(errc::parse_error, "first weight must be 1");
  c.expect(',');
  Int q = c.number();
  c.expect(')');
  c.skip_ws();
  if (c.pos != text.size())
    throw domain_error(errc::parse_error, "trailing characters");
  return make_cyclic_quotient(m, q);
}

std::string to_string(const CyclicQuotient& s) {
  std::ostringstream os;
  os << "1/" << s.m << "(1," << s.q << ")";
  return os.str();
}

}  // namespace bidouble
