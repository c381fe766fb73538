#include "bidouble/covers.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bidouble {

std::string_view errc_name(errc code) {
  switch (code) {
    case errc::parity_violation: return "parity_violation";
    case errc::too_many_trivial_branches: return "too_many_trivial_branches";
    case errc::branch_below_minimum: return "branch_below_minimum";
    case errc::non_integral_chi: return "non_integral_chi";
    case errc::irregularity_undetermined: return "irregularity_undetermined";
    case errc::not_general_type: return "not_general_type";
    case errc::signature_undetermined: return "signature_undetermined";
    case errc::invalid_input: return "invalid_input";
    case errc::parse_error: return "parse_error";
  }
  return "unknown";
}

std::string_view cover_class_name(CoverClass c) {
  switch (c) {
    case CoverClass::Simple: return "simple";
    case CoverClass::NonSimple: return "non_simple";
    case CoverClass::EvenNonSimple: return "even_non_simple";
  }
  return "unknown";
}

CoverType validate_type(const std::array<BiDegree, 3>& raw) {
  int trivial = 0;
  for (const auto& d : raw) {
    if (d.trivial()) {
      ++trivial;
    } else if (d.first < 1 || d.second < 1) {
      throw domain_error(errc::branch_below_minimum,
                         "nontrivial branch " + to_string(d) +
                             " must have both coordinates >= 1");
    }
  }
  if (trivial > 1) {
    throw domain_error(errc::too_many_trivial_branches,
                       "at most one branch may be trivial");
  }
  auto same_parity = [](Int a, Int b, Int c) {
    return ((a ^ b) & 1) == 0 && ((a ^ c) & 1) == 0;
  };
  if (!same_parity(raw[0].first, raw[1].first, raw[2].first) ||
      !same_parity(raw[0].second, raw[1].second, raw[2].second)) {
    throw domain_error(errc::parity_violation,
                       "the n_j must share one parity and likewise the m_j");
  }
  return CoverType{raw};
}

CoverClass classify(const CoverType& t) {
  bool has_trivial = false;
  bool all_even = true;
  for (const auto& d : t.branches) {
    has_trivial = has_trivial || d.trivial();
    all_even = all_even && d.first % 2 == 0 && d.second % 2 == 0;
  }
  if (has_trivial) return CoverClass::Simple;
  return all_even ? CoverClass::EvenNonSimple : CoverClass::NonSimple;
}

std::array<BiDegree, 3> line_bundle_degrees(const CoverType& t) {
  const auto& b = t.branches;
  std::array<BiDegree, 3> ls;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    ls[i] = {(b[j].first + b[k].first) / 2, (b[j].second + b[k].second) / 2};
  }
  return ls;
}

CoverType canonicalize(const CoverType& t) {
  CoverType a = t;
  std::sort(a.branches.begin(), a.branches.end());
  CoverType b;
  for (int i = 0; i < 3; ++i) b.branches[i] = t.branches[i].swapped();
  std::sort(b.branches.begin(), b.branches.end());
  return std::min(a, b);
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw domain_error(errc::parse_error,
                         std::string("expected '") + c + "' at offset " +
                             std::to_string(pos));
  }
  Int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start)
      throw domain_error(errc::parse_error,
                         "expected a nonnegative integer at offset " +
                             std::to_string(pos));
    return std::stoll(std::string(s.substr(start, pos - start)));
  }
  bool done() {
    skip_ws();
    return pos == s.size();
  }
};

BiDegree parse_pair(Cursor& c) {
  c.expect('(');
  Int n = c.number();
  c.expect(',');
  Int m = c.number();
  c.expect(')');
  return {n, m};
}

}  // namespace

CoverType parse_cover_type(std::string_view text) {
  Cursor c{text};
  c.expect('(');
  std::array<BiDegree, 3> branches{};
  branches[0] = parse_pair(c);
  c.expect(',');
  branches[1] = parse_pair(c);
  if (c.eat(',')) branches[2] = parse_pair(c);
  c.expect(')');
  if (!c.done())
    throw domain_error(errc::parse_error, "trailing characters after type");
  return validate_type(branches);
}

std::string to_string(const BiDegree& d) {
  std::ostringstream os;
  os << '(' << d.first << ',' << d.second << ')';
  return os.str();
}

std::string to_string(const CoverType& t) {
  std::ostringstream os;
  os << '(' << to_string(t.branches[0]) << ',' << to_string(t.branches[1])
     << ',' << to_string(t.branches[2]) << ')';
  return os.str();
}

}  // namespace bidouble
