// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "bidouble/search.hpp"
#include "bidouble/singularities.hpp"
#include "test_helpers.hpp"

using namespace bidouble;
using bidouble::testing::orbit;
using bidouble::testing::random_valid_type;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<void(bool&, std::string&)>& body) {
  bool ok = true;
  std::string detail;
  try {
    body(ok, detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
  if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

#define REQUIRE_EQ(lhs, rhs)                                        \
  do {                                                              \
    auto l = (lhs);                                                 \
    auto r = (rhs);                                                 \
    if (!(l == r)) {                                                \
      ok = false;                                                   \
      std::ostringstream os;                                        \
      os << #lhs " != " #rhs;                                       \
      detail = os.str();                                            \
      return;                                                       \
    }                                                               \
  } while (0)

#define REQUIRE_TRUE(cond)   \
  do {                       \
    if (!(cond)) {           \
      ok = false;            \
      detail = #cond;        \
      return;                \
    }                        \
  } while (0)

CoverType T(std::array<BiDegree, 3> raw) { return validate_type(raw); }

bool oracle_is_class_T(Int m, Int q) {
  for (Int n = 1; n * n <= m; ++n) {
    if (m % (n * n) != 0) continue;
    Int d = m / (n * n);
    for (Int a = 1; a <= n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      Int w = ((d * n * a - 1) % m + m) % m;
      if (w == q || (w * q) % m == 1) return true;
    }
  }
  return false;
}

}  // namespace

int main() {
  criterion("1: golden invariants of the chi=7, K^2=20 pair", [](bool& ok, std::string& detail) {
    CoverType t1 = T({{{5, 2}, {3, 2}, {1, 2}}});
    CoverType t2 = T({{{3, 2}, {3, 2}, {3, 2}}});
    REQUIRE_EQ(chi(t1), 7);
    REQUIRE_EQ(chi(t2), 7);
    REQUIRE_EQ(k_squared(t1), 20);
    REQUIRE_EQ(k_squared(t2), 20);
    REQUIRE_EQ(divisibility(t1), DivisibilityVerdict::exact(1));
    REQUIRE_EQ(divisibility(t2), DivisibilityVerdict::exact(1));
  });

  criterion("2: (a,b,c) = (14,4,6) family invariants and k-shift", [](bool& ok, std::string& detail) {
    CoverType base = T({{{28, 8}, {12, 8}, {0, 0}}});
    CoverType shifted = T({{{30, 8}, {10, 8}, {0, 0}}});
    REQUIRE_EQ(k_squared(base), 864);    // 16(a+c-2)(b-1)
    REQUIRE_EQ(k_squared(shifted), 864);
    REQUIRE_EQ(chi(base), chi(shifted));
    REQUIRE_EQ(divisibility(base), DivisibilityVerdict::exact(6));
    REQUIRE_EQ(divisibility(shifted), DivisibilityVerdict::exact(6));
    HomeoSignature sig = homeo_signature(base);
    for (Int k = 1; k <= 2; ++k) {
      CoverType tk = T({{{28 + 2 * k, 8}, {12 - 2 * k, 8}, {0, 0}}});
      REQUIRE_EQ(homeo_signature(tk), sig);
    }
  });

  criterion("3: hypothesis certificate and named violations", [](bool& ok, std::string& detail) {
    REQUIRE_TRUE(manetti_check(14, 4, 6, 1).satisfied);
    auto has = [](const ManettiCertificate& c, const std::string& name) {
      for (const auto& v : c.violated_conditions)
        if (v == name) return true;
      return false;
    };
    REQUIRE_TRUE(has(manetti_check(13, 4, 6, 1), "a even"));       // odd a
    REQUIRE_TRUE(has(manetti_check(12, 4, 6, 1), "a >= 2c+1"));    // a = 2c
    REQUIRE_TRUE(has(manetti_check(14, 4, 6, 3), "c >= k+4"));     // c = k+3
    REQUIRE_TRUE(has(manetti_check(14, 4, 5, 1), "c >= b+2"));     // c = b+1
    // Exhaustive grid against a direct restatement of the hypothesis list.
    for (Int a = 2; a <= 16; ++a)
      for (Int b = 2; b <= 10; ++b)
        for (Int c = 2; c <= 10; ++c)
          for (Int k = 0; k <= 5; ++k) {
            bool expect = a % 2 == 0 && b % 2 == 0 && c % 2 == 0 && a >= 4 &&
                          b >= 4 && c >= 4 && a >= 2 * c + 1 && a >= b + 2 &&
                          c >= b + 2 && c >= k + 4 && k >= 1;
            REQUIRE_EQ(manetti_check(a, b, c, k).satisfied, expect);
          }
  });

  criterion("4: the chi=7 pair is homeomorphic but never certified", [](bool& ok, std::string& detail) {
    PairVerdict v = pair_verdict(T({{{5, 2}, {3, 2}, {1, 2}}}),
                                 T({{{3, 2}, {3, 2}, {3, 2}}}));
    REQUIRE_TRUE(v.homeo == HomeoStatus::Yes);
    REQUIRE_TRUE(v.nondef == NondefStatus::Unknown);
  });

  criterion("5: class-T recognizer equals the brute-force oracle, m <= 200", [](bool& ok, std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    for (Int m = 2; m <= 200; ++m)
      for (Int q = 1; q < m; ++q) {
        if (std::gcd(q, m) != 1) continue;
        REQUIRE_EQ(recognize_class_T(CyclicQuotient{m, q}).has_value(),
                   oracle_is_class_T(m, q));
      }
    for (Int m = 2; m <= 200; ++m)
      REQUIRE_TRUE(recognize_class_T(CyclicQuotient{m, m - 1}).has_value());
    auto r1 = recognize_class_T(CyclicQuotient{4, 1});
    REQUIRE_TRUE((r1 && *r1 == ClassTDatum{1, 2, 1}));
    auto r2 = recognize_class_T(CyclicQuotient{8, 3});
    REQUIRE_TRUE((r2 && *r2 == ClassTDatum{2, 2, 1}));
    REQUIRE_TRUE(!recognize_class_T(CyclicQuotient{5, 2}).has_value());
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    REQUIRE_TRUE(secs < 1.0);
  });

  criterion("6: smoothing family descriptor for (d,n,a) = (1,2,1)", [](bool& ok, std::string& detail) {
    auto f = smoothing_family(ClassTDatum{1, 2, 1});
    REQUIRE_EQ(f.equation, std::string("uv - z^2 = t0"));
    REQUIRE_EQ(f.action_weights, (std::array<Int, 3>{1, -1, 1}));
    REQUIRE_EQ(f.rhs_exponents, std::vector<Int>{0});
    REQUIRE_EQ(f.modulus, 2);
    REQUIRE_EQ(f.exponent, 2);
  });

  criterion("7: enumeration matches full dedup oracle for bounds <= 6", [](bool& ok, std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    for (Int max_n = 0; max_n <= 6; ++max_n)
      for (Int max_m = 0; max_m <= 6; ++max_m) {
        SearchConfig cfg;
        cfg.max_n = max_n;
        cfg.max_m = max_m;
        auto got = enumerate_types(cfg);
        std::set<CoverType> expected;
        for (Int n1 = 0; n1 <= max_n; ++n1)
          for (Int m1 = 0; m1 <= max_m; ++m1)
            for (Int n2 = 0; n2 <= max_n; ++n2)
              for (Int m2 = 0; m2 <= max_m; ++m2)
                for (Int n3 = 0; n3 <= max_n; ++n3)
                  for (Int m3 = 0; m3 <= max_m; ++m3) {
                    std::array<BiDegree, 3> raw{
                        {{n1, m1}, {n2, m2}, {n3, m3}}};
                    if (bidouble::testing::is_valid_raw(raw))
                      expected.insert(canonicalize(CoverType{raw}));
                  }
        REQUIRE_EQ(std::set<CoverType>(got.begin(), got.end()), expected);
        REQUIRE_EQ(got.size(), expected.size());
        // No duplicates under the full symmetry group.
        std::set<CoverType> seen;
        for (const CoverType& t : got) {
          for (const CoverType& g : orbit(t))
            REQUIRE_TRUE(g == t || seen.count(g) == 0);
          REQUIRE_TRUE(seen.insert(t).second);
        }
      }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    REQUIRE_TRUE(secs < 1.0);
  });

  criterion("8: search reproduces both homeomorphic pairs", [](bool& ok, std::string& detail) {
    SearchConfig small;
    small.max_n = 5;
    small.max_m = 2;
    SearchResult res = run_search(small);
    const SignatureGroup* grp = nullptr;
    for (const auto& g : res.groups)
      if (g.signature == HomeoSignature{Pi1::SimplyConnected, 6, 20, 1})
        grp = &g;
    REQUIRE_TRUE(grp != nullptr);
    REQUIRE_EQ(grp->members.size(), std::size_t{2});
    REQUIRE_EQ(grp->members[0], canonicalize(T({{{5, 2}, {3, 2}, {1, 2}}})));
    REQUIRE_EQ(grp->members[1], canonicalize(T({{{3, 2}, {3, 2}, {3, 2}}})));
    REQUIRE_TRUE(grp->certified_pairs.empty());

    SearchConfig big;
    big.max_n = 30;
    big.max_m = 8;
    big.threads = 2;
    SearchResult bres = run_search(big);
    CoverType t1 = canonicalize(T({{{28, 8}, {12, 8}, {0, 0}}}));
    CoverType t2 = canonicalize(T({{{30, 8}, {10, 8}, {0, 0}}}));
    bool certified = false;
    for (const auto& g : bres.groups)
      for (const auto& p : g.certified_pairs) {
        std::set<CoverType> pair{g.members[p.i], g.members[p.j]};
        if (pair == std::set<CoverType>{t1, t2}) {
          certified = p.certificate.a == 14 && p.certificate.b == 4 &&
                      p.certificate.c == 6 && p.certificate.k == 1;
        }
      }
    REQUIRE_TRUE(certified);
  });

  criterion("9: formula consistency on 10^4 random types, bound 40", [](bool& ok, std::string& detail) {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 10000; ++iter) {
      CoverType t = random_valid_type(rng, 40);
      Int n = 0, m = 0, cross = 0;
      for (const auto& d : t.branches) {
        n += d.first;
        m += d.second;
        cross += d.first * d.second;
      }
      REQUIRE_EQ(((n - 4) * (m - 4) + cross) % 4, 0);
      Int c = chi(t), k2 = k_squared(t);
      for (const CoverType& g : orbit(t)) {
        REQUIRE_EQ(chi(g), c);
        REQUIRE_EQ(k_squared(g), k2);
      }
      if (general_type(t)) {
        auto v = divisibility(t);
        if (v.kind == DivisibilityVerdict::Kind::Exact) {
          REQUIRE_EQ(k2 % (v.r * v.r), 0);
          if (v.r % 2 == 0) REQUIRE_EQ(k2 % 8, 0);
        }
      }
      if (classify(t) == CoverClass::Simple) {
        CoverType s = t;
        std::sort(s.branches.begin(), s.branches.end());
        // branches[0] is the trivial one after sorting
        BiDegree d1 = s.branches[1], d2 = s.branches[2];
        auto p = natural_deformation_profile(
            CoverType{{d1, d2, BiDegree{0, 0}}});
        Int a2 = d1.first, b2 = d1.second, c2 = d2.first, e2 = d2.second;
        REQUIRE_EQ(p.phi_degrees[0], (BiDegree{a2 - c2 / 2, b2 - e2 / 2}));
        REQUIRE_EQ(p.phi_degrees[1], (BiDegree{c2 - a2 / 2, e2 - b2 / 2}));
      }
    }
  });

  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
