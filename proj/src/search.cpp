#include "bidouble/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace bidouble {

namespace {

// Pairs usable as branches in one parity class: (0,0) for the all-even
// class, otherwise coordinates >= 1 of the given parities.
std::vector<BiDegree> class_pairs(Int max_n, Int max_m, int np, int mp) {
  std::vector<BiDegree> out;
  if (np == 0 && mp == 0) out.push_back({0, 0});
  for (Int n = np == 0 ? 2 : 1; n <= max_n; n += 2)
    for (Int m = mp == 0 ? 2 : 1; m <= max_m; m += 2) out.push_back({n, m});
  return out;
}

bool is_valid(const std::array<BiDegree, 3>& raw) {
  try {
    validate_type(raw);
    return true;
  } catch (const domain_error&) {
    return false;
  }
}

// Canonical forms of valid types with first branch pairs[i0], ascending
// triples only. The canonical form of an orbit may lie outside the box (the
// coordinate swap exchanges the n- and m-bounds), so every triple is
// canonicalized and duplicates are removed by the caller's sort.
void emit_from_first(const std::vector<BiDegree>& pairs, std::size_t i0,
                     std::vector<CoverType>& out) {
  for (std::size_t i1 = i0; i1 < pairs.size(); ++i1)
    for (std::size_t i2 = i1; i2 < pairs.size(); ++i2) {
      CoverType t{{pairs[i0], pairs[i1], pairs[i2]}};
      if (!is_valid(t.branches)) continue;
      out.push_back(canonicalize(t));
    }
}

}  // namespace

std::vector<CoverType> enumerate_types(const SearchConfig& cfg) {
  std::vector<CoverType> out;
  for (int np = 0; np < 2; ++np)
    for (int mp = 0; mp < 2; ++mp) {
      auto pairs = class_pairs(cfg.max_n, cfg.max_m, np, mp);
      if (cfg.threads <= 1 || pairs.size() < 4) {
        for (std::size_t i0 = 0; i0 < pairs.size(); ++i0)
          emit_from_first(pairs, i0, out);
      } else {
        // Work splits by the first branch; merging is concatenation
        // followed by the final sort.
        std::atomic<std::size_t> next{0};
        std::vector<std::vector<CoverType>> parts(cfg.threads);
        std::vector<std::thread> workers;
        for (int w = 0; w < cfg.threads; ++w)
          workers.emplace_back([&, w] {
            for (std::size_t i0 = next++; i0 < pairs.size(); i0 = next++)
              emit_from_first(pairs, i0, parts[w]);
          });
        for (auto& th : workers) th.join();
        for (auto& part : parts)
          out.insert(out.end(), part.begin(), part.end());
      }
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SearchResult group_types(const std::vector<CoverType>& types,
                         const SearchConfig& cfg) {
  SearchResult res;
  std::map<HomeoSignature, std::vector<CoverType>> table;
  for (const CoverType& t : types) {
    ++res.summary.enumerated;
    if (cfg.require_general_type && !general_type(t)) {
      ++res.summary.filtered;
      continue;
    }
    if (cfg.require_simply_connected &&
        pi1_class(t) != Pi1::SimplyConnected) {
      ++res.summary.filtered;
      continue;
    }
    auto sig = try_homeo_signature(t);
    if (!sig) {
      ++res.summary.skipped;
      continue;
    }
    table[*sig].push_back(t);
  }
  for (auto& [sig, members] : table) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.size() < 2) continue;
    SignatureGroup g;
    g.signature = sig;
    g.members = std::move(members);
    if (cfg.certify_nondef) {
      for (std::size_t i = 0; i < g.members.size(); ++i)
        for (std::size_t j = i + 1; j < g.members.size(); ++j)
          if (auto cert = match_shift_pattern(g.members[i], g.members[j]))
            g.certified_pairs.push_back({i, j, *cert});
    }
    res.summary.certified_pairs += static_cast<Int>(g.certified_pairs.size());
    res.groups.push_back(std::move(g));
  }
  res.summary.groups = static_cast<Int>(res.groups.size());
  return res;
}

SearchResult run_search(const SearchConfig& cfg) {
  return group_types(enumerate_types(cfg), cfg);
}

}  // namespace bidouble
