#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "bidouble/covers.hpp"
#include "bidouble/deformations.hpp"
#include "bidouble/invariants.hpp"

namespace bidouble {

struct SearchConfig {
  Int max_n = 1;
  Int max_m = 1;
  bool require_general_type = true;
  bool require_simply_connected = true;
  bool certify_nondef = true;
  int threads = 1;
};

struct CertifiedPair {
  std::size_t i = 0;  // indices into the group's member list
  std::size_t j = 0;
  ManettiCertificate certificate;
};

struct SignatureGroup {
  HomeoSignature signature;
  std::vector<CoverType> members;  // distinct canonical forms, sorted
  std::vector<CertifiedPair> certified_pairs;
};

struct SearchSummary {
  Int enumerated = 0;  // canonical types visited
  Int filtered = 0;    // dropped by the general-type / pi1 filters
  Int skipped = 0;     // signature undetermined (e.g. candidate-set divisibility)
  Int groups = 0;
  Int certified_pairs = 0;
};

struct SearchResult {
  std::vector<SignatureGroup> groups;  // only groups with >= 2 members
  SearchSummary summary;
};

/// All valid canonical types with coordinates within bounds, each exactly
/// once, in lexicographic order. Iterates one parity class at a time.
std::vector<CoverType> enumerate_types(const SearchConfig& cfg);

/// Grouping stage: filters, computes signatures, groups, certifies pairs.
/// Order-independent in its input.
SearchResult group_types(const std::vector<CoverType>& types,
                         const SearchConfig& cfg);

SearchResult run_search(const SearchConfig& cfg);

}  // namespace bidouble
