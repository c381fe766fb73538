#pragma once

#include <json.hpp>

#include "bidouble/deformations.hpp"
#include "bidouble/invariants.hpp"
#include "bidouble/search.hpp"
#include "bidouble/singularities.hpp"

namespace bidouble {

using json = nlohmann::ordered_json;

json to_json(const BiDegree& d);          // [n, m]
json to_json(const HalfInt& h);           // [num, den]
json to_json(const DivisibilityVerdict& v);
json to_json(const InvariantRecord& rec);
json to_json(const HomeoSignature& sig);
json to_json(const ManettiCertificate& cert);
json to_json(const PairVerdict& v);
json to_json(const NaturalDeformationProfile& p);
json to_json(const SignatureGroup& g);
json to_json(const SearchSummary& s);

/// Singularity report: { class_T, d, n, a, link, equation } with null
/// parameter fields when the input is not of class T.
json singularity_report(const CyclicQuotient& s);

InvariantRecord invariant_record_from_json(const json& j);
PairVerdict pair_verdict_from_json(const json& j);

}  // namespace bidouble
