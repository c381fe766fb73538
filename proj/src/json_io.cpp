#include "bidouble/json_io.hpp"

namespace bidouble {

json to_json(const BiDegree& d) { return json::array({d.first, d.second}); }

json to_json(const HalfInt& h) { return json::array({h.num, h.den}); }

json to_json(const DivisibilityVerdict& v) {
  if (v.kind == DivisibilityVerdict::Kind::Exact)
    return json{{"kind", "exact"}, {"r", v.r}};
  return json{{"kind", "candidate_set"}, {"rs", v.candidates}};
}

json to_json(const InvariantRecord& rec) {
  json j;
  j["n"] = rec.n;
  j["m"] = rec.m;
  j["chi"] = rec.chi;
  j["k2"] = rec.k2;
  j["q"] = rec.q ? json(*rec.q) : json(nullptr);
  j["pg"] = rec.pg ? json(*rec.pg) : json(nullptr);
  j["K_bidegree"] =
      json::array({to_json(rec.k_bidegree_first), to_json(rec.k_bidegree_second)});
  j["divisibility"] =
      rec.divisibility ? to_json(*rec.divisibility) : json(nullptr);
  j["pi1"] = pi1_name(rec.pi1);
  j["general_type"] = rec.general_type;
  return j;
}

json to_json(const HomeoSignature& sig) {
  return json{{"pi1", pi1_name(sig.pi1)},
              {"pg", sig.pg},
              {"k2", sig.k2},
              {"divisibility", sig.divisibility}};
}

json to_json(const ManettiCertificate& cert) {
  json j{{"a", cert.a}, {"b", cert.b}, {"c", cert.c}, {"k", cert.k},
         {"satisfied", cert.satisfied}};
  j["violated_conditions"] = cert.violated_conditions;
  return j;
}

json to_json(const PairVerdict& v) {
  json j;
  j["homeo"] = v.homeo == HomeoStatus::Yes ? "yes" : "unknown";
  j["nondef"] = v.nondef == NondefStatus::Certified ? "certified" : "unknown";
  j["certificate"] =
      v.certificate ? json{{"a", v.certificate->a},
                           {"b", v.certificate->b},
                           {"c", v.certificate->c},
                           {"k", v.certificate->k}}
                    : json(nullptr);
  j["signature"] = v.signature ? to_json(*v.signature) : json(nullptr);
  return j;
}

json to_json(const NaturalDeformationProfile& p) {
  json j;
  for (int i = 0; i < 3; ++i) {
    j["f_degrees"].push_back(to_json(p.f_degrees[i]));
    j["phi_degrees"].push_back(to_json(p.phi_degrees[i]));
  }
  j["f_dims"] = p.f_dims;
  j["phi_dims"] = p.phi_dims;
  j["total_params"] = p.total_params;
  return j;
}

json to_json(const SignatureGroup& g) {
  json j;
  j["signature"] = to_json(g.signature);
  for (const auto& m : g.members) j["members"].push_back(to_string(m));
  j["certified_pairs"] = json::array();
  for (const auto& p : g.certified_pairs)
    j["certified_pairs"].push_back({{"i", p.i},
                                    {"j", p.j},
                                    {"certificate",
                                     {{"a", p.certificate.a},
                                      {"b", p.certificate.b},
                                      {"c", p.certificate.c},
                                      {"k", p.certificate.k}}}});
  return j;
}

json to_json(const SearchSummary& s) {
  return json{{"enumerated", s.enumerated},
              {"filtered", s.filtered},
              {"skipped", s.skipped},
              {"groups", s.groups},
              {"certified_pairs", s.certified_pairs}};
}

json singularity_report(const CyclicQuotient& s) {
  json j;
  auto t = recognize_class_T(s);
  j["class_T"] = t.has_value();
  j["d"] = t ? json(t->d) : json(nullptr);
  j["n"] = t ? json(t->n) : json(nullptr);
  j["a"] = t ? json(t->a) : json(nullptr);
  j["link"] = json::array({s.m, s.q});
  j["equation"] = t ? json(smoothing_family(*t).equation) : json(nullptr);
  return j;
}

namespace {

DivisibilityVerdict divisibility_from_json(const json& j) {
  if (j.at("kind") == "exact") return DivisibilityVerdict::exact(j.at("r"));
  return DivisibilityVerdict::candidate_set(
      j.at("rs").get<std::vector<Int>>());
}

HomeoSignature signature_from_json(const json& j) {
  return {j.at("pi1") == "Z2" ? Pi1::Z2 : Pi1::SimplyConnected, j.at("pg"),
          j.at("k2"), j.at("divisibility")};
}

}  // namespace

InvariantRecord invariant_record_from_json(const json& j) {
  InvariantRecord rec;
  rec.n = j.at("n");
  rec.m = j.at("m");
  rec.chi = j.at("chi");
  rec.k2 = j.at("k2");
  if (!j.at("q").is_null()) rec.q = j.at("q").get<Int>();
  if (!j.at("pg").is_null()) rec.pg = j.at("pg").get<Int>();
  const auto& kb = j.at("K_bidegree");
  rec.k_bidegree_first = {kb.at(0).at(0), kb.at(0).at(1)};
  rec.k_bidegree_second = {kb.at(1).at(0), kb.at(1).at(1)};
  if (!j.at("divisibility").is_null())
    rec.divisibility = divisibility_from_json(j.at("divisibility"));
  rec.pi1 = j.at("pi1") == "Z2" ? Pi1::Z2 : Pi1::SimplyConnected;
  rec.general_type = j.at("general_type");
  return rec;
}

PairVerdict pair_verdict_from_json(const json& j) {
  PairVerdict v;
  v.homeo =
      j.at("homeo") == "yes" ? HomeoStatus::Yes : HomeoStatus::Unknown;
  v.nondef = j.at("nondef") == "certified" ? NondefStatus::Certified
                                           : NondefStatus::Unknown;
  if (!j.at("certificate").is_null()) {
    const auto& c = j.at("certificate");
    v.certificate =
        manetti_check(c.at("a"), c.at("b"), c.at("c"), c.at("k"));
  }
  if (!j.at("signature").is_null())
    v.signature = signature_from_json(j.at("signature"));
  return v;
}

}  // namespace bidouble
