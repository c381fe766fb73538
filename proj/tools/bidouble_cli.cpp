#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bidouble/json_io.hpp"

using namespace bidouble;

namespace {

void print_invariants_table(const CoverType& t, const InvariantRecord& rec) {
  std::cout << "type:           " << to_string(canonicalize(t)) << "\n"
            << "class:          " << cover_class_name(classify(t)) << "\n"
            << "n, m:           " << rec.n << ", " << rec.m << "\n"
            << "chi:            " << rec.chi << "\n"
            << "K^2:            " << rec.k2 << "\n";
  std::cout << "q, p_g:         ";
  if (rec.q)
    std::cout << *rec.q << ", " << *rec.pg << "\n";
  else
    std::cout << "undetermined\n";
  auto half = [](const HalfInt& h) {
    std::ostringstream os;
    os << h.num;
    if (h.den != 1) os << "/" << h.den;
    return os.str();
  };
  std::cout << "K bidegree:     (" << half(rec.k_bidegree_first) << ","
            << half(rec.k_bidegree_second) << ")\n";
  std::cout << "divisibility:   ";
  if (!rec.divisibility) {
    std::cout << "undefined (not general type)\n";
  } else if (rec.divisibility->kind == DivisibilityVerdict::Kind::Exact) {
    std::cout << rec.divisibility->r << "\n";
  } else {
    std::cout << "candidates {";
    for (std::size_t i = 0; i < rec.divisibility->candidates.size(); ++i)
      std::cout << (i ? "," : "") << rec.divisibility->candidates[i];
    std::cout << "}\n";
  }
  std::cout << "pi1:            " << pi1_name(rec.pi1) << "\n"
            << "general type:   " << (rec.general_type ? "yes" : "no") << "\n";
  if (rec.general_type && rec.k2 > 9 * rec.chi)
    std::cerr << "warning: K^2 > 9 chi violates the Bogomolov-Miyaoka-Yau "
                 "bound; check the input\n";
}

int cmd_invariants(const std::string& type_text, bool as_json) {
  CoverType t = parse_cover_type(type_text);
  InvariantRecord rec = invariant_record(t);
  if (as_json)
    std::cout << to_json(rec).dump() << "\n";
  else
    print_invariants_table(t, rec);
  return 0;
}

int cmd_compare(const std::string& t1_text, const std::string& t2_text,
                bool as_json) {
  CoverType t1 = parse_cover_type(t1_text);
  CoverType t2 = parse_cover_type(t2_text);
  PairVerdict v = pair_verdict(t1, t2);
  if (as_json) {
    std::cout << to_json(v).dump() << "\n";
    return 0;
  }
  std::cout << "homeomorphic (matching K): "
            << (v.homeo == HomeoStatus::Yes ? "yes" : "unknown") << "\n";
  if (v.signature) {
    std::cout << "signature: pi1=" << pi1_name(v.signature->pi1)
              << " pg=" << v.signature->pg << " K^2=" << v.signature->k2
              << " div=" << v.signature->divisibility << "\n";
  }
  std::cout << "not deformation equivalent:  "
            << (v.nondef == NondefStatus::Certified ? "certified" : "unknown")
            << "\n";
  if (v.certificate)
    std::cout << "certificate: (a,b,c,k) = (" << v.certificate->a << ","
              << v.certificate->b << "," << v.certificate->c << ","
              << v.certificate->k << ")\n";
  return 0;
}

int cmd_manetti(Int a, Int b, Int c, Int k, bool as_json) {
  ManettiCertificate cert = manetti_check(a, b, c, k);
  if (as_json) {
    std::cout << to_json(cert).dump() << "\n";
    return 0;
  }
  if (cert.satisfied) {
    std::cout << "certified: not deformation equivalent\n";
  } else {
    std::cout << "not certified; violated:";
    for (const auto& v : cert.violated_conditions) std::cout << " [" << v << "]";
    std::cout << "\n";
  }
  return 0;
}

int cmd_singularity(const std::string& text, bool as_json) {
  CyclicQuotient s = parse_cyclic_quotient(text);
  if (as_json) {
    std::cout << singularity_report(s).dump() << "\n";
    return 0;
  }
  auto t = recognize_class_T(s);
  if (!t) {
    std::cout << to_string(s) << ": not class T\n";
    return 0;
  }
  auto fam = smoothing_family(*t);
  auto link = link_lens_space(*t);
  std::cout << to_string(s) << ": class T with (d,n,a) = (" << t->d << ","
            << t->n << "," << t->a << ")\n"
            << "smoothing family: " << fam.equation << "\n"
            << "mu_" << t->n << " weights on (u,v,z): (1,-1," << fam.action_weights[2]
            << ")\n"
            << "link: L(" << link.first << "," << link.second << ")\n";
  return 0;
}

int cmd_deform_profile(const std::string& type_text, bool as_json) {
  CoverType t = parse_cover_type(type_text);
  NaturalDeformationProfile p = natural_deformation_profile(t);
  if (as_json) {
    std::cout << to_json(p).dump() << "\n";
    return 0;
  }
  for (int i = 0; i < 3; ++i)
    std::cout << "branch " << i + 1 << ": f " << to_string(p.f_degrees[i])
              << " dim " << p.f_dims[i] << ", phi " << to_string(p.phi_degrees[i])
              << " dim " << p.phi_dims[i] << "\n";
  std::cout << "total parameters: " << p.total_params << "\n";
  return 0;
}

int cmd_search(const SearchConfig& cfg, bool as_json) {
  auto start = std::chrono::steady_clock::now();
  SearchResult res = run_search(cfg);
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  if (as_json) {
    for (const auto& g : res.groups) std::cout << to_json(g).dump() << "\n";
    std::cout << json{{"summary", to_json(res.summary)}}.dump() << "\n";
  } else {
    for (const auto& g : res.groups) {
      std::cout << "group: pi1=" << pi1_name(g.signature.pi1)
                << " pg=" << g.signature.pg << " K^2=" << g.signature.k2
                << " div=" << g.signature.divisibility << "\n";
      for (const auto& m : g.members) std::cout << "  " << to_string(m) << "\n";
      for (const auto& p : g.certified_pairs)
        std::cout << "  certified pair (" << p.i << "," << p.j
                  << "): (a,b,c,k) = (" << p.certificate.a << ","
                  << p.certificate.b << "," << p.certificate.c << ","
                  << p.certificate.k << ")\n";
    }
    std::cout << "summary: enumerated=" << res.summary.enumerated
              << " filtered=" << res.summary.filtered
              << " skipped=" << res.summary.skipped
              << " groups=" << res.summary.groups
              << " certified_pairs=" << res.summary.certified_pairs << "\n";
  }
  // Timing goes to stderr so stdout stays byte-identical across runs.
  std::cerr << "wall time: " << secs << " s\n";
  return 0;
}

// key=value config file for the search command; flags win on conflict.
void apply_config_file(const std::string& path, SearchConfig& cfg) {
  std::ifstream in(path);
  if (!in)
    throw domain_error(errc::invalid_input, "cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto eq = line.find('=');
    if (line.empty() || line[0] == '#' || eq == std::string::npos) continue;
    std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    auto strip = [](std::string& s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
    };
    strip(key);
    strip(value);
    if (key == "max_n") cfg.max_n = std::stoll(value);
    else if (key == "max_m") cfg.max_m = std::stoll(value);
    else if (key == "general_type_filter") cfg.require_general_type = value == "true";
    else if (key == "certify") cfg.certify_nondef = value == "true";
    else if (key == "threads") cfg.threads = std::stoi(value);
    else throw domain_error(errc::invalid_input, "unknown config key " + key);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic classifier and search engine for bidouble "
               "covers of the quadric"};
  app.require_subcommand(1);

  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  std::string type_text, type2_text, sing_text, config_path;
  Int ma = 0, mb = 0, mc = 0, mk = 0;
  SearchConfig cfg;
  if (const char* env = std::getenv("BIDOUBLE_THREADS"))
    cfg.threads = std::max(1, std::atoi(env));

  auto* inv = app.add_subcommand("invariants", "Invariants of one cover type");
  inv->add_option("type", type_text, "Cover type, e.g. \"((5,2),(3,2),(1,2))\"")
      ->required();

  auto* cmp = app.add_subcommand("compare", "Compare two cover types");
  cmp->add_option("type1", type2_text)->required();
  cmp->add_option("type2", sing_text)->required();

  auto* man = app.add_subcommand("manetti", "Non-deformation-equivalence "
                                            "hypothesis check");
  man->add_option("a", ma)->required();
  man->add_option("b", mb)->required();
  man->add_option("c", mc)->required();
  man->add_option("k", mk)->required();

  std::string sing_arg;
  auto* sing = app.add_subcommand("singularity",
                                  "Class-T recognition for \"1/m(1,q)\"");
  sing->add_option("singularity", sing_arg)->required();

  std::string prof_arg;
  auto* prof = app.add_subcommand("deform-profile",
                                  "Natural-deformation degree data");
  prof->add_option("type", prof_arg)->required();

  auto* search = app.add_subcommand("search", "Enumerate and group cover "
                                              "types by signature");
  auto* o_max_n = search->add_option("--max-n", cfg.max_n, "Bound on each n_j");
  auto* o_max_m = search->add_option("--max-m", cfg.max_m, "Bound on each m_j");
  auto* o_ngt = search->add_flag("--no-general-type-filter",
                                 "Keep non-general-type covers");
  auto* o_nc = search->add_flag("--no-certify", "Skip certification of pairs");
  auto* o_threads = search->add_option("--threads", cfg.threads, "Worker count");
  search->add_option("--config", config_path, "key=value config file");

  // --format is also accepted after the subcommand.
  for (auto* sub : {inv, cmp, man, sing, prof, search})
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));

  CLI11_PARSE(app, argc, argv);
  bool as_json = format == "json";

  try {
    if (*inv) return cmd_invariants(type_text, as_json);
    if (*cmp) return cmd_compare(type2_text, sing_text, as_json);
    if (*man) return cmd_manetti(ma, mb, mc, mk, as_json);
    if (*sing) return cmd_singularity(sing_arg, as_json);
    if (*prof) return cmd_deform_profile(prof_arg, as_json);
    if (*search) {
      if (!config_path.empty()) {
        SearchConfig from_file = cfg;
        apply_config_file(config_path, from_file);
        // Flags win on conflict.
        if (!*o_max_n) cfg.max_n = from_file.max_n;
        if (!*o_max_m) cfg.max_m = from_file.max_m;
        if (!*o_ngt) cfg.require_general_type = from_file.require_general_type;
        if (!*o_nc) cfg.certify_nondef = from_file.certify_nondef;
        if (!*o_threads) cfg.threads = from_file.threads;
      }
      if (*o_ngt) cfg.require_general_type = false;
      if (*o_nc) cfg.certify_nondef = false;
      if (cfg.max_n < 1 || cfg.max_m < 1)
        throw domain_error(errc::invalid_input, "bounds must be >= 1");
      return cmd_search(cfg, as_json);
    }
  } catch (const domain_error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == errc::non_integral_chi ? 2 : 1;
  }
  return 0;
}
