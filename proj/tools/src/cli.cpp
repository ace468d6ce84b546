#include "derham/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "derham/cohomology.hpp"
#include "derham/errors.hpp"
#include "derham/hyperplanes.hpp"
#include "derham/smoothness.hpp"

namespace derham::cli {

using Json = nlohmann::ordered_json;

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"p1", 1, {}, {1, 0, 1}, 2, true, "projective line"},
      {"p2", 2, {}, {1, 0, 1, 0, 1}, 3, true, "projective plane"},
      {"conic", 2, {"X0*X2 - X1^2"}, {1, 0, 1}, 2, true, "smooth conic, isomorphic to P1"},
      {"fermat-cubic", 2, {"X0^3 + X1^3 + X2^3"}, {1, 2, 1}, 0, true, "plane cubic, genus (d-1)(d-2)/2 = 1"},
      {"quadric-surface", 3, {"X0*X3 - X1*X2"}, {1, 0, 2, 0, 1}, 4, true, "Segre embedding of P1 x P1"},
      {"nodal-cubic", 2, {"X1^2*X2 - X0^2*(X0 + X2)"}, {}, std::nullopt, false, "node at (0:0:1)"},
      {"cuspidal-cubic", 2, {"X1^2*X2 - X0^3"}, {}, std::nullopt, false, "cusp at (0:0:1)"},
      {"cone", 3, {"X0*X2 - X1^2"}, {}, std::nullopt, false, "vertex at (0:0:0:1)"},
  };
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw ValidationError("unknown catalog entry '" + name + "'");
}

VarietyInput catalog_input(const CatalogEntry& entry) {
  VarietyInput in;
  in.name = entry.name;
  in.variety.n = entry.n;
  for (const auto& g : entry.generators) in.variety.generators.push_back(parse_polynomial(g, entry.n));
  return in;
}

Poly parse_polynomial(const std::string& text, int n) {
  if (n < 0) throw ValidationError("n must be non-negative");
  return parse_poly(text, static_cast<std::size_t>(n) + 1);
}

VarietyInput parse_input_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("input must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParseError("input needs an integer field \"n\"");
  VarietyInput in;
  in.variety.n = doc["n"].get<int>();
  if (in.variety.n < 1) throw ValidationError("n must be at least 1");
  auto strings = [&](const char* key) {
    std::vector<Poly> out;
    if (!doc.contains(key)) return out;
    if (!doc[key].is_array()) throw ParseError(std::string("\"") + key + "\" must be an array of strings");
    for (const auto& s : doc[key]) {
      if (!s.is_string()) throw ParseError(std::string("\"") + key + "\" must be an array of strings");
      out.push_back(parse_polynomial(s.get<std::string>(), in.variety.n));
    }
    return out;
  };
  if (!doc.contains("generators")) throw ParseError("input needs a field \"generators\"");
  in.variety.generators = strings("generators");
  in.hyperplanes = strings("hyperplanes");
  if (doc.contains("name") && doc["name"].is_string()) in.name = doc["name"].get<std::string>();
  return in;
}

VarietyInput load_input_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_input_json(ss.str());
}

void validate_input(const VarietyInput& input) {
  if (input.variety.n < 1) throw ValidationError("n must be at least 1");
  validate(input.variety);
  for (const auto& l : input.hyperplanes) {
    if (l.nvars() != input.variety.nvars()) throw ValidationError("hyperplane has the wrong number of variables");
    if (l.is_zero() || !l.is_homogeneous() || l.degree() != 1)
      throw ValidationError("hyperplane " + l.to_string() + " is not a nonzero linear form");
  }
}

namespace {

const char* emptiness_name(Emptiness e) {
  switch (e) {
    case Emptiness::Empty: return "empty";
    case Emptiness::NonEmpty: return "nonempty";
    default: return "unknown";
  }
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

Json numerator_json(const std::vector<int>& tuple, int t, const Form& numerator) {
  Json nums = Json::object();
  for (const auto& [j, c] : numerator.components()) nums[join(j)] = c.to_string();
  return Json{{"tuple", tuple}, {"t", t}, {"numerators", nums}};
}

std::vector<std::string> poly_strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Json profile_json(const VarietyProfile& p) {
  return Json{{"n", p.n}, {"m", p.m}, {"e", p.e}, {"D", p.D}, {"d", p.d}};
}

Json certificate_json(const TransversalityCertificate& c) {
  Json checks = Json::array();
  for (const auto& ch : c.checks)
    checks.push_back(Json{{"tuple", ch.tuple},
                          {"chart", ch.chart},
                          {"conditions", ch.conditions},
                          {"locus", emptiness_name(ch.locus)},
                          {"degree_reached", ch.degree_reached}});
  return Json{{"accepted", c.accepted},
              {"independent", c.independent},
              {"empty_intersection", c.empty_intersection},
              {"reason", c.reason},
              {"checks", checks}};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

SearchOptions search_options(const JobSpec& job) {
  SearchOptions so;
  so.seed = job.seed;
  so.budget = job.budget;
  return so;
}

int run_smooth(const JobSpec& job, std::ostream& out) {
  VanishingIdeal ideal(job.input.variety);
  SmoothnessReport r = smoothness_test(ideal, job.seed);
  if (job.json) {
    Json charts = Json::array();
    for (const auto& c : r.charts)
      charts.push_back(Json{{"chart", c.chart},
                            {"conditions", c.conditions},
                            {"max_degree", c.max_degree},
                            {"locus", emptiness_name(c.locus)},
                            {"degree_reached", c.degree_reached}});
    Json j{{"verdict", r.verdict}};
    j["witness_chart"] = r.witness_chart ? Json(*r.witness_chart) : Json(nullptr);
    j["profile"] = profile_json(r.profile);
    j["charts"] = charts;
    emit(out, j);
  } else {
    out << "verdict: " << r.verdict << "\n";
    if (r.profile.m >= 0) out << "dimension " << r.profile.m << ", degree " << r.profile.D << "\n";
    if (r.witness_chart) out << "witness chart: X" << *r.witness_chart << " != 0\n";
    for (const auto& c : r.charts)
      out << "  chart " << c.chart << ": " << c.conditions << " conditions, locus " << emptiness_name(c.locus)
          << " (degree " << c.degree_reached << ")\n";
  }
  return r.verdict == "smooth" || r.verdict == "empty" ? kOk : kSingular;
}

int run_hyperplanes(const JobSpec& job, std::ostream& out) {
  const Variety& v = job.input.variety;
  VanishingIdeal ideal(v);
  VarietyProfile profile = variety_profile(ideal, job.seed);
  if (profile.m < 0) throw ValidationError("the variety is empty");
  HyperplaneFamily family;
  TransversalityCertificate cert;
  if (!job.input.hyperplanes.empty()) {
    family.forms = job.input.hyperplanes;
    family.seed = job.seed;
    family.origin.assign(family.forms.size(), "given");
    cert = verify_family(v, profile, family.forms);
  } else {
    family = find_hyperplanes(v, profile, search_options(job), &cert);
  }
  if (job.json) {
    emit(out, Json{{"forms", poly_strings(family.forms)},
                   {"origin", family.origin},
                   {"seed", job.seed},
                   {"profile", profile_json(profile)},
                   {"certificate", certificate_json(cert)}});
  } else {
    for (std::size_t i = 0; i < family.forms.size(); ++i)
      out << "l" << i << " = " << family.forms[i].to_string() << "  [" << family.origin[i] << "]\n";
    out << "certificate: " << (cert.accepted ? "accepted" : "rejected") << ", " << cert.checks.size()
        << " chart checks";
    if (!cert.accepted) out << " (" << cert.reason << ")";
    out << "\n";
  }
  return cert.accepted ? kOk : kInconclusive;
}

int run_betti(const JobSpec& job, std::ostream& out) {
  BettiOptions opts;
  opts.seed = job.seed;
  opts.pole_order = job.pole_order;
  opts.budget = job.budget;
  BettiReport r = betti(job.input.variety, opts);
  const CohomologyResult& res = r.result;
  if (job.json) {
    Json reps = Json::array();
    for (const auto& rep : res.representatives) {
      Json forms = Json::array();
      for (const auto& c : rep.components) forms.push_back(numerator_json(c.tuple, c.t, c.numerator));
      reps.push_back(Json{{"k", rep.k}, {"forms", forms}});
    }
    emit(out, Json{{"betti", res.betti},
                   {"s_used", res.s_used},
                   {"stabilized", res.stabilized},
                   {"representatives", reps}});
  } else {
    if (r.smoothness.verdict == "empty") {
      out << "the variety is empty\n";
      return kOk;
    }
    out << "betti:";
    for (auto b : res.betti) out << " " << b;
    out << "\npole order s = " << res.s_used << (res.stabilized ? " (stabilized at s+1)" : "") << "\n";
    for (std::size_t i = 0; i < r.family.forms.size(); ++i)
      out << "l" << i << " = " << r.family.forms[i].to_string() << "\n";
    out << "total complex dims:";
    for (auto d : r.total_dims) out << " " << d;
    out << "\n";
  }
  return kOk;
}

int run_complement(const JobSpec& job, std::ostream& out) {
  const Variety& v = job.input.variety;
  VanishingIdeal ideal(v);
  SmoothnessReport sr = smoothness_test(ideal, job.seed);
  if (sr.verdict != "smooth") throw SingularInput("smoothness test verdict " + sr.verdict, sr.verdict);
  const VarietyProfile& profile = sr.profile;
  std::vector<Poly> family = job.input.hyperplanes;
  if (family.empty()) family = find_hyperplanes(v, profile, search_options(job)).forms;
  if (family.size() != static_cast<std::size_t>(profile.m) + 1)
    throw ValidationError("a family of m+1 = " + std::to_string(profile.m + 1) + " hyperplanes is required");
  const std::vector<int>& tuple = job.tuple;
  if (tuple.empty()) throw ValidationError("--chart-tuple is required");
  for (std::size_t i = 0; i < tuple.size(); ++i)
    if (tuple[i] < 0 || tuple[i] > profile.m || (i && tuple[i] <= tuple[i - 1]))
      throw ValidationError("chart tuple must be increasing indices in 0.." + std::to_string(profile.m));
  int s = job.pole_order ? *job.pole_order
                         : static_cast<int>(profile.m == 0 ? regularity_bounds(0, 0, profile.e, profile.D)
                                                           : pole_order_bound(profile.m, profile.e, profile.D));
  FormSpaces spaces(ideal, select_frame(v, profile, job.seed));
  ComplementComplex cc = complement_complex(spaces, profile, family, tuple, s);
  if (job.json) {
    Json reps = Json::array();
    for (std::size_t p = 0; p < cc.representatives.size(); ++p) {
      Json forms = Json::array();
      for (const auto& vec : cc.representatives[p]) {
        Form num(v.nvars(), static_cast<int>(p));
        for (const auto& [i, c] : vec) num += cc.spaces[p]->basis()[i] * c;
        forms.push_back(numerator_json(tuple, s + static_cast<int>(p), num));
      }
      reps.push_back(Json{{"k", p}, {"forms", forms}});
    }
    emit(out, Json{{"tuple", tuple},
                   {"s_used", s},
                   {"hyperplanes", poly_strings(family)},
                   {"cohomology", cc.cohomology},
                   {"representatives", reps}});
  } else {
    out << "complement of Z(" << join(tuple, ",") << ") at s = " << s << ":";
    for (auto h : cc.cohomology) out << " " << h;
    out << "\n";
  }
  return kOk;
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    validate_input(job.input);
    if (job.command == "smooth") return run_smooth(job, out);
    if (job.command == "betti") return run_betti(job, out);
    if (job.command == "hyperplanes") return run_hyperplanes(job, out);
    if (job.command == "complement") return run_complement(job, out);
    throw ValidationError("unknown command '" + job.command + "'");
  } catch (const SingularInput& e) {
    err << "singular: " << e.what() << "\n";
    return kSingular;
  } catch (const Inconclusive& e) {
    err << "inconclusive: " << e.what() << " (bound reached " << e.bound_reached() << ")\n";
    return kInconclusive;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace derham::cli
