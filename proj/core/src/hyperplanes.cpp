#include "derham/hyperplanes.hpp"

#include <random>

#include "derham/errors.hpp"

namespace derham {

std::vector<std::vector<int>> all_tuples(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Depth-first enumeration yields lexicographic order.
  auto rec = [&](auto&& self, int start) -> void {
    for (int i = start; i <= m; ++i) {
      cur.push_back(i);
      out.push_back(cur);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

PolyMatrix transversality_matrix(const VarietyProfile& profile, const std::vector<Poly>& forms,
                                 const std::vector<int>& tuple, std::size_t chart) {
  if (tuple.empty()) throw ValidationError("transversality_matrix: empty tuple");
  const std::size_t nv = static_cast<std::size_t>(profile.n) + 1;
  std::vector<Poly> rows = profile.basisF;
  for (int j : tuple) {
    if (j < 0 || static_cast<std::size_t>(j) >= forms.size())
      throw ValidationError("transversality_matrix: tuple index outside the family");
    rows.push_back(forms[static_cast<std::size_t>(j)]);
  }
  return jacobian_chart_matrix(rows, nv, chart);
}

namespace {

bool independent(const std::vector<Poly>& forms, std::size_t nv) {
  QMatrix a(forms.size(), nv);
  for (std::size_t r = 0; r < forms.size(); ++r) {
    if (forms[r].degree() != 1 || !forms[r].is_homogeneous()) return false;
    for (std::size_t i = 0; i < nv; ++i) a(r, i) = forms[r].coefficient(Monomial::variable(nv, i));
  }
  return rank(a) == forms.size();
}

TransversalityCheck check_tuple(const Variety& v, const VarietyProfile& profile, const std::vector<Poly>& forms,
                                const std::vector<int>& tuple, std::size_t chart, const EmptinessOptions& opts) {
  TransversalityCheck c;
  c.tuple = tuple;
  c.chart = chart;
  const long q = static_cast<long>(tuple.size()) - 1;
  DegeneracyData data = rank_conditions(transversality_matrix(profile, forms, tuple, chart), profile.e + q, chart);
  c.conditions = data.conditions.size();
  std::vector<Poly> gens = v.generators;
  for (int j : tuple) gens.push_back(forms[static_cast<std::size_t>(j)]);
  c.locus = locus_emptiness_on_X(gens, data, opts, &c.degree_reached);
  return c;
}

std::string describe(const TransversalityCheck& c) {
  std::string t;
  for (int j : c.tuple) t += (t.empty() ? "" : ",") + std::to_string(j);
  return "tuple (" + t + ") in chart " + std::to_string(c.chart);
}

}  // namespace

TransversalityCertificate verify_family(const Variety& v, const VarietyProfile& profile,
                                        const std::vector<Poly>& forms, const EmptinessOptions& opts) {
  TransversalityCertificate cert;
  const std::size_t nv = v.nvars();
  if (static_cast<int>(forms.size()) != profile.m + 1) {
    cert.reason = "family must have m+1 = " + std::to_string(profile.m + 1) + " forms";
    return cert;
  }
  cert.independent = independent(forms, nv);
  if (!cert.independent) {
    cert.reason = "forms are not linearly independent";
    return cert;
  }
  for (std::size_t i = 0; i < nv; ++i)
    for (const auto& tuple : all_tuples(profile.m)) {
      cert.checks.push_back(check_tuple(v, profile, forms, tuple, i, opts));
      const auto& c = cert.checks.back();
      if (c.locus == Emptiness::Unknown)
        throw Inconclusive("transversality check " + describe(c) + " reached its degree cap",
                           static_cast<long>(c.degree_reached));
      if (c.locus == Emptiness::NonEmpty) {
        cert.reason = "not transversal: " + describe(c);
        return cert;
      }
    }
  std::vector<Poly> all = v.generators;
  all.insert(all.end(), forms.begin(), forms.end());
  cert.empty_intersection = projective_emptiness(all, nv, opts);
  if (!cert.empty_intersection) {
    cert.reason = "hyperplanes have a common point on X";
    return cert;
  }
  cert.accepted = true;
  return cert;
}

namespace {

class CandidateStream {
 public:
  CandidateStream(std::size_t nvars, long seed) : nv_(nvars), next_b_(seed), rng_(static_cast<std::uint64_t>(seed)) {}

  // A sparse candidate is inserted after every rejection.
  void rejected() { sparse_next_ = true; }

  Poly next(std::string& origin) {
    if (sparse_next_) {
      sparse_next_ = false;
      origin = "sparse";
      return sparse();
    }
    origin = "moment b=" + std::to_string(next_b_);
    return moment_form(nv_, next_b_++);
  }

 private:
  Poly sparse() {
    static const long values[] = {1, -1, 2, -2};
    const std::size_t support = nv_ >= 3 && (rng_() & 1u) ? 3 : std::min<std::size_t>(2, nv_);
    std::vector<long> coeff(nv_, 0);
    std::size_t placed = 0;
    while (placed < support) {
      std::size_t i = static_cast<std::size_t>(rng_() % nv_);
      if (coeff[i] != 0) continue;
      coeff[i] = values[rng_() % 4];
      ++placed;
    }
    Poly l(nv_);
    for (std::size_t i = 0; i < nv_; ++i) l.add_term(Monomial::variable(nv_, i), Rational(coeff[i]));
    return l;
  }

  std::size_t nv_;
  long next_b_;
  std::mt19937_64 rng_;
  bool sparse_next_ = false;
};

}  // namespace

HyperplaneFamily find_hyperplanes(const Variety& v, const VarietyProfile& profile, const SearchOptions& opts,
                                  TransversalityCertificate* certificate) {
  if (profile.m < 0) throw ValidationError("find_hyperplanes: variety is empty");
  const std::size_t nv = v.nvars();
  HyperplaneFamily fam;
  fam.seed = opts.seed;
  TransversalityCertificate cert;
  cert.independent = true;
  CandidateStream stream(nv, opts.seed);
  std::size_t used = 0;

  for (int j = 0; j <= profile.m; ++j) {
    for (;;) {
      if (used++ >= opts.budget)
        throw BudgetExhausted("hyperplane search examined " + std::to_string(opts.budget) +
                              " candidates and accepted only " + std::to_string(j) + " of " +
                              std::to_string(profile.m + 1) + " forms");
      std::string origin;
      Poly cand = stream.next(origin);
      std::vector<Poly> forms = fam.forms;
      forms.push_back(cand);
      if (!independent(forms, nv)) {
        stream.rejected();
        continue;
      }
      std::vector<TransversalityCheck> checks;
      bool ok = true;
      try {
        for (std::size_t i = 0; i < nv && ok; ++i)
          for (const auto& tuple : all_tuples(j)) {
            if (tuple.back() != j) continue;
            checks.push_back(check_tuple(v, profile, forms, tuple, i, opts.emptiness));
            if (checks.back().locus != Emptiness::Empty) {
              ok = false;
              break;
            }
          }
      } catch (const Inconclusive&) {
        ok = false;
      }
      if (!ok) {
        stream.rejected();
        continue;
      }
      fam.forms = std::move(forms);
      fam.origin.push_back(origin);
      cert.checks.insert(cert.checks.end(), checks.begin(), checks.end());
      break;
    }
  }

  std::vector<Poly> all = v.generators;
  all.insert(all.end(), fam.forms.begin(), fam.forms.end());
  cert.empty_intersection = projective_emptiness(all, nv, opts.emptiness);
  if (!cert.empty_intersection)
    throw InvariantViolation("accepted hyperplanes meet on X although every tuple passed");
  cert.accepted = true;
  if (certificate) *certificate = std::move(cert);
  return fam;
}

}  // namespace derham
