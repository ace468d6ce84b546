#include "derham/smoothness.hpp"

#include "derham/errors.hpp"

namespace derham {

PolyMatrix jacobian_chart_matrix(const std::vector<Poly>& forms, std::size_t nv, std::size_t chart) {
  PolyMatrix a(forms.size(), nv - 1, nv - 1);
  for (std::size_t r = 0; r < forms.size(); ++r) {
    Poly f = forms[r].dehomogenize(chart);
    for (std::size_t c = 0; c + 1 < nv; ++c) a(r, c) = f.derivative(c);
  }
  return a;
}

DegeneracyData rank_conditions(const PolyMatrix& a, long r, std::size_t chart) {
  DegeneracyData d;
  d.chart = chart;
  d.symmetrized_size = a.rows() + a.cols();
  if (r < 0) {
    d.impossible = true;
    return d;
  }
  if (static_cast<std::size_t>(r) >= std::min(a.rows(), a.cols())) return d;
  d.conditions = rank_at_most_conditions(mulmuley_rank_poly(a), static_cast<std::size_t>(r));
  return d;
}

DegeneracyData degeneracy_polynomials(const PolyMatrix& a, int m, std::size_t chart) {
  return rank_conditions(a, static_cast<long>(a.cols()) - m - 1, chart);
}

std::vector<Poly> homogenize_conditions(const std::vector<Poly>& conditions, std::size_t chart) {
  std::vector<Poly> out;
  for (const auto& f : conditions) {
    if (f.is_zero()) continue;
    Poly h = f.homogenize(chart, static_cast<unsigned>(f.degree()));
    out.push_back(h.divide_variable(chart, h.valuation(chart)));
  }
  return out;
}

Emptiness locus_emptiness_on_X(const std::vector<Poly>& gens, const DegeneracyData& data,
                               const EmptinessOptions& opts, unsigned* degree_reached) {
  if (degree_reached) *degree_reached = 0;
  if (data.impossible) return Emptiness::Empty;
  std::vector<Poly> all = gens;
  std::size_t nv = 0;
  for (const auto& g : gens) nv = std::max(nv, g.nvars());
  for (auto& h : homogenize_conditions(data.conditions, data.chart)) {
    nv = std::max(nv, h.nvars());
    all.push_back(std::move(h));
  }
  if (nv == 0) throw ValidationError("locus_emptiness_on_X: no variables");
  return chart_emptiness(all, Poly::variable(nv, data.chart), opts, degree_reached);
}

namespace {

PolyMatrix chart_jacobian(const VarietyProfile& p, std::size_t chart) {
  return jacobian_chart_matrix(p.basisF, static_cast<std::size_t>(p.n) + 1, chart);
}

bool vanishes_on_chart(VanishingIdeal& ideal, const Poly& affine, std::size_t chart) {
  if (affine.is_zero()) return true;
  Poly h = affine.homogenize(chart, static_cast<unsigned>(affine.degree()));
  Poly shifted = h.mul_monomial(Monomial::variable(h.nvars(), chart));
  return ideal.slice(static_cast<unsigned>(shifted.degree())).contains(shifted);
}

}  // namespace

SmoothnessReport smoothness_test(VanishingIdeal& ideal, long seed, const EmptinessOptions& opts) {
  SmoothnessReport report;
  report.profile = variety_profile(ideal, seed);
  const VarietyProfile& p = report.profile;
  if (p.m < 0) {
    report.verdict = "empty";
    return report;
  }
  const auto& gens = ideal.variety().generators;
  const std::size_t nv = ideal.variety().nvars();
  for (std::size_t i = 0; i < nv; ++i) {
    PolyMatrix a = chart_jacobian(p, i);
    ChartReport cr;
    cr.chart = i;

    // Every component must have dimension m: the Jacobian has rank <= e on X.
    DegeneracyData upper = rank_conditions(a, p.e, i);
    for (const auto& f : upper.conditions)
      if (!vanishes_on_chart(ideal, f, i)) {
        report.verdict = "rejected-nonequidimensional";
        report.witness_chart = i;
        report.charts.push_back(cr);
        return report;
      }

    DegeneracyData sing = degeneracy_polynomials(a, p.m, i);
    cr.conditions = sing.conditions.size();
    for (const auto& f : sing.conditions) cr.max_degree = std::max(cr.max_degree, f.degree());
    cr.locus = locus_emptiness_on_X(gens, sing, opts, &cr.degree_reached);
    report.charts.push_back(cr);
    if (cr.locus == Emptiness::Unknown)
      throw Inconclusive("singular-locus test in chart " + std::to_string(i) + " reached its degree cap",
                         static_cast<long>(cr.degree_reached));
    if (cr.locus == Emptiness::NonEmpty) {
      report.verdict = "singular";
      report.witness_chart = i;
      return report;
    }
  }
  report.verdict = "smooth";
  return report;
}

}  // namespace derham
