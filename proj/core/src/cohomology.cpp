#include "derham/cohomology.hpp"

#include <algorithm>
#include <tuple>

#include "derham/charpoly.hpp"
#include "derham/errors.hpp"

namespace derham {

long regularity_bounds(int p, int m, int e, unsigned D) {
  if (p == 0) return static_cast<long>(e) * (static_cast<long>(D) - 1);
  return static_cast<long>(p) * (static_cast<long>(e) * m + 1) * static_cast<long>(D);
}

long pole_order_bound(int m, int e, unsigned D) {
  if (e == 0) return m + 1;
  return static_cast<long>(m) * (static_cast<long>(e) * m + 1) * static_cast<long>(D);
}

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : index_subsets(n, k)) out.emplace_back(s.begin(), s.end());
  return out;
}

Poly determinant(const PolyMatrix& a) {
  if (a.rows() == 0) return Poly(a.nvars(), 1);
  return berkowitz_charpoly(a)[0];
}

PolyMatrix minor_matrix(const PolyMatrix& a, std::size_t skip_row, std::size_t skip_col) {
  PolyMatrix r(a.rows() - 1, a.cols() - 1, a.nvars());
  for (std::size_t i = 0, ri = 0; i < a.rows(); ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, rj = 0; j < a.cols(); ++j) {
      if (j == skip_col) continue;
      r(ri, rj++) = a(i, j);
    }
    ++ri;
  }
  return r;
}

// X ∩ Z(extra) has dimension below m (or is empty).
bool lower_dimensional(const Variety& v, const Poly& extra, int m, long seed) {
  Variety w{v.n, v.generators};
  w.generators.push_back(extra);
  auto d = dimension(w, seed);
  return !d || *d < m;
}

}  // namespace

ChartFrame select_frame(const Variety& v, const VarietyProfile& profile, long seed) {
  const std::size_t nv = v.nvars();
  const std::size_t n = nv - 1;
  const std::size_t e = static_cast<std::size_t>(profile.e);
  for (std::size_t chart = 0; chart < nv; ++chart) {
    const Poly xc = Poly::variable(nv, chart);
    if (!lower_dimensional(v, xc, profile.m, seed)) continue;

    ChartFrame f;
    f.chart = chart;
    f.nvars = n;
    if (e == 0) {
      for (std::size_t i = 0; i < n; ++i) f.free_vars.push_back(i);
      f.h = Poly(n, 1);
      return f;
    }

    struct Candidate {
      int degree;
      std::size_t terms;
      std::size_t order;
      std::vector<std::size_t> g, y;
      Poly h;
      PolyMatrix jy;
    };
    std::vector<Candidate> cands;
    std::vector<Poly> local;
    for (const auto& b : profile.basisF) local.push_back(b.dehomogenize(chart));
    auto gsets = combinations(local.size(), e);
    auto ysets = combinations(n, e);
    std::size_t order = 0;
    for (const auto& g : gsets)
      for (auto yi = ysets.rbegin(); yi != ysets.rend(); ++yi, ++order) {
        PolyMatrix jy(e, e, n);
        for (std::size_t r = 0; r < e; ++r)
          for (std::size_t c = 0; c < e; ++c) jy(r, c) = local[g[r]].derivative((*yi)[c]);
        Poly h = determinant(jy);
        if (h.is_zero()) continue;
        cands.push_back({h.degree(), h.size(), order, g, *yi, h, jy});
      }
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      return std::tie(a.degree, a.terms, a.order) < std::tie(b.degree, b.terms, b.order);
    });
    for (const auto& c : cands) {
      Poly hh = c.h.homogenize(chart, static_cast<unsigned>(c.h.degree()));
      if (c.h.degree() > 0 && !lower_dimensional(v, hh * xc, profile.m, seed)) continue;
      for (auto gi : c.g) f.generators.push_back(local[gi]);
      f.dependent = c.y;
      for (std::size_t i = 0; i < n; ++i)
        if (std::find(c.y.begin(), c.y.end(), i) == c.y.end()) f.free_vars.push_back(i);
      f.h = c.h;
      // adj(J_Y)_{rc} = (-1)^{r+c} det(minor_{c r})
      PolyMatrix adj(e, e, n);
      for (std::size_t r = 0; r < e; ++r)
        for (std::size_t col = 0; col < e; ++col) {
          Poly mdet = e == 1 ? Poly(n, 1) : determinant(minor_matrix(c.jy, col, r));
          adj(r, col) = (r + col) % 2 ? -mdet : mdet;
        }
      f.dy.assign(e, std::vector<Poly>(f.free_vars.size(), Poly(n)));
      for (std::size_t r = 0; r < e; ++r)
        for (std::size_t k = 0; k < f.free_vars.size(); ++k) {
          Poly acc(n);
          for (std::size_t a = 0; a < e; ++a) acc += adj(r, a) * f.generators[a].derivative(f.free_vars[k]);
          f.dy[r][k] = -acc;
        }
      return f;
    }
  }
  throw InvariantViolation("no admissible chart frame: the generators may not cut out X scheme-theoretically");
}

namespace {

std::vector<Form> frame_differentials(const ChartFrame& f) {
  const std::size_t n = f.nvars;
  std::vector<Form> phi(n, Form(n, 1));
  for (std::size_t c = 0; c < f.free_vars.size(); ++c) {
    Form w(n, 1);
    w.add({static_cast<int>(c)}, f.h);
    phi[f.free_vars[c]] = w;
  }
  for (std::size_t r = 0; r < f.dependent.size(); ++r) {
    Form w(n, 1);
    for (std::size_t c = 0; c < f.free_vars.size(); ++c) w.add({static_cast<int>(c)}, f.dy[r][c]);
    phi[f.dependent[r]] = w;
  }
  return phi;
}

Form wedge_of(const std::vector<Form>& phi, const IndexSet& j, std::size_t n) {
  Form w = Form::function(Poly(n, 1));
  for (int i : j) w = wedge(w, phi[static_cast<std::size_t>(i)]);
  return w;
}

}  // namespace

std::vector<Poly> reduce_form(const Form& alpha, const ChartFrame& frame) {
  const std::size_t n = frame.nvars;
  const int p = alpha.p();
  Form local = dehomogenize_form(alpha, frame.chart);
  auto subsets = index_subsets(frame.free_vars.size(), static_cast<std::size_t>(p));
  std::vector<Poly> out(subsets.size(), Poly(n));
  if (p == 0) {
    out[0] = local.coefficient({});
    return out;
  }
  auto phi = frame_differentials(frame);
  for (const auto& [j, a] : local.components()) {
    Form w = wedge_of(phi, j, n);
    for (const auto& [i, c] : w.components())
      out[subset_rank(i, frame.free_vars.size())] += a * c;
  }
  return out;
}

RestrictionContext::RestrictionContext(VanishingIdeal& ideal, ChartFrame frame)
    : ideal_(ideal), frame_(std::move(frame)) {
  int deg = std::max(0, frame_.h.degree());
  for (const auto& row : frame_.dy)
    for (const auto& e : row) deg = std::max(deg, e.degree());
  frame_degree_ = static_cast<unsigned>(deg);
  phi_ = frame_differentials(frame_);
}

unsigned RestrictionContext::coefficient_bound(int p, int k) const {
  return static_cast<unsigned>(k - p) + static_cast<unsigned>(p) * frame_degree_;
}

std::size_t RestrictionContext::image_columns(int p, int k) const {
  return binomial(frame_.free_vars.size(), static_cast<std::size_t>(p)) *
         affine_monomial_count(frame_.nvars, coefficient_bound(p, k));
}

const Echelon& RestrictionContext::affine_ideal(unsigned k) {
  auto it = affine_ideal_.find(k);
  if (it != affine_ideal_.end()) return it->second;
  Echelon ech(affine_monomial_count(frame_.nvars, k));
  if (!ideal_.variety().generators.empty()) {
    for (const auto& g : ideal_.slice(k).basis()) {
      Poly a = g.dehomogenize(frame_.chart);
      SparseVec v;
      for (const auto& [m, c] : a.terms()) v.emplace_back(affine_rank(m, k), c);
      ech.insert(v);
    }
  }
  return affine_ideal_.emplace(k, std::move(ech)).first->second;
}

const Form& RestrictionContext::frame_wedge(const IndexSet& j) {
  auto it = wedges_.find(j);
  if (it != wedges_.end()) return it->second;
  return wedges_.emplace(j, wedge_of(phi_, j, frame_.nvars)).first->second;
}

SparseVec RestrictionContext::restrict(const Form& alpha, int p, int k) {
  const std::size_t n = frame_.nvars;
  const std::size_t nfree = frame_.free_vars.size();
  const unsigned bound = coefficient_bound(p, k);
  const std::size_t block = affine_monomial_count(n, bound);
  const Echelon& ideal = affine_ideal(bound);

  Form local = dehomogenize_form(alpha, frame_.chart);
  auto subsets = index_subsets(nfree, static_cast<std::size_t>(p));
  std::vector<Poly> coeff(subsets.size(), Poly(n));
  if (p == 0) {
    coeff[0] = local.coefficient({});
  } else {
    for (const auto& [j, a] : local.components()) {
      const Form& w = frame_wedge(j);
      for (const auto& [i, c] : w.components()) coeff[subset_rank(i, nfree)] += a * c;
    }
  }

  SparseVec out;
  for (std::size_t s = 0; s < coeff.size(); ++s) {
    if (coeff[s].is_zero()) continue;
    SparseVec v;
    v.reserve(coeff[s].size());
    for (const auto& [m, c] : coeff[s].terms()) {
      if (m.degree() > bound) throw InvariantViolation("restriction coefficient exceeds its degree bound");
      v.emplace_back(affine_rank(m, bound), c);
    }
    for (auto& [i, c] : ideal.reduce(v)) out.emplace_back(s * block + i, std::move(c));
  }
  return out;
}

std::vector<Form> restriction_kernel(RestrictionContext& ctx, int p, int k) {
  auto basis = kernel_delta_basis(ctx.frame().nvars + 1, p, k);
  Echelon ech(ctx.image_columns(p, k));
  std::vector<Form> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    SparseVec dep;
    if (ech.insert(ctx.restrict(basis[i], p, k), SparseVec{{i, Rational(1)}}, &dep)) continue;
    Form f(basis[i].nvars(), p);
    for (const auto& [j, c] : dep) f += basis[j] * c;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Form> restriction_kernel(RestrictionContext& ctx, const std::vector<int>& tuple, int p, int s) {
  const int q = static_cast<int>(tuple.size()) - 1;
  return restriction_kernel(ctx, p, (s + p) * (q + 1));
}

QuotientSpace::QuotientSpace(RestrictionContext& ctx, int p, int k)
    : ctx_(ctx), p_(p), k_(k), ech_(ctx.image_columns(p, k)) {
  auto forms = kernel_delta_basis(ctx.frame().nvars + 1, p, k);
  ambient_ = forms.size();
  for (auto& f : forms) {
    SparseVec hist{{basis_.size(), Rational(1)}};
    if (ech_.insert(ctx.restrict(f, p, k), hist)) basis_.push_back(std::move(f));
  }
}

SparseVec QuotientSpace::coordinates(const Form& beta) const {
  SparseVec coeffs;
  SparseVec rem = ech_.reduce(ctx_.restrict(beta, p_, k_), &coeffs);
  if (!rem.empty()) throw InvariantViolation("form is not in the numerator space of its slot");
  std::vector<std::pair<Rational, const SparseVec*>> parts;
  for (const auto& [r, c] : coeffs) parts.emplace_back(c, &ech_.history(r));
  return sparse_linear_combination(parts);
}

QuotientSpace& FormSpaces::space(int p, int k) {
  auto key = std::make_pair(p, k);
  auto it = spaces_.find(key);
  if (it != spaces_.end()) return *it->second;
  auto sp = std::make_unique<QuotientSpace>(ctx_, p, k);
  return *spaces_.emplace(key, std::move(sp)).first->second;
}

Form quotient_rule_d(const Form& alpha, const Poly& f, int t) {
  Form da = exterior_d(alpha);
  Form df = exterior_d(Form::function(f));
  return da * f - wedge(df, alpha) * Rational(t);
}

namespace {

Poly product_of(const std::vector<Poly>& family, const std::vector<int>& tuple, std::size_t nv) {
  Poly f(nv, 1);
  for (int j : tuple) f *= family[static_cast<std::size_t>(j)];
  return f;
}

std::vector<std::vector<int>> tuples_of_size(int m, int size) {
  std::vector<std::vector<int>> out;
  for (const auto& s : index_subsets(static_cast<std::size_t>(m) + 1, static_cast<std::size_t>(size)))
    out.push_back(s);
  return out;
}

SparseVec shifted(const SparseVec& v, std::size_t offset, const Rational& sign) {
  SparseVec out;
  out.reserve(v.size());
  for (const auto& [i, c] : v) out.emplace_back(i + offset, sign * c);
  return out;
}

SparseVec merge_sorted(std::vector<std::pair<std::size_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [i, c] : entries) {
    if (!out.empty() && out.back().first == i)
      out.back().second += c;
    else
      out.emplace_back(i, std::move(c));
  }
  std::erase_if(out, [](const auto& e) { return sgn(e.second) == 0; });
  return out;
}

// Representatives of ker(out) modulo im(in), as vectors in the middle space.
std::vector<SparseVec> cohomology_representatives(const SparseMatrix* in, const SparseMatrix& out, std::size_t dim) {
  Echelon ech(dim);
  if (in)
    for (const auto& c : in->columns) ech.insert(c);
  std::vector<SparseVec> reps;
  for (auto& z : kernel_basis(out))
    if (ech.insert(z)) reps.push_back(std::move(z));
  return reps;
}

}  // namespace

ComplementComplex complement_complex(FormSpaces& spaces, const VarietyProfile& profile,
                                     const std::vector<Poly>& family, const std::vector<int>& tuple, int s) {
  ComplementComplex cc;
  cc.tuple = tuple;
  cc.s = s;
  const std::size_t nv = static_cast<std::size_t>(profile.n) + 1;
  const int q = static_cast<int>(tuple.size()) - 1;
  const Poly f = product_of(family, tuple, nv);
  const int m = profile.m;
  for (int p = 0; p <= m; ++p) cc.spaces.push_back(&spaces.space(p, (s + p) * (q + 1)));
  for (int p = 0; p <= m; ++p) {
    SparseMatrix d;
    d.cols = cc.spaces[static_cast<std::size_t>(p)]->dim();
    d.rows = p < m ? cc.spaces[static_cast<std::size_t>(p) + 1]->dim() : 0;
    if (p < m) {
      const int t = s + p;
      for (const auto& a : cc.spaces[static_cast<std::size_t>(p)]->basis())
        d.columns.push_back(cc.spaces[static_cast<std::size_t>(p) + 1]->coordinates(quotient_rule_d(a, f, t)));
    } else {
      d.columns.assign(d.cols, SparseVec{});
    }
    cc.d.push_back(std::move(d));
  }
  for (int p = 0; p <= m; ++p) {
    const SparseMatrix* in = p > 0 ? &cc.d[static_cast<std::size_t>(p) - 1] : nullptr;
    auto reps = cohomology_representatives(in, cc.d[static_cast<std::size_t>(p)],
                                           cc.spaces[static_cast<std::size_t>(p)]->dim());
    cc.cohomology.push_back(reps.size());
    cc.representatives.push_back(std::move(reps));
  }
  return cc;
}

CechComplex cech_complex(FormSpaces& spaces, const VarietyProfile& profile, const std::vector<Poly>& family, int s) {
  CechComplex c;
  c.m = profile.m;
  c.s = s;
  c.family = family;
  const int m = profile.m;
  const std::size_t nv = static_cast<std::size_t>(profile.n) + 1;
  if (static_cast<int>(family.size()) != m + 1) throw ValidationError("cech_complex: family must have m+1 forms");

  std::map<std::tuple<int, int, std::vector<int>>, std::size_t> index;
  c.total_dims.assign(static_cast<std::size_t>(2 * m + 1), 0);
  for (int k = 0; k <= 2 * m; ++k)
    for (int p = std::max(0, k - m); p <= std::min(k, m); ++p) {
      const int q = k - p;
      for (const auto& tuple : tuples_of_size(m, q + 1)) {
        Slot sl;
        sl.p = p;
        sl.q = q;
        sl.tuple = tuple;
        sl.t = s + p;
        sl.space = &spaces.space(p, sl.t * (q + 1));
        sl.offset = c.total_dims[static_cast<std::size_t>(k)];
        c.total_dims[static_cast<std::size_t>(k)] += sl.space->dim();
        index.emplace(std::make_tuple(p, q, tuple), c.slots.size());
        c.slots.push_back(std::move(sl));
      }
    }

  for (int k = 0; k <= 2 * m; ++k) {
    const std::size_t src = c.total_dims[static_cast<std::size_t>(k)];
    const std::size_t dst = k < 2 * m ? c.total_dims[static_cast<std::size_t>(k) + 1] : 0;
    SparseMatrix dm{dst, src, std::vector<SparseVec>(src)};
    SparseMatrix delta{dst, src, std::vector<SparseVec>(src)};
    SparseMatrix total{dst, src, std::vector<SparseVec>(src)};
    for (const auto& sl : c.slots) {
      if (sl.p + sl.q != k) continue;
      const Poly f = product_of(family, sl.tuple, nv);
      const auto& basis = sl.space->basis();
      const Slot* dtarget = nullptr;
      if (sl.p < m) dtarget = &c.slots[index.at(std::make_tuple(sl.p + 1, sl.q, sl.tuple))];
      struct DeltaTarget {
        const Slot* slot;
        Poly factor;
        Rational sign;
      };
      std::vector<DeltaTarget> dtargets;
      if (sl.q < m)
        for (int i = 0; i <= m; ++i) {
          if (std::find(sl.tuple.begin(), sl.tuple.end(), i) != sl.tuple.end()) continue;
          std::vector<int> bigger = sl.tuple;
          bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), i), i);
          const auto nu = std::find(bigger.begin(), bigger.end(), i) - bigger.begin();
          dtargets.push_back({&c.slots[index.at(std::make_tuple(sl.p, sl.q + 1, bigger))],
                              family[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(sl.t)),
                              Rational(nu % 2 ? -1 : 1)});
        }
      const Rational psign(sl.p % 2 ? -1 : 1);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const std::size_t col = sl.offset + b;
        std::vector<std::pair<std::size_t, Rational>> dpart, deltapart;
        if (dtarget) {
          SparseVec v = dtarget->space->coordinates(quotient_rule_d(basis[b], f, sl.t));
          for (auto& e : shifted(v, dtarget->offset, 1)) dpart.push_back(std::move(e));
        }
        for (const auto& dt : dtargets) {
          SparseVec v = dt.slot->space->coordinates(basis[b] * dt.factor);
          for (auto& e : shifted(v, dt.slot->offset, dt.sign)) deltapart.push_back(std::move(e));
        }
        std::vector<std::pair<std::size_t, Rational>> both = dpart;
        for (const auto& [i, a] : deltapart) both.emplace_back(i, psign * a);
        dm.columns[col] = merge_sorted(std::move(dpart));
        delta.columns[col] = merge_sorted(std::move(deltapart));
        total.columns[col] = merge_sorted(std::move(both));
      }
    }
    c.d_part.push_back(std::move(dm));
    c.delta_part.push_back(std::move(delta));
    c.d_total.push_back(std::move(total));
  }
  return c;
}

CohomologyResult total_cohomology(const CechComplex& c, bool with_representatives) {
  CohomologyResult r;
  r.s_used = c.s;
  const int top = 2 * c.m;
  std::vector<std::size_t> ranks;
  for (int k = 0; k <= top; ++k) ranks.push_back(rank(c.d_total[static_cast<std::size_t>(k)]));
  for (int k = 0; k <= top; ++k) {
    const std::size_t in = k > 0 ? ranks[static_cast<std::size_t>(k) - 1] : 0;
    r.betti.push_back(c.total_dims[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k)] - in);
  }
  if (!with_representatives) return r;
  for (int k = 0; k <= top; ++k) {
    const SparseMatrix* in = k > 0 ? &c.d_total[static_cast<std::size_t>(k) - 1] : nullptr;
    auto reps = cohomology_representatives(in, c.d_total[static_cast<std::size_t>(k)],
                                           c.total_dims[static_cast<std::size_t>(k)]);
    if (reps.size() != r.betti[static_cast<std::size_t>(k)])
      throw InvariantViolation("representative count disagrees with the rank computation");
    for (auto& v : reps) {
      Representative rep;
      rep.k = k;
      for (const auto& sl : c.slots) {
        if (sl.p + sl.q != k) continue;
        Form num(c.family.empty() ? 0 : c.family.front().nvars(), sl.p);
        bool any = false;
        for (const auto& [i, a] : v)
          if (i >= sl.offset && i < sl.offset + sl.space->dim()) {
            num += sl.space->basis()[i - sl.offset] * a;
            any = true;
          }
        if (any) rep.components.push_back({sl.tuple, sl.p, sl.t, std::move(num)});
      }
      rep.vector = std::move(v);
      r.representatives.push_back(std::move(rep));
    }
  }
  return r;
}

namespace {

CohomologyResult compute_at(FormSpaces& spaces, const VarietyProfile& profile, const std::vector<Poly>& family, int s,
                            bool reps, std::vector<std::size_t>* dims) {
  CechComplex c = cech_complex(spaces, profile, family, s);
  if (dims) *dims = c.total_dims;
  return total_cohomology(c, reps);
}

}  // namespace

BettiReport betti(const Variety& v, const BettiOptions& opts) {
  validate(v);
  BettiReport report;
  VanishingIdeal ideal(v);
  report.smoothness = smoothness_test(ideal, opts.seed, opts.emptiness);
  const auto& sr = report.smoothness;
  if (sr.verdict == "empty") return report;
  if (sr.verdict != "smooth") {
    std::string where = sr.witness_chart ? " (witness chart " + std::to_string(*sr.witness_chart) + ")" : "";
    throw SingularInput("singular input: smoothness test verdict " + sr.verdict + where, sr.verdict);
  }
  const VarietyProfile& profile = sr.profile;
  SearchOptions so;
  so.seed = opts.seed;
  so.budget = opts.budget;
  so.emptiness = opts.emptiness;
  report.family = find_hyperplanes(v, profile, so, &report.certificate);
  report.frame = select_frame(v, profile, opts.seed);
  FormSpaces spaces(ideal, report.frame);

  if (opts.pole_order) {
    const int s = *opts.pole_order;
    if (s < 1) throw ValidationError("pole order must be positive");
    auto at_s = compute_at(spaces, profile, report.family.forms, s, opts.representatives, &report.total_dims);
    auto at_next = compute_at(spaces, profile, report.family.forms, s + 1, false, nullptr);
    if (at_s.betti != at_next.betti)
      throw Inconclusive("Betti numbers at pole orders " + std::to_string(s) + " and " + std::to_string(s + 1) +
                             " differ; try a larger pole order",
                         s + 1);
    report.result = std::move(at_s);
    report.result.stabilized = true;
    return report;
  }
  long s = profile.m == 0 ? regularity_bounds(0, 0, profile.e, profile.D)
                          : pole_order_bound(profile.m, profile.e, profile.D);
  report.result = compute_at(spaces, profile, report.family.forms, static_cast<int>(s), opts.representatives,
                             &report.total_dims);
  return report;
}

}  // namespace derham
