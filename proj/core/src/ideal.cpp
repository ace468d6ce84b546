#include "derham/ideal.hpp"

#include <algorithm>

#include "derham/errors.hpp"

namespace derham {

unsigned Variety::max_degree() const {
  int d = 0;
  for (const auto& g : generators) d = std::max(d, g.degree());
  return static_cast<unsigned>(d);
}

void validate(const Variety& v) {
  if (v.n < 0) throw ValidationError("ambient dimension must be non-negative");
  for (const auto& g : v.generators) {
    if (g.nvars() != v.nvars())
      throw ValidationError("generator " + g.to_string() + " has the wrong number of variables");
    if (!g.is_homogeneous()) throw ValidationError("generator " + g.to_string() + " is not homogeneous");
  }
}

SparseVec poly_coordinates(const Poly& f, unsigned degree) {
  SparseVec out;
  out.reserve(f.size());
  // Terms are stored in descending grlex, which is increasing rank.
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != degree) throw ValidationError("poly_coordinates: polynomial is not homogeneous of the slice degree");
    out.emplace_back(homogeneous_rank(m), c);
  }
  return out;
}

Poly poly_from_coordinates(const SparseVec& v, std::size_t nvars, unsigned degree) {
  Poly f(nvars);
  if (v.empty()) return f;
  auto basis = monomial_basis(nvars, degree);
  for (const auto& [i, c] : v) f.add_term(basis[i], c);
  return f;
}

IdealSlice::IdealSlice(std::size_t nvars, unsigned degree)
    : nvars_(nvars), degree_(degree), ech_(monomial_count(nvars, degree)) {}

IdealSlice IdealSlice::generated(const std::vector<Poly>& gens, std::size_t nvars, unsigned degree) {
  IdealSlice s(nvars, degree);
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > static_cast<int>(degree)) continue;
    for (const auto& m : monomial_basis(nvars, degree - static_cast<unsigned>(g.degree()))) {
      s.insert(g.mul_monomial(m));
      if (s.is_full()) return s;
    }
  }
  return s;
}

bool IdealSlice::insert(const Poly& f) { return ech_.insert(poly_coordinates(f, degree_)).has_value(); }

bool IdealSlice::contains(const Poly& f) const { return ech_.contains(poly_coordinates(f, degree_)); }

Poly IdealSlice::normal_form(const Poly& f) const {
  return poly_from_coordinates(ech_.reduce(poly_coordinates(f, degree_)), nvars_, degree_);
}

std::vector<Poly> IdealSlice::basis() const {
  std::vector<Poly> out;
  auto mons = monomial_basis(nvars_, degree_);
  for (std::size_t r = 0; r < ech_.rank(); ++r) {
    Poly f(nvars_);
    for (const auto& [i, c] : ech_.row(r)) f.add_term(mons[i], c);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Monomial> IdealSlice::standard_monomials() const {
  std::vector<Monomial> out;
  auto mons = monomial_basis(nvars_, degree_);
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (!ech_.is_pivot(i)) out.push_back(mons[i]);
  return out;
}

TruncatedIdeal generated_truncation(const std::vector<Poly>& gens, std::size_t nvars, unsigned k) {
  TruncatedIdeal t;
  t.k = k;
  for (unsigned j = 0; j <= k; ++j) t.slices.push_back(IdealSlice::generated(gens, nvars, j));
  return t;
}

namespace {

IdealSlice saturate_by(const std::vector<Poly>& gens, std::size_t nvars, unsigned k, unsigned n_power,
                      const std::vector<std::size_t>& vars) {
  IdealSlice base = IdealSlice::generated(gens, nvars, k);
  if (n_power == 0 || base.is_full()) return base;
  IdealSlice big = IdealSlice::generated(gens, nvars, k + n_power);
  auto std_mons = base.standard_monomials();
  const std::size_t block = big.ambient_dim();
  Echelon ech(block * vars.size());
  std::vector<Poly> found;
  for (std::size_t s = 0; s < std_mons.size(); ++s) {
    SparseVec image;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      Poly shifted = Poly::term(std_mons[s] * Monomial::variable(nvars, vars[v], n_power));
      for (auto& [j, c] : big.echelon().reduce(poly_coordinates(shifted, k + n_power)))
        image.emplace_back(v * block + j, std::move(c));
    }
    SparseVec dep;
    if (!ech.insert(image, SparseVec{{s, Rational(1)}}, &dep)) {
      Poly f(nvars);
      for (const auto& [t, c] : dep) f.add_term(std_mons[t], c);
      found.push_back(std::move(f));
    }
  }
  for (const auto& f : found) base.insert(f);
  return base;
}

}  // namespace

IdealSlice saturate_slice(const std::vector<Poly>& gens, std::size_t nvars, unsigned k, unsigned n_power) {
  std::vector<std::size_t> vars(nvars);
  for (std::size_t i = 0; i < nvars; ++i) vars[i] = i;
  return saturate_by(gens, nvars, k, n_power, vars);
}

IdealSlice saturate_slice_by(const std::vector<Poly>& gens, std::size_t nvars, unsigned k, std::size_t i,
                             unsigned n_power) {
  if (i >= nvars) throw ValidationError("saturate_slice_by: variable index out of range");
  return saturate_by(gens, nvars, k, n_power, {i});
}

namespace {

// Parametrization of the common zero set of independent linear forms.
struct LinearSection {
  std::size_t nvars = 0;     // dimension of the linear subspace
  std::vector<Poly> images;  // X_i as linear forms in the subspace coordinates
};

LinearSection linear_section(const std::vector<Poly>& linear, std::size_t nvars) {
  QMatrix a(linear.size(), nvars);
  for (std::size_t r = 0; r < linear.size(); ++r)
    for (const auto& [m, c] : linear[r].terms())
      for (std::size_t i = 0; i < nvars; ++i)
        if (m[i] == 1) a(r, i) = c;
  auto pivots = rref(a);
  std::vector<char> is_pivot(nvars, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t i = 0; i < nvars; ++i)
    if (!is_pivot[i]) free_cols.push_back(i);
  LinearSection s;
  s.nvars = free_cols.size();
  s.images.assign(nvars, Poly(s.nvars));
  for (std::size_t k = 0; k < free_cols.size(); ++k) s.images[free_cols[k]] = Poly::variable(s.nvars, k);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Poly img(s.nvars);
    for (std::size_t k = 0; k < free_cols.size(); ++k)
      if (sgn(a(r, free_cols[k])) != 0) img.add_term(Monomial::variable(s.nvars, k), -a(r, free_cols[k]));
    s.images[pivots[r]] = img;
  }
  return s;
}

// Eliminates the linear generators. Returns false if a nonzero constant shows
// up (so the zero set is empty).
bool reduce_linear(const std::vector<Poly>& gens, std::size_t nvars, std::vector<Poly>& out,
                   std::size_t& out_nvars, std::vector<Poly>* extra = nullptr) {
  std::vector<Poly> linear, rest;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.degree() == 0) return false;
    (g.degree() == 1 ? linear : rest).push_back(g);
  }
  out.clear();
  if (linear.empty()) {
    out = std::move(rest);
    out_nvars = nvars;
    return true;
  }
  LinearSection s = linear_section(linear, nvars);
  out_nvars = s.nvars;
  for (const auto& g : rest) {
    if (s.nvars == 0) break;
    Poly h = g.substitute(s.images);
    if (!h.is_zero()) out.push_back(std::move(h));
  }
  if (extra)
    for (auto& e : *extra) e = s.nvars == 0 ? Poly(0) : e.substitute(s.images);
  return true;
}

void check_size(std::size_t nvars, unsigned deg, const EmptinessOptions& opts) {
  if (monomial_count(nvars, deg) > opts.max_columns)
    throw Inconclusive("emptiness test needs degree " + std::to_string(deg) + " in " +
                           std::to_string(nvars) + " variables, beyond the size cap",
                       static_cast<long>(deg));
}

}  // namespace

bool projective_emptiness(const std::vector<Poly>& gens, std::size_t nvars, const EmptinessOptions& opts) {
  std::vector<Poly> g;
  std::size_t nv = 0;
  if (!reduce_linear(gens, nvars, g, nv)) return true;
  if (nv == 0) return true;
  if (g.size() < nv) return false;
  int dmin = g.front().degree(), dmax = dmin;
  for (const auto& h : g) {
    dmin = std::min(dmin, h.degree());
    dmax = std::max(dmax, h.degree());
  }
  const unsigned bound = static_cast<unsigned>(nv * (static_cast<std::size_t>(dmax) - 1) + 1);
  for (unsigned k = static_cast<unsigned>(dmin); k <= bound; ++k) {
    if (opts.degree_cap && k > opts.degree_cap)
      throw Inconclusive("projective emptiness stopped at degree cap", static_cast<long>(k - 1));
    check_size(nv, k, opts);
    if (IdealSlice::generated(g, nv, k).is_full()) return true;
  }
  return false;
}

Emptiness chart_emptiness(const std::vector<Poly>& gens, const Poly& chart_form, const EmptinessOptions& opts,
                          unsigned* degree_reached) {
  if (chart_form.degree() != 1 || !chart_form.is_homogeneous())
    throw ValidationError("chart_emptiness: chart form must be linear");
  std::vector<Poly> g;
  std::vector<Poly> extra{chart_form};
  std::size_t nv = 0;
  if (degree_reached) *degree_reached = 0;
  if (!reduce_linear(gens, chart_form.nvars(), g, nv, &extra)) return Emptiness::Empty;
  const Poly& l = extra.front();
  if (nv == 0 || l.is_zero()) return Emptiness::Empty;
  if (g.empty()) return Emptiness::NonEmpty;
  unsigned dmin = ~0u, dmax = 0;
  for (const auto& h : g) {
    dmin = std::min(dmin, static_cast<unsigned>(h.degree()));
    dmax = std::max(dmax, static_cast<unsigned>(h.degree()));
  }
  // d^n' suffices for at most n' polynomials; with more, use 2 d^n' - 1.
  unsigned bound = 1;
  for (std::size_t i = 0; i + 1 < nv; ++i) bound *= dmax;
  if (g.size() > nv - 1) bound = 2 * bound - 1;
  bound = std::max(bound, dmax);
  bool capped = opts.degree_cap && opts.degree_cap < bound;
  unsigned last = capped ? opts.degree_cap : bound;

  std::vector<unsigned> schedule;
  for (unsigned k = dmin; k <= std::min(last, dmin + 3); ++k) schedule.push_back(k);
  if (schedule.empty() || schedule.back() != last) schedule.push_back(last);
  for (unsigned k : schedule) {
    check_size(nv, k, opts);
    IdealSlice j = IdealSlice::generated(g, nv, k);
    if (degree_reached) *degree_reached = k;
    if (j.is_full() || j.contains(l.pow(k))) return Emptiness::Empty;
  }
  return capped ? Emptiness::Unknown : Emptiness::NonEmpty;
}

VanishingIdeal::VanishingIdeal(Variety v) : v_(std::move(v)) { validate(v_); }

const IdealSlice& VanishingIdeal::slice(unsigned k) {
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  const unsigned step = std::max(1u, v_.max_degree());
  const unsigned cap = static_cast<unsigned>(v_.nvars()) * step;
  IdealSlice prev = saturate_slice(v_.generators, v_.nvars(), k, 0);
  for (unsigned n = step;; n += step) {
    if (n > cap)
      throw Inconclusive("saturation did not stabilize in degree " + std::to_string(k), static_cast<long>(cap));
    IdealSlice cur = saturate_slice(v_.generators, v_.nvars(), k, n);
    if (cur.dim() == prev.dim()) break;
    prev = std::move(cur);
  }
  return cache_.emplace(k, std::move(prev)).first->second;
}

TruncatedIdeal VanishingIdeal::truncation(unsigned k) {
  TruncatedIdeal t;
  t.k = k;
  for (unsigned j = 0; j <= k; ++j) t.slices.push_back(slice(j));
  return t;
}

std::size_t VanishingIdeal::hilbert_function(unsigned k) {
  return monomial_count(v_.nvars(), k) - slice(k).dim();
}

Poly moment_form(std::size_t nvars, long b) {
  Poly l(nvars);
  mpz_class pw = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    l.add_term(Monomial::variable(nvars, i), Rational(pw));
    pw *= b;
  }
  return l;
}

std::optional<int> dimension(const Variety& v, long seed) {
  validate(v);
  const std::size_t nv = v.nvars();
  if (projective_emptiness(v.generators, nv)) return std::nullopt;
  constexpr int attempts = 3;
  for (int c = 1; c <= v.n; ++c) {
    for (int a = 0; a < attempts; ++a) {
      std::vector<Poly> gens = v.generators;
      for (int j = 0; j < c; ++j) gens.push_back(moment_form(nv, seed + a * static_cast<long>(nv) + j));
      if (projective_emptiness(gens, nv)) return c - 1;
    }
  }
  return v.n;
}

unsigned degree(VanishingIdeal& ideal, int m) {
  const Variety& v = ideal.variety();
  unsigned k0 = std::max(1u, static_cast<unsigned>(v.n) * v.max_degree());
  for (int tries = 0; tries < 8; ++tries, k0 += std::max(1u, v.max_degree())) {
    std::vector<mpz_class> h;
    for (int i = 0; i <= m + 1; ++i) h.emplace_back(static_cast<unsigned long>(ideal.hilbert_function(k0 + static_cast<unsigned>(i))));
    // Finite differences: the m-th is the degree, the (m+1)-th must vanish.
    for (int level = 0; level < m; ++level)
      for (std::size_t i = 0; i + 1 < h.size() - static_cast<std::size_t>(level); ++i) h[i] = h[i + 1] - h[i];
    mpz_class d0 = h[0];
    mpz_class d1 = h[1];
    if (d0 == d1 && d0 > 0) return static_cast<unsigned>(d0.get_ui());
  }
  throw Inconclusive("Hilbert function did not become polynomial", static_cast<long>(k0));
}

VarietyProfile variety_profile(VanishingIdeal& ideal, long seed) {
  const Variety& v = ideal.variety();
  VarietyProfile p;
  p.n = v.n;
  p.d = v.max_degree();
  auto m = dimension(v, seed);
  if (!m) return p;
  p.m = *m;
  p.e = p.n - p.m;
  p.D = degree(ideal, p.m);
  p.basisF = ideal.slice(p.D).basis();
  return p;
}

}  // namespace derham
