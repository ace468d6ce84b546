#include "derham/forms.hpp"

#include <algorithm>
#include <sstream>

#include "derham/errors.hpp"

namespace derham {

namespace {

// Sign of the shuffle sorting I followed by J, or 0 if they overlap.
int merge_sign(const IndexSet& a, const IndexSet& b, IndexSet& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  int inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      inversions += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    } else {
      return 0;
    }
  }
  return inversions % 2 ? -1 : 1;
}

}  // namespace

Form Form::function(const Poly& f) {
  Form r(f.nvars(), 0);
  r.add({}, f);
  return r;
}

Form Form::differential(std::size_t nvars, int i) {
  Form r(nvars, 1);
  r.add({i}, Poly(nvars, 1));
  return r;
}

Form Form::monomial_form(const Poly& coeff, IndexSet j) {
  Form r(coeff.nvars(), static_cast<int>(j.size()));
  r.add(j, coeff);
  return r;
}

Poly Form::coefficient(const IndexSet& j) const {
  auto it = comps_.find(j);
  return it == comps_.end() ? Poly(nvars_) : it->second;
}

int Form::coefficient_degree() const {
  int d = -1;
  for (const auto& [j, c] : comps_) d = std::max(d, c.degree());
  return d;
}

bool Form::is_homogeneous() const {
  int d = -2;
  for (const auto& [j, c] : comps_) {
    if (!c.is_homogeneous()) return false;
    if (d != -2 && c.degree() != d) return false;
    d = c.degree();
  }
  return true;
}

void Form::add(const IndexSet& j, const Poly& c) {
  if (static_cast<int>(j.size()) != p_) throw InvariantViolation("Form::add: wrong form degree");
  if (c.is_zero()) return;
  auto [it, inserted] = comps_.try_emplace(j, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

Form& Form::operator+=(const Form& o) {
  if (comps_.empty()) {
    nvars_ = o.nvars_;
    p_ = o.p_;
  }
  for (const auto& [j, c] : o.comps_) add(j, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (comps_.empty()) {
    nvars_ = o.nvars_;
    p_ = o.p_;
  }
  for (const auto& [j, c] : o.comps_) add(j, -c);
  return *this;
}

Form& Form::operator*=(const Poly& f) {
  for (auto it = comps_.begin(); it != comps_.end();) {
    it->second *= f;
    it = it->second.is_zero() ? comps_.erase(it) : std::next(it);
  }
  return *this;
}

Form& Form::operator*=(const Rational& c) {
  if (c == 0) comps_.clear();
  for (auto& [j, v] : comps_) v *= c;
  return *this;
}

Form Form::operator-() const {
  Form r(*this);
  for (auto& [j, v] : r.comps_) v = -v;
  return r;
}

bool Form::operator==(const Form& o) const {
  if (comps_.size() != o.comps_.size()) return false;
  auto it = o.comps_.begin();
  for (const auto& [j, c] : comps_) {
    if (j != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

std::string Form::to_string() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, c] : comps_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t k = 0; k < j.size(); ++k) os << (k ? "^" : "*") << "dX" << j[k];
  }
  return os.str();
}

Form wedge(const Form& a, const Form& b) {
  Form r(std::max(a.nvars(), b.nvars()), a.p() + b.p());
  IndexSet merged;
  for (const auto& [i, f] : a.components())
    for (const auto& [j, g] : b.components()) {
      int s = merge_sign(i, j, merged);
      if (s == 0) continue;
      Poly prod = f * g;
      if (s < 0) prod = -prod;
      r.add(merged, prod);
    }
  return r;
}

Form exterior_d(const Form& a) {
  Form r(a.nvars(), a.p() + 1);
  for (const auto& [j, f] : a.components())
    for (std::size_t i = 0; i < a.nvars(); ++i) {
      Poly df = f.derivative(i);
      if (df.is_zero()) continue;
      int before = 0;
      bool clash = false;
      for (int x : j) {
        if (x == static_cast<int>(i)) clash = true;
        if (x < static_cast<int>(i)) ++before;
      }
      if (clash) continue;
      IndexSet k(j);
      k.insert(k.begin() + before, static_cast<int>(i));
      r.add(k, before % 2 ? -df : df);
    }
  return r;
}

Form euler_contract(const Form& a) {
  if (a.p() == 0) return Form(a.nvars(), 0);
  Form r(a.nvars(), a.p() - 1);
  for (const auto& [j, f] : a.components())
    for (std::size_t k = 0; k < j.size(); ++k) {
      IndexSet rest(j);
      rest.erase(rest.begin() + static_cast<long>(k));
      Poly c = f.mul_monomial(Monomial::variable(a.nvars(), static_cast<std::size_t>(j[k])));
      r.add(rest, k % 2 ? -c : c);
    }
  return r;
}

Form dehomogenize_form(const Form& a, std::size_t chart) {
  Form r(a.nvars() - 1, a.p());
  const int c = static_cast<int>(chart);
  for (const auto& [j, f] : a.components()) {
    IndexSet k;
    bool drop = false;
    for (int x : j) {
      if (x == c) drop = true;
      k.push_back(x > c ? x - 1 : x);
    }
    if (!drop) r.add(k, f.dehomogenize(chart));
  }
  return r;
}

Form pullback(const Form& a, const std::vector<Poly>& images) {
  std::size_t nv = images.empty() ? 0 : images.front().nvars();
  std::vector<Form> dphi;
  for (const auto& g : images) dphi.push_back(exterior_d(Form::function(g)));
  Form r(nv, a.p());
  for (const auto& [j, f] : a.components()) {
    Form t = Form::function(f.substitute(images));
    for (int x : j) t = wedge(t, dphi[static_cast<std::size_t>(x)]);
    r += t;
  }
  return r;
}

std::vector<IndexSet> index_subsets(std::size_t n, std::size_t p) {
  std::vector<IndexSet> out;
  if (p > n) return out;
  IndexSet cur(p);
  for (std::size_t i = 0; i < p; ++i) cur[i] = static_cast<int>(i);
  for (;;) {
    out.push_back(cur);
    std::size_t i = p;
    while (i > 0 && cur[i - 1] == static_cast<int>(n - p + i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t k = i; k < p; ++k) cur[k] = cur[k - 1] + 1;
  }
  return out;
}

std::size_t subset_rank(const IndexSet& j, std::size_t n) {
  std::size_t rank = 0;
  const std::size_t p = j.size();
  int prev = -1;
  for (std::size_t i = 0; i < p; ++i) {
    for (int x = prev + 1; x < j[i]; ++x) rank += binomial(n - 1 - static_cast<std::size_t>(x), p - 1 - i);
    prev = j[i];
  }
  return rank;
}

std::size_t form_space_dim(std::size_t nvars, int p, unsigned coeff_degree) {
  return binomial(nvars, static_cast<std::size_t>(p)) * monomial_count(nvars, coeff_degree);
}

SparseVec form_coordinates(const Form& a, unsigned coeff_degree) {
  const std::size_t block = monomial_count(a.nvars(), coeff_degree);
  SparseVec out;
  for (const auto& [j, f] : a.components()) {
    std::size_t base = subset_rank(j, a.nvars()) * block;
    SparseVec part;
    for (const auto& [m, c] : f.terms()) {
      if (m.degree() != coeff_degree) throw ValidationError("form_coordinates: coefficient degree mismatch");
      part.emplace_back(base + homogeneous_rank(m), c);
    }
    std::sort(part.begin(), part.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Form> kernel_delta_basis(std::size_t nvars, int p, int k) {
  std::vector<Form> out;
  if (k < p || p < 0 || p > static_cast<int>(nvars)) return out;
  if (p == 0) {
    for (const auto& m : monomial_basis(nvars, static_cast<unsigned>(k)))
      out.push_back(Form::function(Poly::term(m)));
    return out;
  }
  if (k < p + 1) return out;
  const unsigned a_deg = static_cast<unsigned>(k - p - 1);
  for (const auto& cj : index_subsets(nvars, static_cast<std::size_t>(p) + 1)) {
    const int c = cj.front();
    Form gen(nvars, p + 1);
    gen.add(cj, Poly(nvars, 1));
    Form base = euler_contract(gen);
    // Monomials supported on variables c..nvars-1.
    for (const auto& m : monomial_basis(nvars - static_cast<std::size_t>(c), a_deg)) {
      std::vector<Exponent> e(nvars, 0);
      for (std::size_t i = 0; i < m.nvars(); ++i) e[static_cast<std::size_t>(c) + i] = m[i];
      out.push_back(base * Poly::term(Monomial(std::move(e))));
    }
  }
  return out;
}

std::vector<Form> kernel_delta_basis_by_elimination(std::size_t nvars, int p, int k) {
  std::vector<Form> out;
  if (k < p || p < 0 || p > static_cast<int>(nvars)) return out;
  const unsigned cd = static_cast<unsigned>(k - p);
  std::vector<Form> domain;
  for (const auto& j : index_subsets(nvars, static_cast<std::size_t>(p)))
    for (const auto& m : monomial_basis(nvars, cd)) domain.push_back(Form::monomial_form(Poly::term(m), j));
  if (p == 0) return domain;
  SparseMatrix delta{form_space_dim(nvars, p - 1, cd + 1), domain.size(), {}};
  for (const auto& f : domain) delta.columns.push_back(form_coordinates(euler_contract(f), cd + 1));
  for (const auto& v : kernel_basis(delta)) {
    Form f(nvars, p);
    for (const auto& [i, c] : v) f += domain[i] * c;
    out.push_back(std::move(f));
  }
  return out;
}

OmegaBasis omega_basis(std::size_t nvars, int p, int t, int q) {
  OmegaBasis b;
  b.p = p;
  b.t = t;
  b.q = q;
  b.degree = t * (q + 1);
  b.forms = kernel_delta_basis(nvars, p, b.degree);
  return b;
}

}  // namespace derham
