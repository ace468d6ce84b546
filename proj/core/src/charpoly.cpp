#include "derham/charpoly.hpp"

#include <map>

#include "derham/errors.hpp"

namespace derham {

namespace {

// Toeplitz-product recursion on the trailing principal submatrix starting at k.
// Returns c with det(Z I - A_k) = sum_i c[i] Z^{m-i}, m = S - k.
std::vector<Poly> berkowitz_vector(const PolyMatrix& a, std::size_t k) {
  const std::size_t n = a.rows();
  const std::size_t nv = a.nvars();
  const std::size_t m = n - k;
  if (m == 0) return {Poly(nv, 1)};
  if (m == 1) return {Poly(nv, 1), -a(k, k)};

  // diags[0] = 1, diags[1] = -a_kk, diags[2 + i] = -R A^i C
  std::vector<Poly> diags{Poly(nv, 1), -a(k, k)};
  std::vector<Poly> vec(m - 1);
  for (std::size_t i = 0; i < m - 1; ++i) vec[i] = a(k + 1 + i, k);
  for (std::size_t step = 0; step + 1 < m; ++step) {
    Poly dot(nv);
    for (std::size_t i = 0; i < m - 1; ++i)
      if (!vec[i].is_zero() && !a(k, k + 1 + i).is_zero()) dot += a(k, k + 1 + i) * vec[i];
    diags.push_back(-dot);
    if (step + 2 < m) {
      std::vector<Poly> next(m - 1, Poly(nv));
      for (std::size_t i = 0; i < m - 1; ++i)
        for (std::size_t j = 0; j < m - 1; ++j)
          if (!vec[j].is_zero() && !a(k + 1 + i, k + 1 + j).is_zero())
            next[i] += a(k + 1 + i, k + 1 + j) * vec[j];
      vec = std::move(next);
    }
  }

  std::vector<Poly> sub = berkowitz_vector(a, k + 1);
  std::vector<Poly> out(m + 1, Poly(nv));
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 0; j < sub.size() && j <= i; ++j)
      if (!diags[i - j].is_zero() && !sub[j].is_zero()) out[i] += diags[i - j] * sub[j];
  return out;
}

}  // namespace

std::vector<Poly> berkowitz_charpoly(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("berkowitz_charpoly: matrix is not square");
  const std::size_t s = a.rows();
  std::vector<Poly> c = berkowitz_vector(a, 0);
  // det(A - Z I) = (-1)^S det(Z I - A); c[i] multiplies Z^{S-i}.
  std::vector<Poly> out(s + 1);
  for (std::size_t j = 0; j <= s; ++j) out[j] = (s % 2 == 0) ? c[s - j] : -c[s - j];
  return out;
}

MulmuleyPoly mulmuley_rank_poly(const PolyMatrix& a) {
  bool symmetric = a.rows() == a.cols();
  for (std::size_t i = 0; symmetric && i < a.rows(); ++i)
    for (std::size_t j = i + 1; symmetric && j < a.cols(); ++j) symmetric = a(i, j) == a(j, i);
  const std::size_t r = a.rows(), c = a.cols();
  const std::size_t s = symmetric ? r : r + c;
  const std::size_t nv = a.nvars() + 1;
  const std::size_t t = a.nvars();
  std::vector<int> map(nv);
  for (std::size_t i = 0; i < a.nvars(); ++i) map[i] = static_cast<int>(i);
  map[t] = -1;
  auto scaled = [&](const Poly& e, std::size_t row) {
    return e.remap(nv, map).mul_monomial(Monomial::variable(nv, t, static_cast<unsigned>(row)));
  };

  PolyMatrix xb(s, s, nv);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (a(i, j).is_zero()) continue;
      if (symmetric) {
        xb(i, j) = scaled(a(i, j), i);
      } else {
        xb(i, r + j) = scaled(a(i, j), i);
        xb(r + j, i) = scaled(a(i, j), r + j);
      }
    }
  return MulmuleyPoly{berkowitz_charpoly(xb), s, t, !symmetric};
}

std::size_t rank_from_mulmuley(const MulmuleyPoly& p) {
  for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
    for (const auto& [m, c] : p.coeffs[j].terms())
      for (std::size_t v = 0; v < m.nvars(); ++v)
        if (v != p.t_var && m[v] != 0)
          throw ValidationError("rank_from_mulmuley: entries are not constant");
    if (!p.coeffs[j].is_zero()) return p.symmetrized ? (p.size - j) / 2 : p.size - j;
  }
  return 0;
}

std::vector<Poly> rank_at_most_conditions(const MulmuleyPoly& p, std::size_t r) {
  std::vector<Poly> out;
  const std::size_t rb = p.symmetrized ? 2 * r : r;
  if (rb >= p.size) return out;
  const std::size_t upto = p.size - rb;  // exclusive
  const std::size_t nv = p.coeffs.empty() ? 0 : p.coeffs.front().nvars() - 1;
  for (std::size_t j = 0; j < upto && j < p.coeffs.size(); ++j) {
    std::map<unsigned, Poly> by_power;
    for (const auto& [m, c] : p.coeffs[j].terms()) {
      auto it = by_power.try_emplace(m[p.t_var], Poly(nv)).first;
      std::vector<Exponent> e;
      for (std::size_t v = 0; v < m.nvars(); ++v)
        if (v != p.t_var) e.push_back(m[v]);
      it->second.add_term(Monomial(std::move(e)), c);
    }
    for (auto& [pw, poly] : by_power)
      if (!poly.is_zero()) out.push_back(std::move(poly));
  }
  return out;
}

}  // namespace derham
