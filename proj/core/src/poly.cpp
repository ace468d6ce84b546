#include "derham/poly.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "derham/errors.hpp"

namespace derham {

Monomial::Monomial(std::vector<Exponent> e) : e_(std::move(e)) {
  deg_ = std::accumulate(e_.begin(), e_.end(), 0u);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, unsigned power) {
  Monomial m(nvars);
  m.e_[i] = static_cast<Exponent>(power);
  m.deg_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<Exponent>(r.e_[i] + o.e_[i]);
  r.deg_ += o.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<Exponent>(r.e_[i] - o.e_[i]);
  r.deg_ -= o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& x = a.exponents();
  const auto& y = b.exponents();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return x[i] > y[i];
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) h = (h ^ e) * 1099511628211ull;
  return h;
}

Poly::Poly(std::size_t nvars, const Rational& c) : nvars_(nvars) {
  if (c != 0) terms_.emplace(Monomial(nvars), c);
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  return term(Monomial::variable(nvars, i), 1);
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p(m.nvars());
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

int Poly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

bool Poly::is_constant() const { return degree() <= 0; }

const Monomial& Poly::leading_monomial() const { return terms_.begin()->first; }
const Rational& Poly::leading_coefficient() const { return terms_.begin()->second; }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::component(unsigned deg) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == deg) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [m, c] : terms_) {
    if (m != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

Poly Poly::mul_monomial(const Monomial& m) const {
  Poly r(nvars_);
  for (const auto& [t, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), t * m, c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(nvars_, 1);
  Poly base(*this);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::derivative(std::size_t i) const {
  if (i >= nvars_) throw ValidationError("derivative: variable index out of range");
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    std::vector<Exponent> e = m.exponents();
    --e[i];
    r.add_term(Monomial(std::move(e)), c * m[i]);
  }
  return r;
}

Poly Poly::dehomogenize(std::size_t i) const {
  if (i >= nvars_) throw ValidationError("dehomogenize: variable index out of range");
  if (!is_homogeneous()) throw ValidationError("dehomogenize: polynomial is not homogeneous");
  std::vector<int> map;
  for (std::size_t j = 0; j < nvars_; ++j)
    if (j != i) map.push_back(static_cast<int>(j));
  return remap(nvars_ - 1, map);
}

Poly Poly::homogenize(std::size_t i, unsigned deg) const {
  Poly r(nvars_ + 1);
  for (const auto& [m, c] : terms_) {
    std::vector<Exponent> e;
    e.reserve(nvars_ + 1);
    for (std::size_t j = 0; j <= nvars_; ++j) {
      if (j == i)
        e.push_back(static_cast<Exponent>(deg - m.degree()));
      else
        e.push_back(m[j < i ? j : j - 1]);
    }
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

unsigned Poly::valuation(std::size_t i) const {
  unsigned v = ~0u;
  for (const auto& [m, c] : terms_) v = std::min<unsigned>(v, m[i]);
  return terms_.empty() ? 0 : v;
}

Poly Poly::divide_variable(std::size_t i, unsigned k) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    std::vector<Exponent> e = m.exponents();
    e[i] = static_cast<Exponent>(e[i] - k);
    r.terms_.emplace_hint(r.terms_.end(), Monomial(std::move(e)), c);
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  std::size_t target = images.empty() ? 0 : images.front().nvars();
  Poly r(target);
  std::vector<std::vector<Poly>> powers(nvars_);
  for (const auto& [m, c] : terms_) {
    Poly t(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly(target, 1));
      while (pw.size() <= m[i]) pw.push_back(pw.back() * images[i]);
      t *= pw[m[i]];
    }
    r += t;
  }
  return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

Poly Poly::remap(std::size_t new_nvars, const std::vector<int>& old_of_new) const {
  Poly r(new_nvars);
  for (const auto& [m, c] : terms_) {
    std::vector<Exponent> e(new_nvars, 0);
    for (std::size_t j = 0; j < new_nvars; ++j)
      if (old_of_new[j] >= 0) e[j] = m[static_cast<std::size_t>(old_of_new[j])];
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

std::string rational_to_string(const Rational& c) { return c.get_str(); }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (a != 1 || m.degree() == 0) {
      os << a.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << "X" << i;
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t monomial_count(std::size_t nvars, unsigned k) {
  if (nvars == 0) return k == 0 ? 1 : 0;
  return binomial(k + nvars - 1, nvars - 1);
}

std::size_t affine_monomial_count(std::size_t nvars, unsigned k) { return binomial(k + nvars, nvars); }

namespace {

void fill_basis(std::vector<Exponent>& e, std::size_t pos, unsigned remaining,
                std::vector<Monomial>& out) {
  if (pos + 1 == e.size()) {
    e[pos] = static_cast<Exponent>(remaining);
    out.emplace_back(e);
    return;
  }
  for (int a = static_cast<int>(remaining); a >= 0; --a) {
    e[pos] = static_cast<Exponent>(a);
    fill_basis(e, pos + 1, remaining - static_cast<unsigned>(a), out);
  }
  e[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t nvars, unsigned k) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (k == 0) out.emplace_back(std::size_t{0});
    return out;
  }
  out.reserve(monomial_count(nvars, k));
  std::vector<Exponent> e(nvars, 0);
  fill_basis(e, 0, k, out);
  return out;
}

std::vector<Monomial> affine_monomial_basis(std::size_t nvars, unsigned k) {
  std::vector<Monomial> out;
  out.reserve(affine_monomial_count(nvars, k));
  for (int d = static_cast<int>(k); d >= 0; --d) {
    auto part = monomial_basis(nvars, static_cast<unsigned>(d));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::size_t homogeneous_rank(const Monomial& m) {
  std::size_t n = m.nvars();
  std::size_t rank = 0;
  unsigned remaining = m.degree();
  for (std::size_t v = 0; v + 1 < n; ++v) {
    unsigned e = m[v];
    if (remaining > e) rank += affine_monomial_count(n - v - 1, remaining - e - 1);
    remaining -= e;
  }
  return rank;
}

std::size_t affine_rank(const Monomial& m, unsigned k) {
  std::size_t offset = 0;
  for (unsigned d = m.degree() + 1; d <= k; ++d) offset += monomial_count(m.nvars(), d);
  return offset + homogeneous_rank(m);
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, std::size_t nvars) : s_(s), nvars_(nvars) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly expr() {
    Poly result(nvars_);
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Poly t = term();
    result += negate ? -t : t;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly u = term();
      if (c == '+')
        result += u;
      else
        result -= u;
    }
    return result;
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'X' || c == 'x' || c == '(';
  }

  Poly term() {
    Poly result = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        result *= factor();
      } else if (starts_factor(c)) {
        result *= factor();
      } else if (c == '/') {
        ++pos_;
        skip();
        mpz_class den(read_digits());
        if (den == 0) fail("division by zero");
        result *= Rational(1, den);
      } else {
        break;
      }
    }
    return result;
  }

  Poly factor() {
    Poly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::string digits = read_digits();
      if (digits.size() > 4) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'X' || c == 'x') {
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '_') ++pos_;
      std::string digits = read_digits();
      if (digits.size() > 6) fail("variable index too large");
      std::size_t idx = std::stoul(digits);
      if (idx >= nvars_) fail("variable X" + digits + " out of range");
      return Poly::variable(nvars_, idx);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(nvars_, Rational(mpz_class(read_digits())));
    fail("expected a number, variable or '('");
  }

  std::string_view s_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::size_t nvars) { return Parser(text, nvars).parse(); }

}  // namespace derham
