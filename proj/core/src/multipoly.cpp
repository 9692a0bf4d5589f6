#include <bc/multipoly.hpp>

#include <algorithm>
#include <numeric>

namespace bc {

namespace {
unsigned expo(const Monomial& m, std::size_t i) {
  return i < m.size() ? m[i] : 0u;
}
void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}
unsigned mono_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}
}  // namespace

int compare_deglex(const Monomial& a, const Monomial& b) {
  unsigned da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db ? -1 : 1;
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = n; i-- > 0;) {
    unsigned ea = expo(a, i), eb = expo(b, i);
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > expo(b, i)) return false;
  return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()), 0u);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = expo(a, i) + expo(b, i);
  return r;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size(), 0u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    unsigned eb = expo(b, i);
    if (eb > a[i]) throw InvalidInput("monomial division is not exact");
    r[i] = a[i] - eb;
  }
  trim(r);
  return r;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  Monomial r(std::min(a.size(), b.size()), 0u);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a[i], b[i]);
  trim(r);
  return r;
}

Polynomial Polynomial::constant(const Cyclotomic& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(unsigned var) {
  Monomial m(var + 1, 0u);
  m[var] = 1;
  return term(m, Cyclotomic::one());
}

Polynomial Polynomial::term(const Monomial& m, const Cyclotomic& c) {
  Polynomial p;
  if (!c.is_zero()) {
    Monomial mm = m;
    trim(mm);
    p.terms_.emplace(std::move(mm), c);
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second.is_one();
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw InvalidInput("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Cyclotomic& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw InvalidInput("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

Cyclotomic Polynomial::constant_value() const {
  if (terms_.empty()) return Cyclotomic::zero();
  if (!is_constant()) throw InvalidInput("polynomial is not constant");
  return terms_.begin()->second;
}

unsigned Polynomial::total_degree() const {
  if (terms_.empty()) return 0;
  return mono_degree(leading_monomial());
}

int Polynomial::max_variable() const {
  int mv = -1;
  for (const auto& [m, c] : terms_)
    mv = std::max(mv, static_cast<int>(m.size()) - 1);
  return mv;
}

void Polynomial::insert_term(const Monomial& m, const Cyclotomic& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.insert_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.insert_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      r.insert_term(monomial_mul(ma, mb), ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Cyclotomic& c) const {
  if (c.is_zero()) return Polynomial();
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::scaled_exact_div(const Cyclotomic& c) const {
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v = v / c;
  return r;
}

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  Polynomial rem = *this;
  Polynomial quot;
  while (!rem.is_zero()) {
    const Monomial& lm = rem.leading_monomial();
    const Monomial& dm = divisor.leading_monomial();
    if (!monomial_divides(dm, lm))
      throw InvalidInput("polynomial division is not exact");
    Monomial qm = monomial_div(lm, dm);
    Cyclotomic qc = rem.leading_coefficient() / divisor.leading_coefficient();
    Polynomial t = term(qm, qc);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled_exact_div(leading_coefficient());
}

Polynomial Polynomial::substituted(
    const std::map<unsigned, Cyclotomic>& values) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Cyclotomic coeff = c;
    Monomial rest;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto it = values.find(static_cast<unsigned>(i));
      if (it == values.end()) {
        if (rest.size() <= i) rest.resize(i + 1, 0u);
        rest[i] = m[i];
      } else {
        coeff *= it->second.pow(m[i]);
      }
    }
    trim(rest);
    r.insert_term(rest, coeff);
  }
  return r;
}

namespace {

// Univariate view in the main variable: coefficients are polynomials in the
// lower variables.
using UniPoly = std::vector<Polynomial>;

UniPoly to_univariate(const Polynomial& p, unsigned v) {
  UniPoly u;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = v < m.size() ? m[v] : 0u;
    Monomial rest = m;
    if (v < rest.size()) rest[v] = 0;
    while (!rest.empty() && rest.back() == 0) rest.pop_back();
    if (u.size() <= e) u.resize(e + 1);
    u[e] += Polynomial::term(rest, c);
  }
  while (!u.empty() && u.back().is_zero()) u.pop_back();
  return u;
}

Polynomial from_univariate(const UniPoly& u, unsigned v) {
  Polynomial p;
  for (std::size_t e = 0; e < u.size(); ++e) {
    Monomial xe(v + 1, 0u);
    xe[v] = static_cast<unsigned>(e);
    p += u[e] * Polynomial::term(xe, Cyclotomic::one());
  }
  return p;
}

void uni_trim(UniPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Polynomial uni_content(const UniPoly& u) {
  Polynomial g;
  for (const auto& c : u) g = Polynomial::gcd(g, c);
  return g;
}

UniPoly uni_divide_content(const UniPoly& u, const Polynomial& content) {
  UniPoly r = u;
  for (auto& c : r)
    if (!c.is_zero()) c = c.exact_divide(content);
  return r;
}

// Pseudo-remainder of a by b in the main variable.
UniPoly uni_prem(UniPoly a, const UniPoly& b) {
  while (!a.empty() && a.size() >= b.size()) {
    const Polynomial& lb = b.back();
    const Polynomial la = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i + 1 < a.size(); ++i) a[i] = a[i] * lb;
    a.back() = Polynomial();
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
      a[shift + i] -= la * b[i];
    uni_trim(a);
  }
  return a;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant())
    return constant(Cyclotomic::one());
  if (a.is_monomial() || b.is_monomial()) {
    // gcd of a monomial with anything is the common monomial factor.
    Monomial g = monomial_gcd(a.leading_monomial(), b.leading_monomial());
    for (const auto& [m, c] : (a.is_monomial() ? b : a).terms())
      g = monomial_gcd(g, m);
    return term(g, Cyclotomic::one());
  }
  unsigned v = static_cast<unsigned>(std::max(a.max_variable(),
                                              b.max_variable()));
  UniPoly ua = to_univariate(a, v);
  UniPoly ub = to_univariate(b, v);
  Polynomial ca = uni_content(ua), cb = uni_content(ub);
  UniPoly A = uni_divide_content(ua, ca);
  UniPoly B = uni_divide_content(ub, cb);
  Polynomial cont = gcd(ca, cb);
  if (A.size() < B.size()) std::swap(A, B);
  // Primitive PRS.
  while (true) {
    UniPoly R = uni_prem(A, B);
    if (R.empty()) break;
    if (R.size() == 1) {
      // gcd has degree 0 in the main variable.
      return cont.monic();
    }
    A = std::move(B);
    B = uni_divide_content(R, uni_content(R));
  }
  Polynomial pp = from_univariate(uni_divide_content(B, uni_content(B)), v);
  return (cont * pp).monic();
}

std::uint64_t Polynomial::hash() const noexcept {
  std::uint64_t h = 0x51ed270b;
  for (const auto& [m, c] : terms_) {
    std::uint64_t hm = 0;
    for (unsigned e : m) hm = hash_combine(hm, e);
    h = hash_combine(h, hash_combine(hm, c.hash()));
  }
  return h;
}

}  // namespace bc
