#include <bc/cyclotomic.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace bc {

std::uint64_t hash_rational(const Rational& q) noexcept {
  // Residues of numerator and denominator modulo a large prime.
  const unsigned long p = 0xfffffffffffffff1UL;  // close to 2^64
  unsigned long hn = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  unsigned long hd = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  return hash_combine(hn, hd);
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InvalidInput("empty rational literal");
  try {
    Rational q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InvalidInput("malformed rational literal: " + text);
  }
}

std::string render_rational(const Rational& q) { return q.get_str(); }

long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using DensePoly = std::vector<Rational>;  // low degree first

void trim(DensePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of polynomials over Q; remainder must be zero.
DensePoly poly_div_exact(const DensePoly& num, const DensePoly& den) {
  DensePoly rem = num;
  DensePoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0,
                 Rational(0));
  while (rem.size() >= den.size()) {
    Rational c = rem.back() / den.back();
    std::size_t shift = rem.size() - den.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
    trim(rem);
    if (rem.empty()) break;
  }
  return quot;
}

std::map<long, DensePoly>& phi_cache() {
  static std::map<long, DensePoly> cache;
  return cache;
}
std::mutex phi_mutex;

DensePoly cyclotomic_poly_impl(long n) {
  {
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto it = phi_cache().find(n);
    if (it != phi_cache().end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  DensePoly f(n + 1, Rational(0));
  f[0] = -1;
  f[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) f = poly_div_exact(f, cyclotomic_poly_impl(d));
  }
  std::lock_guard<std::mutex> lock(phi_mutex);
  phi_cache().emplace(n, f);
  return f;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(long conductor) {
  if (conductor < 1) throw InvalidInput("conductor must be >= 1");
  cyclotomic_poly_impl(conductor);
  std::lock_guard<std::mutex> lock(phi_mutex);
  return phi_cache().at(conductor);
}

namespace {

// Reduce a dense polynomial in zeta_N modulo Phi_N in place, then truncate
// to length phi(N).
std::vector<Rational> reduce_mod_phi(std::vector<Rational> p, long n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;  // = euler_phi(n)
  while (p.size() > deg) {
    Rational c = p.back();
    if (c != 0) {
      std::size_t shift = p.size() - phi.size();
      for (std::size_t i = 0; i + 1 < phi.size(); ++i)
        p[shift + i] -= c * phi[i];
    }
    p.pop_back();
  }
  p.resize(deg, Rational(0));
  return p;
}

}  // namespace

Cyclotomic Cyclotomic::zero(long conductor) {
  if (conductor < 1) throw InvalidInput("conductor must be >= 1");
  return Cyclotomic(conductor,
                    std::vector<Rational>(euler_phi(conductor), Rational(0)));
}

Cyclotomic Cyclotomic::one(long conductor) {
  return from_rational(Rational(1), conductor);
}

Cyclotomic Cyclotomic::from_rational(const Rational& q, long conductor) {
  Cyclotomic c = zero(conductor);
  c.coeffs_[0] = q;
  c.coeffs_[0].canonicalize();
  return c;
}

Cyclotomic Cyclotomic::root_of_unity(long conductor, long power) {
  if (conductor < 1) throw InvalidInput("conductor must be >= 1");
  long k = power % conductor;
  if (k < 0) k += conductor;
  std::vector<Rational> p(k + 1, Rational(0));
  p[k] = 1;
  return Cyclotomic(conductor, reduce_mod_phi(std::move(p), conductor));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw InvalidInput("cyclotomic value is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(long new_conductor) const {
  if (new_conductor == conductor_) return *this;
  if (new_conductor % conductor_ != 0)
    throw InvalidInput("promotion target is not a multiple of the conductor");
  const long step = new_conductor / conductor_;
  // zeta_N^i maps to zeta_M^(i*step); rebuild from the residue digits.
  std::vector<Rational> p;
  p.assign(static_cast<std::size_t>((coeffs_.size() - 1) * step + 1),
           Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  return Cyclotomic(new_conductor, reduce_mod_phi(std::move(p), new_conductor));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (conductor_ != o.conductor_) {
    long m = lcm_long(conductor_, o.conductor_);
    return promoted(m) + o.promoted(m);
  }
  Cyclotomic r = *this;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
    r.coeffs_[i] += o.coeffs_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  return *this + (-o);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (conductor_ != o.conductor_) {
    long m = lcm_long(conductor_, o.conductor_);
    return promoted(m) * o.promoted(m);
  }
  if (is_rational()) {
    Cyclotomic r = o;
    const Rational& q = coeffs_[0];
    for (auto& c : r.coeffs_) c *= q;
    return r;
  }
  if (o.is_rational()) return o * *this;
  std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1,
                             Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return Cyclotomic(conductor_, reduce_mod_phi(std::move(prod), conductor_));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic");
  if (is_rational())
    return from_rational(Rational(1) / coeffs_[0], conductor_);
  // Extended Euclid in Q[x] against Phi_N (irreducible over Q).
  DensePoly r0 = cyclotomic_polynomial(conductor_);
  DensePoly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  DensePoly s0{}, s1{Rational(1)};  // Bezout coefficients for *this
  while (!r1.empty()) {
    // quotient of r0 by r1
    DensePoly q;
    DensePoly rem = r0;
    q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1,
             Rational(0));
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational c = rem.back() / r1.back();
      std::size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      trim(rem);
    }
    // (r0, r1) <- (r1, r0 - q r1); same recurrence on s.
    DensePoly s2 = s0;
    s2.resize(std::max(s2.size(), q.size() + s1.size()), Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd (a nonzero constant since Phi_N is irreducible), s0 its cofactor.
  Rational g = r0.back();
  std::vector<Rational> inv(s0.begin(), s0.end());
  for (auto& c : inv) c /= g;
  return Cyclotomic(conductor_, reduce_mod_phi(std::move(inv), conductor_));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
  return *this * o.inverse();
}

Cyclotomic Cyclotomic::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclotomic base = *this;
  Cyclotomic acc = Cyclotomic::one(conductor_);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
  long m = lcm_long(conductor_, o.conductor_);
  return promoted(m).coeffs_ == o.promoted(m).coeffs_;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) {
    long m = lcm_long(a.conductor_, b.conductor_);
    return compare(a.promoted(m), b.promoted(m));
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c;
  }
  return 0;
}

long Cyclotomic::multiplicative_order(long limit) const {
  if (is_zero()) return 0;
  Cyclotomic acc = *this;
  for (long k = 1; k <= limit; ++k) {
    if (acc.is_one()) return k;
    acc = acc * *this;
  }
  return 0;
}

std::uint64_t Cyclotomic::hash() const noexcept {
  std::uint64_t h = static_cast<std::uint64_t>(conductor_);
  for (const auto& c : coeffs_) h = hash_combine(h, hash_rational(c));
  return h;
}

}  // namespace bc
